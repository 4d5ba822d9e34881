// Copyright 2026 The qroute authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qroute/common.hpp"
#include "qroute/core.hpp"
#include "qroute/decomp.hpp"
#include "qroute/sim.hpp"

namespace qroute::route {

enum class Orientation { FirstClean, SecondClean };
enum class LongRangeMethod { CnotSwap, SwapBaseline };
enum class MoveRole { Control, McxTarget };
enum class RerouteStrategy { ControlOnly, Simultaneous };
enum class PauliMethod { AllToAll, SwapBaseline, CnotSwap };

// Two CNOTs realizing |i1,i2> -> |i2, i1^i2| on (a, b): the first wire ends
// clean with the second wire's state, the second accumulates the XOR.
// SecondClean mirrors the roles.
inline Circuit cnot_swap(int a, int b, Orientation o = Orientation::FirstClean,
                         int num_qubits = -1) {
  if (a == b) throw Error("cnot_swap needs distinct qubits");
  if (num_qubits < 0) num_qubits = std::max(a, b) + 1;
  Circuit c(num_qubits, "cnot_swap");
  if (o == Orientation::FirstClean) {
    c.push(Gate::cx(a, b));
    c.push(Gate::cx(b, a));
  } else {
    c.push(Gate::cx(b, a));
    c.push(Gate::cx(a, b));
  }
  return c;
}

namespace detail {

// One qubit movement as a list of adjacent hops (src, dst). Control-style
// hops leave the destination clean; target-style hops carry the dirty value
// toward the gate instead.
struct HopPath {
  std::vector<std::pair<int, int>> hops;
  bool control_style = true;

  std::pair<Gate, Gate> gates(std::size_t j) const {
    auto [src, dst] = hops[j];
    if (control_style) return {Gate::cx(dst, src), Gate::cx(src, dst)};
    return {Gate::cx(src, dst), Gate::cx(dst, src)};
  }
};

inline HopPath control_walk(int from, int to) {
  HopPath p;
  p.control_style = true;
  int step = to > from ? 1 : -1;
  for (int w = from; w != to; w += step) p.hops.push_back({w, w + step});
  return p;
}

inline HopPath target_walk(int from, int to) {
  HopPath p = control_walk(from, to);
  p.control_style = false;
  return p;
}

// Emits the rerouting half-network. Consecutive CNOT-SWAPs along a path
// commute at their junction (the trailing CX of one and the leading CX of
// the next share only a common target or common control), so all leading
// CXs can be emitted before all trailing ones; that permutation is what
// packs the rerouting layers.
inline void emit_before(Circuit& c, const HopPath& p) {
  for (std::size_t j = 0; j < p.hops.size(); ++j) c.push(p.gates(j).first);
  for (std::size_t j = 0; j < p.hops.size(); ++j) c.push(p.gates(j).second);
}

inline void emit_after(Circuit& c, const HopPath& p) {
  for (std::size_t j = p.hops.size(); j-- > 0;) c.push(p.gates(j).second);
  for (std::size_t j = p.hops.size(); j-- > 0;) c.push(p.gates(j).first);
}

// The 4-CNOT optimal long-range CNOT across one idle qubit (control, idle,
// target wires).
inline void emit_blue_box(Circuit& c, int control, int idle, int target) {
  c.push(Gate::cx(idle, target));
  c.push(Gate::cx(control, idle));
  c.push(Gate::cx(idle, target));
  c.push(Gate::cx(control, idle));
}

inline void emit_swap(Circuit& c, int a, int b) {
  c.push(Gate::cx(a, b));
  c.push(Gate::cx(b, a));
  c.push(Gate::cx(a, b));
}

}  // namespace detail

// Positions of the three active qubits on a line of N qubits. Role order:
// (c1, c2, t) for the Toffoli, (c, t1, t2) for the Fredkin.
struct LinePlacement {
  int num_qubits = 0;
  std::array<int, 3> positions{0, 1, 2};

  LinePlacement() = default;
  LinePlacement(int n, int p0, int p1, int p2)
      : num_qubits(n), positions{p0, p1, p2} {
    for (int p : positions)
      if (p < 0 || p >= n) throw InvalidPlacement("position out of range");
    if (p0 == p1 || p0 == p2 || p1 == p2)
      throw InvalidPlacement("positions must be distinct");
  }

  // Cumulative idle qubits the active qubits must go past.
  int idle_hops() const {
    auto [lo, hi] =
        std::minmax({positions[0], positions[1], positions[2]});
    return hi - lo + 1 - 3;
  }
};

// ---------------------------------------------------------------------------
// Long-range CNOT

// CNOT between the ends of a line with n idle qubits in between. The
// CNOT-SWAP construction moves both endpoints toward each other and closes
// with the 4-CNOT core, for 4n CNOTs total; the SWAP baseline costs 6n+1.
inline Circuit long_range_cnot(int n_idle, LongRangeMethod method) {
  if (n_idle < 0) throw Error("negative idle count");
  const int n = n_idle;
  Circuit c(n + 2, "long_range_cnot");
  if (n == 0) {
    c.push(Gate::cx(0, 1));
    return c;
  }
  if (method == LongRangeMethod::SwapBaseline) {
    for (int j = 0; j < n; ++j) detail::emit_swap(c, j, j + 1);
    c.push(Gate::cx(n, n + 1));
    for (int j = n; j-- > 0;) detail::emit_swap(c, j, j + 1);
    return c;
  }
  const int k = (n + 1) / 2;      // control hops
  const int m = n - 1 - k;        // target hops
  auto control = detail::control_walk(0, k);
  auto target = detail::target_walk(n + 1, n + 1 - m);
  detail::emit_before(c, control);
  detail::emit_before(c, target);
  detail::emit_blue_box(c, k, k + 1, k + 2);
  detail::emit_after(c, control);
  detail::emit_after(c, target);
  return c;
}

// ---------------------------------------------------------------------------
// Generic one-qubit movement around an inner gate

// Control: the inner circuit's wire 0 must be a qubit in whose computational
// basis the inner gate is diagonal (controls qualify); it is rerouted over
// `hops` idle wires inserted above the inner block. McxTarget: the inner
// circuit's last wire must be the target of a multi-controlled-NOT; the
// idle wires are inserted between the inner block and the moved target.
inline Circuit move_qubit(MoveRole role, int hops, const Circuit& inner) {
  if (hops < 0) throw Error("negative hop count");
  const int n_in = inner.num_qubits();
  if (n_in < 1) throw Error("inner circuit has no qubits");
  const int n = n_in + hops;

  if (inner.num_qubits() <= 10) {
    Matrix u = sim::unitary_of(inner);
    const int64_t dim = u.rows();
    if (role == MoveRole::Control) {
      // Diagonal in wire 0: no mixing between its basis values.
      double off = u.topRightCorner(dim / 2, dim / 2).norm() +
                   u.bottomLeftCorner(dim / 2, dim / 2).norm();
      if (off > 1e-9)
        throw RoleUnsupported("inner gate is not diagonal in wire 0");
    } else {
      Circuit xt(n_in);
      xt.push(Gate::x(n_in - 1));
      Matrix x = sim::unitary_of(xt);
      if ((u * x - x * u).norm() > 1e-9)
        throw RoleUnsupported("inner gate does not commute with X on target");
    }
  }

  Circuit c(n, "move_qubit");
  if (hops == 0) {
    c.append(inner);
    return c;
  }

  detail::HopPath path;
  std::vector<int> wire_map(n_in);
  if (role == MoveRole::Control) {
    path = detail::control_walk(0, hops);
    wire_map[0] = hops;
    for (int q = 1; q < n_in; ++q) wire_map[q] = hops + q;
  } else {
    path = detail::target_walk(n - 1, n_in - 1);
    for (int q = 0; q < n_in; ++q) wire_map[q] = q;
  }
  detail::emit_before(c, path);
  for (const Gate& g : inner.gates()) {
    Gate h = g;
    for (int i = 0; i < g.arity(); ++i) h.qubits[i] = wire_map[g.qubits[i]];
    c.push(h);
  }
  detail::emit_after(c, path);
  return c;
}

// ---------------------------------------------------------------------------
// Long-range Toffoli and Fredkin

// Toffoli on three non-adjacent line qubits: the outer active qubits move
// toward the median one, the local 8-CNOT linear Toffoli runs on the three
// middle wires, and the rerouting unwinds.
inline Circuit toffoli_long_range(const LinePlacement& p) {
  const int c1 = p.positions[0], c2 = p.positions[1], t = p.positions[2];
  std::array<int, 3> sorted{c1, c2, t};
  std::sort(sorted.begin(), sorted.end());
  const int lo = sorted[0], mid = sorted[1], hi = sorted[2];
  if (mid - 1 < 0 || mid + 1 >= p.num_qubits)
    throw InvalidPlacement("no room next to the median qubit");

  Circuit out(p.num_qubits, "toffoli_long_range");
  detail::HopPath lo_path = t == lo ? detail::target_walk(lo, mid - 1)
                                    : detail::control_walk(lo, mid - 1);
  detail::HopPath hi_path = t == hi ? detail::target_walk(hi, mid + 1)
                                    : detail::control_walk(hi, mid + 1);
  detail::emit_before(out, lo_path);
  detail::emit_before(out, hi_path);

  // Local linear Toffoli with the target on the wire where the target role
  // landed (center if the median active is the target).
  Circuit local = decomp::seed_circuit(
      {decomp::Which::Toffoli, decomp::Connectivity::Linear});
  int local_target = t == mid ? 1 : (t == lo ? 0 : 2);
  if (local_target != 1) local = decomp::retarget_toffoli(local, 1, local_target);
  std::vector<int> map3 = {mid - 1, mid, mid + 1};
  for (const Gate& g : local.gates()) {
    Gate h = g;
    for (int i = 0; i < g.arity(); ++i) h.qubits[i] = map3[g.qubits[i]];
    out.push(h);
  }

  detail::emit_after(out, lo_path);
  detail::emit_after(out, hi_path);
  return out;
}

namespace detail {

struct FredkinPlan {
  int control;      // control position after any consolidation
  int t_near;       // target nearer the control
  int t_far;        // the other target
  int dir;          // +1 if targets sit above the control index-wise
  std::vector<std::pair<int, int>> consolidation_swaps;
};

inline FredkinPlan fredkin_plan(const LinePlacement& p) {
  FredkinPlan plan{};
  int c = p.positions[0], t1 = p.positions[1], t2 = p.positions[2];
  if ((t1 < c) != (t2 < c))
    throw InvalidPlacement("targets must lie on one side of the control");
  plan.control = c;
  plan.dir = t1 > c ? 1 : -1;
  int near = plan.dir > 0 ? std::min(t1, t2) : std::max(t1, t2);
  int far = t1 == near ? t2 : t1;
  // Walk the farther target next to the nearer one with plain SWAPs.
  for (int w = far; std::abs(w - near) > 1; w -= plan.dir)
    plan.consolidation_swaps.push_back({w, w - plan.dir});
  plan.t_near = near;
  plan.t_far = near + plan.dir;
  return plan;
}

}  // namespace detail

// Rerouting halves for a Fredkin with the control at 0 and the (adjacent)
// targets at n+1, n+2, concatenated with no local gate in between; its
// metrics().depth is the rerouting-network depth.
inline Circuit fredkin_reroute_network(int n_idle, RerouteStrategy strategy) {
  if (n_idle < 1) throw InvalidPlacement("need at least one idle qubit");
  const int n = n_idle;
  Circuit c(n + 3, "fredkin_reroute_network");
  if (strategy == RerouteStrategy::ControlOnly) {
    auto path = detail::control_walk(0, n);
    detail::emit_before(c, path);
    detail::emit_after(c, path);
    return c;
  }
  const int hc = n == 1 ? 1 : n + 1 - n / 2;
  const int ht = n - hc;
  auto control = detail::control_walk(0, hc);
  detail::emit_before(c, control);
  // The target pair moves as two interleaved control-style walks: top hop j
  // then bottom hop j. Leading CXs of later hops commute past earlier
  // trailing CXs exactly as in emit_before, which is what develops the
  // packed pattern.
  std::vector<Gate> pair_seq;
  for (int j = 1; j <= ht; ++j) {
    int u_src = n + 2 - j, u_dst = n + 1 - j;
    int v_src = n + 3 - j, v_dst = n + 2 - j;
    pair_seq.push_back(Gate::cx(u_dst, u_src));
    pair_seq.push_back(Gate::cx(u_src, u_dst));
    pair_seq.push_back(Gate::cx(v_dst, v_src));
    pair_seq.push_back(Gate::cx(v_src, v_dst));
  }
  std::vector<Gate> packed;
  for (int j = 0; j < ht; ++j) packed.push_back(pair_seq[4 * j]);      // top leads
  for (int j = 0; j < ht; ++j) packed.push_back(pair_seq[4 * j + 1]);  // top trails
  for (int j = 0; j < ht; ++j) packed.push_back(pair_seq[4 * j + 2]);  // bottom leads
  for (int j = 0; j < ht; ++j) packed.push_back(pair_seq[4 * j + 3]);  // bottom trails
  for (const Gate& g : packed) c.push(g);
  for (auto it = packed.rbegin(); it != packed.rend(); ++it) c.push(*it);
  detail::emit_after(c, control);
  return c;
}

// Fredkin on non-adjacent line qubits. ControlOnly reroutes just the
// control (fewest CNOTs); Simultaneous moves the control and the target
// pair toward each other (lowest depth). Separated targets are first
// consolidated with plain SWAPs.
inline Circuit fredkin_long_range(const LinePlacement& p,
                                  RerouteStrategy strategy) {
  detail::FredkinPlan plan = detail::fredkin_plan(p);
  const int dir = plan.dir;
  Circuit out(p.num_qubits, "fredkin_long_range");

  for (auto [a, b] : plan.consolidation_swaps) detail::emit_swap(out, a, b);

  const int n = std::abs(plan.t_near - plan.control) - 1;
  int local_c, local_t1, local_t2;
  std::vector<detail::HopPath> paths;
  std::vector<Gate> pair_packed;

  if (n == 0) {
    local_c = plan.control;
    local_t1 = plan.t_near;
    local_t2 = plan.t_far;
  } else if (strategy == RerouteStrategy::ControlOnly) {
    int dest = plan.t_near - dir;
    paths.push_back(detail::control_walk(plan.control, dest));
    local_c = dest;
    local_t1 = plan.t_near;
    local_t2 = plan.t_far;
  } else {
    const int hc = n == 1 ? 1 : n + 1 - n / 2;
    const int ht = n - hc;
    int c_dest = plan.control + dir * hc;
    paths.push_back(detail::control_walk(plan.control, c_dest));
    std::vector<Gate> seq;
    for (int j = 1; j <= ht; ++j) {
      int u_src = plan.t_near - dir * (j - 1), u_dst = u_src - dir;
      int v_src = plan.t_far - dir * (j - 1), v_dst = v_src - dir;
      seq.push_back(Gate::cx(u_dst, u_src));
      seq.push_back(Gate::cx(u_src, u_dst));
      seq.push_back(Gate::cx(v_dst, v_src));
      seq.push_back(Gate::cx(v_src, v_dst));
    }
    for (int j = 0; j < ht; ++j) pair_packed.push_back(seq[4 * j]);
    for (int j = 0; j < ht; ++j) pair_packed.push_back(seq[4 * j + 1]);
    for (int j = 0; j < ht; ++j) pair_packed.push_back(seq[4 * j + 2]);
    for (int j = 0; j < ht; ++j) pair_packed.push_back(seq[4 * j + 3]);
    local_c = c_dest;
    local_t1 = plan.t_near - dir * ht;
    local_t2 = plan.t_far - dir * ht;
  }

  for (const auto& path : paths) detail::emit_before(out, path);
  for (const Gate& g : pair_packed) out.push(g);

  // Local Fredkin with the control at one end of the three adjacent wires.
  Circuit local = decomp::seed_circuit({decomp::Which::Fredkin,
                                        decomp::Connectivity::Linear,
                                        decomp::OddQubitPlacement::Ends});
  std::vector<int> map3 = {local_c, local_t1, local_t2};
  for (const Gate& g : local.gates()) {
    Gate h = g;
    for (int i = 0; i < g.arity(); ++i) h.qubits[i] = map3[g.qubits[i]];
    out.push(h);
  }

  for (auto it = pair_packed.rbegin(); it != pair_packed.rend(); ++it)
    out.push(*it);
  for (const auto& path : paths) detail::emit_after(out, path);
  for (auto it = plan.consolidation_swaps.rbegin();
       it != plan.consolidation_swaps.rend(); ++it)
    detail::emit_swap(out, it->first, it->second);
  return out;
}

// ---------------------------------------------------------------------------
// Fan-out CNOT sequences (shared control, multiple targets)

// Product of CX(control -> t) over all targets on a line, synthesized by
// chaining CNOT-SWAP control moves, cancelling the conjugated CNOT-SWAP
// pairs between consecutive long-range CNOTs, and substituting the 4-CNOT
// core for the terminal segment.
inline Circuit fanout_cnots(int control_pos,
                            const std::vector<int>& target_positions,
                            int line_size) {
  if (control_pos < 0 || control_pos >= line_size)
    throw InvalidPlacement("control out of range");
  std::vector<int> below, above;
  for (int t : target_positions) {
    if (t < 0 || t >= line_size) throw InvalidPlacement("target out of range");
    if (t == control_pos) throw InvalidPlacement("target equals control");
    (t > control_pos ? below : above).push_back(t);
  }
  std::sort(below.begin(), below.end());
  std::sort(above.rbegin(), above.rend());

  Circuit c(line_size, "fanout_cnots");
  auto run_side = [&](std::vector<int> targets, int dir) {
    if (targets.empty()) return;
    int cur = control_pos;
    std::vector<std::pair<int, int>> hops;  // (src, dst)
    auto hop = [&](int dst) {
      c.push(Gate::cx(dst, cur));
      c.push(Gate::cx(cur, dst));
      hops.push_back({cur, dst});
      cur = dst;
    };
    std::size_t next = 0;
    while (next < targets.size()) {
      int want = targets[next];
      if (want == cur + dir) {
        bool two_left = next + 2 == targets.size();
        if (two_left && targets[next + 1] == cur + 2 * dir) {
          // Double delivery: three CNOTs serve both remaining targets.
          c.push(Gate::cx(cur + dir, cur + 2 * dir));
          c.push(Gate::cx(cur, cur + dir));
          c.push(Gate::cx(cur + dir, cur + 2 * dir));
          next += 2;
          continue;
        }
        c.push(Gate::cx(cur, want));
        ++next;
        if (next < targets.size()) hop(cur + dir);
      } else if (want == cur + 2 * dir && next + 1 == targets.size()) {
        detail::emit_blue_box(c, cur, cur + dir, cur + 2 * dir);
        ++next;
      } else {
        hop(cur + dir);
      }
    }
    for (auto it = hops.rbegin(); it != hops.rend(); ++it) {
      c.push(Gate::cx(it->first, it->second));
      c.push(Gate::cx(it->second, it->first));
    }
  };
  run_side(below, +1);
  run_side(above, -1);
  return c;
}

// ---------------------------------------------------------------------------
// Pauli exponentials

// exp(-i theta P), global-phase exact. All-to-all uses the plain 2(s-1)
// parity chain; on a line, idle gaps are crossed with CNOT-SWAP carrier
// moves (or full SWAPs for the baseline).
inline Circuit pauli_exponential(const std::string& paulis, double theta,
                                 const CouplingMap& coupling,
                                 PauliMethod method) {
  const int n = static_cast<int>(paulis.size());
  if (coupling.num_qubits() != n)
    throw InvalidCoupling("coupling size does not match Pauli string");
  std::vector<int> active;
  for (int q = 0; q < n; ++q) {
    char p = paulis[q];
    if (p == 'I' || p == 'i') continue;
    if (p != 'X' && p != 'Y' && p != 'Z' && p != 'x' && p != 'y' && p != 'z')
      throw Error(std::string("bad Pauli character '") + p + "'");
    active.push_back(q);
  }
  if (active.empty())
    throw IdentityString("exp(-i theta I) is a global phase");
  if (method == PauliMethod::AllToAll && !coupling.is_all_to_all())
    throw InvalidCoupling("all-to-all method needs an all-to-all coupling");
  if (method != PauliMethod::AllToAll && !coupling.is_line())
    throw InvalidCoupling("routed methods assume a line coupling");

  Circuit c(n, "pauli_exp");
  auto basis_pre = [&](int q) {
    char p = std::toupper(paulis[q]);
    if (p == 'X') c.push(Gate::h(q));
    if (p == 'Y') {
      c.push(Gate::sdg(q));
      c.push(Gate::h(q));
    }
  };
  auto basis_post = [&](int q) {
    char p = std::toupper(paulis[q]);
    if (p == 'X') c.push(Gate::h(q));
    if (p == 'Y') {
      c.push(Gate::h(q));
      c.push(Gate::s(q));
    }
  };

  for (int q : active) basis_pre(q);

  std::vector<Gate> chain;
  if (method == PauliMethod::AllToAll) {
    for (std::size_t i = 0; i + 1 < active.size(); ++i)
      chain.push_back(Gate::cx(active[i], active[i + 1]));
  } else {
    for (std::size_t i = 0; i + 1 < active.size(); ++i) {
      int carrier = active[i];
      int goal = active[i + 1];
      while (carrier + 1 < goal) {
        if (method == PauliMethod::CnotSwap) {
          chain.push_back(Gate::cx(carrier + 1, carrier));
          chain.push_back(Gate::cx(carrier, carrier + 1));
        } else {
          chain.push_back(Gate::cx(carrier, carrier + 1));
          chain.push_back(Gate::cx(carrier + 1, carrier));
          chain.push_back(Gate::cx(carrier, carrier + 1));
        }
        ++carrier;
      }
      chain.push_back(Gate::cx(carrier, goal));
    }
  }
  for (const Gate& g : chain) c.push(g);
  c.push(Gate::rz(2.0 * theta, active.back()));
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) c.push(*it);

  for (auto it = active.rbegin(); it != active.rend(); ++it) basis_post(*it);
  return c;
}

// ---------------------------------------------------------------------------
// Exhaustive minimality oracle

// Bidirectional breadth-first search over the group generated by
// nearest-neighbor CX transvections; returns the minimal CNOT count that
// reaches the target F2 map.
inline int bfs_min_cnots(const sim::BitMatrix& target,
                         const CouplingMap& coupling) {
  const int n = target.n;
  if (n > 5) throw Error("bfs_min_cnots supports at most 5 qubits");
  if (coupling.num_qubits() != n) throw InvalidCoupling("size mismatch");

  auto pack = [n](const sim::BitMatrix& m) {
    uint32_t key = 0;
    for (int i = 0; i < n; ++i)
      key |= static_cast<uint32_t>(m.rows[i]) << (i * n);
    return key;
  };
  std::vector<std::pair<int, int>> gens;
  for (const auto& [a, b] : coupling.edges()) {
    gens.push_back({a, b});
    gens.push_back({b, a});
  }
  auto apply_gen = [n](uint32_t key, int a, int b) {
    uint32_t mask = (n == 5) ? 0x1F : ((1u << n) - 1);
    uint32_t row_a = (key >> (a * n)) & mask;
    return key ^ (row_a << (b * n));
  };

  uint32_t start = pack(sim::BitMatrix::identity(n));
  uint32_t goal = pack(target);
  if (start == goal) return 0;

  std::unordered_map<uint32_t, int> dist_fwd{{start, 0}};
  std::unordered_map<uint32_t, int> dist_bwd{{goal, 0}};
  std::vector<uint32_t> frontier_fwd{start}, frontier_bwd{goal};
  int depth_fwd = 0, depth_bwd = 0;

  while (!frontier_fwd.empty() || !frontier_bwd.empty()) {
    bool forward = frontier_fwd.size() <= frontier_bwd.size()
                       ? !frontier_fwd.empty()
                       : frontier_bwd.empty();
    auto& frontier = forward ? frontier_fwd : frontier_bwd;
    auto& dist = forward ? dist_fwd : dist_bwd;
    auto& other = forward ? dist_bwd : dist_fwd;
    int& depth = forward ? depth_fwd : depth_bwd;
    if (frontier.empty()) break;

    std::vector<uint32_t> next;
    for (uint32_t key : frontier) {
      for (auto [a, b] : gens) {
        uint32_t nk = apply_gen(key, a, b);
        if (dist.count(nk)) continue;
        if (auto it = other.find(nk); it != other.end())
          return depth + 1 + it->second;
        dist.emplace(nk, depth + 1);
        next.push_back(nk);
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  throw Unreachable("target not reachable with this coupling");
}

}  // namespace qroute::route
