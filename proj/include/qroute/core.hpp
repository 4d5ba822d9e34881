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
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qroute/common.hpp"

namespace qroute {

enum class GateKind {
  X,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  SX,
  SXdg,
  RZ,
  RX,
  U3,
  CX,
  SWAP,
  CCX,
  CSWAP,
};

inline int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CX:
    case GateKind::SWAP:
      return 2;
    case GateKind::CCX:
    case GateKind::CSWAP:
      return 3;
    default:
      return 1;
  }
}

inline int gate_num_params(GateKind k) {
  switch (k) {
    case GateKind::RZ:
    case GateKind::RX:
      return 1;
    case GateKind::U3:
      return 3;
    default:
      return 0;
  }
}

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::SX: return "sx";
    case GateKind::SXdg: return "sxdg";
    case GateKind::RZ: return "rz";
    case GateKind::RX: return "rx";
    case GateKind::U3: return "u3";
    case GateKind::CX: return "cx";
    case GateKind::SWAP: return "swap";
    case GateKind::CCX: return "ccx";
    case GateKind::CSWAP: return "cswap";
  }
  return "?";
}

// A single gate: kind, the qubits it acts on (in role order: controls before
// targets) and up to three angle parameters.
struct Gate {
  GateKind kind;
  std::array<int, 3> qubits{-1, -1, -1};
  std::array<double, 3> params{0.0, 0.0, 0.0};

  int arity() const { return gate_arity(kind); }

  bool operator==(const Gate& o) const {
    return kind == o.kind && qubits == o.qubits && params == o.params;
  }

  static Gate one(GateKind k, int q) {
    Gate g{k};
    g.qubits[0] = q;
    return g;
  }
  static Gate x(int q) { return one(GateKind::X, q); }
  static Gate z(int q) { return one(GateKind::Z, q); }
  static Gate h(int q) { return one(GateKind::H, q); }
  static Gate s(int q) { return one(GateKind::S, q); }
  static Gate sdg(int q) { return one(GateKind::Sdg, q); }
  static Gate t(int q) { return one(GateKind::T, q); }
  static Gate tdg(int q) { return one(GateKind::Tdg, q); }
  static Gate sx(int q) { return one(GateKind::SX, q); }
  static Gate sxdg(int q) { return one(GateKind::SXdg, q); }
  static Gate rz(double theta, int q) {
    Gate g = one(GateKind::RZ, q);
    g.params[0] = theta;
    return g;
  }
  static Gate rx(double theta, int q) {
    Gate g = one(GateKind::RX, q);
    g.params[0] = theta;
    return g;
  }
  static Gate u3(double theta, double phi, double lambda, int q) {
    Gate g = one(GateKind::U3, q);
    g.params = {theta, phi, lambda};
    return g;
  }
  static Gate cx(int control, int target) {
    Gate g{GateKind::CX};
    g.qubits = {control, target, -1};
    return g;
  }
  static Gate swap(int a, int b) {
    Gate g{GateKind::SWAP};
    g.qubits = {a, b, -1};
    return g;
  }
  static Gate ccx(int c1, int c2, int target) {
    Gate g{GateKind::CCX};
    g.qubits = {c1, c2, target};
    return g;
  }
  static Gate cswap(int control, int t1, int t2) {
    Gate g{GateKind::CSWAP};
    g.qubits = {control, t1, t2};
    return g;
  }
};

// Ordered gate list over n qubits. The universal IR: all synthesis, routing
// and simulation below speak this type. Operations on circuits are pure;
// nothing mutates a circuit after it is built.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits, std::string name = "")
      : num_qubits_(num_qubits), name_(std::move(name)) {
    if (num_qubits < 0) throw Error("negative qubit count");
  }

  int num_qubits() const { return num_qubits_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  // Terminal measurement markers (from qasm `measure`); empty means
  // "measure nothing".
  const std::vector<int>& measurements() const { return measurements_; }
  void add_measurement(int q) {
    check_qubit(q);
    measurements_.push_back(q);
  }

  void push(const Gate& g) {
    int a = g.arity();
    for (int i = 0; i < a; ++i) {
      check_qubit(g.qubits[i]);
      for (int j = i + 1; j < a; ++j) {
        if (g.qubits[i] == g.qubits[j])
          throw Error(std::string("duplicate qubit in gate ") +
                      gate_name(g.kind));
      }
    }
    for (int i = 0; i < gate_num_params(g.kind); ++i) {
      if (!std::isfinite(g.params[i]))
        throw Error(std::string("non-finite angle in gate ") +
                    gate_name(g.kind));
    }
    gates_.push_back(g);
  }

  void append(const Circuit& other) {
    if (other.num_qubits_ > num_qubits_)
      throw QubitCountMismatch("appending larger circuit");
    for (const Gate& g : other.gates_) push(g);
  }

  bool operator==(const Circuit& o) const {
    return num_qubits_ == o.num_qubits_ && gates_ == o.gates_ &&
           measurements_ == o.measurements_;
  }

 private:
  void check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_)
      throw Error("qubit index " + std::to_string(q) + " out of range [0," +
                  std::to_string(num_qubits_) + ")");
  }

  int num_qubits_ = 0;
  std::string name_;
  std::vector<Gate> gates_;
  std::vector<int> measurements_;
};

// Undirected qubit adjacency constraining where 2-qubit gates may act.
class CouplingMap {
 public:
  CouplingMap() = default;
  explicit CouplingMap(int num_qubits) : num_qubits_(num_qubits) {}

  static CouplingMap line(int n) {
    CouplingMap m(n);
    for (int i = 0; i + 1 < n; ++i) m.add_edge(i, i + 1);
    return m;
  }

  static CouplingMap all_to_all(int n) {
    CouplingMap m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m.add_edge(i, j);
    return m;
  }

  void add_edge(int a, int b) {
    if (a == b) throw Error("self-loop in coupling map");
    if (a < 0 || b < 0 || a >= num_qubits_ || b >= num_qubits_)
      throw Error("coupling edge out of range");
    edges_.insert(norm(a, b));
  }

  bool has_edge(int a, int b) const { return edges_.count(norm(a, b)) > 0; }
  int num_qubits() const { return num_qubits_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

  bool is_line() const {
    return *this == line(num_qubits_) || num_qubits_ <= 1;
  }
  bool is_all_to_all() const {
    return static_cast<int>(edges_.size()) ==
           num_qubits_ * (num_qubits_ - 1) / 2;
  }

  bool operator==(const CouplingMap& o) const {
    return num_qubits_ == o.num_qubits_ && edges_ == o.edges_;
  }

 private:
  static std::pair<int, int> norm(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
  }
  int num_qubits_ = 0;
  std::set<std::pair<int, int>> edges_;
};

struct CircuitMetrics {
  int cnot_count = 0;
  int depth = 0;
  std::map<std::pair<int, int>, int> pair_histogram;  // unordered pair -> CX count
};

namespace detail {
inline void require_primitive_basis(const Circuit& c, const char* op) {
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::CCX || g.kind == GateKind::CSWAP ||
        g.kind == GateKind::SWAP)
      throw MultiQubitPrimitivePresent(
          std::string(op) + " requires CX + single-qubit gates; found " +
          gate_name(g.kind));
  }
}
}  // namespace detail

// CNOT count, ASAP depth and per-pair CX usage. Depth layers every gate,
// single-qubit gates included, one gate per qubit per layer; this is the
// convention under which the all-to-all Fredkin circuit has depth 13.
inline CircuitMetrics metrics(const Circuit& c) {
  detail::require_primitive_basis(c, "metrics");
  CircuitMetrics m;
  std::vector<int> layer(c.num_qubits(), 0);
  for (const Gate& g : c.gates()) {
    int at = 0;
    for (int i = 0; i < g.arity(); ++i) at = std::max(at, layer[g.qubits[i]]);
    for (int i = 0; i < g.arity(); ++i) layer[g.qubits[i]] = at + 1;
    m.depth = std::max(m.depth, at + 1);
    if (g.kind == GateKind::CX) {
      ++m.cnot_count;
      int a = std::min(g.qubits[0], g.qubits[1]);
      int b = std::max(g.qubits[0], g.qubits[1]);
      ++m.pair_histogram[{a, b}];
    }
  }
  return m;
}

struct ConnectivityViolation {
  std::size_t gate_index;
  std::pair<int, int> pair;
  bool operator==(const ConnectivityViolation& o) const {
    return gate_index == o.gate_index && pair == o.pair;
  }
};

// Every 2-qubit gate must act on an edge of the map. Violations are data,
// not exceptions.
inline std::vector<ConnectivityViolation> validate_connectivity(
    const Circuit& c, const CouplingMap& m) {
  std::vector<ConnectivityViolation> out;
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    if (g.arity() != 2) continue;
    if (!m.has_edge(g.qubits[0], g.qubits[1]))
      out.push_back({i, {g.qubits[0], g.qubits[1]}});
  }
  return out;
}

// Canonical form of the entangling gate structure: the (control, target)
// sequence modulo single-qubit gates and permutations of commuting CNOTs.
struct StructureSignature {
  std::vector<std::pair<int, int>> pairs;
  bool operator==(const StructureSignature& o) const { return pairs == o.pairs; }
  bool operator<(const StructureSignature& o) const { return pairs < o.pairs; }
};

// Two CX gates are order-constrained iff the control of one is the target of
// the other. The canonical order is a topological sort of that DAG taking at
// each step the available gate minimal under (control, target, index).
inline StructureSignature structure_signature(const Circuit& c) {
  detail::require_primitive_basis(c, "structure_signature");
  struct Node {
    int control, target;
    std::size_t index;
  };
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    if (g.kind == GateKind::CX)
      nodes.push_back({g.qubits[0], g.qubits[1], nodes.size()});
  }
  std::size_t n = nodes.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nodes[i].control == nodes[j].target ||
          nodes[i].target == nodes[j].control) {
        succ[i].push_back(j);
        ++indeg[j];
      }
    }
  }
  auto key = [&](std::size_t i) {
    return std::make_tuple(nodes[i].control, nodes[i].target, nodes[i].index);
  };
  auto cmp = [&](std::size_t a, std::size_t b) { return key(a) > key(b); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)>
      ready(cmp);
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  StructureSignature sig;
  sig.pairs.reserve(n);
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    sig.pairs.emplace_back(nodes[i].control, nodes[i].target);
    for (std::size_t j : succ[i])
      if (--indeg[j] == 0) ready.push(j);
  }
  return sig;
}

inline Gate invert_gate(const Gate& g) {
  Gate r = g;
  switch (g.kind) {
    case GateKind::S: r.kind = GateKind::Sdg; break;
    case GateKind::Sdg: r.kind = GateKind::S; break;
    case GateKind::T: r.kind = GateKind::Tdg; break;
    case GateKind::Tdg: r.kind = GateKind::T; break;
    case GateKind::SX: r.kind = GateKind::SXdg; break;
    case GateKind::SXdg: r.kind = GateKind::SX; break;
    case GateKind::RZ:
    case GateKind::RX:
      r.params[0] = -g.params[0];
      break;
    case GateKind::U3:
      // U3(theta, phi, lambda)^-1 = U3(-theta, -lambda, -phi)
      r.params = {-g.params[0], -g.params[2], -g.params[1]};
      break;
    default:
      break;  // self-inverse
  }
  return r;
}

inline Circuit invert(const Circuit& c) {
  Circuit r(c.num_qubits(), c.name().empty() ? "" : c.name() + "_inv");
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it)
    r.push(invert_gate(*it));
  return r;
}

// perm[old] = new index.
inline Circuit remap_qubits(const Circuit& c, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != c.num_qubits())
    throw InvalidPermutation("size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p])
      throw InvalidPermutation("not a bijection");
    seen[p] = true;
  }
  Circuit r(c.num_qubits(), c.name());
  for (const Gate& g : c.gates()) {
    Gate h = g;
    for (int i = 0; i < g.arity(); ++i) h.qubits[i] = perm[g.qubits[i]];
    r.push(h);
  }
  for (int q : c.measurements()) r.add_measurement(perm[q]);
  return r;
}

}  // namespace qroute
