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

#include <cmath>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qroute/common.hpp"
#include "qroute/core.hpp"
#include "qroute/qasm.hpp"
#include "qroute/sim.hpp"

namespace qroute::decomp {

enum class Which { Toffoli, Fredkin };
enum class Connectivity { AllToAll, Linear };
// Position of the odd qubit: control for Fredkin, target for Toffoli.
enum class OddQubitPlacement { Anywhere, Ends, Center };

struct GateSpec {
  Which which = Which::Toffoli;
  Connectivity connectivity = Connectivity::AllToAll;
  OddQubitPlacement odd_qubit_placement = OddQubitPlacement::Anywhere;

  GateSpec() = default;
  GateSpec(Which w, Connectivity c,
           OddQubitPlacement p = OddQubitPlacement::Anywhere)
      : which(w), connectivity(c), odd_qubit_placement(p) {
    if (connectivity == Connectivity::AllToAll &&
        p != OddQubitPlacement::Anywhere)
      throw Error("Ends/Center placement requires linear connectivity");
  }

  bool operator<(const GateSpec& o) const {
    return std::tie(which, connectivity, odd_qubit_placement) <
           std::tie(o.which, o.connectivity, o.odd_qubit_placement);
  }
  bool operator==(const GateSpec& o) const {
    return which == o.which && connectivity == o.connectivity &&
           odd_qubit_placement == o.odd_qubit_placement;
  }

  // Optimal CNOT count for this scenario.
  int cnot_budget() const {
    if (which == Which::Toffoli)
      return connectivity == Connectivity::AllToAll ? 6 : 8;
    if (connectivity == Connectivity::AllToAll) return 7;
    return odd_qubit_placement == OddQubitPlacement::Center ? 10 : 8;
  }

  CouplingMap coupling() const {
    return connectivity == Connectivity::AllToAll ? CouplingMap::all_to_all(3)
                                                  : CouplingMap::line(3);
  }

  std::string id() const {
    std::string s = which == Which::Toffoli ? "toffoli" : "fredkin";
    s += connectivity == Connectivity::AllToAll ? "_a2a" : "_linear";
    if (odd_qubit_placement == OddQubitPlacement::Ends) s += "_ends";
    if (odd_qubit_placement == OddQubitPlacement::Center) s += "_center";
    return s;
  }
};

// The defining unitary of the scenario, on the seed's wire assignment.
inline Matrix target_unitary(const GateSpec& spec) {
  Matrix u = Matrix::Identity(8, 8);
  auto swap_states = [&u](int a, int b) {
    u(a, a) = u(b, b) = 0.0;
    u(a, b) = u(b, a) = 1.0;
  };
  if (spec.which == Which::Toffoli) {
    if (spec.connectivity == Connectivity::AllToAll) swap_states(6, 7);
    else swap_states(5, 7);  // controls 0,2 / target 1 (center of the line)
  } else {
    if (spec.connectivity == Connectivity::Linear &&
        spec.odd_qubit_placement == OddQubitPlacement::Center)
      swap_states(3, 6);  // control 1, targets 0,2
    else
      swap_states(5, 6);  // control 0, targets 1,2
  }
  return u;
}

// Roles of the three wires in the seed circuit for this spec.
inline int seed_odd_qubit(const GateSpec& spec) {
  if (spec.which == Which::Toffoli)
    return spec.connectivity == Connectivity::AllToAll ? 2 : 1;
  return spec.connectivity == Connectivity::Linear &&
                 spec.odd_qubit_placement == OddQubitPlacement::Center
             ? 1
             : 0;
}

// Transcriptions of the published circuits. Each is validated in the test
// suite by a dense unitary comparison against target_unitary, never by eye.
inline Circuit seed_circuit(const GateSpec& spec) {
  Circuit c(3, spec.id());
  using G = Gate;
  if (spec.which == Which::Toffoli &&
      spec.connectivity == Connectivity::AllToAll) {
    // Textbook 6-CNOT decomposition, controls 0,1, target 2.
    for (const Gate& g :
         {G::h(2), G::cx(1, 2), G::tdg(2), G::cx(0, 2), G::t(2), G::cx(1, 2),
          G::tdg(1), G::tdg(2), G::cx(0, 2), G::cx(0, 1), G::t(2), G::tdg(1),
          G::h(2), G::cx(0, 1), G::t(0), G::s(1)})
      c.push(g);
    return c;
  }
  if (spec.which == Which::Toffoli) {
    // 8 CNOTs on a line, controls 0,2, target 1.
    for (const Gate& g :
         {G::h(1), G::cx(0, 1), G::cx(1, 2), G::tdg(0), G::t(1), G::tdg(2),
          G::cx(0, 1), G::cx(1, 2), G::tdg(1), G::t(2), G::cx(0, 1),
          G::cx(1, 2), G::cx(0, 1), G::t(2), G::cx(1, 2), G::h(1),
          G::tdg(2)})
      c.push(g);
    return c;
  }
  if (spec.connectivity == Connectivity::AllToAll) {
    // 7 CNOTs, depth 13; control 0, targets 1,2.
    for (const Gate& g :
         {G::s(1), G::cx(2, 1), G::sdg(1), G::sx(2), G::t(2), G::cx(0, 2),
          G::t(2), G::cx(1, 2), G::t(1), G::tdg(2), G::cx(0, 2), G::cx(0, 1),
          G::t(2), G::t(0), G::tdg(1), G::h(2), G::cx(0, 1), G::cx(2, 1)})
      c.push(g);
    return c;
  }
  if (spec.odd_qubit_placement != OddQubitPlacement::Center) {
    // 8 CNOTs on a line, control 0 at one end, targets 1,2.
    for (const Gate& g :
         {G::x(1), G::sdg(2), G::s(1), G::sx(2), G::cx(2, 1), G::s(1),
          G::h(2), G::s(2), G::t(0), G::t(2), G::h(2), G::cx(2, 1), G::s(1),
          G::sdg(2), G::sx(1), G::sx(2), G::cx(0, 1), G::t(2), G::cx(1, 2),
          G::tdg(1), G::tdg(2), G::cx(0, 1), G::cx(1, 2), G::tdg(1), G::t(2),
          G::z(1), G::h(1), G::cx(1, 2), G::cx(0, 1)})
      c.push(g);
    return c;
  }
  // 10 CNOTs on a line, control 1 at the center, targets 0,2.
  for (const Gate& g :
       {G::t(1), G::s(1), G::s(2), G::sx(1), G::sxdg(2), G::cx(1, 2),
        G::sdg(1), G::sdg(2), G::cx(0, 1), G::sx(1), G::sxdg(2), G::s(0),
        G::sdg(1), G::cx(1, 2), G::h(0), G::h(1), G::t(0), G::tdg(1),
        G::sdg(1), G::s(2), G::h(0), G::h(1), G::z(0), G::s(1), G::cx(0, 1),
        G::sx(0), G::sx(1), G::cx(1, 2), G::cx(0, 1), G::sdg(1), G::h(0),
        G::h(1), G::h(2), G::t(0), G::tdg(1), G::s(2), G::cx(2, 1), G::s(0),
        G::tdg(1), G::t(2), G::h(0), G::h(1), G::h(2), G::z(0), G::s(1),
        G::s(2), G::cx(0, 1), G::sx(0), G::x(1), G::sx(2), G::cx(1, 2),
        G::cx(0, 1)})
    c.push(g);
  return c;
}

// ---------------------------------------------------------------------------
// Appendix constructions

namespace detail {

// Decompose a 2x2 unitary as e^{i alpha} U3(theta, phi, lambda).
struct U3Form {
  double alpha, theta, phi, lambda;
};

inline U3Form u3_form(const Eigen::Matrix2cd& m) {
  U3Form f{};
  double na = std::abs(m(0, 0));
  double nc = std::abs(m(1, 0));
  f.theta = 2.0 * std::atan2(nc, na);
  if (na > 1e-12) {
    f.alpha = std::arg(m(0, 0));
    f.phi = nc > 1e-12 ? std::arg(m(1, 0)) - f.alpha : 0.0;
    f.lambda = std::abs(m(0, 1)) > 1e-12 ? std::arg(-m(0, 1)) - f.alpha
                                         : std::arg(m(1, 1)) - f.alpha - f.phi;
  } else {
    f.phi = 0.0;
    f.alpha = std::arg(m(1, 0));
    f.lambda = std::arg(-m(0, 1)) - f.alpha;
  }
  return f;
}

// Controlled single-qubit gate, phase included: u1 on the control plus the
// standard two-CNOT controlled-U3 sequence on the target.
inline void push_controlled_1q(Circuit& c, int control, int target,
                               const Eigen::Matrix2cd& m) {
  U3Form f = u3_form(m);
  double a = f.alpha + (f.lambda + f.phi) / 2.0;
  if (std::abs(a) > 1e-15) c.push(Gate::u3(0, 0, a, control));
  if (std::abs((f.lambda - f.phi) / 2.0) > 1e-15)
    c.push(Gate::u3(0, 0, (f.lambda - f.phi) / 2.0, target));
  c.push(Gate::cx(control, target));
  c.push(Gate::u3(-f.theta / 2.0, 0, -(f.phi + f.lambda) / 2.0, target));
  c.push(Gate::cx(control, target));
  c.push(Gate::u3(f.theta / 2.0, f.phi, 0, target));
}

}  // namespace detail

// V then controlled-W then V^dagger; the result implements
// controlled-(V^dagger W V) on the wires of V with one control added.
// `control` is the wire index of the control in the result.
inline Circuit controlled_from_symmetric(const Circuit& v, const Circuit& w,
                                         int control) {
  if (v.num_qubits() != w.num_qubits())
    throw QubitCountMismatch("V and W act on different qubit counts");
  const int n = v.num_qubits();
  if (control < 0 || control > n) throw Error("control index out of range");
  auto shift = [control](int q) { return q < control ? q : q + 1; };
  Circuit out(n + 1);
  for (const Gate& g : v.gates()) {
    Gate h = g;
    for (int i = 0; i < g.arity(); ++i) h.qubits[i] = shift(g.qubits[i]);
    out.push(h);
  }
  for (const Gate& g : w.gates()) {
    if (g.kind == GateKind::X) {
      out.push(Gate::cx(control, shift(g.qubits[0])));
    } else if (g.kind == GateKind::CX) {
      out.push(Gate::ccx(control, shift(g.qubits[0]), shift(g.qubits[1])));
    } else if (gate_arity(g.kind) == 1) {
      detail::push_controlled_1q(out, control, shift(g.qubits[0]),
                                 sim::gate_matrix_1q(g));
    } else {
      throw UnsupportedControlledW(gate_name(g.kind));
    }
  }
  Circuit vi = invert(v);
  for (const Gate& g : vi.gates()) {
    Gate h = g;
    for (int i = 0; i < g.arity(); ++i) h.qubits[i] = shift(g.qubits[i]);
    out.push(h);
  }
  return out;
}

// Moves the Hadamard pair that turns the inner CCZ into a Toffoli from one
// wire to another, changing the target qubit of the implemented gate.
inline Circuit retarget_toffoli(const Circuit& c, int old_target,
                                int new_target) {
  if (old_target == new_target) return c;
  std::ptrdiff_t first = -1, last = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    bool touches = false;
    for (int k = 0; k < g.arity(); ++k)
      if (g.qubits[k] == old_target) touches = true;
    if (!touches) continue;
    if (first < 0) first = static_cast<std::ptrdiff_t>(i);
    last = static_cast<std::ptrdiff_t>(i);
  }
  if (first < 0 || first == last ||
      c.gates()[first].kind != GateKind::H ||
      c.gates()[last].kind != GateKind::H)
    throw TargetNotFound("no Hadamard pair on wire " +
                         std::to_string(old_target));
  Circuit out(c.num_qubits(), c.name());
  out.push(Gate::h(new_target));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (static_cast<std::ptrdiff_t>(i) == first ||
        static_cast<std::ptrdiff_t>(i) == last)
      continue;
    out.push(c.gates()[i]);
  }
  out.push(Gate::h(new_target));
  return out;
}

// ---------------------------------------------------------------------------
// Equivalent families

struct EquivalentFamily {
  GateSpec spec;
  std::vector<Circuit> circuits;
  std::set<StructureSignature> signatures;
};

// Closure of the seed under the gate's symmetries: inversion for both gates,
// target-pair swap for Fredkin, and the CCZ-form wire permutations for
// Toffoli. Results are filtered by connectivity and deduplicated by
// entangling gate structure.
inline EquivalentFamily symmetry_family(const Circuit& seed,
                                        const GateSpec& spec) {
  const CouplingMap coupling = spec.coupling();
  const Matrix target = target_unitary(spec);

  std::vector<std::function<Circuit(const Circuit&)>> transforms;
  transforms.emplace_back([](const Circuit& c) { return invert(c); });
  if (spec.which == Which::Fredkin) {
    int control = seed_odd_qubit(spec);
    std::vector<int> perm(3);
    std::vector<int> targets;
    for (int q = 0; q < 3; ++q)
      if (q != control) targets.push_back(q);
    for (int q = 0; q < 3; ++q) perm[q] = q;
    perm[targets[0]] = targets[1];
    perm[targets[1]] = targets[0];
    transforms.emplace_back(
        [perm](const Circuit& c) { return remap_qubits(c, perm); });
  } else {
    int t = seed_odd_qubit(spec);
    std::vector<std::vector<int>> perms = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0},
                                           {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : perms) {
      transforms.emplace_back([perm, t](const Circuit& c) {
        Circuit r = remap_qubits(c, perm);
        return perm[t] == t ? r : retarget_toffoli(r, perm[t], t);
      });
    }
  }

  EquivalentFamily fam;
  fam.spec = spec;

  auto consider = [&](const Circuit& c) -> bool {
    if (!validate_connectivity(c, coupling).empty()) return false;
    StructureSignature sig = structure_signature(c);
    if (fam.signatures.count(sig)) return false;
    fam.signatures.insert(sig);
    Circuit named = c;
    named.set_name(spec.id() + "_v" + std::to_string(fam.circuits.size()));
    fam.circuits.push_back(named);
    return true;
  };

  consider(seed);
  std::deque<Circuit> queue{seed};
  while (!queue.empty()) {
    Circuit cur = queue.front();
    queue.pop_front();
    for (const auto& tf : transforms) {
      Circuit next = tf(cur);
      if (consider(next)) queue.push_back(next);
    }
  }
  (void)target;  // asserted in the test suite over every member
  return fam;
}

// ---------------------------------------------------------------------------
// Corpus loading

struct FileFailure {
  std::string path;
  std::string message;
};

struct CorpusReport {
  EquivalentFamily family;
  std::vector<FileFailure> failures;
};

// Loads every .qasm file in `dir`, validating each against the spec's gate:
// unitary equivalence, connectivity, and the CNOT budget (plus
// `extra_cnots`, for the published one-more-CNOT tiers). Bad files land in
// the report, never in the family.
inline CorpusReport load_corpus(const std::string& dir, const GateSpec& spec,
                                int extra_cnots = 0) {
  namespace fs = std::filesystem;
  CorpusReport report;
  report.family.spec = spec;
  const Matrix target = target_unitary(spec);
  const CouplingMap coupling = spec.coupling();

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".qasm") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  for (const auto& path : files) {
    try {
      std::ifstream in(path);
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      Circuit c = qasm::parse_qasm(text);
      if (c.num_qubits() != 3)
        throw Error("expected 3 qubits, got " +
                    std::to_string(c.num_qubits()));
      auto m = metrics(c);
      if (m.cnot_count > spec.cnot_budget() + extra_cnots)
        throw Error("CNOT count " + std::to_string(m.cnot_count) +
                    " exceeds budget " +
                    std::to_string(spec.cnot_budget() + extra_cnots));
      if (!validate_connectivity(c, coupling).empty())
        throw Error("connectivity violation");
      if (!sim::equivalent_up_to_global_phase(sim::unitary_of(c), target))
        throw Error("unitary does not match the gate");
      StructureSignature sig = structure_signature(c);
      c.set_name(path.stem().string());
      if (!report.family.signatures.count(sig)) {
        report.family.signatures.insert(sig);
        report.family.circuits.push_back(c);
      }
    } catch (const Error& e) {
      report.failures.push_back({path.string(), e.what()});
    }
  }
  return report;
}

// Writes a family as one .qasm per circuit plus the JSON sidecar.
inline void write_corpus(const EquivalentFamily& fam, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (std::size_t i = 0; i < fam.circuits.size(); ++i) {
    const Circuit& c = fam.circuits[i];
    std::ofstream out(fs::path(dir) / (c.name() + ".qasm"));
    out << qasm::emit_qasm(c);
  }
  std::ofstream side(fs::path(dir) / "family.json");
  const GateSpec& s = fam.spec;
  side << "{\n"
       << "  \"gate\": \""
       << (s.which == Which::Toffoli ? "toffoli" : "fredkin") << "\",\n"
       << "  \"connectivity\": \""
       << (s.connectivity == Connectivity::AllToAll ? "all_to_all" : "linear")
       << "\",\n"
       << "  \"odd_qubit_placement\": \""
       << (s.odd_qubit_placement == OddQubitPlacement::Anywhere
               ? "anywhere"
               : s.odd_qubit_placement == OddQubitPlacement::Ends ? "ends"
                                                                  : "center")
       << "\",\n"
       << "  \"cnot_count\": " << s.cnot_budget() << "\n}\n";
}

}  // namespace qroute::decomp
