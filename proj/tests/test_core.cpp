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

#include "qroute/core.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "qroute/rng.hpp"
#include "qroute/sim.hpp"

using namespace qroute;

namespace {

Circuit random_cx_1q_circuit(int n, int gates, uint64_t seed) {
  rng::Philox gen{seed};
  Circuit c(n);
  for (int i = 0; i < gates; ++i) {
    double u = gen.uniform(0, i);
    if (u < 0.5) {
      int a = static_cast<int>(gen.uniform(1, i) * n);
      int b = static_cast<int>(gen.uniform(2, i) * n);
      if (a == b) b = (b + 1) % n;
      c.push(Gate::cx(a, b));
    } else if (u < 0.75) {
      c.push(Gate::t(static_cast<int>(gen.uniform(3, i) * n)));
    } else {
      c.push(Gate::rz(gen.uniform(4, i, -3.0, 3.0),
                      static_cast<int>(gen.uniform(5, i) * n)));
    }
  }
  return c;
}

}  // namespace

TEST_CASE("metrics: empty circuit") {
  Circuit c(3);
  auto m = metrics(c);
  CHECK(m.cnot_count == 0);
  CHECK(m.depth == 0);
  CHECK(m.pair_histogram.empty());
}

TEST_CASE("metrics: counts and ASAP depth") {
  Circuit c(3);
  c.push(Gate::h(0));
  c.push(Gate::cx(0, 1));
  c.push(Gate::cx(1, 2));
  c.push(Gate::t(0));
  auto m = metrics(c);
  CHECK(m.cnot_count == 2);
  CHECK(m.depth == 3);
  CHECK(m.pair_histogram.at({0, 1}) == 1);
  CHECK(m.pair_histogram.at({1, 2}) == 1);
  int total = 0;
  for (auto& [p, k] : m.pair_histogram) total += k;
  CHECK(total == m.cnot_count);
}

TEST_CASE("metrics: rejects undecomposed primitives") {
  Circuit c(3);
  c.push(Gate::ccx(0, 1, 2));
  CHECK_THROWS_AS(metrics(c), MultiQubitPrimitivePresent);
  Circuit s(2);
  s.push(Gate::swap(0, 1));
  CHECK_THROWS_AS(metrics(s), MultiQubitPrimitivePresent);
}

TEST_CASE("validate_connectivity") {
  Circuit c(3);
  c.push(Gate::cx(0, 2));
  auto v = validate_connectivity(c, CouplingMap::line(3));
  REQUIRE(v.size() == 1);
  CHECK(v[0].gate_index == 0);
  CHECK(v[0].pair == std::make_pair(0, 2));
  CHECK(validate_connectivity(c, CouplingMap::all_to_all(3)).empty());
}

TEST_CASE("structure_signature: single-qubit gates excluded") {
  Circuit a(2), b(2);
  a.push(Gate::cx(0, 1));
  a.push(Gate::t(1));
  a.push(Gate::cx(0, 1));
  b.push(Gate::cx(0, 1));
  b.push(Gate::cx(0, 1));
  b.push(Gate::s(0));
  CHECK(structure_signature(a) == structure_signature(b));
}

TEST_CASE("structure_signature: disjoint supports commute") {
  Circuit a(4), b(4);
  a.push(Gate::cx(0, 1));
  a.push(Gate::cx(2, 3));
  b.push(Gate::cx(2, 3));
  b.push(Gate::cx(0, 1));
  CHECK(structure_signature(a) == structure_signature(b));
}

TEST_CASE("structure_signature: constrained pair does not commute") {
  Circuit a(3), b(3);
  a.push(Gate::cx(0, 1));
  a.push(Gate::cx(1, 2));
  b.push(Gate::cx(1, 2));
  b.push(Gate::cx(0, 1));
  CHECK(!(structure_signature(a) == structure_signature(b)));
  // Confirmed by unitary inequality.
  CHECK(!sim::equivalent_up_to_global_phase(sim::unitary_of(a),
                                            sim::unitary_of(b)));
}

TEST_CASE("structure_signature: invariant under randomized commuting edits") {
  rng::Philox gen{12345};
  for (int trial = 0; trial < 1000; ++trial) {
    Circuit c = random_cx_1q_circuit(4, 14, 1000 + trial);
    auto base = structure_signature(c);

    // Single-qubit insertion/removal does not change the signature.
    Circuit edited(4);
    int insert_at = static_cast<int>(gen.uniform(10, trial) * (c.size() + 1));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (static_cast<int>(i) == insert_at) edited.push(Gate::h(2));
      const Gate& g = c.gates()[i];
      if (g.kind == GateKind::T && gen.uniform(11, trial) < 0.5) continue;
      edited.push(g);
    }
    CHECK(structure_signature(edited) == base);

    // Swapping an adjacent commuting CX pair does not change the signature.
    auto gates = c.gates();
    for (std::size_t i = 0; i + 1 < gates.size(); ++i) {
      const Gate &g1 = gates[i], &g2 = gates[i + 1];
      if (g1.kind != GateKind::CX || g2.kind != GateKind::CX) continue;
      bool constrained = g1.qubits[0] == g2.qubits[1] ||
                         g1.qubits[1] == g2.qubits[0];
      if (constrained) continue;
      Circuit swapped(4);
      for (std::size_t j = 0; j < gates.size(); ++j) {
        if (j == i) swapped.push(gates[i + 1]);
        else if (j == i + 1) swapped.push(gates[i]);
        else swapped.push(gates[j]);
      }
      CHECK(structure_signature(swapped) == base);
      break;
    }
  }
}

TEST_CASE("invert: identities") {
  Circuit e(2);
  CHECK(invert(e) == e);

  Circuit c = random_cx_1q_circuit(3, 20, 777);
  CHECK(invert(invert(c)) == c);

  // unitary_of(invert(c)) equals the conjugate transpose of unitary_of(c).
  Matrix u = sim::unitary_of(c);
  Matrix ui = sim::unitary_of(invert(c));
  CHECK((ui - u.adjoint()).norm() < 1e-10);
}

TEST_CASE("invert: U3 inverse") {
  Circuit c(1);
  c.push(Gate::u3(0.3, 1.1, -0.4, 0));
  Matrix u = sim::unitary_of(c);
  Matrix ui = sim::unitary_of(invert(c));
  CHECK((u * ui - Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("remap_qubits") {
  Circuit c(3);
  c.push(Gate::cx(0, 1));
  c.push(Gate::h(2));

  SECTION("identity permutation") {
    CHECK(remap_qubits(c, {0, 1, 2}) == c);
  }
  SECTION("bad permutations") {
    CHECK_THROWS_AS(remap_qubits(c, {0, 1}), InvalidPermutation);
    CHECK_THROWS_AS(remap_qubits(c, {0, 0, 2}), InvalidPermutation);
    CHECK_THROWS_AS(remap_qubits(c, {0, 1, 3}), InvalidPermutation);
  }
  SECTION("preserves metrics") {
    Circuit c2 = random_cx_1q_circuit(4, 25, 99);
    auto m1 = metrics(c2);
    auto m2 = metrics(remap_qubits(c2, {2, 0, 3, 1}));
    CHECK(m1.cnot_count == m2.cnot_count);
    CHECK(m1.depth == m2.depth);
  }
}

TEST_CASE("coupling map constructors") {
  auto l = CouplingMap::line(4);
  CHECK(l.has_edge(0, 1));
  CHECK(l.has_edge(2, 1));
  CHECK(!l.has_edge(0, 2));
  CHECK(l.is_line());
  auto f = CouplingMap::all_to_all(4);
  CHECK(f.has_edge(0, 3));
  CHECK(f.is_all_to_all());
  CHECK_THROWS_AS(l.add_edge(1, 1), Error);
}
