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

#include "qroute/sim.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "qroute/rng.hpp"

using namespace qroute;
using sim::apply_to_state;
using sim::basis_state;
using sim::unitary_of;
using sim::f2_matrix;

namespace {

Circuit random_circuit(int n, int gates, uint64_t seed) {
  rng::Philox gen{seed};
  Circuit c(n);
  for (int i = 0; i < gates; ++i) {
    double u = gen.uniform(0, i);
    if (u < 0.4) {
      int a = static_cast<int>(gen.uniform(1, i) * n);
      int b = static_cast<int>(gen.uniform(2, i) * n);
      if (a == b) b = (b + 1) % n;
      c.push(Gate::cx(a, b));
    } else {
      int q = static_cast<int>(gen.uniform(3, i) * n);
      int which = static_cast<int>(gen.uniform(4, i) * 5);
      switch (which) {
        case 0: c.push(Gate::h(q)); break;
        case 1: c.push(Gate::t(q)); break;
        case 2: c.push(Gate::sx(q)); break;
        case 3: c.push(Gate::rz(gen.uniform(5, i, -3, 3), q)); break;
        default:
          c.push(Gate::u3(gen.uniform(6, i, 0, 3), gen.uniform(7, i, -3, 3),
                          gen.uniform(8, i, -3, 3), q));
      }
    }
  }
  return c;
}

Vector random_state(int n, uint64_t seed) {
  rng::Philox gen{seed};
  Vector v(int64_t{1} << n);
  for (int64_t i = 0; i < v.size(); ++i) {
    auto [a, b] = rng::normal_pair(gen, 9, i);
    v[i] = cxd(a, b);
  }
  v.normalize();
  return v;
}

}  // namespace

TEST_CASE("unitary_of: empty circuit is identity") {
  Circuit c(2);
  CHECK((unitary_of(c) - Matrix::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("unitary_of: qubit cap") {
  Circuit c(15);
  CHECK_THROWS_AS(unitary_of(c), TooManyQubits);
}

TEST_CASE("unitary_of: preserves unitarity for long circuits") {
  Circuit c = random_circuit(5, 200, 4242);
  Matrix u = unitary_of(c);
  CHECK(sim::is_unitary(u, 1e-10));
}

TEST_CASE("apply_to_state: CX on |10> gives |11>") {
  Circuit c(2);
  c.push(Gate::cx(0, 1));
  Vector out = apply_to_state(c, basis_state(2, 0b10));
  CHECK(std::abs(out[0b11] - 1.0) < 1e-14);
}

TEST_CASE("apply_to_state: matches dense oracle on random circuits") {
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c = random_circuit(5, 30, 100 + trial);
    Vector psi = random_state(5, 200 + trial);
    Vector fast = apply_to_state(c, psi);
    Vector slow = unitary_of(c) * psi;
    CHECK((fast - slow).norm() < 1e-10);
  }
}

TEST_CASE("apply_to_state: dimension mismatch") {
  Circuit c(3);
  Vector psi = basis_state(2, 0);
  CHECK_THROWS_AS(apply_to_state(c, psi), QubitCountMismatch);
}

TEST_CASE("equivalent_up_to_global_phase") {
  Circuit c = random_circuit(3, 20, 7);
  Matrix u = unitary_of(c);
  cxd phase = std::exp(cxd(0, kPi / 7.0));
  CHECK(sim::equivalent_up_to_global_phase(u, phase * u));

  Matrix i2 = Matrix::Identity(2, 2);
  Matrix z = i2;
  z(1, 1) = -1.0;
  CHECK(!sim::equivalent_up_to_global_phase(i2, z));
  CHECK_THROWS_AS(
      sim::equivalent_up_to_global_phase(i2, Matrix::Identity(4, 4)),
      DimensionMismatch);
}

TEST_CASE("equivalence relation on a sample") {
  // Reflexive, symmetric, transitive within tolerance.
  std::vector<Matrix> us;
  Matrix base = unitary_of(random_circuit(2, 15, 31));
  us.push_back(base);
  us.push_back(std::exp(cxd(0, 0.3)) * base);
  us.push_back(std::exp(cxd(0, -1.2)) * base);
  us.push_back(unitary_of(random_circuit(2, 15, 32)));
  for (const auto& a : us) CHECK(sim::equivalent_up_to_global_phase(a, a));
  for (const auto& a : us)
    for (const auto& b : us)
      CHECK(sim::equivalent_up_to_global_phase(a, b) ==
            sim::equivalent_up_to_global_phase(b, a));
  for (const auto& a : us)
    for (const auto& b : us)
      for (const auto& c : us)
        if (sim::equivalent_up_to_global_phase(a, b) &&
            sim::equivalent_up_to_global_phase(b, c))
          CHECK(sim::equivalent_up_to_global_phase(a, c));
}

TEST_CASE("sample_counts: deterministic point mass") {
  Vector psi = basis_state(1, 0);
  auto t = sim::sample_counts(psi, {0}, 100, 5);
  REQUIRE(t.counts.size() == 1);
  CHECK(t.counts.at("0") == 100);
}

TEST_CASE("sample_counts: |+> within 5 sigma of half") {
  Circuit c(1);
  c.push(Gate::h(0));
  Vector psi = apply_to_state(c, basis_state(1, 0));
  const uint64_t shots = 1000000;
  auto t = sim::sample_counts(psi, {0}, shots, 99);
  double p0 = static_cast<double>(t.counts["0"]) / shots;
  double sigma = 0.5 / std::sqrt(static_cast<double>(shots));
  CHECK(std::abs(p0 - 0.5) < 5 * sigma);
}

TEST_CASE("sample_counts: same seed, same table") {
  Vector psi = random_state(3, 11);
  auto a = sim::sample_counts(psi, {0, 1, 2}, 5000, 1234);
  auto b = sim::sample_counts(psi, {0, 1, 2}, 5000, 1234);
  CHECK(a.counts == b.counts);
  auto c = sim::sample_counts(psi, {0, 1, 2}, 5000, 1235);
  CHECK(a.counts != c.counts);
}

TEST_CASE("sample_counts: counts sum to shots and CSV round numbers") {
  Vector psi = random_state(2, 21);
  auto t = sim::sample_counts(psi, {0, 1}, 4321, 6);
  uint64_t total = 0;
  for (auto& [k, v] : t.counts) total += v;
  CHECK(total == t.shots);
  CHECK(t.to_csv().rfind("bitstring,count\n", 0) == 0);
}

TEST_CASE("f2_matrix: single CX") {
  Circuit c(2);
  c.push(Gate::cx(0, 1));
  auto m = f2_matrix(c);
  // Acting on column bit-vectors: x0 -> x0, x1 -> x0 ^ x1.
  CHECK(m.rows[0] == 0b01u);
  CHECK(m.rows[1] == 0b11u);
  CHECK(m.apply(0b01) == 0b11);  // x0=1 flips x1
}

TEST_CASE("f2_matrix: rejects non-linear gates") {
  Circuit c(2);
  c.push(Gate::h(0));
  CHECK_THROWS_AS(f2_matrix(c), NonLinearGate);
}

TEST_CASE("f2_matrix: permutation matches dense unitary on CNOT circuits") {
  for (int trial = 0; trial < 20; ++trial) {
    rng::Philox gen{900u + static_cast<uint64_t>(trial)};
    Circuit c(6);
    for (int i = 0; i < 30; ++i) {
      int a = static_cast<int>(gen.uniform(0, i) * 6);
      int b = static_cast<int>(gen.uniform(1, i) * 6);
      if (a == b) b = (b + 1) % 6;
      c.push(Gate::cx(a, b));
    }
    Matrix dense = unitary_of(c);
    Matrix perm = sim::f2_permutation_unitary(f2_matrix(c));
    CHECK((dense - perm).norm() < 1e-12);
  }
}
