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
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qroute/common.hpp"
#include "qroute/core.hpp"
#include "qroute/rng.hpp"

namespace qroute::sim {

// Qubit 0 is the most significant bit of the basis-state index throughout:
// basis index i assigns qubit q the bit (n-1-q) of i. This matches circuit
// diagrams where significance decreases from top to bottom.

inline Eigen::Matrix2cd gate_matrix_1q(const Gate& g) {
  using std::cos;
  using std::sin;
  const cxd i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::H: m << 1, 1, 1, -1; m /= std::sqrt(2.0); break;
    case GateKind::S: m << 1, 0, 0, i; break;
    case GateKind::Sdg: m << 1, 0, 0, -i; break;
    case GateKind::T: m << 1, 0, 0, std::exp(i * kPi / 4.0); break;
    case GateKind::Tdg: m << 1, 0, 0, std::exp(-i * kPi / 4.0); break;
    case GateKind::SX:
      m << 0.5 + 0.5 * i, 0.5 - 0.5 * i, 0.5 - 0.5 * i, 0.5 + 0.5 * i;
      break;
    case GateKind::SXdg:
      m << 0.5 - 0.5 * i, 0.5 + 0.5 * i, 0.5 + 0.5 * i, 0.5 - 0.5 * i;
      break;
    case GateKind::RZ: {
      double t = g.params[0];
      m << std::exp(-i * t / 2.0), 0, 0, std::exp(i * t / 2.0);
      break;
    }
    case GateKind::RX: {
      double t = g.params[0];
      m << cos(t / 2), -i * sin(t / 2), -i * sin(t / 2), cos(t / 2);
      break;
    }
    case GateKind::U3: {
      double t = g.params[0], p = g.params[1], l = g.params[2];
      m << cos(t / 2), -std::exp(i * l) * sin(t / 2),
          std::exp(i * p) * sin(t / 2), std::exp(i * (p + l)) * cos(t / 2);
      break;
    }
    default:
      throw Error("not a single-qubit gate");
  }
  return m;
}

namespace detail {

// Applies a dense 2^k x 2^k kernel to the listed qubits (qs[0] most
// significant within the kernel's local index).
inline void apply_kernel(Vector& psi, const Matrix& kernel,
                         const std::vector<int>& qs, int n) {
  const int k = static_cast<int>(qs.size());
  const int dim_k = 1 << k;
  std::vector<int64_t> bit(k);
  for (int i = 0; i < k; ++i) bit[i] = int64_t{1} << (n - 1 - qs[i]);
  int64_t mask = 0;
  for (int64_t b : bit) mask |= b;
  const int64_t dim = int64_t{1} << n;
  std::vector<cxd> amp(dim_k);
  for (int64_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (int a = 0; a < dim_k; ++a) {
      int64_t idx = base;
      for (int i = 0; i < k; ++i)
        if (a & (1 << (k - 1 - i))) idx |= bit[i];
      amp[a] = psi[idx];
    }
    for (int a = 0; a < dim_k; ++a) {
      cxd v = 0;
      for (int b = 0; b < dim_k; ++b) v += kernel(a, b) * amp[b];
      int64_t idx = base;
      for (int i = 0; i < k; ++i)
        if (a & (1 << (k - 1 - i))) idx |= bit[i];
      psi[idx] = v;
    }
  }
}

inline void apply_gate(Vector& psi, const Gate& g, int n) {
  const int64_t dim = int64_t{1} << n;
  switch (g.kind) {
    case GateKind::CX: {
      int64_t cb = int64_t{1} << (n - 1 - g.qubits[0]);
      int64_t tb = int64_t{1} << (n - 1 - g.qubits[1]);
      for (int64_t x = 0; x < dim; ++x)
        if ((x & cb) && !(x & tb)) std::swap(psi[x], psi[x | tb]);
      return;
    }
    case GateKind::SWAP: {
      int64_t ab = int64_t{1} << (n - 1 - g.qubits[0]);
      int64_t bb = int64_t{1} << (n - 1 - g.qubits[1]);
      for (int64_t x = 0; x < dim; ++x)
        if ((x & ab) && !(x & bb)) std::swap(psi[x], psi[(x ^ ab) | bb]);
      return;
    }
    case GateKind::CCX: {
      int64_t c1 = int64_t{1} << (n - 1 - g.qubits[0]);
      int64_t c2 = int64_t{1} << (n - 1 - g.qubits[1]);
      int64_t tb = int64_t{1} << (n - 1 - g.qubits[2]);
      for (int64_t x = 0; x < dim; ++x)
        if ((x & c1) && (x & c2) && !(x & tb)) std::swap(psi[x], psi[x | tb]);
      return;
    }
    case GateKind::CSWAP: {
      int64_t cb = int64_t{1} << (n - 1 - g.qubits[0]);
      int64_t ab = int64_t{1} << (n - 1 - g.qubits[1]);
      int64_t bb = int64_t{1} << (n - 1 - g.qubits[2]);
      for (int64_t x = 0; x < dim; ++x)
        if ((x & cb) && (x & ab) && !(x & bb))
          std::swap(psi[x], psi[(x ^ ab) | bb]);
      return;
    }
    default: {
      Eigen::Matrix2cd m = gate_matrix_1q(g);
      int64_t qb = int64_t{1} << (n - 1 - g.qubits[0]);
      for (int64_t x = 0; x < dim; ++x) {
        if (x & qb) continue;
        cxd a0 = psi[x], a1 = psi[x | qb];
        psi[x] = m(0, 0) * a0 + m(0, 1) * a1;
        psi[x | qb] = m(1, 0) * a0 + m(1, 1) * a1;
      }
      return;
    }
  }
}

}  // namespace detail

inline constexpr int kDefaultQubitCap = 14;

// Gate-by-gate kernel application; no full matrix is materialized.
inline Vector apply_to_state(const Circuit& c, const Vector& psi) {
  const int n = c.num_qubits();
  if (psi.size() != (int64_t{1} << n))
    throw QubitCountMismatch("state dimension does not match circuit");
  Vector out = psi;
  for (const Gate& g : c.gates()) detail::apply_gate(out, g, n);
  return out;
}

inline Vector basis_state(int n, int64_t index) {
  Vector psi = Vector::Zero(int64_t{1} << n);
  psi[index] = 1.0;
  return psi;
}

// Product of the gate matrices in circuit order.
inline Matrix unitary_of(const Circuit& c, int qubit_cap = kDefaultQubitCap) {
  const int n = c.num_qubits();
  if (n > qubit_cap)
    throw TooManyQubits(std::to_string(n) + " qubits exceeds cap " +
                        std::to_string(qubit_cap));
  const int64_t dim = int64_t{1} << n;
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : c.gates()) {
    for (int64_t col = 0; col < dim; ++col) {
      Vector v = u.col(col);
      detail::apply_gate(v, g, n);
      u.col(col) = v;
    }
  }
  return u;
}

inline bool is_unitary(const Matrix& u, double tol = 1e-10) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm() <=
         tol * static_cast<double>(u.rows());
}

// True iff min over phase of ||U - e^{i phi} V||_F <= tol * dim, with the
// phase read off the largest-magnitude entry ratio.
inline bool equivalent_up_to_global_phase(const Matrix& u, const Matrix& v,
                                          double tol = 1e-8) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw DimensionMismatch("matrix sizes differ");
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      double m = std::abs(v(i, j)) * std::abs(u(i, j));
      if (m > best) {
        best = m;
        bi = i;
        bj = j;
      }
    }
  if (best <= 0.0) return u.norm() <= tol && v.norm() <= tol;
  cxd phase = u(bi, bj) / v(bi, bj);
  phase /= std::abs(phase);
  return (u - phase * v).norm() <= tol * static_cast<double>(u.rows());
}

// ---------------------------------------------------------------------------
// Measurement sampling

struct ShotTable {
  std::map<std::string, uint64_t> counts;
  uint64_t shots = 0;
  uint64_t seed = 0;

  std::string to_csv() const {
    std::ostringstream os;
    os << "bitstring,count\n";
    for (const auto& [k, v] : counts) os << k << "," << v << "\n";
    return os.str();
  }
};

// Multinomial draw from the |amplitude|^2 marginal of the measured qubits.
// Bit k of each result string is the outcome of measured_qubits[k]. Uses a
// counter-based stream keyed by the seed, so results are reproducible and
// independent of any parallel scheduling.
inline ShotTable sample_counts(const Vector& psi,
                               const std::vector<int>& measured_qubits,
                               uint64_t shots, uint64_t seed) {
  int n = 0;
  while ((int64_t{1} << n) < psi.size()) ++n;
  const int k = static_cast<int>(measured_qubits.size());
  std::vector<double> prob(std::size_t{1} << k, 0.0);
  for (int64_t x = 0; x < psi.size(); ++x) {
    double p = std::norm(psi[x]);
    if (p == 0.0) continue;
    std::size_t key = 0;
    for (int i = 0; i < k; ++i) {
      int q = measured_qubits[i];
      if (x & (int64_t{1} << (n - 1 - q))) key |= std::size_t{1} << (k - 1 - i);
    }
    prob[key] += p;
  }
  std::vector<double> cdf(prob.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < prob.size(); ++i) {
    acc += prob[i];
    cdf[i] = acc;
  }
  // Guard against rounding: the last bucket absorbs the tail.
  cdf.back() = std::max(cdf.back(), 1.0);

  rng::Philox gen{seed};
  std::vector<uint64_t> hist(prob.size(), 0);
  for (uint64_t s = 0; s < shots; ++s) {
    double u = gen.uniform(/*stream=*/1, s) * acc;
    std::size_t idx =
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    if (idx >= hist.size()) idx = hist.size() - 1;
    ++hist[idx];
  }
  ShotTable t;
  t.shots = shots;
  t.seed = seed;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (hist[i] == 0) continue;
    std::string bits(k, '0');
    for (int b = 0; b < k; ++b)
      if (i & (std::size_t{1} << (k - 1 - b))) bits[b] = '1';
    t.counts[bits] = hist[i];
  }
  return t;
}

// ---------------------------------------------------------------------------
// F2 fast path for CNOT-only circuits

// n x n matrix over F2 acting on column bit-vectors of basis labels.
struct BitMatrix {
  int n = 0;
  std::vector<uint64_t> rows;  // rows[i] bit j = entry (i, j)

  static BitMatrix identity(int n) {
    BitMatrix m;
    m.n = n;
    m.rows.assign(n, 0);
    for (int i = 0; i < n; ++i) m.rows[i] = uint64_t{1} << i;
    return m;
  }

  bool operator==(const BitMatrix& o) const { return n == o.n && rows == o.rows; }

  // Image of a basis label (bit q of x = value of qubit q).
  uint64_t apply(uint64_t x) const {
    uint64_t y = 0;
    for (int i = 0; i < n; ++i)
      if (__builtin_parityll(rows[i] & x)) y |= uint64_t{1} << i;
    return y;
  }
};

// Product of transvections: CX(a, b) maps x_b <- x_b xor x_a.
inline BitMatrix f2_matrix(const Circuit& c) {
  BitMatrix m = BitMatrix::identity(c.num_qubits());
  for (const Gate& g : c.gates()) {
    if (g.kind != GateKind::CX)
      throw NonLinearGate(std::string("gate ") + gate_name(g.kind));
    m.rows[g.qubits[1]] ^= m.rows[g.qubits[0]];
  }
  return m;
}

// The permutation unitary induced by an F2 map, for cross-checks against
// unitary_of on CNOT-only circuits.
inline Matrix f2_permutation_unitary(const BitMatrix& m) {
  const int64_t dim = int64_t{1} << m.n;
  Matrix u = Matrix::Zero(dim, dim);
  for (int64_t x = 0; x < dim; ++x) {
    // Basis index bits are qubit-0-most-significant; BitMatrix stores bit q
    // of the label in position q.
    uint64_t label = 0;
    for (int q = 0; q < m.n; ++q)
      if (x & (int64_t{1} << (m.n - 1 - q))) label |= uint64_t{1} << q;
    uint64_t out = m.apply(label);
    int64_t y = 0;
    for (int q = 0; q < m.n; ++q)
      if (out & (uint64_t{1} << q)) y |= int64_t{1} << (m.n - 1 - q);
    u(y, x) = 1.0;
  }
  return u;
}

}  // namespace qroute::sim
