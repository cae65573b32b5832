// Copyright 2026 The Entanglemetry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entanglemetry/state.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "entanglemetry/error.hpp"

namespace entanglemetry {

QubitSubset QubitSubset::of(std::initializer_list<int> qubits) {
  std::uint32_t mask = 0;
  for (int q : qubits) mask |= 1u << q;
  return QubitSubset(mask);
}

int QubitSubset::size() const { return std::popcount(mask_); }

std::vector<int> QubitSubset::qubits() const {
  std::vector<int> out;
  for (int q = 0; q < 32; ++q) {
    if (contains(q)) out.push_back(q);
  }
  return out;
}

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw Error(ErrorCode::kUnsupportedSize,
                "qubit count " + std::to_string(n_qubits) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

// Basis-index bit carrying qubit q in an n-qubit register.
constexpr std::size_t qubit_bit(int n_qubits, int qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

// Maps a compact index over the given qubits (MSB = first listed qubit) to
// the full-register index with all other bits zero.
std::vector<std::size_t> scatter_table(int n_qubits, const std::vector<int>& qubits) {
  const std::size_t count = std::size_t{1} << qubits.size();
  std::vector<std::size_t> table(count, 0);
  const int k = static_cast<int>(qubits.size());
  for (std::size_t r = 0; r < count; ++r) {
    std::size_t full = 0;
    for (int pos = 0; pos < k; ++pos) {
      if ((r >> (k - 1 - pos)) & 1u) full |= qubit_bit(n_qubits, qubits[pos]);
    }
    table[r] = full;
  }
  return table;
}

void check_keep(const StateVector& state, QubitSubset keep) {
  const int n = state.num_qubits();
  if (keep.empty()) throw Error(ErrorCode::kEmptySubset, "kept subset is empty");
  if (keep.mask() >> n) {
    throw Error(ErrorCode::kDomainError,
                "kept subset references qubits beyond the register");
  }
  if (keep.complement(n).empty()) {
    throw Error(ErrorCode::kFullSubset, "kept subset is the full register");
  }
}

}  // namespace

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amps,
                                         NormPolicy policy) {
  check_qubit_count(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (amps.size() != dim) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(dim) + " amplitudes, got " +
                    std::to_string(amps.size()));
  }
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  const double norm = std::sqrt(norm2);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kZeroVector, "amplitude vector has zero or non-finite norm");
  }
  if (policy == NormPolicy::kStrict && std::abs(norm - 1.0) >= kRenormalizeTolerance) {
    throw Error(ErrorCode::kNormOutOfTolerance,
                "norm " + std::to_string(norm) + " deviates from 1 by more than 1e-6");
  }
  for (auto& a : amps) a /= norm;
  return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm() const {
  double norm2 = 0.0;
  for (const auto& a : amps_) norm2 += std::norm(a);
  return std::sqrt(norm2);
}

DensityMatrix::DensityMatrix(int n_qubits, std::vector<Complex> entries)
    : n_qubits_(n_qubits),
      dim_(std::size_t{1} << n_qubits),
      entries_(std::move(entries)) {}

DensityMatrix make_density_unchecked(int n_qubits, std::vector<Complex> entries) {
  return DensityMatrix(n_qubits, std::move(entries));
}

DensityMatrix DensityMatrix::from_entries(int n_qubits, std::vector<Complex> entries) {
  check_qubit_count(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (entries.size() != dim * dim) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(dim * dim) + " matrix entries");
  }
  DensityMatrix rho(n_qubits, std::move(entries));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r; c < dim; ++c) {
      if (std::abs(rho(r, c) - std::conj(rho(c, r))) > kHermitianTolerance) {
        throw Error(ErrorCode::kInvalidDensityMatrix, "matrix is not Hermitian");
      }
    }
  }
  if (std::abs(rho.trace() - 1.0) > kTraceTolerance) {
    throw Error(ErrorCode::kInvalidDensityMatrix, "trace differs from 1");
  }
  const auto eig = rho.eigenvalues();
  if (!eig.empty() && eig.front() < kEigenvalueFloor) {
    throw Error(ErrorCode::kInvalidDensityMatrix,
                "negative eigenvalue " + std::to_string(eig.front()));
  }
  return rho;
}

Complex DensityMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<double> DensityMatrix::eigenvalues() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = entries_[static_cast<std::size_t>(r) * dim_ + static_cast<std::size_t>(c)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

DensityMatrix reduced_density(const StateVector& state, QubitSubset keep) {
  check_keep(state, keep);
  const int n = state.num_qubits();
  const auto kept = scatter_table(n, keep.qubits());
  const auto traced = scatter_table(n, keep.complement(n).qubits());
  const std::size_t dk = kept.size();
  const auto amps = state.amplitudes();

  std::vector<Complex> rho(dk * dk, Complex{});
  for (std::size_t r = 0; r < dk; ++r) {
    for (std::size_t c = r; c < dk; ++c) {
      Complex acc = 0.0;
      for (std::size_t t : traced) {
        acc += amps[kept[r] | t] * std::conj(amps[kept[c] | t]);
      }
      rho[r * dk + c] = acc;
      rho[c * dk + r] = std::conj(acc);
    }
  }
  return make_density_unchecked(keep.size(), std::move(rho));
}

double purity(const DensityMatrix& rho) {
  double sum = 0.0;
  for (const auto& e : rho.entries()) sum += std::norm(e);
  return sum;
}

double linear_entropy(const DensityMatrix& rho) { return 1.0 - purity(rho); }

double reduced_purity(const StateVector& state, QubitSubset keep) {
  check_keep(state, keep);
  const int n = state.num_qubits();
  // Purity is symmetric between the two sides; the smaller Gram matrix wins.
  if (keep.size() * 2 > n) keep = keep.complement(n);
  const auto kept = scatter_table(n, keep.qubits());
  const auto traced = scatter_table(n, keep.complement(n).qubits());
  const auto amps = state.amplitudes();

  double sum = 0.0;
  for (std::size_t r = 0; r < kept.size(); ++r) {
    double diag = 0.0;
    for (std::size_t t : traced) diag += std::norm(amps[kept[r] | t]);
    sum += diag * diag;
    for (std::size_t c = r + 1; c < kept.size(); ++c) {
      Complex acc = 0.0;
      for (std::size_t t : traced) acc += amps[kept[r] | t] * std::conj(amps[kept[c] | t]);
      sum += 2.0 * std::norm(acc);
    }
  }
  return sum;
}

double reduced_linear_entropy(const StateVector& state, QubitSubset keep) {
  check_keep(state, keep);
  const int n = state.num_qubits();
  if (keep.size() * 2 > n) keep = keep.complement(n);
  const auto rows = scatter_table(n, keep.qubits());
  const auto cols = scatter_table(n, keep.complement(n).qubits());
  const auto amps = state.amplitudes();

  // (Tr rho)^2 - Tr rho^2 = 2 sum |2x2 minors of M|^2 with M[r][t] = psi[r|t].
  // Every minor vanishes on a product cut, so small entropies keep full
  // relative precision instead of being swamped by 1 - (1 - eps).
  double sum = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = r + 1; c < rows.size(); ++c) {
      for (std::size_t t = 0; t < cols.size(); ++t) {
        const Complex rt = amps[rows[r] | cols[t]];
        const Complex ct = amps[rows[c] | cols[t]];
        for (std::size_t u = t + 1; u < cols.size(); ++u) {
          sum += std::norm(rt * amps[rows[c] | cols[u]] - amps[rows[r] | cols[u]] * ct);
        }
      }
    }
  }
  return 2.0 * sum;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const int n = a.num_qubits() + b.num_qubits();
  if (n > kMaxQubits) {
    throw Error(ErrorCode::kSizeOverflow,
                "tensor product would have " + std::to_string(n) + " qubits");
  }
  std::vector<Complex> amps;
  amps.reserve(a.dimension() * b.dimension());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  }
  return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector permute_qubits(const StateVector& state, std::span<const int> perm) {
  const int n = state.num_qubits();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::kInvalidPermutation, "permutation length differs from qubit count");
  }
  std::uint32_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1u)) {
      throw Error(ErrorCode::kInvalidPermutation, "not a bijection on the qubit indices");
    }
    seen |= 1u << p;
  }
  std::vector<Complex> out(state.dimension());
  for (std::size_t b = 0; b < state.dimension(); ++b) {
    std::size_t target = 0;
    for (int q = 0; q < n; ++q) {
      if (b & qubit_bit(n, q)) target |= qubit_bit(n, perm[q]);
    }
    out[target] = state[b];
  }
  return StateVector::from_amplitudes(n, std::move(out));
}

StateVector apply_local_unitary(const StateVector& state, int qubit, const Unitary2& u) {
  const int n = state.num_qubits();
  if (qubit < 0 || qubit >= n) {
    throw Error(ErrorCode::kInvalidPermutation, "qubit index out of range");
  }
  const std::size_t bit = qubit_bit(n, qubit);
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t b = 0; b < out.size(); ++b) {
    if (b & bit) continue;
    const Complex lo = state[b];
    const Complex hi = state[b | bit];
    out[b] = u[0] * lo + u[1] * hi;
    out[b | bit] = u[2] * lo + u[3] * hi;
  }
  return StateVector::from_amplitudes(n, std::move(out));
}

namespace reference {

DensityMatrix reduced_density_dense(const StateVector& state, QubitSubset keep) {
  check_keep(state, keep);
  const int n = state.num_qubits();
  const std::size_t dim = state.dimension();
  std::vector<Complex> full(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) full[r * dim + c] = state[r] * std::conj(state[c]);
  }

  const auto kept_qubits = keep.qubits();
  const int k = static_cast<int>(kept_qubits.size());
  const std::size_t dk = std::size_t{1} << k;
  // Reduced index of a full basis index: gather the kept bits MSB-first.
  auto reduced_index = [&](std::size_t b) {
    std::size_t r = 0;
    for (int q : kept_qubits) r = (r << 1) | ((b & qubit_bit(n, q)) ? 1u : 0u);
    return r;
  };
  const std::size_t traced_mask = [&] {
    std::size_t m = 0;
    for (int q = 0; q < n; ++q) {
      if (!keep.contains(q)) m |= qubit_bit(n, q);
    }
    return m;
  }();

  std::vector<Complex> rho(dk * dk, Complex{});
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & traced_mask) != (c & traced_mask)) continue;
      rho[reduced_index(r) * dk + reduced_index(c)] += full[r * dim + c];
    }
  }
  return DensityMatrix::from_entries(k, std::move(rho));
}

}  // namespace reference

}  // namespace entanglemetry
