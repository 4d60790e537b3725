#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pbf/bands.hpp"
#include "pbf/matrix.hpp"
#include "pbf/scalar.hpp"

namespace pbf {

/// Determinant of a square matrix. Exact mode runs fraction-free (Bareiss)
/// elimination, float mode partially pivoted elimination. Empty matrix -> 1.
template <class S>
S dense_determinant(Matrix<S> m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw index_out_of_range("determinant of non-square matrix");
  if (n == 0) return S(1);

  if constexpr (is_exact_v<S>) {
    // Bareiss; divisions are exact. Row swaps flip the sign.
    S sign(1);
    S prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == S(0)) {
        std::size_t p = k + 1;
        while (p < n && m(p, k) == S(0)) ++p;
        if (p == n) return S(0);
        for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  } else {
    S det(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (scalar_abs(m(i, k)) > scalar_abs(m(p, k))) p = i;
      if (m(p, k) == S(0)) return S(0);
      if (p != k) {
        for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
        det = -det;
      }
      det *= m(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        S f = m(i, k) / m(k, k);
        for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      }
    }
    return det;
  }
}

enum class LadderFamily { Delta, Delta1, JacobiDelta };

/// Size-indexed determinant ladder: at(n) is the determinant of the n x n
/// leading truncation, at(0) = 1, so at(n) = delta^[n-1] in band indexing.
template <class S>
struct DeterminantLadder {
  std::vector<S> values;
  LadderFamily family = LadderFamily::Delta;

  const S& at(std::size_t n) const {
    if (n >= values.size()) throw index_out_of_range("ladder index");
    return values[n];
  }
  std::size_t depth() const { return values.empty() ? 0 : values.size() - 1; }
};

/// D(n) = c_{n-1} D(n-1) - b_{n-1} D(n-2) + a_{n-1} D(n-3) for n = 1..maxN
/// with D(0) = 1 and D(-1) = D(-2) = 0.
template <class S>
DeterminantLadder<S> delta_ladder(const BandSpec<S>& bands, std::size_t maxN) {
  DeterminantLadder<S> out;
  out.family = LadderFamily::Delta;
  out.values.reserve(maxN + 1);
  out.values.push_back(S(1));
  for (std::size_t n = 1; n <= maxN; ++n) {
    S v = bands.c(n - 1) * out.values[n - 1];
    if (n >= 2) v -= bands.b(n - 1) * out.values[n - 2];
    if (n >= 3) v += bands.a(n - 1) * out.values[n - 3];
    out.values.push_back(std::move(v));
  }
  return out;
}

/// delta_1^[N,k] for k = 0..N, each from the materialized auxiliary truncation
/// (size N-k); the k = N entry is the empty determinant 1.
template <class S>
std::vector<S> delta1_ladder(const BandSpec<S>& bands, std::size_t N) {
  std::vector<S> out(N + 1);
  for (std::size_t k = 0; k <= N; ++k)
    out[k] = dense_determinant(materialize_auxiliary(bands, N, k));
  return out;
}

}  // namespace pbf
