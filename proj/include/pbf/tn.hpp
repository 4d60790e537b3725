#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pbf/bands.hpp"
#include "pbf/determinants.hpp"
#include "pbf/jacobi.hpp"
#include "pbf/matrix.hpp"
#include "pbf/scalar.hpp"

namespace pbf {

/// Outcome of total-nonnegativity classification. The witness (0-based row and
/// column sets) is present exactly when a negative minor was found.
struct TNVerdict {
  bool is_tn = false;
  bool is_nonsingular = false;
  bool is_oscillatory = false;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> witness;
};

namespace detail {

inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] + (k - i) < n) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Bareiss over int64 entries with 128-bit intermediates. Entries must be
/// small enough that every minor fits in int64 (caller checks the Hadamard
/// bound).
inline std::int64_t int_minor_det(const std::vector<std::int64_t>& flat, std::size_t stride,
                                  const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols) {
  std::size_t n = rows.size();
  if (n == 0) return 1;
  std::int64_t buf[8][8];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) buf[i][j] = flat[rows[i] * stride + cols[j]];
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (buf[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && buf[p][k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(buf[k][j], buf[p][j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = (__int128)buf[i][j] * buf[k][k] - (__int128)buf[i][k] * buf[k][j];
        buf[i][j] = static_cast<std::int64_t>(v / prev);
      }
    prev = buf[k][k];
  }
  return sign * buf[n - 1][n - 1];
}

/// Integer rescaling of an exact matrix: entries times the lcm of all
/// denominators. Returns false when any scaled entry is too large for the
/// int64 minor path.
inline bool scale_to_int64(const Matrix<Rational>& m, std::vector<std::int64_t>& flat) {
  std::size_t n = m.rows();
  Integer lcm = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lcm = boost::multiprecision::lcm(lcm, denominator(m(i, j)));
  flat.assign(n * n, 0);
  double max_abs = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer v = numerator(m(i, j)) * (lcm / denominator(m(i, j)));
      if (v < -(1LL << 40) || v > (1LL << 40)) return false;
      flat[i * n + j] = static_cast<std::int64_t>(v);
      max_abs = std::max(max_abs, std::abs(static_cast<double>(flat[i * n + j])));
    }
  if (max_abs == 0) return true;
  // Hadamard: every k x k minor is at most (sqrt(k) * max)^k.
  double bound_log2 = n * std::log2(std::sqrt(static_cast<double>(n)) * max_abs);
  return bound_log2 < 62.0;
}

}  // namespace detail

/// Enumerates every k x k minor (all k) in ascending order and returns the
/// first negative one as witness, if any. Exact mode decides signs exactly;
/// float mode uses a relative threshold of 1e-12 of the largest minor seen.
/// Throws size_exceeded beyond the limit (default 8, see PBF_MINOR_LIMIT).
template <class S>
TNVerdict all_minors_nonneg(const Matrix<S>& m, std::size_t limit = default_minor_limit()) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw index_out_of_range("minor enumeration needs a square matrix");
  if (n > limit) throw size_exceeded(n, limit);

  TNVerdict verdict;
  verdict.is_tn = true;

  std::vector<std::int64_t> flat;
  bool fast = false;
  if constexpr (is_exact_v<S>) fast = n <= 8 && detail::scale_to_int64(m, flat);

  double float_scale = 1.0;
  S full_det(0);
  for (std::size_t k = 1; k <= n && verdict.is_tn; ++k) {
    std::vector<std::size_t> rows(k), cols(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) cols[i] = i;
      do {
        bool negative;
        S det(0);
        if (fast) {
          std::int64_t d = detail::int_minor_det(flat, n, rows, cols);
          negative = d < 0;
          if (k == n) full_det = S(d);
        } else {
          det = dense_determinant(m.submatrix(rows, cols));
          if constexpr (is_exact_v<S>) {
            negative = det < S(0);
          } else {
            float_scale = std::max(float_scale, std::abs(scalar_to_double(det)));
            negative = scalar_to_double(det) < -1e-12 * float_scale;
          }
          if (k == n) full_det = det;
        }
        if (negative) {
          verdict.is_tn = false;
          verdict.witness = std::make_pair(rows, cols);
          break;
        }
      } while (detail::next_combination(cols, n));
      if (!verdict.is_tn) break;
    } while (detail::next_combination(rows, n));
  }

  if (verdict.is_tn) {
    if constexpr (is_exact_v<S>) {
      verdict.is_nonsingular = full_det != S(0);
    } else {
      verdict.is_nonsingular = std::abs(scalar_to_double(full_det)) > 1e-12 * float_scale;
    }
    bool off_diagonals_positive = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(m(i, i + 1) > S(0)) || !(m(i + 1, i) > S(0))) off_diagonals_positive = false;
    verdict.is_oscillatory = verdict.is_nonsingular && (n == 1 ? m(0, 0) > S(0) : off_diagonals_positive);
  }
  return verdict;
}

/// Gantmacher-Krein classification of T^[N]: TN (exhaustive minors), nonsingular,
/// and positive first subdiagonal (the superdiagonal is identically 1).
template <class S>
TNVerdict is_oscillatory_hessenberg(const BandSpec<S>& bands, std::size_t N,
                                    std::size_t limit = default_minor_limit()) {
  return all_minors_nonneg(materialize_principal(bands, N), limit);
}

/// Jacobi criterion: positive subdiagonal and all leading principal minors
/// positive, the latter via the three-term determinant recurrence.
template <class S>
bool is_jacobi_oscillatory(const JacobiData<S>& jd) {
  if (jd.m.empty()) return false;
  for (const S& lv : jd.l)
    if (!(lv > S(0))) return false;
  S prev2(1), prev(jd.m[0]);
  if (!(prev > S(0))) return false;
  for (std::size_t i = 1; i < jd.m.size(); ++i) {
    S cur = jd.m[i] * prev - jd.l[i - 1] * prev2;
    if (!(cur > S(0))) return false;
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return true;
}

/// Smallest s >= 0 (within tol, by bisection) such that J + sI is oscillatory.
template <class S>
S jacobi_shift_bound(const JacobiData<S>& jd, const S& tol) {
  auto oscillatory_at = [&](const S& s) {
    JacobiData<S> shifted = jd;
    for (S& mv : shifted.m) mv += s;
    return is_jacobi_oscillatory(shifted);
  };
  if (oscillatory_at(S(0))) return S(0);
  S lo(0), hi(1);
  while (!oscillatory_at(hi)) hi *= S(2);
  while (hi - lo > tol) {
    S mid = (lo + hi) / S(2);
    if (oscillatory_at(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

/// Bidiagonal coefficients of the Jacobi lower-upper split: beta_1 = m_1,
/// then m_n = beta_{2n-2} + beta_{2n-1} and l_n = beta_{2n-2} beta_{2n-3}
/// solved forward. All entries positive iff the Jacobi matrix is oscillatory.
template <class S>
std::vector<S> jacobi_pbf(const JacobiData<S>& jd) {
  std::vector<S> beta;
  if (jd.m.empty()) return beta;
  beta.reserve(2 * jd.m.size() - 1);
  beta.push_back(jd.m[0]);
  for (std::size_t i = 1; i < jd.m.size(); ++i) {
    const S& odd_prev = beta[2 * i - 2];  // beta_{2n-3}
    if (odd_prev == S(0))
      throw division_by_zero("beta_" + std::to_string(2 * i - 1) + " vanished");
    S even = jd.l[i - 1] / odd_prev;  // beta_{2n-2}
    S odd = jd.m[i] - even;           // beta_{2n-1}
    beta.push_back(std::move(even));
    beta.push_back(std::move(odd));
  }
  return beta;
}

}  // namespace pbf
