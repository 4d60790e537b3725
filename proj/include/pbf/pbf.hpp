#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pbf/bands.hpp"
#include "pbf/contfrac.hpp"
#include "pbf/gauss_borel.hpp"
#include "pbf/matrix.hpp"
#include "pbf/scalar.hpp"

namespace pbf {

/// Coefficients of the T^[N] = L_1 L_2 U factorization, alphas[j-1] = alpha_j
/// for j = 1..3N+1. The factorization is positive iff all coefficients are
/// positive, which happens exactly when the seed alpha_2 sits inside the open
/// positivity interval (0, K[N+1,1]).
template <class S>
struct BidiagonalFactorization {
  std::size_t N = 0;
  std::vector<S> alphas;
  S alpha2{};
  S gate_upper{};  // K[N+1,1]
  bool gate_ok = false;
  bool all_positive = false;

  /// alpha_j by 1-based index; indices j <= 0 read as 0.
  S alpha_at(long j) const {
    if (j <= 0) return S(0);
    return alphas.at(static_cast<std::size_t>(j) - 1);
  }
};

/// Splits the unit lower factor L = L_1 L_2 from a chosen alpha_2:
/// alpha_3 = m_1 - alpha_2, then alpha_{3n-1} = l_n / alpha_{3n-3} and
/// alpha_{3n} = m_n - alpha_{3n-1}. The diagonal alpha_{3n+1} comes from the
/// upper factor. Throws zero_pivot when a divisor alpha_{3n} vanishes before
/// the last step.
template <class S>
BidiagonalFactorization<S> lower_bidiagonal_split(const GaussBorelFactors<S>& f,
                                                  const S& alpha2) {
  BidiagonalFactorization<S> out;
  out.N = f.N;
  out.alpha2 = alpha2;
  out.alphas.assign(3 * f.N + 1, S(0));
  auto set = [&](std::size_t j, S v) { out.alphas[j - 1] = std::move(v); };

  set(1, f.alpha_u[0]);
  if (f.N >= 1) {
    set(2, alpha2);
    set(3, f.m_at(1) - alpha2);
    set(4, f.alpha_u[1]);
  }
  for (std::size_t n = 2; n <= f.N; ++n) {
    const S& pivot = out.alphas[3 * (n - 1) - 1];  // alpha_{3n-3}
    if (pivot == S(0)) throw zero_pivot(n - 1);
    S even = f.l_at(n) / pivot;       // alpha_{3n-1}
    S odd = f.m_at(n) - even;         // alpha_{3n}
    set(3 * n - 1, std::move(even));
    set(3 * n, std::move(odd));
    set(3 * n + 1, f.alpha_u[n]);
  }

  out.all_positive = true;
  for (const S& v : out.alphas)
    if (!(v > S(0))) out.all_positive = false;
  return out;
}

/// Factorization of T^[N] with a caller-chosen seed. gate_ok records whether
/// the seed sits in [0, K[N+1,1]); the resulting coefficients are all positive
/// exactly on the open part of that interval.
template <class S>
BidiagonalFactorization<S> pbf_factorize(const BandSpec<S>& bands, std::size_t N,
                                         const S& alpha2) {
  GaussBorelFactors<S> f = gauss_borel(bands, N);
  BidiagonalFactorization<S> out = lower_bidiagonal_split(f, alpha2);
  out.gate_upper = finite_cf(f.jacobi(0), N + 1, 1);
  out.gate_ok = !(alpha2 < S(0)) && alpha2 < out.gate_upper;
  return out;
}

/// Factorization with the canonical seed alpha_2 = K[N+1,1] / 2, the midpoint
/// of the positivity interval.
template <class S>
BidiagonalFactorization<S> pbf_factorize(const BandSpec<S>& bands, std::size_t N) {
  GaussBorelFactors<S> f = gauss_borel(bands, N);
  S gate = finite_cf(f.jacobi(0), N + 1, 1);
  BidiagonalFactorization<S> out = lower_bidiagonal_split(f, S(gate / S(2)));
  out.gate_upper = std::move(gate);
  out.gate_ok = !(out.alpha2 < S(0)) && out.alpha2 < out.gate_upper;
  return out;
}

/// Bands of the product L_1 L_2 U recovered from the coefficients:
/// c_n = alpha_{3n+1} + alpha_{3n} + alpha_{3n-1},
/// b_n = alpha_{3n} alpha_{3n-2} + alpha_{3n-1} alpha_{3n-2} + alpha_{3n-1} alpha_{3n-3},
/// a_n = alpha_{3n-1} alpha_{3n-3} alpha_{3n-5}, with alpha_j = 0 for j <= 0.
template <class S>
BandSpec<S> reconstruct_bands(const BidiagonalFactorization<S>& fac) {
  auto al = [&](long j) { return fac.alpha_at(j); };
  long N = static_cast<long>(fac.N);
  std::vector<S> c, b, a;
  for (long n = 0; n <= N; ++n) c.push_back(al(3 * n + 1) + al(3 * n) + al(3 * n - 1));
  for (long n = 1; n <= N; ++n)
    b.push_back(al(3 * n) * al(3 * n - 2) + al(3 * n - 1) * al(3 * n - 2) +
                al(3 * n - 1) * al(3 * n - 3));
  for (long n = 2; n <= N; ++n) a.push_back(al(3 * n - 1) * al(3 * n - 3) * al(3 * n - 5));
  return BandSpec<S>::from_bands(std::move(c), std::move(b), std::move(a));
}

/// First unit lower bidiagonal factor (subdiagonal alpha_2, alpha_5, ...).
template <class S>
Matrix<S> assemble_l1(const BidiagonalFactorization<S>& fac) {
  Matrix<S> m = Matrix<S>::identity(fac.N + 1);
  for (std::size_t n = 1; n <= fac.N; ++n) m(n, n - 1) = fac.alpha_at(3 * static_cast<long>(n) - 1);
  return m;
}

/// Second unit lower bidiagonal factor (subdiagonal alpha_3, alpha_6, ...).
template <class S>
Matrix<S> assemble_l2(const BidiagonalFactorization<S>& fac) {
  Matrix<S> m = Matrix<S>::identity(fac.N + 1);
  for (std::size_t n = 1; n <= fac.N; ++n) m(n, n - 1) = fac.alpha_at(3 * static_cast<long>(n));
  return m;
}

/// Upper bidiagonal factor (diagonal alpha_1, alpha_4, ..., unit superdiagonal).
template <class S>
Matrix<S> assemble_u(const BidiagonalFactorization<S>& fac) {
  Matrix<S> m(fac.N + 1, fac.N + 1);
  for (std::size_t n = 0; n <= fac.N; ++n) {
    m(n, n) = fac.alpha_at(3 * static_cast<long>(n) + 1);
    if (n + 1 <= fac.N) m(n, n + 1) = S(1);
  }
  return m;
}

}  // namespace pbf
