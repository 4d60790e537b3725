#pragma once

#include <cstddef>
#include <vector>

#include "pbf/bands.hpp"
#include "pbf/determinants.hpp"
#include "pbf/jacobi.hpp"
#include "pbf/matrix.hpp"

namespace pbf {

/// LU (Gauss-Borel) factorization data of T^[N]: the unit lower factor carries
/// m_1..m_N on the first and l_2..l_N on the second subdiagonal, the upper
/// bidiagonal factor alpha_1, alpha_4, ..., alpha_{3N+1} on the diagonal.
template <class S>
struct GaussBorelFactors {
  BandSpec<S> source;
  std::size_t N = 0;
  std::vector<S> m;        // m[i] = m_{i+1}
  std::vector<S> l;        // l[i] = l_{i+2}
  std::vector<S> alpha_u;  // alpha_u[i] = alpha_{3i+1}

  const S& m_at(std::size_t n) const { return m.at(n - 1); }
  const S& l_at(std::size_t n) const { return l.at(n - 2); }
  const S& alpha_at(std::size_t j) const {  // j = 3n+1
    if (j % 3 != 1) throw index_out_of_range("upper factor carries alpha_{3n+1} only");
    return alpha_u.at(j / 3);
  }

  /// Data of the auxiliary Jacobi matrix J^[N,k+1]: diagonal m_{k+1}..m_N,
  /// subdiagonal l_{k+2}..l_N. Valid for 0 <= k <= N-1.
  JacobiData<S> jacobi(std::size_t k = 0) const {
    if (k >= N) throw index_out_of_range("auxiliary Jacobi start exceeds N");
    JacobiData<S> jd;
    jd.start = k + 1;
    jd.m.assign(m.begin() + static_cast<std::ptrdiff_t>(k), m.end());
    jd.l.assign(l.begin() + static_cast<std::ptrdiff_t>(k), l.end());
    return jd;
  }
};

/// Coefficients from the determinant ladder: l_{n+1} = a_{n+1} D(n-1)/D(n),
/// m_n = c_n - D(n+1)/D(n), alpha_{3n+1} = D(n+1)/D(n). Exists iff the
/// leading principal minors D(1)..D(N+1) are all nonzero.
template <class S>
GaussBorelFactors<S> gauss_borel(const BandSpec<S>& bands, std::size_t N) {
  DeterminantLadder<S> d = delta_ladder(bands, N + 1);
  for (std::size_t n = 1; n <= N + 1; ++n)
    if (d.at(n) == S(0)) throw singular_minor(n);

  GaussBorelFactors<S> f{bands, N, {}, {}, {}};
  f.alpha_u.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) f.alpha_u.push_back(d.at(n + 1) / d.at(n));
  f.m.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) f.m.push_back(bands.c(n) - d.at(n + 1) / d.at(n));
  if (N >= 1) f.l.reserve(N - 1);
  for (std::size_t n = 2; n <= N; ++n) f.l.push_back(bands.a(n) * d.at(n - 2) / d.at(n - 1));
  return f;
}

/// Unit lower triangular factor L^[N] (m on the first, l on the second subdiagonal).
template <class S>
Matrix<S> assemble_lower(const GaussBorelFactors<S>& f) {
  Matrix<S> m = Matrix<S>::identity(f.N + 1);
  for (std::size_t n = 1; n <= f.N; ++n) m(n, n - 1) = f.m_at(n);
  for (std::size_t n = 2; n <= f.N; ++n) m(n, n - 2) = f.l_at(n);
  return m;
}

/// Upper bidiagonal factor U^[N] (alpha_{3n+1} diagonal, unit superdiagonal).
template <class S>
Matrix<S> assemble_upper(const GaussBorelFactors<S>& f) {
  Matrix<S> m(f.N + 1, f.N + 1);
  for (std::size_t n = 0; n <= f.N; ++n) {
    m(n, n) = f.alpha_u[n];
    if (n + 1 <= f.N) m(n, n + 1) = S(1);
  }
  return m;
}

/// Entrywise check that L^[N] U^[N] reproduces T^[N]: exact equality in exact
/// mode, relative error below 1e-12 in float mode.
template <class S>
bool verify_factorization(const GaussBorelFactors<S>& f) {
  Matrix<S> product = assemble_lower(f) * assemble_upper(f);
  Matrix<S> expected = materialize_principal(f.source, f.N);
  if constexpr (is_exact_v<S>)
    return product == expected;
  else
    return scalar_to_double(max_relative_difference(product, expected)) <= 1e-12;
}

}  // namespace pbf
