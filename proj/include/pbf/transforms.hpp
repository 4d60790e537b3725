#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "pbf/bands.hpp"
#include "pbf/determinants.hpp"
#include "pbf/gauss_borel.hpp"
#include "pbf/matrix.hpp"

namespace pbf {

enum class TransformKind { Retract, Tail, Check, CheckShifted };

inline const char* to_string(TransformKind k) {
  switch (k) {
    case TransformKind::Retract: return "retract";
    case TransformKind::Tail: return "tail";
    case TransformKind::Check: return "check";
    default: return "check_shifted";
  }
}

/// What was applied to produce a derived band spec.
template <class S>
struct TransformRecord {
  TransformKind kind = TransformKind::Check;
  std::size_t k = 0;    // tail / shifted-check start
  std::optional<S> s;   // retraction parameter
};

/// Retraction by s: b_1 -> b_1 + s c_0 and c_1 -> c_1 + s, everything else
/// unchanged.
template <class S>
BandSpec<S> retract(const BandSpec<S>& bands, const S& s) {
  auto src = std::make_shared<detail::PatchedSource<S>>();
  src->base = bands.source();
  src->shift = 0;
  src->b_over.emplace_back(1, bands.b(1) + s * bands.c(0));
  src->c_over.emplace_back(1, bands.c(1) + s);
  return BandSpec<S>(std::move(src));
}

namespace detail {

/// Head entries of the k = 1 tail as displayed: c'_0 = c_1 - b_1 / c_0 and
/// b'_1 = b_2 - a_2 / c_0. Agrees with the ladder-ratio formulas below.
template <class S>
std::pair<S, S> tail_head_display(const BandSpec<S>& bands) {
  if (bands.c(0) == S(0)) throw division_by_zero("c_0 vanished in the tail construction");
  return {bands.c(1) - bands.b(1) / bands.c(0), bands.b(2) - bands.a(2) / bands.c(0)};
}

/// alpha_{3k+1} = D(k+1)/D(k) from the determinant ladder.
template <class S>
S tail_matrix_alpha(const BandSpec<S>& bands, std::size_t k) {
  DeterminantLadder<S> d = delta_ladder(bands, k + 1);
  if (d.at(k) == S(0)) throw singular_minor(k);
  return d.at(k + 1) / d.at(k);
}

}  // namespace detail

/// k-th tail: indices shift down by k, the head is replaced by
/// c'_0 = alpha_{3k+1} and b'_1 = m_{k+1} alpha_{3k+1} with
/// alpha_{3k+1} = D(k+1)/D(k) and m_{k+1} = c_{k+1} - D(k+2)/D(k+1).
template <class S>
BandSpec<S> tail_matrix(const BandSpec<S>& bands, std::size_t k) {
  if (k < 1) throw index_out_of_range("tail start k must be at least 1");
  auto src = std::make_shared<detail::PatchedSource<S>>();
  src->base = bands.source();
  src->shift = k;
  if (k == 1) {
    auto [c0, b1] = detail::tail_head_display(bands);
    src->c_over.emplace_back(0, std::move(c0));
    src->b_over.emplace_back(1, std::move(b1));
    return BandSpec<S>(std::move(src));
  }
  DeterminantLadder<S> d = delta_ladder(bands, k + 2);
  for (std::size_t n : {k, k + 1})
    if (d.at(n) == S(0)) throw singular_minor(n);
  S alpha = d.at(k + 1) / d.at(k);
  S m_next = bands.c(k + 1) - d.at(k + 2) / d.at(k + 1);
  src->c_over.emplace_back(0, alpha);
  src->b_over.emplace_back(1, m_next * alpha);
  return BandSpec<S>(std::move(src));
}

/// Check-matrix bands: c'_n = b_{n+1}, b'_n = a_{n+1} c_n, a'_n = a_n a_{n+1}.
template <class S>
BandSpec<S> check_matrix(const BandSpec<S>& bands) {
  auto src = std::make_shared<detail::CheckSource<S>>();
  src->base = bands.source();
  src->k = 0;
  return BandSpec<S>(std::move(src));
}

/// Check-matrix bands of the k-th tail, taken directly on the original bands:
/// c'_n = b_{k+n+1}, b'_n = a_{k+n+1} c_{k+n}, a'_n = a_{k+n} a_{k+n+1}, with
/// the corner c'_0 replaced by b_{k+1} - m_{k+1}.
template <class S>
BandSpec<S> check_matrix_shifted(const BandSpec<S>& bands, std::size_t k) {
  if (k < 1) throw index_out_of_range("shifted check start k must be at least 1");
  DeterminantLadder<S> d = delta_ladder(bands, k + 2);
  if (d.at(k + 1) == S(0)) throw singular_minor(k + 1);
  S m_next = bands.c(k + 1) - d.at(k + 2) / d.at(k + 1);
  auto src = std::make_shared<detail::CheckSource<S>>();
  src->base = bands.source();
  src->k = k;
  src->corner = bands.b(k + 1) - m_next;
  return BandSpec<S>(std::move(src));
}

/// Lower factor of the check matrix truncation: diagonal c_0, alpha_4, ...,
/// alpha_{3N-2}, subdiagonal a_2..a_N. Together with the matrix below it
/// reproduces the size-N principal truncation of the check matrix.
template <class S>
Matrix<S> check_lower_factor(const GaussBorelFactors<S>& f) {
  std::size_t n = f.N;
  Matrix<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = i == 0 ? f.source.c(0) : f.alpha_u[i];
    if (i + 1 < n) m(i + 1, i) = f.source.a(i + 2);
  }
  return m;
}

/// Companion tridiagonal factor: diagonal m_1..m_N, subdiagonal a_2..a_N,
/// superdiagonal l_2/a_2 .. l_N/a_N.
template <class S>
Matrix<S> check_jacobi_factor(const GaussBorelFactors<S>& f) {
  std::size_t n = f.N;
  Matrix<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = f.m_at(i + 1);
    if (i + 1 < n) {
      m(i + 1, i) = f.source.a(i + 2);
      m(i, i + 1) = f.l_at(i + 2) / f.source.a(i + 2);
    }
  }
  return m;
}

}  // namespace pbf
