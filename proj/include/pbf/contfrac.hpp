#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pbf/bands.hpp"
#include "pbf/determinants.hpp"
#include "pbf/gauss_borel.hpp"
#include "pbf/jacobi.hpp"
#include "pbf/scalar.hpp"

namespace pbf {

enum class CFStatus { Converged, PositiveBounded, IndeterminateNearZero };

inline const char* to_string(CFStatus s) {
  switch (s) {
    case CFStatus::Converged: return "Converged";
    case CFStatus::PositiveBounded: return "PositiveBounded";
    default: return "IndeterminateNearZero";
  }
}

/// Convergent sequence K[k+1,k], K[k+2,k], ... of the k-th continued fraction
/// tail, with its monotonicity certificate and final-gap diagnostics. The
/// limit is never certified to be zero: convergents that sink below tol yield
/// IndeterminateNearZero instead.
template <class S>
struct CFEvaluation {
  std::size_t k = 1;
  std::vector<S> convergents;
  bool monotone_ok = false;
  S limit_estimate{};
  S gap{};
  /// Aitken delta-squared extrapolation of the last three convergents; a
  /// diagnostic only, never the certified value.
  std::optional<S> aitken;
  CFStatus status = CFStatus::PositiveBounded;
};

/// Jacobi determinant ladder: values[i] = Delta_{k+i-1,k} via the three-term
/// recurrence D(i+1) = m_{k+i} D(i) - l_{k+i} D(i-1). The first initial
/// condition pair is D(0) = 1, D(1) = m_k; with second_ic the pair D(0) = 0,
/// D(1) = 1 yields values[i] = Delta_{k+i-1,k+1}.
template <class S>
DeterminantLadder<S> jacobi_delta_ladder(const JacobiData<S>& jd, std::size_t k,
                                         std::size_t len, bool second_ic = false) {
  DeterminantLadder<S> out;
  out.family = LadderFamily::JacobiDelta;
  out.values.reserve(len + 1);
  out.values.push_back(second_ic ? S(0) : S(1));
  if (len == 0) return out;
  out.values.push_back(second_ic ? S(1) : jd.m_at(k));
  for (std::size_t i = 1; i < len; ++i) {
    S v = jd.m_at(k + i) * out.values[i] - jd.l_at(k + i) * out.values[i - 1];
    out.values.push_back(std::move(v));
  }
  return out;
}

namespace detail {

/// One Euler-Wallis sweep producing all convergents K[k+1,k]..K[maxN,k].
/// Float mode rescales the two ladders to dodge overflow at large depth.
template <class S>
std::vector<S> cf_sweep(const JacobiData<S>& jd, std::size_t k, std::size_t maxN) {
  if (maxN < k + 1) throw index_out_of_range("continued fraction depth below base case");
  std::vector<S> out;
  out.reserve(maxN - k);
  S d1_prev(1), d1(jd.m_at(k));  // Delta_{k+i-1,k}
  S d2_prev(0), d2(1);           // Delta_{k+i-1,k+1}
  for (std::size_t i = 1;; ++i) {
    if (d2 == S(0)) throw zero_denominator("Delta_{" + std::to_string(k + i - 1) + "," +
                                           std::to_string(k + 1) + "} vanished");
    out.push_back(d1 / d2);
    if (k + i >= maxN) break;
    S n1 = jd.m_at(k + i) * d1 - jd.l_at(k + i) * d1_prev;
    S n2 = jd.m_at(k + i) * d2 - jd.l_at(k + i) * d2_prev;
    d1_prev = std::move(d1);
    d2_prev = std::move(d2);
    d1 = std::move(n1);
    d2 = std::move(n2);
    if constexpr (!is_exact_v<S>) {
      S mag = scalar_abs(d2);
      if (mag > S(1e120)) {
        d1_prev /= mag;
        d2_prev /= mag;
        d1 /= mag;
        d2 /= mag;
      }
    }
  }
  return out;
}

template <class S>
CFEvaluation<S> classify(std::size_t k, std::vector<S> convergents, const S& tol) {
  CFEvaluation<S> ev;
  ev.k = k;
  ev.convergents = std::move(convergents);
  ev.monotone_ok = true;
  for (std::size_t i = 1; i < ev.convergents.size(); ++i)
    if (!(ev.convergents[i] < ev.convergents[i - 1])) ev.monotone_ok = false;
  ev.limit_estimate = ev.convergents.back();
  ev.gap = ev.convergents.size() >= 2
               ? scalar_abs(S(ev.convergents.back() - ev.convergents[ev.convergents.size() - 2]))
               : S(0);
  if (ev.convergents.size() >= 3) {
    const S& x2 = ev.convergents[ev.convergents.size() - 1];
    const S& x1 = ev.convergents[ev.convergents.size() - 2];
    const S& x0 = ev.convergents[ev.convergents.size() - 3];
    S dd = x2 - S(2) * x1 + x0;
    if (dd != S(0)) ev.aitken = x2 - (x2 - x1) * (x2 - x1) / dd;
  }
  if (scalar_abs(ev.limit_estimate) < tol)
    ev.status = CFStatus::IndeterminateNearZero;
  else if (ev.convergents.size() >= 2 && ev.gap < tol)
    ev.status = CFStatus::Converged;
  else
    ev.status = CFStatus::PositiveBounded;
  return ev;
}

}  // namespace detail

/// Finite continued fraction K[n,k] = Delta_{n-1,k} / Delta_{n-1,k+1}
/// (base case K[k+1,k] = m_k), evaluated via both Euler-Wallis ladders.
template <class S>
S finite_cf(const JacobiData<S>& jd, std::size_t n, std::size_t k) {
  return detail::cf_sweep(jd, k, n).back();
}

/// Convergents of the k-th tail of a Jacobi data set, classified against tol.
template <class S>
CFEvaluation<S> cf_convergents(const JacobiData<S>& jd, std::size_t k, const S& tol,
                               std::size_t maxN) {
  std::size_t eff = std::min(maxN, jd.top() + 1);
  return detail::classify(k, detail::cf_sweep(jd, k, eff), tol);
}

/// Convergents K[N,1] of the infinite continued fraction of the bands'
/// auxiliary Jacobi matrix, N = 2..maxN. Status Converged when the final gap
/// drops below tol; convergents sinking below tol report
/// IndeterminateNearZero (the limit may or may not be zero).
template <class S>
CFEvaluation<S> infinite_cf_estimate(const BandSpec<S>& bands, const S& tol, std::size_t maxN) {
  std::size_t depth = maxN >= 2 ? maxN - 1 : 1;
  if (bands.finite()) depth = std::min(depth, bands.max_index());
  GaussBorelFactors<S> f = gauss_borel(bands, depth);
  return cf_convergents(f.jacobi(0), 1, tol, maxN);
}

/// Convergents K[n,k+1] of the (k+1)-th tail, n = k+2..maxN.
template <class S>
CFEvaluation<S> tail_cf_estimate(const BandSpec<S>& bands, std::size_t k, const S& tol,
                                 std::size_t maxN) {
  if (k < 1) throw index_out_of_range("tail index must be at least 1");
  std::size_t depth = maxN >= 2 ? maxN - 1 : 1;
  if (bands.finite()) depth = std::min(depth, bands.max_index());
  GaussBorelFactors<S> f = gauss_borel(bands, depth);
  return cf_convergents(f.jacobi(0), k + 1, tol, maxN);
}

}  // namespace pbf
