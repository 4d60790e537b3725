#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pbf/errors.hpp"
#include "pbf/scalar.hpp"

namespace pbf {

enum class RootMultiplicity { Distinct, DoubleLow, DoubleHigh, Triple };

inline const char* to_string(RootMultiplicity m) {
  switch (m) {
    case RootMultiplicity::Distinct: return "Distinct";
    case RootMultiplicity::DoubleLow: return "DoubleLow";
    case RootMultiplicity::DoubleHigh: return "DoubleHigh";
    default: return "Triple";
  }
}

/// Constant bands (a, b, c) together with the roots of the characteristic
/// polynomial x^3 - c x^2 + b x - a, sorted descending. betas is empty when
/// the polynomial has a conjugate complex pair; betas_exact marks whether the
/// stored roots are exact (in exact mode irrational roots are stored as
/// 40-digit rational approximations).
template <class S>
struct ToeplitzParams {
  S a{}, b{}, c{};
  S discriminant{};
  bool all_real = false;
  bool all_positive = false;
  std::optional<std::array<S, 3>> betas;
  RootMultiplicity multiplicity = RootMultiplicity::Distinct;
  bool betas_exact = false;

  const std::array<S, 3>& roots() const {
    if (!betas) throw missing_betas();
    return *betas;
  }
};

namespace detail {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Three real roots (descending) of x^3 - c x^2 + b x - a via the
/// trigonometric form of Cardano; valid when the discriminant is >= 0.
template <class F>
std::array<F, 3> trig_roots(const F& a, const F& b, const F& c) {
  using std::acos;
  using std::cos;
  using std::sqrt;
  F p = b - c * c / 3;
  F q = -2 * c * c * c / 27 + b * c / 3 - a;
  std::array<F, 3> out;
  if (p >= 0) {
    // Only reachable at (or numerically near) the triple root.
    out.fill(c / 3);
    return out;
  }
  F r = sqrt(-p / 3);
  F arg = 3 * q / (2 * p * r);
  if (arg > 1) arg = F(1);
  if (arg < -1) arg = F(-1);
  F theta = acos(arg) / 3;
  const F two_pi_third = 2 * acos(F(-1)) / 3;
  for (int k = 0; k < 3; ++k) out[k] = 2 * r * cos(theta - two_pi_third * k) + c / 3;
  std::sort(out.begin(), out.end(), [](const F& x, const F& y) { return x > y; });
  return out;
}

inline Rational rational_approx(const BigFloat& v) {
  const Integer scale = scalar_pow(Integer(10), 40);
  BigFloat scaled = v * BigFloat(scale);
  return Rational(boost::multiprecision::round(scaled).convert_to<Integer>(), scale);
}

/// Exact square root of a nonnegative rational, if it is one.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  Integer sn = boost::multiprecision::sqrt(numerator(q));
  Integer sd = boost::multiprecision::sqrt(denominator(q));
  if (sn * sn == numerator(q) && sd * sd == denominator(q)) return Rational(sn, sd);
  return std::nullopt;
}

}  // namespace detail

/// Classifies the characteristic roots of constant bands. Exact mode finds
/// rational roots exactly (integer candidates of the rescaled monic integer
/// polynomial, verified by substitution) and falls back to high-precision
/// rational approximations for irrational ones.
template <class S>
ToeplitzParams<S> betas_from_abc(const S& a, const S& b, const S& c) {
  ToeplitzParams<S> tp;
  tp.a = a;
  tp.b = b;
  tp.c = c;
  tp.discriminant = S(18) * a * b * c - S(4) * a * c * c * c + b * b * c * c -
                    S(4) * b * b * b - S(27) * a * a;

  auto finish = [&](std::array<S, 3> roots, RootMultiplicity mult, bool exact) {
    std::sort(roots.begin(), roots.end(), [](const S& x, const S& y) { return x > y; });
    tp.betas = roots;
    tp.multiplicity = mult;
    tp.betas_exact = exact;
    tp.all_positive = roots[2] > S(0);
  };

  if constexpr (is_exact_v<S>) {
    if (tp.discriminant < S(0)) return tp;
    tp.all_real = true;
    if (c * c == S(3) * b && c * c * c == S(27) * a) {
      S r = c / S(3);
      finish({r, r, r}, RootMultiplicity::Triple, true);
      return tp;
    }
    if (tp.discriminant == S(0)) {
      S r = (b * c - S(9) * a) / (S(2) * (c * c - S(3) * b));
      S s = c - S(2) * r;
      finish({r, r, s},
             r > s ? RootMultiplicity::DoubleHigh : RootMultiplicity::DoubleLow, true);
      return tp;
    }

    Integer d = boost::multiprecision::lcm(
        boost::multiprecision::lcm(denominator(a), denominator(b)), denominator(c));
    // x = d * lambda turns the polynomial into the monic integer cubic
    // x^3 + B x^2 + C x + D, whose rational roots are integers.
    Integer B = numerator(Rational(-c * Rational(d)));
    Integer C = numerator(Rational(b * Rational(d) * Rational(d)));
    Integer D = numerator(Rational(-a * Rational(d) * Rational(d) * Rational(d)));
    auto eval_int = [&](const Integer& x) { return ((x + B) * x + C) * x + D; };

    std::array<detail::BigFloat, 3> approx = detail::trig_roots(
        detail::BigFloat(a), detail::BigFloat(b), detail::BigFloat(c));
    std::vector<S> exact_roots;
    std::array<bool, 3> solved{false, false, false};
    for (int i = 0; i < 3; ++i) {
      Integer guess =
          boost::multiprecision::round(approx[i] * detail::BigFloat(d)).convert_to<Integer>();
      for (Integer x : {guess, Integer(guess - 1), Integer(guess + 1)}) {
        if (eval_int(x) == 0) {
          S root(Rational(x, d));
          if (std::find(exact_roots.begin(), exact_roots.end(), root) == exact_roots.end()) {
            exact_roots.push_back(std::move(root));
            solved[i] = true;
          }
          break;
        }
      }
    }

    if (exact_roots.size() == 3) {
      finish({exact_roots[0], exact_roots[1], exact_roots[2]}, RootMultiplicity::Distinct, true);
      return tp;
    }
    if (exact_roots.size() == 1) {
      // Deflate: lambda^2 + p lambda + q carries the other two roots.
      const S& r = exact_roots[0];
      S p = r - c;
      S q = b + r * p;
      if (auto sq = detail::exact_sqrt(S(p * p - S(4) * q))) {
        finish({r, (-p + *sq) / S(2), (-p - *sq) / S(2)}, RootMultiplicity::Distinct, true);
        return tp;
      }
    }
    std::array<S, 3> roots;
    for (int i = 0; i < 3; ++i) roots[i] = detail::rational_approx(approx[i]);
    for (int i = 0; i < 3; ++i)
      if (solved[i] && !exact_roots.empty()) roots[i] = exact_roots[0];
    finish(roots, RootMultiplicity::Distinct, false);
    return tp;
  } else {
    if (scalar_to_double(tp.discriminant) < 0) return tp;
    tp.all_real = true;
    std::array<S, 3> r = detail::trig_roots(a, b, c);
    auto close = [&](const S& x, const S& y) {
      double scale = std::max(1.0, std::abs(scalar_to_double(x)));
      return std::abs(scalar_to_double(x) - scalar_to_double(y)) <= 1e-9 * scale;
    };
    RootMultiplicity mult = RootMultiplicity::Distinct;
    if (close(r[0], r[1]) && close(r[1], r[2])) {
      S m = (r[0] + r[1] + r[2]) / S(3);
      r = {m, m, m};
      mult = RootMultiplicity::Triple;
    } else if (close(r[0], r[1])) {
      S m = (r[0] + r[1]) / S(2);
      r[0] = r[1] = m;
      mult = RootMultiplicity::DoubleHigh;
    } else if (close(r[1], r[2])) {
      S m = (r[1] + r[2]) / S(2);
      r[1] = r[2] = m;
      mult = RootMultiplicity::DoubleLow;
    }
    finish(r, mult, true);
    return tp;
  }
}

namespace detail {

/// Coefficients gamma_j of D(n) = sum_j gamma_j f_j(n) over the confluent
/// basis f_j(n) = n^e beta^n, fitted to D(0) = 1, D(-1) = D(-2) = 0.
template <class S>
std::array<S, 3> fit_initial_conditions(const std::array<S, 3>& betas,
                                        const std::array<long, 3>& powers) {
  // 3x3 Gaussian elimination with the basis evaluated at n = 0, -1, -2.
  S m[3][4];
  for (int r = 0; r < 3; ++r) {
    long n = -r;
    for (int j = 0; j < 3; ++j)
      m[r][j] = scalar_pow(S(n), powers[j]) * scalar_pow(betas[j], n);
    m[r][3] = r == 0 ? S(1) : S(0);
  }
  for (int k = 0; k < 3; ++k) {
    int p = k;
    for (int i = k + 1; i < 3; ++i)
      if (scalar_abs(m[i][k]) > scalar_abs(m[p][k])) p = i;
    if (m[p][k] == S(0)) throw zero_denominator("degenerate confluent basis");
    if (p != k)
      for (int j = k; j < 4; ++j) std::swap(m[k][j], m[p][j]);
    for (int i = 0; i < 3; ++i) {
      if (i == k) continue;
      S f = m[i][k] / m[k][k];
      for (int j = k; j < 4; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

template <class S>
std::array<long, 3> confluent_powers(RootMultiplicity mult) {
  switch (mult) {
    case RootMultiplicity::DoubleHigh: return {0, 1, 0};  // beta1^n, n beta1^n, beta3^n
    case RootMultiplicity::DoubleLow: return {0, 0, 1};   // beta1^n, beta2^n, n beta2^n
    case RootMultiplicity::Triple: return {0, 1, 2};
    default: return {0, 0, 0};
  }
}

}  // namespace detail

/// Closed-form size-indexed determinant D(n) of the constant-band truncations.
/// Distinct roots use D(n) = sum_i beta_i^{n+2} / prod_{j != i}(beta_i - beta_j);
/// repeated roots use the confluent basis fitted to the initial conditions.
/// Valid for n >= -2.
template <class S>
S toeplitz_determinant(const ToeplitzParams<S>& tp, long n) {
  const auto& beta = tp.roots();
  if (n < -2) throw index_out_of_range("closed-form determinant index below -2");
  if (tp.multiplicity == RootMultiplicity::Distinct) {
    S sum(0);
    for (int i = 0; i < 3; ++i) {
      S denom(1);
      for (int j = 0; j < 3; ++j)
        if (j != i) denom *= beta[i] - beta[j];
      sum += scalar_pow(beta[i], n + 2) / denom;
    }
    return sum;
  }
  std::array<long, 3> powers = detail::confluent_powers<S>(tp.multiplicity);
  std::array<S, 3> gamma = detail::fit_initial_conditions(beta, powers);
  S sum(0);
  for (int j = 0; j < 3; ++j)
    sum += gamma[j] * scalar_pow(S(n), powers[j]) * scalar_pow(beta[j], n);
  return sum;
}

/// Limit of the continued fraction convergents K[N,1] for constant bands:
/// beta1 beta2 / (beta1 + beta2) over the two largest roots.
template <class S>
S toeplitz_cf(const ToeplitzParams<S>& tp) {
  const auto& beta = tp.roots();
  S denom = beta[0] + beta[1];
  if (denom == S(0)) throw zero_denominator("beta1 + beta2 vanished");
  return beta[0] * beta[1] / denom;
}

/// Limit of the determinant ratios D(n+1)/D(n): the largest root.
template <class S>
S toeplitz_ratio_limit(const ToeplitzParams<S>& tp) {
  return tp.roots()[0];
}

}  // namespace pbf
