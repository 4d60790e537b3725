#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pbf/errors.hpp"
#include "pbf/matrix.hpp"
#include "pbf/scalar.hpp"

namespace pbf {

namespace detail {

/// Entry supplier behind a BandSpec. Implementations are immutable, so
/// concurrent reads through shared BandSpec values are safe.
template <class S>
struct BandSource {
  virtual ~BandSource() = default;
  virtual S c(std::size_t n) const = 0;  // n >= 0
  virtual S b(std::size_t n) const = 0;  // n >= 1
  virtual S a(std::size_t n) const = 0;  // n >= 2
  /// Largest usable index N (c_0..c_N, b_1..b_N, a_2..a_N); nullopt = semi-infinite.
  virtual std::optional<std::size_t> top() const = 0;
};

template <class S>
struct VectorSource final : BandSource<S> {
  std::vector<S> cs, bs, as;  // bs[n-1] = b_n, as[n-2] = a_n
  S c(std::size_t n) const override { return cs[n]; }
  S b(std::size_t n) const override { return bs[n - 1]; }
  S a(std::size_t n) const override { return as[n - 2]; }
  std::optional<std::size_t> top() const override { return cs.size() - 1; }
};

template <class S>
struct ToeplitzSource final : BandSource<S> {
  S av, bv, cv;
  S c(std::size_t) const override { return cv; }
  S b(std::size_t) const override { return bv; }
  S a(std::size_t) const override { return av; }
  std::optional<std::size_t> top() const override { return std::nullopt; }
};

/// Index-shifted view with a handful of head entries replaced. Used by the
/// retraction and tail constructions; the a band is never overridden.
template <class S>
struct PatchedSource final : BandSource<S> {
  std::shared_ptr<const BandSource<S>> base;
  std::size_t shift = 0;
  std::vector<std::pair<std::size_t, S>> c_over, b_over;

  S c(std::size_t n) const override {
    for (const auto& [i, v] : c_over)
      if (i == n) return v;
    return base->c(n + shift);
  }
  S b(std::size_t n) const override {
    for (const auto& [i, v] : b_over)
      if (i == n) return v;
    return base->b(n + shift);
  }
  S a(std::size_t n) const override { return base->a(n + shift); }
  std::optional<std::size_t> top() const override {
    auto t = base->top();
    if (!t) return std::nullopt;
    return *t >= shift ? std::optional<std::size_t>(*t - shift) : std::optional<std::size_t>(0);
  }
};

/// Check-matrix bands: c'_n = b_{k+n+1}, b'_n = a_{k+n+1} c_{k+n},
/// a'_n = a_{k+n} a_{k+n+1}, with an optional replaced (1,1) corner.
template <class S>
struct CheckSource final : BandSource<S> {
  std::shared_ptr<const BandSource<S>> base;
  std::size_t k = 0;
  std::optional<S> corner;

  S c(std::size_t n) const override {
    if (n == 0 && corner) return *corner;
    return base->b(k + n + 1);
  }
  S b(std::size_t n) const override { return base->a(k + n + 1) * base->c(k + n); }
  S a(std::size_t n) const override { return base->a(k + n) * base->a(k + n + 1); }
  std::optional<std::size_t> top() const override {
    auto t = base->top();
    if (!t) return std::nullopt;
    if (*t < k + 1) throw band_out_of_range('b', k + 1);
    return *t - k - 1;
  }
};

}  // namespace detail

/// The three band sequences (c_n, b_n, a_n) of a tetradiagonal Hessenberg
/// matrix with unit superdiagonal: c indexed from 0, b from 1, a from 2.
/// Immutable after construction; a_n > 0 is enforced on every access.
template <class S>
class BandSpec {
 public:
  /// Finite bands; |c| = N+1 requires |b| = N and |a| = max(N-1, 0).
  static BandSpec from_bands(std::vector<S> c, std::vector<S> b, std::vector<S> a) {
    if (c.empty()) throw length_mismatch("band c must have at least one entry");
    std::size_t n = c.size() - 1;
    if (b.size() != n)
      throw length_mismatch("band b has " + std::to_string(b.size()) +
                            " entries, expected " + std::to_string(n));
    std::size_t want_a = n >= 1 ? n - 1 : 0;
    if (a.size() != want_a)
      throw length_mismatch("band a has " + std::to_string(a.size()) +
                            " entries, expected " + std::to_string(want_a));
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] > S(0))) throw non_positive_a(i + 2);
    auto src = std::make_shared<detail::VectorSource<S>>();
    src->cs = std::move(c);
    src->bs = std::move(b);
    src->as = std::move(a);
    return BandSpec(std::move(src));
  }

  /// Constant bands a_n = a > 0, b_n = b, c_n = c (semi-infinite).
  static BandSpec toeplitz(S a, S b, S c) {
    if (!(a > S(0))) throw non_positive_a(2);
    auto src = std::make_shared<detail::ToeplitzSource<S>>();
    src->av = std::move(a);
    src->bv = std::move(b);
    src->cv = std::move(c);
    return BandSpec(std::move(src));
  }

  explicit BandSpec(std::shared_ptr<const detail::BandSource<S>> src)
      : src_(std::move(src)) {}

  S c(std::size_t n) const {
    check('c', n, 0);
    return src_->c(n);
  }
  S b(std::size_t n) const {
    check('b', n, 1);
    return src_->b(n);
  }
  S a(std::size_t n) const {
    check('a', n, 2);
    S v = src_->a(n);
    if (!(v > S(0))) throw non_positive_a(n);
    return v;
  }

  bool finite() const { return src_->top().has_value(); }
  /// Largest usable band index for finite specs.
  std::size_t max_index() const {
    auto t = src_->top();
    if (!t) throw index_out_of_range("semi-infinite bands have no top index");
    return *t;
  }
  /// True when all bands through index n are available.
  bool available(std::size_t n) const {
    auto t = src_->top();
    return !t || n <= *t;
  }

  const std::shared_ptr<const detail::BandSource<S>>& source() const { return src_; }

 private:
  void check(char band, std::size_t n, std::size_t lo) const {
    if (n < lo || !available(n)) throw band_out_of_range(band, n);
  }

  std::shared_ptr<const detail::BandSource<S>> src_;
};

enum class TruncationVariant { Principal, Auxiliary };

/// Truncation selector: Principal is T^[N,k] (size N+1-k), Auxiliary is
/// T_1^[N,k] (size N-k).
struct Truncation {
  std::size_t N = 0;
  std::size_t k = 0;
  TruncationVariant variant = TruncationVariant::Principal;
};

/// Dense T^[N,k] or T_1^[N,k] exactly as displayed from the band entries.
template <class S>
Matrix<S> materialize(const BandSpec<S>& bands, const Truncation& t) {
  if (t.k > t.N) throw index_out_of_range("truncation start k exceeds N");
  if (!bands.available(t.N)) throw band_out_of_range('c', t.N);
  if (t.variant == TruncationVariant::Principal) {
    std::size_t n = t.N + 1 - t.k;
    Matrix<S> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t r = t.k + i;
        if (i == j)
          m(i, j) = bands.c(r);
        else if (i == j + 1)
          m(i, j) = bands.b(r);
        else if (i == j + 2)
          m(i, j) = bands.a(r);
        else if (j == i + 1)
          m(i, j) = S(1);
      }
    return m;
  }
  // Auxiliary: diagonal b_{k+1}.., superdiagonal c_{k+1}.., second superdiagonal 1,
  // subdiagonal a_{k+2}..; size N-k (empty when k = N).
  std::size_t n = t.N - t.k;
  Matrix<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        m(i, j) = bands.b(t.k + 1 + i);
      else if (j == i + 1)
        m(i, j) = bands.c(t.k + 1 + i);
      else if (j == i + 2)
        m(i, j) = S(1);
      else if (i == j + 1)
        m(i, j) = bands.a(t.k + 1 + i);
    }
  return m;
}

template <class S>
Matrix<S> materialize_principal(const BandSpec<S>& bands, std::size_t N, std::size_t k = 0) {
  return materialize(bands, Truncation{N, k, TruncationVariant::Principal});
}

template <class S>
Matrix<S> materialize_auxiliary(const BandSpec<S>& bands, std::size_t N, std::size_t k = 0) {
  return materialize(bands, Truncation{N, k, TruncationVariant::Auxiliary});
}

/// Entrywise equality of two band specs through index n.
template <class S>
bool bands_equal(const BandSpec<S>& x, const BandSpec<S>& y, std::size_t n) {
  if (!x.available(n) || !y.available(n)) return false;
  for (std::size_t i = 0; i <= n; ++i)
    if (x.c(i) != y.c(i)) return false;
  for (std::size_t i = 1; i <= n; ++i)
    if (x.b(i) != y.b(i)) return false;
  for (std::size_t i = 2; i <= n; ++i)
    if (x.a(i) != y.a(i)) return false;
  return true;
}

}  // namespace pbf
