#include <doctest.h>

#include "pbf/pbf.hpp"
#include "pbf/tn.hpp"
#include "support/oracles.hpp"

#include <random>

using pbf::BandSpec;
using pbf::Rational;

namespace {

Rational q(const char* s) { return pbf::parse_rational(s); }

}  // namespace

TEST_SUITE_BEGIN("pbf");

TEST_CASE("lower bidiagonal split worked values") {
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  auto f = pbf::gauss_borel(t, 2);

  auto at0 = pbf::lower_bidiagonal_split(f, Rational(0));
  CHECK(at0.alpha_at(3) == q("11/6"));
  CHECK(at0.alpha_at(5) == q("6/11"));
  CHECK(at0.alpha_at(6) == q("102/55"));

  auto at1 = pbf::lower_bidiagonal_split(f, Rational(1));
  CHECK(at1.alpha_at(3) == q("5/6"));
  CHECK(at1.alpha_at(5) == q("6/5"));
  CHECK(at1.alpha_at(6) == q("6/5"));
  CHECK(pbf::assemble_l1(at1) * pbf::assemble_l2(at1) == pbf::assemble_lower(f));

  CHECK_THROWS_AS(pbf::lower_bidiagonal_split(f, q("11/6")), pbf::zero_pivot);
}

TEST_CASE("factorize with explicit seed reproduces the truncation") {
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  auto fac = pbf::pbf_factorize(t, 2, Rational(1));
  CHECK(fac.alpha_at(1) == 6);
  CHECK(fac.all_positive);
  CHECK(fac.gate_ok);
  CHECK(pbf::assemble_l1(fac) * pbf::assemble_l2(fac) * pbf::assemble_u(fac) ==
        pbf::materialize_principal(t, 2));

  auto neg = pbf::pbf_factorize(t, 2, Rational(-1));
  CHECK_FALSE(neg.all_positive);
  CHECK_FALSE(neg.gate_ok);
  CHECK(pbf::assemble_l1(neg) * pbf::assemble_l2(neg) * pbf::assemble_u(neg) ==
        pbf::materialize_principal(t, 2));
}

TEST_CASE("default seed is the gate midpoint") {
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  auto fac = pbf::pbf_factorize(t, 3);
  CHECK(fac.alpha2 == fac.gate_upper / Rational(2));
  CHECK(fac.gate_ok);
  CHECK(fac.all_positive);
}

TEST_CASE("seed at zero gives InTN bidiagonal factors") {
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  auto fac = pbf::pbf_factorize(t, 4, Rational(0));
  CHECK_FALSE(fac.all_positive);  // alpha_2 itself is zero
  CHECK(fac.gate_ok);
  CHECK(pbf::all_minors_nonneg(pbf::assemble_l1(fac)).is_tn);
  CHECK(pbf::all_minors_nonneg(pbf::assemble_l2(fac)).is_tn);
  CHECK(pbf::all_minors_nonneg(pbf::assemble_u(fac)).is_tn);
}

TEST_CASE("the positivity gate is sharp") {
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  std::size_t N = 5;
  Rational gate = pbf::pbf_factorize(t, N).gate_upper;

  auto below = pbf::pbf_factorize(t, N, Rational(gate - q("1/1000")));
  CHECK(below.all_positive);

  bool zero_seen = false;
  try {
    auto at = pbf::pbf_factorize(t, N, gate);
    for (std::size_t n = 1; n <= N; ++n)
      if (at.alpha_at(3 * static_cast<long>(n)) == Rational(0)) zero_seen = true;
  } catch (const pbf::zero_pivot&) {
    zero_seen = true;
  }
  CHECK(zero_seen);

  auto above = pbf::pbf_factorize(t, N, Rational(gate + q("1/1000")));
  CHECK_FALSE(above.all_positive);
  CHECK_FALSE(above.gate_ok);
}

TEST_CASE("reconstruction relations with the zero boundary") {
  pbf::BidiagonalFactorization<Rational> fac;
  fac.N = 3;
  fac.alphas.assign(10, Rational(1));
  auto bands = pbf::reconstruct_bands(fac);
  CHECK(bands.c(0) == 1);
  CHECK(bands.b(1) == 2);
  CHECK(bands.c(1) == 3);
  CHECK(bands.b(2) == 3);
  CHECK(bands.a(2) == 1);
  CHECK(bands.c(3) == 3);
}

TEST_CASE("reconstruct rejects zero interior coefficients") {
  pbf::BidiagonalFactorization<Rational> fac;
  fac.N = 3;
  fac.alphas.assign(10, Rational(1));
  fac.alphas[7] = Rational(0);  // a_3 = alpha_8 alpha_6 alpha_4 = 0
  CHECK_THROWS_AS(pbf::reconstruct_bands(fac), pbf::non_positive_a);
}

TEST_CASE("roundtrip on random oscillatory instances") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto bands = oracles::random_positive_factorization_bands(rng, 6);
    auto fac = pbf::pbf_factorize(bands, 6);
    CHECK(fac.all_positive);
    auto rec = pbf::reconstruct_bands(fac);
    CHECK(pbf::bands_equal(bands, rec, 6));
  }
}

TEST_CASE("float backend factorizes with small residual") {
  auto t = BandSpec<double>::toeplitz(6.0, 11.0, 6.0);
  auto fac = pbf::pbf_factorize(t, 12);
  CHECK(fac.all_positive);
  auto prod = pbf::assemble_l1(fac) * pbf::assemble_l2(fac) * pbf::assemble_u(fac);
  CHECK(pbf::max_relative_difference(prod, pbf::materialize_principal(t, 12)) < 1e-12);
}

TEST_SUITE_END();
