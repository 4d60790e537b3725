#include <doctest.h>

#include "pbf/bands.hpp"
#include "pbf/determinants.hpp"
#include "pbf/matrix.hpp"
#include "pbf/scalar.hpp"
#include "support/oracles.hpp"

#include <random>

using pbf::BandSpec;
using pbf::Rational;

namespace {

Rational q(const char* s) { return pbf::parse_rational(s); }

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("rational parsing handles fractions, decimals and exponents") {
  CHECK(q("25/6") == Rational(25, 6));
  CHECK(q("-3/9") == Rational(-1, 3));
  CHECK(q("1.25") == Rational(5, 4));
  CHECK(q("1e-9") == Rational(1, 1000000000));
  CHECK(q("2.5e3") == Rational(2500));
  CHECK(q("-0.5") == Rational(-1, 2));
  CHECK(q("+7") == Rational(7));
  CHECK_THROWS_AS(q(""), pbf::parse_error);
  CHECK_THROWS_AS(q("1/0"), pbf::parse_error);
  CHECK_THROWS_AS(q("abc"), pbf::parse_error);
  CHECK_THROWS_AS(q("1..2"), pbf::parse_error);
}

TEST_CASE("rational formatting round-trips") {
  CHECK(pbf::format_rational(Rational(25, 6)) == "25/6");
  CHECK(pbf::format_rational(Rational(-4, 2)) == "-2");
  CHECK(pbf::format_rational(Rational(0)) == "0");
  for (const char* s : {"17/12", "-5", "1/1000000000"})
    CHECK(pbf::format_rational(q(s)) == s);
}

TEST_CASE("double formatting is shortest round-trip") {
  for (double x : {1.2, 0.1, 3.0, -2.5e-7}) {
    CHECK(std::stod(pbf::format_double(x)) == x);
  }
}

TEST_CASE("make_bands validates lengths and positivity") {
  auto b = BandSpec<Rational>::from_bands({q("6"), q("6"), q("6"), q("6")},
                                          {q("11"), q("11"), q("11")}, {q("6"), q("6")});
  CHECK(b.finite());
  CHECK(b.max_index() == 3);
  CHECK(b.c(0) == 6);
  CHECK(b.b(3) == 11);
  CHECK(b.a(2) == 6);

  CHECK_THROWS_AS(BandSpec<Rational>::from_bands({q("6"), q("6")}, {q("11"), q("11")}, {}),
                  pbf::length_mismatch);
  CHECK_THROWS_AS(
      BandSpec<Rational>::from_bands({q("6"), q("6"), q("6")}, {q("11"), q("11")}, {q("0")}),
      pbf::non_positive_a);
  CHECK_THROWS_AS(BandSpec<Rational>::toeplitz(q("-1"), q("1"), q("1")), pbf::non_positive_a);
}

TEST_CASE("band access is range-checked") {
  auto b = BandSpec<Rational>::from_bands({q("1"), q("2")}, {q("3")}, {});
  CHECK_THROWS_AS(b.c(2), pbf::band_out_of_range);
  CHECK_THROWS_AS(b.b(0), pbf::band_out_of_range);
  CHECK_THROWS_AS(b.a(2), pbf::band_out_of_range);
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  CHECK_FALSE(t.finite());
  CHECK(t.available(1000000));
}

TEST_CASE("materialize principal truncation matches the band layout") {
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  auto m = pbf::materialize_principal(t, 1);
  CHECK(m.rows() == 2);
  CHECK(m(0, 0) == 6);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 11);
  CHECK(m(1, 1) == 6);

  auto m3 = pbf::materialize_principal(t, 2);
  CHECK(oracles::cofactor_determinant(m3) == 90);
  CHECK(pbf::dense_determinant(m3) == 90);
}

TEST_CASE("materialize auxiliary truncation") {
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  auto m = pbf::materialize_auxiliary(t, 2, 0);
  CHECK(m.rows() == 2);
  CHECK(m(0, 0) == 11);
  CHECK(m(0, 1) == 6);
  CHECK(m(1, 0) == 6);
  CHECK(m(1, 1) == 11);
  CHECK(pbf::materialize_auxiliary(t, 3, 3).rows() == 0);
}

TEST_CASE("delta ladder matches the dense determinant oracle") {
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  auto d = pbf::delta_ladder(t, 6);
  CHECK(d.at(0) == 1);
  CHECK(d.at(1) == 6);
  CHECK(d.at(2) == 25);
  CHECK(d.at(3) == 90);
  CHECK(d.at(4) == 301);
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(d.at(n) == oracles::cofactor_determinant(pbf::materialize_principal(t, n - 1)));

  auto neg = pbf::delta_ladder(BandSpec<Rational>::toeplitz(q("1"), q("46"), q("6")), 2);
  CHECK(neg.at(2) == -10);
}

TEST_CASE("delta ladder recurrence holds on random bands") {
  std::mt19937 rng(20240517);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c, b, a;
    for (int i = 0; i < 7; ++i) c.push_back(oracles::random_rational(rng, -4, 4));
    for (int i = 0; i < 6; ++i) b.push_back(oracles::random_rational(rng, -4, 4));
    for (int i = 0; i < 5; ++i) a.push_back(oracles::random_positive_rational(rng, 4));
    auto bands = BandSpec<Rational>::from_bands(c, b, a);
    auto d = pbf::delta_ladder(bands, 7);
    for (std::size_t n = 1; n <= 7; ++n)
      CHECK(d.at(n) == pbf::dense_determinant(pbf::materialize_principal(bands, n - 1)));
  }
}

TEST_CASE("dense determinant agrees with the cofactor oracle on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    pbf::Matrix<Rational> m(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = oracles::random_rational(rng, -3, 3);
    CHECK(pbf::dense_determinant(m) == oracles::cofactor_determinant(m));
  }
}

TEST_CASE("delta1 ladder sizes and values") {
  auto t = BandSpec<Rational>::toeplitz(q("6"), q("11"), q("6"));
  auto d1 = pbf::delta1_ladder(t, 3);
  CHECK(d1.size() == 4);
  CHECK(d1[3] == 1);  // empty determinant
  CHECK(d1[2] == 11);
  CHECK(d1[1] == 85);  // det [[11,6],[6,11]]
  CHECK(d1[0] == oracles::cofactor_determinant(pbf::materialize_auxiliary(t, 3, 0)));
}

TEST_CASE("float backend reproduces exact results within tolerance") {
  auto t = BandSpec<double>::toeplitz(6.0, 11.0, 6.0);
  auto d = pbf::delta_ladder(t, 4);
  CHECK(d.at(4) == doctest::Approx(301.0));
  auto m = pbf::materialize_principal(t, 3);
  CHECK(pbf::dense_determinant(m) == doctest::Approx(301.0));
}

TEST_SUITE_END();
