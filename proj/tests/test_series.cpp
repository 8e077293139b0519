#include <doctest.h>

#include <random>

#include "deutsch/series.hpp"
#include "oracle.hpp"

using namespace deutsch;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (const long x : v) out.emplace_back(x);
  return out;
}

TruncatedSeries poly_series(std::initializer_list<Rational> c, std::size_t order) {
  return TruncatedSeries::from_polynomial(Polynomial(c), order);
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant) {
  std::uniform_int_distribution<int> deg(0, 8), num(-9, 9), den(1, 6);
  std::vector<Rational> c(order + 1);
  const int d = deg(rng);
  for (int k = zero_constant ? 1 : 0; k <= d && k <= static_cast<int>(order); ++k) {
    c[static_cast<std::size_t>(k)] = Rational(num(rng), den(rng));
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic trims and multiplies") {
  const Polynomial p{1, 1};
  const Polynomial q{1, -1};
  CHECK(p * q == Polynomial{1, 0, -1});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(Polynomial{1, 0, 0} == Polynomial{1});
  CHECK(Polynomial::monomial(3, 2)[2] == 3);
}

TEST_CASE("series add and multiply") {
  const std::size_t N = 10;
  const auto one_plus = poly_series({1, 1}, N);
  const auto one_minus = poly_series({1, -1}, N);
  CHECK(one_plus * one_minus == poly_series({1, 0, -1}, N));

  const auto z2 = poly_series({0, 0, 1}, N);
  const auto geo = TruncatedSeries(std::vector<Rational>(N + 1, Rational(1)));
  std::vector<Rational> want(N + 1, Rational(1));
  want[0] = want[1] = 0;
  CHECK((z2 * geo).coefficients() == want);

  CHECK((one_plus + one_minus).coefficients()[0] == 2);
  // Mixed orders truncate to the smaller.
  CHECK((poly_series({1, 1}, 3) * poly_series({1, 1}, 7)).order() == 3);
}

TEST_CASE("series multiplication is a commutative ring operation") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_series(rng, 16, false);
    const auto b = random_series(rng, 16, false);
    const auto c = random_series(rng, 16, false);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("series division") {
  const std::size_t N = 12;
  const auto one = TruncatedSeries::constant(1, N);
  const auto geo = one / poly_series({1, -1}, N);
  CHECK(geo.coefficients() == std::vector<Rational>(N + 1, Rational(1)));

  // Fibonacci shift via c_n = c_{n-1} + c_{n-2}.
  std::vector<Rational> fib(N + 1);
  fib[0] = 1;
  fib[1] = 1;
  for (std::size_t n = 2; n <= N; ++n) fib[n] = fib[n - 1] + fib[n - 2];
  CHECK((one / poly_series({1, -1, -1}, N)).coefficients() == fib);

  const auto mountain = poly_series({0, 0, 1}, 6) / poly_series({1, -1, -1}, 6);
  CHECK(mountain.coefficients() == ints({0, 0, 1, 1, 2, 3, 5}));

  CHECK_THROWS_AS(one / poly_series({0, 1}, N), ZeroConstantTerm);
}

TEST_CASE("series_div is exact: quotient times divisor recovers the dividend") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_series(rng, 20, false);
    auto b = random_series(rng, 20, true);
    b = b + TruncatedSeries::constant(Rational(1 + i % 4, 3), 20);
    REQUIRE((a / b) * b == a);
  }
}

TEST_CASE("rational_coeffs agrees with series division") {
  const RationalGF dyck(Polynomial{1, -2}, Polynomial{1, -3, 1});
  CHECK(rational_coeffs(dyck, 5) == ints({1, 1, 2, 5, 13, 34}));

  const RationalGF unit(Polynomial{1}, Polynomial{1});
  CHECK(rational_coeffs(unit, 3) == ints({1, 0, 0, 0}));

  // Bundle counts h_n = sum_k M_k h_{n-k}, with M_k the brute-force mountain census.
  const std::size_t N = 9;
  std::vector<long> mountains(N + 1, 0);
  for (std::size_t k = 2; k <= N; ++k) {
    for (const auto& p : oracle::all_paths(static_cast<int>(k))) {
      mountains[k] += oracle::is_mountain(p);
    }
  }
  std::vector<long> h(N + 1, 0);
  h[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t k = 2; k <= n; ++k) h[n] += mountains[k] * h[n - k];
  }
  CHECK(std::vector<long>(h.begin(), h.begin() + 6) == std::vector<long>{1, 0, 1, 1, 3, 5});
  const RationalGF bundle(Polynomial{1, -1, -1}, Polynomial{1, 1} * Polynomial{1, -2});
  const auto bc = rational_coeffs(bundle, N);
  for (std::size_t n = 0; n <= N; ++n) CHECK(bc[n] == h[n]);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto num = random_series(rng, 8, false);
    auto den = random_series(rng, 8, true);
    den = den + TruncatedSeries::constant(Rational(2, 1 + i % 3), 8);
    const Polynomial pn(num.coefficients());
    const Polynomial pd(den.coefficients());
    REQUIRE(rational_coeffs(RationalGF(pn, pd), 30) ==
            (TruncatedSeries::from_polynomial(pn, 30) / TruncatedSeries::from_polynomial(pd, 30))
                .coefficients());
  }

  CHECK_THROWS_AS(RationalGF(Polynomial{1}, Polynomial{0, 1}), ZeroConstantTerm);
}

TEST_CASE("named generating functions") {
  const auto with_empty = gf_coefficients("with-empty", 7);
  CHECK(with_empty == ints({1, 0, 1, 1, 3, 6, 15, 35}));
  CHECK(gf_coefficients("continued-fraction", 7) == with_empty);
  CHECK(gf_coefficients("edge-or-path", 6) == ints({0, 1, 1, 1, 2, 3, 5}));
  CHECK(gf_coefficients("mountain", 6) == ints({0, 0, 1, 1, 2, 3, 5}));
  CHECK(gf_coefficients("bundle", 5) == ints({1, 0, 1, 1, 3, 5}));
  CHECK(gf_coefficients("product", 5) == ints({0, 0, 1, 1, 3, 6}));
  CHECK(gf_coefficients("dyck-nondecreasing", 5) == ints({1, 1, 2, 5, 13, 34}));
  CHECK(gf_coefficients("square-first-tilings", 6) == ints({1, 1, 1, 2, 3, 5, 8}));
  CHECK(gf_coefficients("gamma", 7) == ints({0, 0, 1, 1, 2, 4, 9, 20}));
  CHECK_THROWS_AS(gf_coefficients("nope", 3), UnknownForm);

  for (const auto form : all_gf_forms()) {
    CHECK(gf_form_from_name(gf_form_name(form)) == form);
    CHECK(gf_coefficients(form, 10).size() == 11);
  }
}

TEST_CASE("total generating function forms agree to order 64") {
  const auto ref = gf_coefficients(GfForm::WithEmpty, 64);
  CHECK(gf_coefficients(GfForm::PartialFractions, 64) == ref);
  CHECK(gf_coefficients(GfForm::ContinuedFraction, 64) == ref);
  CHECK(gf_coefficients(GfForm::CfClosure, 64) == ref);
  CHECK(gf_coefficients(GfForm::TreeForm, 64) == ref);
  for (const auto& c : ref) {
    REQUIRE(is_integer(c));
    REQUIRE(c >= 0);
  }
  // The partial-fraction terms are not integral on their own.
  const auto quarter = rational_coeffs(RationalGF(Polynomial{Rational(1, 4)}, Polynomial{1, -1}), 3);
  CHECK_FALSE(is_integer(quarter[1]));
}

TEST_CASE("bundle series is the sequence construction over mountains") {
  CHECK(series_star(gf_series(GfForm::Mountain, 64)) == gf_series(GfForm::Bundle, 64));
}

TEST_CASE("product form matches the bundle sum with (1+z)^(j-1)") {
  // sum_{j>=1} H^j z^{j+1} (1+z)^{j-1}: home-run compositions of j into m parts
  // contribute C(j-1, m-1) z^m, which sums to z (1+z)^(j-1).
  const std::size_t N = 24;
  const auto H = gf_series(GfForm::Bundle, N);
  const auto z = TruncatedSeries::variable(N);
  const auto one_plus_z = poly_series({1, 1}, N);
  auto sum_minus = TruncatedSeries::zero(N);
  auto sum_plus = TruncatedSeries::zero(N);
  auto Hj = TruncatedSeries::constant(1, N);
  auto zj = TruncatedSeries::constant(1, N);
  for (std::size_t j = 1; j <= N; ++j) {
    Hj = Hj * H;
    zj = zj * z;
    auto p_minus = TruncatedSeries::constant(1, N);
    for (std::size_t i = 0; i + 1 < j; ++i) p_minus = p_minus * one_plus_z;
    const auto p_plus = p_minus * one_plus_z * one_plus_z;
    sum_minus = sum_minus + Hj * zj * z * p_minus;
    sum_plus = sum_plus + Hj * zj * z * p_plus;
  }
  CHECK(sum_minus == gf_series(GfForm::Product, N));
  CHECK_FALSE(sum_plus == gf_series(GfForm::Product, N));
}

TEST_CASE("star identity") {
  const std::size_t N = 32;
  const auto z = TruncatedSeries::variable(N);
  CHECK(star_identity_holds(z, z * z, N));

  // The layers used to explain the continued fraction.
  const auto mountain = gf_series(GfForm::Mountain, N);
  const auto edge_or_path = gf_series(GfForm::EdgeOrPath, N);
  CHECK(star_identity_holds(mountain, edge_or_path, N));
  CHECK(star_identity_holds(gf_series(GfForm::Gamma, N), z, N));

  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    REQUIRE(star_identity_holds(random_series(rng, N, true), random_series(rng, N, true), N));
  }

  CHECK_THROWS_AS(star_identity_holds(TruncatedSeries::constant(1, N), z, N),
                  NonzeroConstantTerm);
}

TEST_CASE("coefficient formatting") {
  CHECK(format_coefficients({Rational(1), Rational(0), Rational(1, 2), Rational(-3, 4)}) ==
        "1, 0, 1/2, -3/4");
  CHECK(coefficients_json("with-empty", ints({1, 0, 1})) ==
        R"({"form":"with-empty","coeffs":["1","0","1"]})");
}
