#include <doctest.h>

#include <set>

#include "deutsch/closed_forms.hpp"
#include "deutsch/path.hpp"
#include "deutsch/series.hpp"

using namespace deutsch;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("fibonacci") {
  std::vector<BigInt> got;
  for (long long n = 1; n <= 7; ++n) got.push_back(fibonacci(n));
  CHECK(got == big({1, 1, 2, 3, 5, 8, 13}));
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(-1) == 1);
  CHECK(fibonacci(-1) == fibonacci(1) - fibonacci(0));
  CHECK_THROWS_AS(fibonacci(-2), std::invalid_argument);
  // Exceeds 64 bits.
  CHECK(fibonacci(100).str() == "354224848179261915075");
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("Pell and half-companion Pell") {
  std::vector<BigInt> p, q;
  for (std::size_t n = 0; n <= 6; ++n) {
    p.push_back(pell(n));
    q.push_back(half_companion_pell(n));
  }
  CHECK(p == big({0, 1, 2, 5, 12, 29, 70}));
  CHECK(q == big({1, 1, 3, 7, 17, 41, 99}));
  for (std::size_t n = 2; n <= 64; ++n) {
    REQUIRE(pell(n) == 2 * pell(n - 1) + pell(n - 2));
    REQUIRE(half_companion_pell(n) == 2 * half_companion_pell(n - 1) + half_companion_pell(n - 2));
  }
}

TEST_CASE("quadratic ring arithmetic") {
  const auto a = QuadraticNumber::a();
  const auto b = QuadraticNumber::b();
  CHECK(a == QuadraticNumber{1, 1});
  CHECK(a * b == QuadraticNumber{-1, 0});
  CHECK(a + b == QuadraticNumber{2, 0});
  CHECK(quad_pow(a, 2) == QuadraticNumber{3, 2});
  CHECK(quad_pow(b, 2) == QuadraticNumber{3, -2});
  CHECK(quad_pow(a, 0) == QuadraticNumber{1, 0});
  CHECK(QuadraticNumber::sqrt2() * QuadraticNumber::sqrt2() == QuadraticNumber{2, 0});
  CHECK((a / b) * b == a);
  CHECK(a.norm() == -1);
  CHECK_THROWS_AS(a / QuadraticNumber{}, std::domain_error);
  CHECK_THROWS_AS(require_integer(QuadraticNumber{Rational(1, 2), 0}), NonIntegerResult);
  CHECK_THROWS_AS(require_integer(a), NonIntegerResult);
}

TEST_CASE("Binet evaluations match the recurrences") {
  CHECK(binet_half_companion(2) == 3);
  for (std::size_t n = 0; n <= 64; ++n) {
    REQUIRE(binet_pell(n) == pell(n));
    REQUIRE(binet_half_companion(n) == half_companion_pell(n));
  }
}

TEST_CASE("closed-form count of non-decreasing paths") {
  const long expected[] = {1, 0, 1, 1, 3, 6, 15, 35, 85, 204, 493, 1189, 2871};
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(count_nondecreasing_closed(n) == expected[n]);
    CHECK(count_nondecreasing_integer(n) == count_nondecreasing_quadratic(n));
  }
  const auto series = gf_coefficients(GfForm::WithEmpty, 64);
  for (std::size_t n = 0; n <= 64; ++n) {
    REQUIRE(Rational(count_nondecreasing_closed(n)) == series[n]);
  }
  for (std::size_t n = 0; n <= 14; ++n) {
    REQUIRE(BigInt(enumerate_nondecreasing_filter(n).size()) == count_nondecreasing_closed(n));
  }
  // Past the 64-bit range.
  CHECK(count_nondecreasing_closed(120) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("mountain counts") {
  CHECK(count_mountains(5) == 3);
  CHECK(count_mountains(2) == 1);
  CHECK(count_mountains(10) == 34);
  CHECK(count_mountains(1) == 0);
  CHECK(count_mountains(-3) == 0);
  for (long long k = 2; k <= 64; ++k) {
    REQUIRE(mountain_count_by_ups(k) == mountain_count_shifted(k));
    REQUIRE(count_mountains(k) == fibonacci(k - 1));
  }
}

TEST_CASE("tilings") {
  std::vector<std::string> four;
  for (const auto& t : enumerate_tilings(4)) four.push_back(render_tiling(t));
  CHECK(four == std::vector<std::string>{"SSSS", "SSD", "SDS", "DSS", "DD"});
  CHECK(enumerate_tilings(0).size() == 1);
  CHECK(enumerate_tilings(0)[0].empty());

  std::size_t square_first3 = 0;
  for (const auto& t : enumerate_tilings(3)) square_first3 += t.front() == Tile::Square;
  CHECK(square_first3 == 2);
  CHECK(count_square_first_tilings(3) == 2);

  const auto sq = gf_coefficients(GfForm::SquareFirstTilings, 20);
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto all = enumerate_tilings(n);
    for (const auto& t : all) REQUIRE(tiling_length(t) == n);
    REQUIRE(BigInt(all.size()) == fibonacci(static_cast<long long>(n) + 1));
    REQUIRE(count_tilings(n) == fibonacci(static_cast<long long>(n) + 1));
    REQUIRE(Rational(count_square_first_tilings(n)) == sq[n]);
  }
}

TEST_CASE("delete_leading_domino") {
  CHECK(delete_leading_domino({Tile::Domino, Tile::Square}) == Tiling{Tile::Square});
  CHECK_THROWS_AS(delete_leading_domino({Tile::Square, Tile::Domino}), DoesNotStartWithDomino);
  CHECK_THROWS_AS(delete_leading_domino({}), DoesNotStartWithDomino);

  for (std::size_t n = 1; n <= 20; ++n) {
    std::set<Tiling> image;
    std::size_t domino_first = 0;
    for_each_tiling(n + 1, [&](const Tiling& t) {
      if (t.front() != Tile::Domino) return;
      ++domino_first;
      const auto rest = delete_leading_domino(t);
      REQUIRE(tiling_length(rest) == n - 1);
      REQUIRE(prepend_domino(rest) == t);
      image.insert(rest);
    });
    REQUIRE(image.size() == domino_first);
    REQUIRE(BigInt(domino_first) == fibonacci(static_cast<long long>(n)));
    REQUIRE(BigInt(image.size()) == count_tilings(n - 1));
  }
}

TEST_CASE("sequence formatting") {
  CHECK(format_sequence(big({1, 0, 1})) == "1, 0, 1");
  CHECK(format_bfile(big({1, 0, 1})) == "0 1\n1 0\n2 1\n");
  CHECK(format_bfile(big({5}), 3) == "3 5\n");
}
