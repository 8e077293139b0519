// Integer sequences and closed-form counts: Fibonacci, Pell (A000129),
// half-companion Pell (A001333), exact arithmetic in Q(sqrt 2), mountain
// counts and square/domino tilings.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deutsch/numeric.hpp"

namespace deutsch {

/// F_1 = F_2 = 1, F_0 = 0, extended backward so F_{-1} = 1. Requires n >= -1.
BigInt fibonacci(long long n);

/// x_n = 2 x_{n-1} + x_{n-2}; 0, 1, 2, 5, 12, ...
BigInt pell(std::size_t n);
/// x_n = 2 x_{n-1} + x_{n-2}; 1, 1, 3, 7, 17, ...
BigInt half_companion_pell(std::size_t n);

class NonIntegerResult : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// p + q * sqrt(2) with rational p and q.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  static QuadraticNumber sqrt2() { return {0, 1}; }
  /// 1 + sqrt(2)
  static QuadraticNumber a() { return {1, 1}; }
  /// 1 - sqrt(2)
  static QuadraticNumber b() { return {1, -1}; }

  const Rational& rational_part() const noexcept { return p_; }
  const Rational& sqrt2_part() const noexcept { return q_; }

  QuadraticNumber conjugate() const { return {p_, -q_}; }
  /// p^2 - 2 q^2
  Rational norm() const { return p_ * p_ - 2 * q_ * q_; }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.p_ + y.p_, x.q_ + y.q_};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.p_ - y.p_, x.q_ - y.q_};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.p_ * y.p_ + 2 * x.q_ * y.q_, x.p_ * y.q_ + y.p_ * x.q_};
  }
  /// Throws std::domain_error on division by zero.
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

  std::string str() const;

 private:
  Rational p_{0};
  Rational q_{0};
};

QuadraticNumber quad_pow(QuadraticNumber x, std::size_t n);

/// The integer value of x; throws NonIntegerResult otherwise.
BigInt require_integer(const QuadraticNumber& x);

/// (a^n - b^n) / (2 sqrt 2), evaluated in the quadratic ring.
BigInt binet_pell(std::size_t n);
/// (a^n + b^n) / 2, evaluated in the quadratic ring.
BigInt binet_half_companion(std::size_t n);

/// ((1 + (-1)^n)/2 + A001333(n) - A000129(n)) / 2, using integer arithmetic only.
BigInt count_nondecreasing_integer(std::size_t n);
/// 1/4 (1 + (-1)^n) + 1/4 (a^n + b^n) - 1/(4 sqrt 2) (a^n - b^n) in Q(sqrt 2).
BigInt count_nondecreasing_quadratic(std::size_t n);
/// Number of non-decreasing Deutsch paths of length n. Both evaluations above
/// are run; disagreement throws std::logic_error.
BigInt count_nondecreasing_closed(std::size_t n);

/// sum_{1 <= j < k} C(j-1, 2j-k): mountains with k steps indexed by j up-steps.
BigInt mountain_count_by_ups(long long k);
/// sum_{0 <= j < k-1} C(k-j-2, j).
BigInt mountain_count_shifted(long long k);
/// Number of mountains with k steps (0 for k < 2). Throws std::logic_error if
/// the two binomial sums disagree.
BigInt count_mountains(long long k);

enum class Tile : std::uint8_t { Square, Domino };
using Tiling = std::vector<Tile>;

std::size_t tiling_length(const Tiling& t);
std::string render_tiling(const Tiling& t);

/// All tilings of a 1 x n strip, lexicographic with Square < Domino.
void for_each_tiling(std::size_t n, const std::function<void(const Tiling&)>& visit);
std::vector<Tiling> enumerate_tilings(std::size_t n);
/// Counted by dynamic programming, independent of the Fibonacci routine.
BigInt count_tilings(std::size_t n);
/// Tilings of length n >= 1 whose first tile is a Square; 1 for n = 0.
BigInt count_square_first_tilings(std::size_t n);

class DoesNotStartWithDomino : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Drops the leading Domino. Throws DoesNotStartWithDomino.
Tiling delete_leading_domino(const Tiling& t);
/// Inverse map: prepends a Domino.
Tiling prepend_domino(const Tiling& t);

/// "v0, v1, ..."
std::string format_sequence(const std::vector<BigInt>& values);
/// OEIS b-file: "n value" per line, starting at `offset`.
std::string format_bfile(const std::vector<BigInt>& values, long long offset = 0);

}  // namespace deutsch
