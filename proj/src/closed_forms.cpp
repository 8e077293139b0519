#include "deutsch/closed_forms.hpp"

#include <sstream>

namespace deutsch {

namespace {

// x_n = 2 x_{n-1} + x_{n-2}
BigInt pell_like(std::size_t n, BigInt x0, BigInt x1) {
  if (n == 0) return x0;
  for (std::size_t i = 1; i < n; ++i) {
    BigInt next = 2 * x1 + x0;
    x0 = std::move(x1);
    x1 = std::move(next);
  }
  return x1;
}

}  // namespace

BigInt fibonacci(long long n) {
  if (n < -1) throw std::invalid_argument("fibonacci index must be >= -1");
  if (n == -1) return 1;
  BigInt a = 0, b = 1;
  for (long long i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt pell(std::size_t n) { return pell_like(n, 0, 1); }

BigInt half_companion_pell(std::size_t n) { return pell_like(n, 1, 1); }

// ---------------------------------------------------------------------------

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Rational nrm = y.norm();
  if (nrm == 0) throw std::domain_error("division by zero in Q(sqrt 2)");
  const QuadraticNumber t = x * y.conjugate();
  return {t.p_ / nrm, t.q_ / nrm};
}

std::string QuadraticNumber::str() const {
  return to_string(p_) + " + " + to_string(q_) + "*sqrt2";
}

QuadraticNumber quad_pow(QuadraticNumber x, std::size_t n) {
  QuadraticNumber r{1, 0};
  while (n) {
    if (n & 1u) r = r * x;
    x = x * x;
    n >>= 1u;
  }
  return r;
}

BigInt require_integer(const QuadraticNumber& x) {
  if (x.sqrt2_part() != 0 || !is_integer(x.rational_part())) {
    throw NonIntegerResult("expected an integer, got " + x.str());
  }
  return boost::multiprecision::numerator(x.rational_part());
}

BigInt binet_pell(std::size_t n) {
  const auto an = quad_pow(QuadraticNumber::a(), n);
  const auto bn = quad_pow(QuadraticNumber::b(), n);
  const QuadraticNumber two_sqrt2{0, 2};
  return require_integer((an - bn) / two_sqrt2);
}

BigInt binet_half_companion(std::size_t n) {
  const auto an = quad_pow(QuadraticNumber::a(), n);
  const auto bn = quad_pow(QuadraticNumber::b(), n);
  return require_integer((an + bn) / QuadraticNumber{2, 0});
}

BigInt count_nondecreasing_integer(std::size_t n) {
  const BigInt parity = (n % 2 == 0) ? 1 : 0;
  const BigInt twice = parity + half_companion_pell(n) - pell(n);
  if (twice % 2 != 0) {
    throw NonIntegerResult("closed form is not integral at n = " + std::to_string(n));
  }
  return twice / 2;
}

BigInt count_nondecreasing_quadratic(std::size_t n) {
  const auto an = quad_pow(QuadraticNumber::a(), n);
  const auto bn = quad_pow(QuadraticNumber::b(), n);
  const QuadraticNumber quarter{Rational(1, 4), 0};
  const QuadraticNumber sign{(n % 2 == 0) ? 1 : -1, 0};
  const QuadraticNumber four_sqrt2{0, 4};
  const auto value = quarter * (QuadraticNumber{1, 0} + sign) + quarter * (an + bn) -
                     (an - bn) / four_sqrt2;
  return require_integer(value);
}

BigInt count_nondecreasing_closed(std::size_t n) {
  BigInt v = count_nondecreasing_integer(n);
  if (v != count_nondecreasing_quadratic(n)) {
    throw std::logic_error("closed-form evaluations disagree at n = " + std::to_string(n));
  }
  return v;
}

// ---------------------------------------------------------------------------

BigInt mountain_count_by_ups(long long k) {
  BigInt s = 0;
  for (long long j = 1; j < k; ++j) s += binomial(j - 1, 2 * j - k);
  return s;
}

BigInt mountain_count_shifted(long long k) {
  BigInt s = 0;
  for (long long j = 0; j < k - 1; ++j) s += binomial(k - j - 2, j);
  return s;
}

BigInt count_mountains(long long k) {
  if (k < 2) return 0;
  BigInt s = mountain_count_by_ups(k);
  if (s != mountain_count_shifted(k)) {
    throw std::logic_error("binomial mountain sums disagree at k = " + std::to_string(k));
  }
  return s;
}

// ---------------------------------------------------------------------------

std::size_t tiling_length(const Tiling& t) {
  std::size_t n = 0;
  for (const auto tile : t) n += tile == Tile::Square ? 1 : 2;
  return n;
}

std::string render_tiling(const Tiling& t) {
  std::string out;
  for (const auto tile : t) out += tile == Tile::Square ? 'S' : 'D';
  return out;
}

namespace {

void tilings_rec(std::size_t left, Tiling& cur,
                 const std::function<void(const Tiling&)>& visit) {
  if (left == 0) {
    visit(cur);
    return;
  }
  cur.push_back(Tile::Square);
  tilings_rec(left - 1, cur, visit);
  cur.pop_back();
  if (left >= 2) {
    cur.push_back(Tile::Domino);
    tilings_rec(left - 2, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_tiling(std::size_t n, const std::function<void(const Tiling&)>& visit) {
  Tiling cur;
  tilings_rec(n, cur, visit);
}

std::vector<Tiling> enumerate_tilings(std::size_t n) {
  std::vector<Tiling> out;
  for_each_tiling(n, [&](const Tiling& t) { out.push_back(t); });
  return out;
}

BigInt count_tilings(std::size_t n) {
  std::vector<BigInt> ways(n + 1);
  ways[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    ways[i] = ways[i - 1];
    if (i >= 2) ways[i] += ways[i - 2];
  }
  return ways[n];
}

BigInt count_square_first_tilings(std::size_t n) {
  if (n == 0) return 1;
  return count_tilings(n - 1);
}

Tiling delete_leading_domino(const Tiling& t) {
  if (t.empty() || t.front() != Tile::Domino) {
    throw DoesNotStartWithDomino("tiling '" + render_tiling(t) +
                                 "' does not start with a domino");
  }
  return Tiling(t.begin() + 1, t.end());
}

Tiling prepend_domino(const Tiling& t) {
  Tiling out;
  out.reserve(t.size() + 1);
  out.push_back(Tile::Domino);
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

std::string format_sequence(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out;
}

std::string format_bfile(const std::vector<BigInt>& values, long long offset) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << offset + static_cast<long long>(i) << ' ' << values[i].str() << '\n';
  }
  return out.str();
}

}  // namespace deutsch
