// Exact truncated power series and rational generating functions.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "deutsch/numeric.hpp"

namespace deutsch {

class ZeroConstantTerm : public std::domain_error {
 public:
  ZeroConstantTerm() : std::domain_error("series has zero constant term") {}
};

class NonzeroConstantTerm : public std::domain_error {
 public:
  NonzeroConstantTerm() : std::domain_error("series must have zero constant term") {}
};

class UnknownForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultOrder = 64;

/// Finite-degree polynomial with exact coefficients; trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(Rational c, std::size_t k);

  /// -1 for the zero polynomial.
  long long degree() const noexcept { return static_cast<long long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Zero beyond the degree.
  Rational operator[](std::size_t k) const;
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Coefficients c_0..c_N of a formal power series, exact.
class TruncatedSeries {
 public:
  TruncatedSeries() : c_(1) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries constant(Rational c, std::size_t order);
  /// The formal variable z.
  static TruncatedSeries variable(std::size_t order);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const noexcept { return c_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return c_.at(k); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> c_;
};

// Binary operations truncate to the smaller order of the two operands.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& s);
/// Throws ZeroConstantTerm when b(0) == 0.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);
/// 1 / (1 - a); throws NonzeroConstantTerm when a(0) != 0.
TruncatedSeries series_star(const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_div(a, b);
}

/// numerator / denominator with denominator(0) != 0.
class RationalGF {
 public:
  /// Throws ZeroConstantTerm.
  RationalGF(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

 private:
  Polynomial num_;
  Polynomial den_;
};

/// c_0..c_N via the linear recurrence given by the denominator.
std::vector<Rational> rational_coeffs(const RationalGF& gf, std::size_t order);

enum class GfForm {
  Mountain,
  Bundle,
  Product,
  WithEmpty,
  PartialFractions,
  ContinuedFraction,
  Gamma,
  CfClosure,
  TreeForm,
  DyckNondecreasing,
  SquareFirstTilings,
  EdgeOrPath,
};

const std::vector<GfForm>& all_gf_forms();
std::string_view gf_form_name(GfForm form);
/// Throws UnknownForm.
GfForm gf_form_from_name(std::string_view name);

TruncatedSeries gf_series(GfForm form, std::size_t order = kDefaultOrder);
std::vector<Rational> gf_coefficients(GfForm form, std::size_t order = kDefaultOrder);
std::vector<Rational> gf_coefficients(std::string_view form, std::size_t order);

/// Checks 1/(1-A-B) == 1/(1-B) * 1/(1 - A/(1-B)) to the given order.
/// Throws NonzeroConstantTerm unless A(0) == B(0) == 0.
bool star_identity_holds(const TruncatedSeries& a, const TruncatedSeries& b,
                         std::size_t order);

/// "1, 0, 1/2, ..."
std::string format_coefficients(const std::vector<Rational>& coeffs);
/// {"form": name, "coeffs": ["1","0",...]}
std::string coefficients_json(std::string_view form, const std::vector<Rational>& coeffs);

}  // namespace deutsch
