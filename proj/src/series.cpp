#include "deutsch/series.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include <json.hpp>

namespace deutsch {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(Rational c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator[](std::size_t k) const {
  return k < c_.size() ? c_[k] : Rational(0);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Rational>(order + 1));
}

TruncatedSeries TruncatedSeries::constant(Rational c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = std::move(c);
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  std::vector<Rational> v(order + 1);
  if (order >= 1) v[1] = 1;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  std::vector<Rational> v(order + 1);
  for (std::size_t k = 0; k <= order; ++k) v[k] = p[k];
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Rational> v(order + 1);
  for (std::size_t k = 0; k <= order && k < c_.size(); ++k) v[k] = c_[k];
  return TruncatedSeries(std::move(v));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = a[k] + b[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = a[k] - b[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& s) {
  std::vector<Rational> out(a.coefficients());
  for (auto& c : out) c *= s;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0] == 0) throw ZeroConstantTerm();
  const std::size_t n = std::min(a.order(), b.order());
  const Rational inv0 = Rational(1) / b[0];
  std::vector<Rational> q(n + 1);
  // a = q * b  =>  q_k = (a_k - sum_{i<k} q_i b_{k-i}) / b_0
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = a[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (q[i] == 0 || b[k - i] == 0) continue;
      acc -= q[i] * b[k - i];
    }
    q[k] = acc * inv0;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries series_star(const TruncatedSeries& a) {
  if (a[0] != 0) throw NonzeroConstantTerm();
  const auto one = TruncatedSeries::constant(1, a.order());
  return series_div(one, one - a);
}

// ---------------------------------------------------------------------------
// RationalGF

RationalGF::RationalGF(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_[0] == 0) throw ZeroConstantTerm();
}

std::vector<Rational> rational_coeffs(const RationalGF& gf, std::size_t order) {
  const auto& den = gf.denominator().coefficients();
  const Rational inv0 = Rational(1) / den[0];
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = gf.numerator()[n];
    const std::size_t reach = std::min(n, den.size() - 1);
    for (std::size_t i = 1; i <= reach; ++i) acc -= den[i] * c[n - i];
    c[n] = acc * inv0;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Named generating functions

namespace {

struct FormEntry {
  GfForm form;
  std::string_view name;
};

constexpr std::array<FormEntry, 12> kForms{{
    {GfForm::Mountain, "mountain"},
    {GfForm::Bundle, "bundle"},
    {GfForm::Product, "product"},
    {GfForm::WithEmpty, "with-empty"},
    {GfForm::PartialFractions, "partial-fractions"},
    {GfForm::ContinuedFraction, "continued-fraction"},
    {GfForm::Gamma, "gamma"},
    {GfForm::CfClosure, "cf-closure"},
    {GfForm::TreeForm, "tree-form"},
    {GfForm::DyckNondecreasing, "dyck-nondecreasing"},
    {GfForm::SquareFirstTilings, "square-first-tilings"},
    {GfForm::EdgeOrPath, "edge-or-path"},
}};

using P = Polynomial;

TruncatedSeries from_rational(const P& num, const P& den, std::size_t order) {
  return TruncatedSeries(rational_coeffs(RationalGF(num, den), order));
}

// (1+z)(1-z)(1-2z-z^2)
P product_denominator() { return P{1, 1} * P{1, -1} * P{1, -2, -1}; }

// Building blocks shared by the continued-fraction style forms.
struct Blocks {
  std::size_t order;
  TruncatedSeries one, z, z2;

  explicit Blocks(std::size_t n)
      : order(n),
        one(TruncatedSeries::constant(1, n)),
        z(TruncatedSeries::variable(n)),
        z2(series_mul(z, z)) {}

  // z / (1 - z/(1 - z^2)), the series for "edge or path".
  TruncatedSeries edge_or_path() const { return z / (one - z / (one - z2)); }
  // z^2 / (1 - z - z^2), the mountain series.
  TruncatedSeries mountain() const { return z2 / (one - z - z2); }
  TruncatedSeries gamma() const { return z2 / (one - z / (one - z / (one - z2))); }
};

}  // namespace

const std::vector<GfForm>& all_gf_forms() {
  static const std::vector<GfForm> forms = [] {
    std::vector<GfForm> v;
    for (const auto& e : kForms) v.push_back(e.form);
    return v;
  }();
  return forms;
}

std::string_view gf_form_name(GfForm form) {
  for (const auto& e : kForms) {
    if (e.form == form) return e.name;
  }
  return "unknown";
}

GfForm gf_form_from_name(std::string_view name) {
  for (const auto& e : kForms) {
    if (e.name == name) return e.form;
  }
  throw UnknownForm("unknown generating function form '" + std::string(name) + "'");
}

TruncatedSeries gf_series(GfForm form, std::size_t order) {
  const Blocks b(order);
  switch (form) {
    case GfForm::Mountain:
      return from_rational(P{0, 0, 1}, P{1, -1, -1}, order);
    case GfForm::Bundle:
      return from_rational(P{1, -1, -1}, P{1, 1} * P{1, -2}, order);
    case GfForm::Product:
      return from_rational(P{0, 0, 1} * P{1, -1, -1}, product_denominator(), order);
    case GfForm::WithEmpty:
      return b.one + gf_series(GfForm::Product, order);
    case GfForm::PartialFractions: {
      const auto t1 = from_rational(P{Rational(1, 4)}, P{1, -1}, order);
      const auto t2 = from_rational(P{Rational(1, 4)}, P{1, 1}, order);
      const auto t3 = from_rational(P{Rational(1, 2), -1}, P{1, -2, -1}, order);
      return t1 + t2 + t3;
    }
    case GfForm::ContinuedFraction:
      return b.one / (b.one - b.z2 / (b.one - b.z / (b.one - b.z / (b.one - b.z2))));
    case GfForm::Gamma:
      return b.gamma();
    case GfForm::CfClosure:
      return series_star(b.gamma());
    case GfForm::TreeForm: {
      const auto inner = b.one - b.mountain();
      const auto left = b.z2 / (b.one - (b.z + b.z2) / inner);
      return b.one + left * (b.one / inner);
    }
    case GfForm::DyckNondecreasing:
      return from_rational(P{1, -2}, P{1, -3, 1}, order);
    case GfForm::SquareFirstTilings:
      return b.one / (b.one - b.z / (b.one - b.z2));
    case GfForm::EdgeOrPath:
      return b.edge_or_path();
  }
  throw UnknownForm("unhandled generating function form");
}

std::vector<Rational> gf_coefficients(GfForm form, std::size_t order) {
  return gf_series(form, order).coefficients();
}

std::vector<Rational> gf_coefficients(std::string_view form, std::size_t order) {
  return gf_coefficients(gf_form_from_name(form), order);
}

bool star_identity_holds(const TruncatedSeries& a, const TruncatedSeries& b,
                         std::size_t order) {
  if (a[0] != 0 || b[0] != 0) throw NonzeroConstantTerm();
  const auto A = a.truncated(order);
  const auto B = b.truncated(order);
  const auto lhs = series_star(A + B);
  const auto b_star = series_star(B);
  const auto rhs = b_star * series_star(A * b_star);
  return lhs == rhs;
}

std::string format_coefficients(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) out += ", ";
    out += to_string(coeffs[k]);
  }
  return out;
}

std::string coefficients_json(std::string_view form, const std::vector<Rational>& coeffs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : coeffs) arr.push_back(to_string(c));
  nlohmann::ordered_json j;
  j["form"] = std::string(form);
  j["coeffs"] = std::move(arr);
  return j.dump();
}

}  // namespace deutsch
