#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "xform/field.hpp"

namespace xform {

/// Dense univariate polynomial, coefficients ascending by degree. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
template <Field K>
class Polynomial {
 public:
  using value_type = typename K::value_type;

  explicit Polynomial(K field) : field_(std::move(field)) {}
  Polynomial(K field, std::vector<value_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }
  Polynomial(K field, std::initializer_list<long> coeffs) : field_(std::move(field)) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.push_back(field_.from_int(v));
    trim();
  }

  static Polynomial constant(const K& field, const value_type& c) { return Polynomial(field, {c}); }
  static Polynomial one(const K& field) { return Polynomial(field, {field.one()}); }
  static Polynomial x(const K& field) { return Polynomial(field, {field.zero(), field.one()}); }
  /// X - a
  static Polynomial linear(const K& field, const value_type& a) { return Polynomial(field, {-a, field.one()}); }
  static Polynomial monomial(const K& field, const value_type& c, std::size_t degree) {
    std::vector<value_type> v(degree + 1, field.zero());
    v[degree] = c;
    return Polynomial(field, std::move(v));
  }

  const K& field() const { return field_; }
  const std::vector<value_type>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }
  value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  value_type leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    return *this * (field_.one() / c_.back());
  }

  value_type operator()(const value_type& x) const {
    value_type acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<value_type> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<long>(i)));
    return Polynomial(field_, std::move(d));
  }

  /// f(X + h)
  Polynomial shift(const value_type& h) const {
    Polynomial acc(field_);
    Polynomial lin(field_, {h, field_.one()});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(field_, *it);
    return acc;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = one(field_), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1u;
    }
    return r;
  }

  Polynomial operator-() const {
    std::vector<value_type> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return Polynomial(field_, std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    std::vector<value_type> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<value_type> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const value_type& s) {
    std::vector<value_type> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(x * s);
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator*(const value_type& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const auto& a = c_[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      std::string s = a.to_string();
      bool neg = !s.empty() && s[0] == '-';
      if (neg) s.erase(0, 1);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      bool unit = (s == "1");
      if (i == 0) out += s;
      else {
        if (!unit) out += s + "*";
        out += i == 1 ? "X" : "X^" + std::to_string(i);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  K field_;
  std::vector<value_type> c_;
};

using QPoly = Polynomial<RationalField>;
using FpPoly = Polynomial<PrimeField>;

/// Euclidean division: a = q*b + r with deg r < deg b.
template <Field K>
std::pair<Polynomial<K>, Polynomial<K>> poly_divrem(const Polynomial<K>& a, const Polynomial<K>& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const K& f = a.field();
  using T = typename K::value_type;
  std::vector<T> r = a.coefficients();
  const auto& bc = b.coefficients();
  int db = b.degree();
  if (a.degree() < db) return {Polynomial<K>(f), a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
  T inv_lead = f.one() / bc.back();
  for (int i = a.degree(); i >= db; --i) {
    T coef = r[static_cast<std::size_t>(i)] * inv_lead;
    q[static_cast<std::size_t>(i - db)] = coef;
    if (coef.is_zero()) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] = r[static_cast<std::size_t>(i - db + j)] - coef * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial<K>(f, std::move(q)), Polynomial<K>(f, std::move(r))};
}

template <Field K>
Polynomial<K> operator/(const Polynomial<K>& a, const Polynomial<K>& b) { return poly_divrem(a, b).first; }
template <Field K>
Polynomial<K> operator%(const Polynomial<K>& a, const Polynomial<K>& b) { return poly_divrem(a, b).second; }

template <Field K>
bool divides(const Polynomial<K>& d, const Polynomial<K>& a) {
  if (d.is_zero()) return a.is_zero();
  return poly_divrem(a, d).second.is_zero();
}

/// Exact quotient; throws if `d` does not divide `a`.
template <Field K>
Polynomial<K> exact_quotient(const Polynomial<K>& a, const Polynomial<K>& d) {
  auto [q, r] = poly_divrem(a, d);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, d.to_string() + " does not divide " + a.to_string());
  return q;
}

/// Monic gcd. gcd(0, 0) is rejected.
template <Field K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    auto r = poly_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <Field K>
Polynomial<K> poly_lcm(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial<K>(a.field());
  return (a / poly_gcd(a, b) * b).monic();
}

template <Field K>
bool coprime(const Polynomial<K>& a, const Polynomial<K>& b) {
  return poly_gcd(a, b).is_one();
}

/// Largest divisor of `x` whose irreducible factors all divide `s`.
template <Field K>
Polynomial<K> part_supported_on(Polynomial<K> x, Polynomial<K> s) {
  Polynomial<K> r = Polynomial<K>::one(x.field());
  while (true) {
    auto g = poly_gcd(x, s);
    if (g.degree() <= 0) break;
    r = r * g;
    x = x / g;
    s = g;
  }
  return r;
}

/// Rational polynomials: ||f||_inf on coefficients.
inline Rational coeff_inf_norm(const QPoly& f) {
  Rational m(0);
  for (const auto& c : f.coefficients()) m = std::max(m, abs(c));
  return m;
}

/// Discriminant of a quadratic a2 X^2 + a1 X + a0.
template <Field K>
typename K::value_type quadratic_discriminant(const Polynomial<K>& q) {
  if (q.degree() != 2) throw Error(ErrorKind::InvalidArgument, "not a quadratic: " + q.to_string());
  return q.coeff(1) * q.coeff(1) - q.field().from_int(4) * q.coeff(2) * q.coeff(0);
}

inline QPoly qpoly(std::initializer_list<long> c) { return QPoly(RationalField{}, c); }
inline QPoly qpoly(std::vector<Rational> c) { return QPoly(RationalField{}, std::move(c)); }
inline FpPoly fppoly(int p, std::initializer_list<long> c) { return FpPoly(PrimeField(p), c); }

}  // namespace xform
