#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "xform/error.hpp"

namespace xform {

/// Exact fraction of arbitrary-precision integers, always in lowest terms
/// with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Exact value of a finite double (doubles are dyadic rationals).
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "non-finite double");
    return Rational(mpq_class(x));
  }

  /// Accepts "n", "n/d", with optional sign; surrounding spaces are rejected.
  static Rational parse(std::string_view s) {
    auto digits_ok = [](std::string_view t) {
      if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num(s.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
    if (!digits_ok(num) || !digits_ok(den) || den.front() == '-' || den.front() == '+')
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(s) + "'");
    if (num.front() == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

inline Rational inverse(const Rational& q) { return Rational(1) / q; }

enum class RationalOp { add, sub, mul, div };

inline Rational rational_arith(const Rational& a, const Rational& b, RationalOp op) {
  switch (op) {
    case RationalOp::add: return a + b;
    case RationalOp::sub: return a - b;
    case RationalOp::mul: return a * b;
    case RationalOp::div: return a / b;
  }
  return {};
}

/// Best rational approximation of `x` with denominator at most `bound`,
/// searched over continued-fraction convergents and semiconvergents of the
/// exact value. Exact for any rational input whose denominator fits.
inline Rational best_approximation(const Rational& x, const mpz_class& bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "denominator bound must be >= 1");
  // convergents h/k; (h_prev, k_prev) starts at (1, 0)
  mpz_class h_prev2 = 0, k_prev2 = 1, h_prev = 1, k_prev = 0;
  mpz_class num = x.numerator(), den = x.denominator();
  Rational best;
  bool have = false;
  auto consider = [&](const mpz_class& h, const mpz_class& k) {
    if (k <= 0 || k > bound) return;
    Rational cand(h, k);
    if (!have || abs(cand - x) < abs(best - x)) {
      best = cand;
      have = true;
    }
  };
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class h = a * h_prev + h_prev2;
    mpz_class k = a * k_prev + k_prev2;
    if (k > bound) {
      // largest semiconvergent still under the bound
      mpz_class t = (bound - k_prev2) / k_prev;
      if (t >= 1) consider(t * h_prev + h_prev2, t * k_prev + k_prev2);
      break;
    }
    consider(h, k);
    mpz_class r = num - a * den;
    if (r == 0) break;
    num = den;
    den = r;
    h_prev2 = h_prev; k_prev2 = k_prev;
    h_prev = h; k_prev = k;
  }
  if (!have) {
    // bound < first convergent denominator cannot happen (k0 = 1)
    throw Error(ErrorKind::InvalidArgument, "no approximation found");
  }
  return best;
}

/// Lifts a floating estimate to an exact candidate; callers verify it exactly.
inline Rational rational_reconstruct(double x, long denominator_bound) {
  return best_approximation(Rational::from_double(x), mpz_class(denominator_bound));
}

}  // namespace xform
