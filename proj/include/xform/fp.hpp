#pragma once

#include <ostream>
#include <string>

#include "xform/error.hpp"

namespace xform {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline constexpr int kMaxPrime = 97;

/// Element of F_p for an odd prime p <= 97. The modulus travels with the value.
class Fp {
 public:
  Fp() = default;
  Fp(long value, int p) : p_(p) {
    if (p < 3 || p > kMaxPrime || !is_prime(p))
      throw Error(ErrorKind::InvalidArgument, "p must be an odd prime <= 97, got " + std::to_string(p));
    long r = value % p;
    value_ = static_cast<int>(r < 0 ? r + p : r);
  }

  int value() const { return value_; }
  int modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }
  std::string to_string() const { return std::to_string(value_); }

  Fp operator-() const { return make(value_ == 0 ? 0 : p_ - value_, p_); }
  Fp& operator+=(const Fp& o) { check(o); value_ = (value_ + o.value_) % p_; return *this; }
  Fp& operator-=(const Fp& o) { check(o); value_ = (value_ - o.value_ + p_) % p_; return *this; }
  Fp& operator*=(const Fp& o) { check(o); value_ = (value_ * o.value_) % p_; return *this; }
  Fp& operator/=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.value_ == b.value_ && a.p_ == b.p_; }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value_; }

 private:
  static Fp make(int v, int p) {
    Fp r;
    r.value_ = v;
    r.p_ = p;
    return r;
  }
  void check(const Fp& o) const {
    if (p_ != o.p_)
      throw Error(ErrorKind::FieldMismatch,
                  "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
  }

  int value_ = 0;
  int p_ = 3;

  friend Fp fp_inverse(const Fp& a);
};

/// Extended Euclid on (value, p).
inline Fp fp_inverse(const Fp& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_" + std::to_string(a.p_));
  int r0 = a.p_, r1 = a.value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    int q = r0 / r1;
    int t = r0 - q * r1; r0 = r1; r1 = t;
    t = s0 - q * s1; s0 = s1; s1 = t;
  }
  return Fp(s0, a.p_);
}

inline Fp& Fp::operator/=(const Fp& o) {
  check(o);
  return *this *= fp_inverse(o);
}

inline Fp inverse(const Fp& a) { return fp_inverse(a); }

}  // namespace xform
