#pragma once

#include <concepts>
#include <string>

#include "xform/fp.hpp"
#include "xform/rational.hpp"

namespace xform {

/// Field descriptors. Containers hold one so that zero/one can be produced
/// without an existing element; descriptors compare equal iff fields match.
struct RationalField {
  using value_type = Rational;
  static constexpr bool is_prime_field = false;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long v) const { return Rational(v); }
  Rational parse(std::string_view s) const { return Rational::parse(s); }
  int characteristic() const { return 0; }
  std::string name() const { return "rational"; }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct PrimeField {
  using value_type = Fp;
  static constexpr bool is_prime_field = true;

  explicit PrimeField(int p) : p(p) { (void)Fp(0, p); }

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_int(long v) const { return Fp(v, p); }
  Fp parse(std::string_view s) const {
    std::string t(s);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size())
      throw Error(ErrorKind::ParseError, "malformed F_" + std::to_string(p) + " element '" + t + "'");
    return Fp(v, p);
  }
  int characteristic() const { return p; }
  std::string name() const { return "fp(" + std::to_string(p) + ")"; }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  int p;
};

template <typename K>
concept Field = requires(const K& k, const typename K::value_type& a, const typename K::value_type& b) {
  typename K::value_type;
  { k.zero() } -> std::same_as<typename K::value_type>;
  { k.one() } -> std::same_as<typename K::value_type>;
  { k.from_int(1L) } -> std::same_as<typename K::value_type>;
  { a + b } -> std::convertible_to<typename K::value_type>;
  { a - b } -> std::convertible_to<typename K::value_type>;
  { a * b } -> std::convertible_to<typename K::value_type>;
  { a / b } -> std::convertible_to<typename K::value_type>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <Field K>
void require_same_field(const K& a, const K& b) {
  if (!(a == b)) throw Error(ErrorKind::FieldMismatch, a.name() + " vs " + b.name());
}

}  // namespace xform
