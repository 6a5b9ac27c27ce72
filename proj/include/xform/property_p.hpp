#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "xform/fp_factor.hpp"
#include "xform/sturm.hpp"

namespace xform {

/// Which field the X-formability question is asked over.
struct View {
  enum class Kind { real, complex, fp };
  Kind kind = Kind::real;
  int p = 0;

  static View real() { return {Kind::real, 0}; }
  static View complex() { return {Kind::complex, 0}; }
  static View fp(int p) {
    (void)PrimeField(p);
    return {Kind::fp, p};
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::real: return "real";
      case Kind::complex: return "complex";
      case Kind::fp: return "fp:" + std::to_string(p);
    }
    return "?";
  }

  static View parse(std::string_view s) {
    if (s == "real") return real();
    if (s == "complex") return complex();
    if (s.substr(0, 3) == "fp:") {
      std::string digits(s.substr(3));
      if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 4)
        return fp(std::stoi(digits));
    }
    throw Error(ErrorKind::ParseError, "unknown view '" + std::string(s) + "' (expected real, complex or fp:<p>)");
  }

  friend bool operator==(const View&, const View&) = default;
};

enum class ViolationKind {
  exponent_at_least_3,
  nonreal_double_part,
  high_degree_irreducible,
  repeated_quadratic,
};

inline std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::exponent_at_least_3: return "exponent_at_least_3";
    case ViolationKind::nonreal_double_part: return "nonreal_double_part";
    case ViolationKind::high_degree_irreducible: return "high_degree_irreducible";
    case ViolationKind::repeated_quadratic: return "repeated_quadratic";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct PropertyPReport {
  bool holds = true;
  View view;
  std::optional<Violation> violation;

  static PropertyPReport ok(View v) { return {true, v, std::nullopt}; }
  static PropertyPReport fail(View v, ViolationKind k, std::string detail) {
    return {false, v, Violation{k, std::move(detail)}};
  }
};

namespace detail {

template <Field K>
void require_monic(const Polynomial<K>& f) {
  if (f.degree() < 1 || !f.is_monic())
    throw Error(ErrorKind::InvalidArgument, "expected a monic polynomial of degree >= 1, got " + f.to_string());
}

template <Field K>
std::string describe_high_power(const Polynomial<K>& g, unsigned e) {
  if (g.degree() == 1) return "exponent " + std::to_string(e) + " at root " + (-g.coeff(0)).to_string();
  return "exponent " + std::to_string(e) + " on factor " + g.to_string();
}

}  // namespace detail

/// Property (P) for a rational polynomial, over R or C.
///  complex: every root has multiplicity <= 2.
///  real: additionally the doubled part is split over R (Sturm count = degree).
inline PropertyPReport verifies_property_p(const QPoly& f, View view) {
  if (view.kind == View::Kind::fp)
    throw Error(ErrorKind::FieldMismatch, "fp view requested for a rational polynomial");
  detail::require_monic(f);
  auto sqf = yun_squarefree(f);
  for (const auto& part : sqf.parts)
    if (part.exponent >= 3)
      return PropertyPReport::fail(view, ViolationKind::exponent_at_least_3,
                                   detail::describe_high_power(part.factor, part.exponent));
  if (view.kind == View::Kind::real) {
    QPoly g2 = sqf.part(f.field(), 2);
    if (g2.degree() > 0) {
      int real = sturm_count(g2);
      if (real != g2.degree())
        return PropertyPReport::fail(view, ViolationKind::nonreal_double_part,
                                     "double part " + g2.to_string() + " has " + std::to_string(real) + " of " +
                                         std::to_string(g2.degree()) + " roots real");
    }
  }
  return PropertyPReport::ok(view);
}

/// Property (P) over F_p: linear factors with exponent <= 2, quadratic
/// irreducibles with exponent 1, nothing of degree >= 3.
inline PropertyPReport verifies_property_p(const FpPoly& f, View view) {
  if (view.kind != View::Kind::fp)
    throw Error(ErrorKind::FieldMismatch, view.to_string() + " view requested for an F_p polynomial");
  if (view.p != f.field().p)
    throw Error(ErrorKind::FieldMismatch, "view fp:" + std::to_string(view.p) + " vs F_" + std::to_string(f.field().p));
  detail::require_monic(f);
  auto factors = fp_factor(f);
  for (const auto& q : factors)
    if (q.exponent >= 3)
      return PropertyPReport::fail(view, ViolationKind::exponent_at_least_3,
                                   detail::describe_high_power(q.factor, q.exponent));
  for (const auto& q : factors)
    if (q.factor.degree() >= 3)
      return PropertyPReport::fail(view, ViolationKind::high_degree_irreducible,
                                   "irreducible factor " + q.factor.to_string() + " of degree " +
                                       std::to_string(q.factor.degree()));
  for (const auto& q : factors)
    if (q.factor.degree() == 2 && q.exponent >= 2)
      return PropertyPReport::fail(view, ViolationKind::repeated_quadratic,
                                   "irreducible quadratic " + q.factor.to_string() + " with exponent " +
                                       std::to_string(q.exponent));
  return PropertyPReport::ok(view);
}

}  // namespace xform
