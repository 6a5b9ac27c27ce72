#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "xform/canon.hpp"
#include "xform/f3product.hpp"
#include "xform/topology.hpp"

namespace xform::io {

using nlohmann::json;

/// A parsed matrix whose field is only known at runtime.
using AnyMatrix = std::variant<QMatrix, FpMatrix>;

namespace detail {

inline const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::string scalar_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::ParseError, where + ": scalars must be strings");
}

template <Field K>
typename K::value_type parse_scalar(const K& k, const json& j, const std::string& where) {
  try {
    return k.parse(scalar_text(j, where));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, where + ": " + e.detail());
  }
}

template <Field K>
Matrix<K> parse_rows(const K& k, const json& rows) {
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::ParseError, "rows must be a non-empty array");
  const std::size_t n = rows.size();
  Matrix<K> m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " is not an array");
    if (row.size() != n)
      throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                             " entries, expected " + std::to_string(n) + " (ragged or non-square)");
    for (std::size_t c = 0; c < n; ++c)
      m(i, c) = parse_scalar(k, row[c], "row " + std::to_string(i) + ", column " + std::to_string(c));
  }
  return m;
}

}  // namespace detail

inline std::string field_tag(const RationalField&) { return "rational"; }
inline std::string field_tag(const PrimeField&) { return "fp"; }

inline AnyMatrix parse_matrix(const json& j) {
  std::string field = detail::member(j, "field", "matrix").is_string() ? j.at("field").get<std::string>() : "";
  const json& rows = detail::member(j, "rows", "matrix");
  if (field == "rational") return detail::parse_rows(RationalField{}, rows);
  if (field == "fp") {
    const json& p = detail::member(j, "p", "matrix");
    if (!p.is_number_integer() || p.get<long>() < 3 || p.get<long>() > kMaxPrime || !is_prime(p.get<long>()))
      throw Error(ErrorKind::ParseError, "matrix: \"p\" must be an odd prime <= " + std::to_string(kMaxPrime));
    return detail::parse_rows(PrimeField{p.get<int>()}, rows);
  }
  throw Error(ErrorKind::ParseError, "matrix: field must be \"rational\" or \"fp\"");
}

template <Field K>
Matrix<K> parse_matrix_as(const K& k, const json& j) {
  AnyMatrix m = parse_matrix(j);
  if (auto* got = std::get_if<Matrix<K>>(&m)) {
    if (!(got->field() == k)) throw Error(ErrorKind::FieldMismatch, "matrix is over " + got->field().name() + ", expected " + k.name());
    return *got;
  }
  throw Error(ErrorKind::FieldMismatch, "matrix is not over " + k.name());
}

template <Field K>
Polynomial<K> parse_poly(const K& k, const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "polynomial must be a non-empty array of coefficients");
  std::vector<typename K::value_type> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(detail::parse_scalar(k, j[i], "coefficient " + std::to_string(i)));
  return Polynomial<K>(k, std::move(c));
}

template <Field K>
json to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
    rows.push_back(row);
  }
  json out{{"field", field_tag(m.field())}};
  if constexpr (std::is_same_v<K, PrimeField>) out["p"] = m.field().p;
  out["rows"] = rows;
  return out;
}

template <Field K>
json to_json(const Polynomial<K>& p) {
  json out = json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(static_cast<std::size_t>(i)).to_string());
  return out;
}

inline json to_json(const PropertyPReport& r) {
  json out{{"holds", r.holds}, {"view", r.view.to_string()}};
  if (r.violation) out["violation"] = {{"kind", violation_name(r.violation->kind)}, {"detail", r.violation->detail}};
  return out;
}

template <Field K>
json to_json(const XFormCertificate<K>& c) {
  return {{"P", to_json(c.p)}, {"X", to_json(c.x)}, {"checks", {{"reconstructed", c.a_reconstructed}, {"x_shape", c.x_shape_ok}}}};
}

inline json to_json(const BoundaryWitness& w) {
  return {{"case", std::string(1, w.which)},
          {"n", w.n},
          {"A_n", to_json(w.a_n)},
          {"distance", w.distance.to_string()},
          {"distance_bound", w.distance_bound.to_string()},
          {"minpoly", to_json(w.minpoly)},
          {"xformable", w.report.holds},
          {"report", to_json(w.report)}};
}

inline json to_json(const TwoFactorCertificate& c) {
  return {{"M1", to_json(c.m1)},
          {"M2", to_json(c.m2)},
          {"reports", json::array({to_json(c.report1), to_json(c.report2)})},
          {"product_ok", c.product_ok}};
}

inline BlockSpec<RationalField> parse_block_spec(const json& j) {
  const RationalField k;
  BlockSpec<RationalField> spec{k, {}, std::nullopt};
  const json& blocks = detail::member(j, "blocks", "block spec");
  if (!blocks.is_array() || blocks.empty()) throw Error(ErrorKind::ParseError, "block spec: blocks must be a non-empty array");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const json& b = blocks[i];
    std::string where = "block " + std::to_string(i);
    const json& kind = detail::member(b, "kind", where);
    std::string tag = kind.is_string() ? kind.get<std::string>() : "";
    if (tag == "jordan") {
      const json& size = detail::member(b, "size", where);
      if (!size.is_number_integer() || size.get<long>() < 1) throw Error(ErrorKind::ParseError, where + ": size must be a positive integer");
      spec.blocks.push_back(JordanBlock<RationalField>{detail::parse_scalar(k, detail::member(b, "lambda", where), where),
                                                       static_cast<std::size_t>(size.get<long>())});
    } else if (tag == "companion") {
      spec.blocks.push_back(CompanionBlock<RationalField>{parse_poly(k, detail::member(b, "poly", where))});
    } else if (tag == "raw") {
      spec.blocks.push_back(RawBlock<RationalField>{parse_matrix_as(k, detail::member(b, "matrix", where))});
    } else {
      throw Error(ErrorKind::ParseError, where + ": kind must be jordan, companion or raw");
    }
  }
  if (j.contains("conjugator") && !j.at("conjugator").is_null()) spec.conjugator = parse_matrix_as(k, j.at("conjugator"));
  return spec;
}

}  // namespace xform::io
