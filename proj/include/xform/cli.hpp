#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xform/io/json.hpp"

namespace xform::cli {

using io::json;

namespace detail {

struct Options {
  std::string command;
  std::string view = "real";
  std::string eps;
  long n = 0;
  bool n_given = false;
  std::string spec;
  std::string input = "-";
};

inline json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

template <Field K>
void require_view(const K& k, View view) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (view.kind != View::Kind::fp || view.p != k.p)
      throw Error(ErrorKind::FieldMismatch, "input is over fp(" + std::to_string(k.p) + ") but the view is " + view.to_string());
  } else {
    if (view.kind == View::Kind::fp)
      throw Error(ErrorKind::FieldMismatch, "input is rational but the view is " + view.to_string());
  }
}

inline int emit(std::ostream& out, const json& j, int code) {
  out << j.dump(2) << '\n';
  return code;
}

inline int fail(std::ostream& out, std::string_view kind, const std::string& detail) {
  return emit(out, {{"error", {{"kind", std::string(kind)}, {"detail", detail}}}}, 2);
}

inline Rational require_eps(const Options& o) {
  if (o.eps.empty()) throw Error(ErrorKind::InvalidArgument, "--eps is required");
  try {
    return Rational::parse(o.eps);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, "--eps: " + e.detail());
  }
}

inline long require_n(const Options& o) {
  if (!o.n_given || o.n < 1) throw Error(ErrorKind::InvalidArgument, "--n must be a positive integer");
  return o.n;
}

inline QMatrix rational_input(const json& j, View view) {
  QMatrix a = io::parse_matrix_as(RationalField{}, j);
  require_view(a.field(), view);
  return a;
}

template <Field K>
int matrix_command(const Options& o, const Matrix<K>& a, View view, std::ostream& out) {
  const std::string& c = o.command;
  if (c == "minpoly") return emit(out, io::to_json(minpoly(a)), 0);
  if (c == "charpoly") return emit(out, io::to_json(charpoly(a)), 0);
  if (c == "canonical") {
    auto ff = frobenius_form(a);
    if (!verify_frobenius(a, ff)) throw Error(ErrorKind::InvalidArgument, "frobenius form failed re-verification");
    json inv = json::array();
    for (const auto& r : ff.invariant_factors) inv.push_back(io::to_json(r));
    return emit(out, {{"invariant_factors", inv}, {"transform", io::to_json(ff.transform)}, {"normal_form", io::to_json(ff.normal_form())}}, 0);
  }
  require_view(a.field(), view);
  if (c == "xformable") {
    auto r = classify_xformable(a, view);
    return emit(out, io::to_json(r), r.holds ? 0 : 1);
  }
  if (c == "decompose") {
    auto d = xform_decompose(a, view);
    json j{{"verdict", std::string(verdict_name(d.verdict))}, {"report", io::to_json(d.report)}};
    if (!d.detail.empty()) j["detail"] = d.detail;
    if (d.certificate) {
      if (!d.certificate->verify(a) || !d.certificate->a_reconstructed || !d.certificate->x_shape_ok)
        throw Error(ErrorKind::InvalidArgument, "certificate failed re-verification");
      j["certificate"] = io::to_json(*d.certificate);
    }
    return emit(out, j, d.verdict == DecomposeVerdict::certified ? 0 : 1);
  }
  if (c == "f3-product") {
    if constexpr (std::is_same_v<K, PrimeField>) {
      auto cert = two_xformable_factorization(a);
      if (!cert.product_ok || !cert.verify(a)) throw Error(ErrorKind::InvalidArgument, "factorization failed re-verification");
      return emit(out, io::to_json(cert), 0);
    } else {
      throw Error(ErrorKind::FieldMismatch, "f3-product needs a matrix over fp(3)");
    }
  }
  if constexpr (std::is_same_v<K, RationalField>) {
    if (c == "interior") {
      QPoly chi = charpoly(a);
      auto r = verifies_property_p(chi, view);
      return emit(out, {{"interior", r.holds}, {"charpoly", io::to_json(chi)}, {"report", io::to_json(r)}}, r.holds ? 0 : 1);
    }
    if (c == "density") {
      Rational eps = require_eps(o);
      auto w = density_witness(a, eps, view);
      if (!(inf_norm(a - w.b) < eps) || !is_squarefree(charpoly(w.b)) || !classify_xformable(w.b, view).holds)
        throw Error(ErrorKind::InvalidArgument, "density witness failed re-verification");
      return emit(out, {{"B", io::to_json(w.b)}, {"delta", w.delta.to_string()}, {"distance", w.distance.to_string()}, {"report", io::to_json(w.report)}}, 0);
    }
  } else {
    if (c == "interior" || c == "density") throw Error(ErrorKind::FieldMismatch, c + " works on rational matrices only");
  }
  throw Error(ErrorKind::InvalidArgument, "unknown command " + c);
}

inline int dispatch(const Options& o, std::istream& in, std::ostream& out) {
  View view = View::parse(o.view);
  if (o.command == "boundary") {
    if (o.spec.empty()) throw Error(ErrorKind::InvalidArgument, "--spec is required");
    auto spec = io::parse_block_spec(read_json(o.spec, in));
    long n = require_n(o);
    try {
      auto w = boundary_witness(spec, n, view);
      if (w.report.holds || !w.guarantee_ok || classify_xformable(w.a_n, view).holds)
        throw Error(ErrorKind::InvalidArgument, "boundary witness failed re-verification");
      return emit(out, io::to_json(w), 0);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoApplicableCase) throw;
      return emit(out, {{"verdict", "no_applicable_case"}, {"detail", e.detail()}}, 1);
    }
  }
  json j = read_json(o.input, in);
  if (o.command == "companion-density") {
    QPoly q = io::parse_poly(RationalField{}, io::detail::member(j, "q", "companion-density input"));
    const json& r = io::detail::member(j, "r", "companion-density input");
    if (!r.is_number_integer() || r.get<long>() < 1) throw Error(ErrorKind::ParseError, "r must be a positive integer");
    auto w = companion_density_witness(q, static_cast<unsigned>(r.get<long>()), require_n(o));
    if (!(charpoly(w.companion) == w.r)) throw Error(ErrorKind::InvalidArgument, "companion witness failed re-verification");
    return emit(out, {{"R", io::to_json(w.r)}, {"C", io::to_json(w.companion)}, {"report", io::to_json(w.report)}}, w.report.holds ? 0 : 1);
  }
  return std::visit([&](const auto& a) { return matrix_command(o, a, view, out); }, io::parse_matrix(j));
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"minpoly", "charpoly", "xformable", "decompose", "interior",
                                          "density", "companion-density", "boundary", "f3-product", "canonical"};
  return c;
}

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err = std::cerr) {
  detail::Options o;
  CLI::App app{"exact X-formability toolkit", "xformlab"};
  app.require_subcommand(1, 1);
  for (const auto& name : commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--view", o.view, "real, complex or fp:<p>");
    sub->add_option("--input", o.input, "JSON input path, - for stdin");
    if (name == "density") sub->add_option("--eps", o.eps, "positive rational bound");
    if (name == "companion-density" || name == "boundary") sub->add_option("--n", o.n, "sequence index");
    if (name == "boundary") sub->add_option("--spec", o.spec, "block spec JSON path");
    sub->callback([&o, name] { o.command = name; });
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return detail::fail(out, kind_name(ErrorKind::InvalidArgument), e.what());
  }
  for (auto* sub : app.get_subcommands())
    if (auto* opt = sub->get_option_no_throw("--n"); opt && opt->count() > 0) o.n_given = true;
  try {
    return detail::dispatch(o, in, out);
  } catch (const Error& e) {
    return detail::fail(out, kind_name(e.kind()), e.detail());
  }
}

}  // namespace xform::cli
