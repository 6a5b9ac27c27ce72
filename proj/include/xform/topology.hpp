#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xform/canon/blockspec.hpp"
#include "xform/canon/classify.hpp"

namespace xform {

namespace detail {
inline void require_real_or_complex(View view) {
  if (view.kind == View::Kind::fp)
    throw Error(ErrorKind::FieldMismatch, "topological statements are over R or C; got " + view.to_string());
}
}  // namespace detail

/// Interior of the X-formable set: chi_A has property (P).
inline bool interior_test(const QMatrix& a, View view) {
  detail::require_real_or_complex(view);
  return verifies_property_p(charpoly(a), view).holds;
}

struct DensityWitness {
  QMatrix b;
  Rational delta;
  Rational distance;
  PropertyPReport report;
};

/// B = A + delta * diag(1, ..., n) with squarefree chi_B and ||A - B|| < eps.
/// delta = 0 is tried first, then eps / (2 n k) for k = 1..n^2 + 1; the
/// discriminant of chi in delta has degree <= n(n-1), so one candidate works.
inline DensityWitness density_witness(const QMatrix& a, const Rational& eps, View view) {
  detail::require_real_or_complex(view);
  if (eps.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (!a.is_square() || a.size() == 0) throw Error(ErrorKind::SizeMismatch, "density_witness needs a square matrix");
  const RationalField k;
  const std::size_t n = a.size();
  QMatrix d(k, n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = Rational(static_cast<long>(i + 1));
  const long candidates = static_cast<long>(n * n + 1);
  for (long c = 0; c <= candidates; ++c) {
    Rational delta = c == 0 ? Rational(0) : eps / Rational(2 * static_cast<long>(n) * c);
    QMatrix b = a + delta * d;
    if (!is_squarefree(charpoly(b))) continue;
    return {b, delta, inf_norm(a - b), classify_xformable(b, view)};
  }
  throw Error(ErrorKind::InvalidArgument, "no squarefree perturbation found (unreachable)");
}

struct CompanionDensityWitness {
  QPoly r;
  QMatrix companion;
  PropertyPReport report;
};

/// R = prod_{j=1..r} q(X + j/n^2): root shifts by -j/n^2 of the repeated
/// irreducible quadratic q^r, giving r distinct irreducible factors.
inline CompanionDensityWitness companion_density_witness(const QPoly& q, unsigned r, long n) {
  if (q.degree() != 2 || !q.is_monic()) throw Error(ErrorKind::InvalidArgument, "q must be a monic quadratic");
  if (quadratic_discriminant(q).sign() >= 0)
    throw Error(ErrorKind::NonNegativeDiscriminant, q.to_string() + " has discriminant " + quadratic_discriminant(q).to_string());
  if (r < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "need r >= 1 and n >= 1");
  QPoly prod = QPoly::one(q.field());
  for (unsigned j = 1; j <= r; ++j) prod = prod * q.shift(Rational(static_cast<long>(j), n * n));
  return {prod, companion(prod), verifies_property_p(prod, View::real())};
}

/// c with ||R(n) - q^r||_inf <= c / n^2 for every n >= 1: the same product
/// with absolute coefficients majorizes every difference term at t = 1.
inline Rational companion_density_constant(const QPoly& q, unsigned r) {
  auto absolute = [](const QPoly& p) {
    std::vector<Rational> c;
    for (const auto& a : p.coefficients()) c.push_back(abs(a));
    return QPoly(RationalField{}, std::move(c));
  };
  QPoly aq = absolute(q), adq = absolute(q.derivative());
  QPoly prod = QPoly::one(q.field());
  for (unsigned j = 1; j <= r; ++j) {
    Rational jj(static_cast<long>(j));
    prod = prod * (aq + adq * jj + QPoly::constant(q.field(), jj * jj));
  }
  return coeff_inf_norm(prod - aq.pow(r));
}

/// One element A_n of a sequence of non-X-formable matrices converging to
/// the X-formable matrix described by a block spec.
struct BoundaryWitness {
  char which;  // 'a', 'b', 'c' or 'd'
  long n;
  QMatrix base;
  QMatrix a_n;
  Rational distance;
  Rational distance_bound;
  QPoly minpoly;
  PropertyPReport report;
  std::optional<Rational> lambda;  // cases a-c
  std::optional<QPoly> s;          // case d
  bool guarantee_ok;               // (X-lambda)^3 | pi, or S^2 || pi
};

namespace detail {

struct PlacedBlock {
  std::size_t offset;
  std::size_t size;
  std::optional<Rational> lambda;  // Jordan-type blocks
  std::optional<QPoly> s;          // 2x2 blocks with irreducible real charpoly
};

inline std::vector<PlacedBlock> place_blocks(const BlockSpec<RationalField>& spec) {
  std::vector<PlacedBlock> out;
  std::size_t off = 0;
  for (const auto& b : spec.blocks) {
    QMatrix m = block_matrix(spec.field, b);
    PlacedBlock pb{off, m.size(), std::nullopt, std::nullopt};
    if (const auto* j = std::get_if<JordanBlock<RationalField>>(&b)) {
      pb.lambda = j->lambda;
    } else if (const auto* c = std::get_if<CompanionBlock<RationalField>>(&b); c && c->poly.degree() == 1) {
      pb.lambda = -c->poly.coeff(0);
    }
    if (!pb.lambda && m.size() == 2) {
      QPoly chi = charpoly(m);
      if (quadratic_discriminant(chi).sign() < 0) pb.s = chi;
    }
    out.push_back(pb);
    off += m.size();
  }
  return out;
}

}  // namespace detail

/// Perturbation of the block-diagonal form by 1/n couplings (cases a-d),
/// conjugated back by the spec's conjugator.
inline BoundaryWitness boundary_witness(const BlockSpec<RationalField>& spec, long n, View view) {
  detail::require_real_or_complex(view);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const RationalField k;
  QMatrix base = spec.assemble();
  if (!classify_xformable(base, view).holds)
    throw Error(ErrorKind::InvalidArgument, "block spec does not describe an X-formable matrix over " + view.to_string());
  if (verifies_property_p(charpoly(base), view).holds)
    throw Error(ErrorKind::NoApplicableCase, "input lies in the interior, no witness exists");

  auto placed = detail::place_blocks(spec);
  const Rational eps(1, n);
  std::vector<std::pair<std::size_t, std::size_t>> couplings;
  char which = 0;
  std::optional<Rational> lambda;
  std::optional<QPoly> s;

  auto with_lambda = [&](std::size_t size, const Rational& l) {
    std::vector<const detail::PlacedBlock*> v;
    for (const auto& p : placed)
      if (p.lambda && *p.lambda == l && p.size == size) v.push_back(&p);
    return v;
  };
  std::vector<Rational> lambdas;
  for (const auto& p : placed)
    if (p.lambda && std::find(lambdas.begin(), lambdas.end(), *p.lambda) == lambdas.end()) lambdas.push_back(*p.lambda);

  for (char want : {'a', 'b', 'c'}) {
    for (const auto& l : lambdas) {
      auto twos = with_lambda(2, l), ones = with_lambda(1, l);
      if (want == 'a' && twos.size() >= 2) {
        couplings = {{twos[0]->offset, twos[1]->offset}, {twos[0]->offset + 1, twos[1]->offset + 1}};
      } else if (want == 'b' && ones.size() >= 3) {
        couplings = {{ones[0]->offset, ones[1]->offset}, {ones[1]->offset, ones[2]->offset}};
      } else if (want == 'c' && !twos.empty() && !ones.empty()) {
        couplings = {{twos[0]->offset + 1, ones[0]->offset}};
      } else {
        continue;
      }
      which = want;
      lambda = l;
      break;
    }
    if (which) break;
  }
  if (!which) {
    const detail::PlacedBlock *t = nullptr, *o = nullptr;
    for (std::size_t i = 0; i < placed.size() && !t; ++i)
      for (std::size_t j = i + 1; j < placed.size(); ++j)
        if (placed[i].s && placed[j].s && *placed[i].s == *placed[j].s) {
          t = &placed[i];
          o = &placed[j];
          break;
        }
    if (t && view.kind == View::Kind::complex)
      throw Error(ErrorKind::WrongView,
                  "case d needs the real view; over C the blocks split into conjugate eigenvalues " + t->s->to_string());
    if (!t) throw Error(ErrorKind::NoApplicableCase, "block structure exposes none of the cases a-d");
    which = 'd';
    s = *t->s;
    couplings = {{t->offset, o->offset + 1}};
  }

  QMatrix z = spec.diagonal_form();
  for (auto [i, j] : couplings) z(i, j) = z(i, j) + eps;
  QMatrix p = spec.conjugator_or_identity();
  QMatrix pinv = mat_inverse(p);
  QMatrix a_n = p * z * pinv;
  QPoly pi = minpoly(a_n);
  bool ok = false;
  if (lambda) {
    ok = divides(QPoly::linear(k, *lambda).pow(3), pi);
  } else {
    ok = divides(s->pow(2), pi) && !divides(s->pow(3), pi);
  }
  Rational bound = Rational(static_cast<long>(couplings.size())) * inf_norm(p) * inf_norm(pinv) * eps;
  return {which, n, base, a_n, inf_norm(a_n - base), bound, pi, verifies_property_p(pi, view), lambda, s, ok};
}

}  // namespace xform
