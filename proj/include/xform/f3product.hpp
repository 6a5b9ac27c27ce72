#pragma once

#include <vector>

#include "xform/canon/classify.hpp"
#include "xform/canon/frobenius.hpp"

namespace xform {

struct ExchangeIdentity {
  FpMatrix j;  // exchange (anti-identity) matrix
  FpMatrix h;  // anti-triangular factor carrying the companion column
};

namespace detail {
inline void require_f3(const PrimeField& k) {
  if (k.p != 3) throw Error(ErrorKind::FieldMismatch, "the two-factor construction is over F_3 only, got F_" + std::to_string(k.p));
}
}  // namespace detail

/// For monic P of degree d with last companion column c_i = -p_i:
/// C(P) = J * H, J the exchange matrix, H with J_{d-1} in its upper-left
/// corner, c_{d-1}..c_1 down its last column and c_0 in the corner.
inline ExchangeIdentity companion_exchange_identity(const FpPoly& p) {
  detail::require_f3(p.field());
  if (p.degree() < 1 || !p.is_monic()) throw Error(ErrorKind::InvalidArgument, "need a monic polynomial of degree >= 1");
  const PrimeField& k = p.field();
  const std::size_t d = static_cast<std::size_t>(p.degree());
  FpMatrix j(k, d, d), h(k, d, d);
  for (std::size_t i = 0; i < d; ++i) j(i, d - 1 - i) = k.one();
  for (std::size_t i = 0; i + 1 < d; ++i) {
    h(i, d - 2 - i) = k.one();
    h(i, d - 1) = -p.coeff(d - 1 - i);
  }
  h(d - 1, d - 1) = -p.coeff(0);
  return {j, h};
}

struct TwoFactorCertificate {
  FpMatrix m1;
  FpMatrix m2;
  PropertyPReport report1;
  PropertyPReport report2;
  bool product_ok = false;

  bool verify(const FpMatrix& a) const {
    View v = View::fp(3);
    return m1 * m2 == a && classify_xformable(m1, v).holds && classify_xformable(m2, v).holds;
  }
};

/// Every matrix over F_3 is M1 * M2 with both factors X-formable: reduce
/// to companion blocks with the Frobenius form and split each block with
/// the exchange identity.
inline TwoFactorCertificate two_xformable_factorization(const FpMatrix& a) {
  detail::require_f3(a.field());
  if (!a.is_square() || a.size() == 0) throw Error(ErrorKind::SizeMismatch, "need a non-empty square matrix");
  const PrimeField& k = a.field();
  auto ff = frobenius_form(a);
  std::vector<FpMatrix> js, hs;
  for (const auto& r : ff.invariant_factors) {
    auto [j, h] = companion_exchange_identity(r);
    js.push_back(j);
    hs.push_back(h);
  }
  FpMatrix tinv = mat_inverse(ff.transform);
  FpMatrix m1 = ff.transform * block_diagonal(k, js) * tinv;
  FpMatrix m2 = ff.transform * block_diagonal(k, hs) * tinv;
  View v = View::fp(3);
  return {m1, m2, classify_xformable(m1, v), classify_xformable(m2, v), m1 * m2 == a};
}

}  // namespace xform
