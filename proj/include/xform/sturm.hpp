#pragma once

#include <vector>

#include "xform/squarefree.hpp"

namespace xform {

inline std::vector<QPoly> sturm_chain(const QPoly& f) {
  std::vector<QPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    QPoly r = -(a % b);
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace detail {
inline int sign_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace detail

/// Number of sign variations of the Sturm chain at a rational point.
inline int sturm_variations_at(const std::vector<QPoly>& chain, const Rational& x) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(p(x).sign());
  return detail::sign_variations(s);
}

/// Distinct real roots of a squarefree rational polynomial, over all of R.
inline int sturm_count(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "sturm_count of 0");
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.to_string());
  if (f.degree() == 0) return 0;
  auto chain = sturm_chain(f);
  std::vector<int> neg, pos;
  for (const auto& p : chain) {
    int lc = p.leading().sign();
    pos.push_back(lc);
    neg.push_back(p.degree() % 2 == 0 ? lc : -lc);
  }
  return detail::sign_variations(neg) - detail::sign_variations(pos);
}

/// Distinct real roots in the half-open interval (a, b].
inline int sturm_count_interval(const QPoly& f, const Rational& a, const Rational& b) {
  auto chain = sturm_chain(f);
  return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
}

}  // namespace xform
