#pragma once

#include <initializer_list>
#include <random>
#include <tuple>

#include "qtpos/qt_poly.hpp"

namespace qtpos::testing {

/// Builds a polynomial from (q_exp, t_exp, coeff) triples.
inline QtPoly poly(std::initializer_list<std::tuple<int, int, long>> terms) {
  QtPoly p;
  for (const auto &[qe, te, c] : terms)
    p.add_term(qe, te, c);
  return p;
}

inline QtPoly random_poly(std::mt19937 &rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), count(0, max_terms), coef(-9, 9);
  QtPoly p;
  const int n = count(rng);
  for (int i = 0; i < n; ++i)
    p.add_term(deg(rng), deg(rng), coef(rng));
  return p;
}

} // namespace qtpos::testing
