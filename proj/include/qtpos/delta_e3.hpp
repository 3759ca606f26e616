#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qtpos/qt_poly.hpp"
#include "qtpos/shapes.hpp"

namespace qtpos {

class WrongSize : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NonPolynomial : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The cells of mu as monomials q^{a'(c)} t^{l'(c)}.
struct BAlphabet {
  Partition mu;
  std::vector<Monomial> letters;

  Alphabet alphabet() const { return Alphabet(letters); }
};

/// Requires |mu| = 4.
BAlphabet b_alphabet(const Partition &mu);

/// <Delta_{e3} e_n, s_lambda>. Zero when lambda_1 > 4.
QtPoly delta3_coefficient(const Partition &lambda);

using RationalPoint = std::pair<mpq_class, mpq_class>; ///< (q0, t0)

/// Evaluates the F-based expression at each (q0, t0) and compares it with
/// delta3_coefficient. Throws InvalidSample (from recursion.hpp) at a pole.
bool delta3_via_F_samplecheck(const Partition &lambda, const std::vector<RationalPoint> &samples);

/// The F-based expression at one point.
mpq_class delta3_via_F_value(const Partition &lambda, const mpq_class &q0, const mpq_class &t0);

struct PositivityReport {
  QtPoly value;
  bool nonnegative = true;
  bool tau_symmetric = true;
  mpq_class at_one;
};

PositivityReport positivity_report(const Partition &lambda);

} // namespace qtpos
