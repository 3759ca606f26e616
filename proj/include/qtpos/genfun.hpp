#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "qtpos/qt_poly.hpp"

namespace qtpos {

/// Exponents (a, b, c) of u1^a u2^b u3^c.
using UKey = std::array<int, 3>;

/// Power series in u1, u2, u3 over Z[q,t], truncated above a total u-degree.
class USeries {
public:
  explicit USeries(int degree_bound) : bound_(degree_bound) {
    if (degree_bound < 0)
      throw std::invalid_argument("USeries: negative degree bound");
  }

  static USeries one(int degree_bound);

  int degree_bound() const { return bound_; }
  const std::map<UKey, QtPoly> &coeffs() const { return coeffs_; }
  /// Zero when (a, b, c) is absent or above the bound.
  QtPoly coeff(int a, int b, int c) const;

  /// Adds p * u^key; silently drops terms above the bound.
  void add_term(const UKey &key, const QtPoly &p);

  USeries &operator+=(const USeries &rhs);
  friend USeries operator+(USeries lhs, const USeries &rhs) { return lhs += rhs; }
  friend USeries operator*(const USeries &lhs, const USeries &rhs);
  USeries operator-() const;

  friend bool operator==(const USeries &, const USeries &) = default;

private:
  int bound_;
  std::map<UKey, QtPoly> coeffs_;
};

/// c * q^q t^t u1^u[0] u2^u[1] u3^u[2]
struct UTerm {
  long coeff = 1;
  int q = 0;
  int t = 0;
  UKey u{0, 0, 0};

  int u_degree() const { return u[0] + u[1] + u[2]; }
};

class InvalidMonomial : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// sign * numerator / prod (m - 1) over the denominator monomials m.
struct RationalTerm {
  int sign = -1;
  std::vector<UTerm> numerator;
  std::vector<UTerm> denominator_factors;
};

/// sum_{k>=0} m^k, truncated. Throws InvalidMonomial when m carries no u.
USeries geom_expand(const UTerm &m, int bound);

/// The seven terms whose sum is F, in display order.
const std::vector<RationalTerm> &f_terms();

USeries expand_term(const RationalTerm &term, int bound);

/// Exact value of a term at a rational point; throws std::domain_error at a pole.
mpq_class eval_term(const RationalTerm &term, const mpq_class &u1, const mpq_class &u2,
                    const mpq_class &u3, const mpq_class &q0, const mpq_class &t0);

/// Sum of the seven expanded terms, added in the given order (default display order).
USeries build_F(int bound, const std::vector<int> &order = {});

class OutOfBound : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// (F_abc - tau F_abc) / (t - q); equals g for lambda = (3^c 2^b 1^a).
QtPoly g_via_genfun(int a, int b, int c, int bound);
QtPoly g_via_genfun(const USeries &F, int a, int b, int c);

struct FPropertyReport {
  bool nonnegative = true;
  bool t_heavy = true;
  std::size_t coefficients_checked = 0;

  bool passed() const { return nonnegative && t_heavy; }
};

FPropertyReport check_F_properties(int bound);
FPropertyReport check_F_properties(const USeries &F);

} // namespace qtpos
