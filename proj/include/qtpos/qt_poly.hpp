#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include <json.hpp>

namespace qtpos {

/// Exponent pair of a monomial q^q t^t. Ordered by (q, t).
struct Monomial {
  int q = 0;
  int t = 0;

  auto operator<=>(const Monomial &) const = default;
};

/**
 * Sparse polynomial in q and t with arbitrary-precision integer
 * coefficients.
 *
 * Zero coefficients are never stored, so two values are equal exactly when
 * their term maps are equal. Exponents are nonnegative.
 */
class QtPoly {
public:
  using TermMap = std::map<Monomial, mpz_class>;

  QtPoly() = default;
  explicit QtPoly(long constant);
  explicit QtPoly(const mpz_class &constant);

  static QtPoly monomial(int q_exp, int t_exp, const mpz_class &coeff = 1);
  static QtPoly q() { return monomial(1, 0); }
  static QtPoly t() { return monomial(0, 1); }
  /// (qt)^k
  static QtPoly qt_power(int k) { return monomial(k, k); }

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  mpz_class coeff(int q_exp, int t_exp) const;
  int degree_q() const;
  int degree_t() const;

  /// True when every coefficient is >= 0.
  bool is_nonnegative() const;

  /// Adds c * q^q_exp t^t_exp in place.
  void add_term(int q_exp, int t_exp, const mpz_class &c);

  QtPoly &operator+=(const QtPoly &rhs);
  QtPoly &operator-=(const QtPoly &rhs);
  QtPoly &operator*=(const QtPoly &rhs);
  QtPoly &operator*=(const mpz_class &scalar);

  friend QtPoly operator+(QtPoly lhs, const QtPoly &rhs) { return lhs += rhs; }
  friend QtPoly operator-(QtPoly lhs, const QtPoly &rhs) { return lhs -= rhs; }
  friend QtPoly operator*(const QtPoly &lhs, const QtPoly &rhs);
  friend QtPoly operator*(QtPoly lhs, const mpz_class &s) { return lhs *= s; }
  friend QtPoly operator*(const mpz_class &s, QtPoly rhs) { return rhs *= s; }
  QtPoly operator-() const;

  friend bool operator==(const QtPoly &, const QtPoly &) = default;

private:
  TermMap terms_;
};

/// Exchanges q and t.
QtPoly tau_swap(const QtPoly &p);

/// Raised when an exact division leaves a nonzero remainder.
class NonDivisible : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * The fixed set of divisors used by the q,t formulas. Every non-constant
 * divisor is of degree one, with leading coefficient +-1, in one designated
 * variable.
 */
class Divisor {
public:
  enum class Kind {
    TMinusQ,
    QMinusT,
    T2MinusQ,
    QMinusT2,
    Q2MinusT,
    TMinusQ2,
    Q3MinusT,
    QMinusT3,
    QPlusT,
    Constant,
  };

  Divisor(Kind kind) : kind_(kind) {}
  static Divisor constant(const mpz_class &c);

  Kind kind() const { return kind_; }
  const mpz_class &constant_value() const { return constant_; }

  QtPoly as_poly() const;
  std::string name() const;

private:
  Kind kind_;
  mpz_class constant_ = 1;
};

/// Returns u with u * d == p, or throws NonDivisible.
QtPoly exact_div(const QtPoly &p, const Divisor &d);

/// [n]_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}; [0] = 0.
QtPoly qt_analog(int n);

enum class AnalogBase {
  T2Q, ///< [n]_{t^2,q} = sum_s t^{2(n-1-s)} q^s
  Q2T, ///< [n]_{q^2,t} = sum_s q^{2(n-1-s)} t^s
};

QtPoly qt_analog_base(int n, AnalogBase base);

/// [n -> m] = [n] + [n+1] + ... + [m]; empty (zero) when m < n.
QtPoly qt_range(int n, int m);

mpq_class eval_rational(const QtPoly &p, const mpq_class &q0, const mpq_class &t0);

/// Human-readable form such as "1 + 2*q*t - t^3".
std::string to_string(const QtPoly &p);

/// {"terms":[{"q":i,"t":j,"c":"<decimal>"}]} with terms sorted by (q, t).
nlohmann::json to_json(const QtPoly &p);
QtPoly qt_poly_from_json(const nlohmann::json &j);

} // namespace qtpos
