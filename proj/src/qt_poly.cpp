#include "qtpos/qt_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qtpos {

QtPoly::QtPoly(long constant) : QtPoly(mpz_class(constant)) {}

QtPoly::QtPoly(const mpz_class &constant) {
  if (constant != 0)
    terms_.emplace(Monomial{0, 0}, constant);
}

QtPoly QtPoly::monomial(int q_exp, int t_exp, const mpz_class &coeff) {
  QtPoly p;
  p.add_term(q_exp, t_exp, coeff);
  return p;
}

mpz_class QtPoly::coeff(int q_exp, int t_exp) const {
  auto it = terms_.find(Monomial{q_exp, t_exp});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int QtPoly::degree_q() const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m.q);
  return d;
}

int QtPoly::degree_t() const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m.t);
  return d;
}

bool QtPoly::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto &kv) { return kv.second > 0; });
}

void QtPoly::add_term(int q_exp, int t_exp, const mpz_class &c) {
  if (q_exp < 0 || t_exp < 0)
    throw std::invalid_argument("QtPoly: negative exponent");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(Monomial{q_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

QtPoly &QtPoly::operator+=(const QtPoly &rhs) {
  for (const auto &[m, c] : rhs.terms_)
    add_term(m.q, m.t, c);
  return *this;
}

QtPoly &QtPoly::operator-=(const QtPoly &rhs) {
  for (const auto &[m, c] : rhs.terms_)
    add_term(m.q, m.t, -c);
  return *this;
}

QtPoly operator*(const QtPoly &lhs, const QtPoly &rhs) {
  QtPoly out;
  for (const auto &[ma, ca] : lhs.terms_)
    for (const auto &[mb, cb] : rhs.terms_)
      out.add_term(ma.q + mb.q, ma.t + mb.t, ca * cb);
  return out;
}

QtPoly &QtPoly::operator*=(const QtPoly &rhs) {
  *this = *this * rhs;
  return *this;
}

QtPoly &QtPoly::operator*=(const mpz_class &scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_)
    c *= scalar;
  return *this;
}

QtPoly QtPoly::operator-() const {
  QtPoly out = *this;
  for (auto &[m, c] : out.terms_)
    c = -c;
  return out;
}

QtPoly tau_swap(const QtPoly &p) {
  QtPoly out;
  for (const auto &[m, c] : p.terms())
    out.add_term(m.t, m.q, c);
  return out;
}

// ---------------------------------------------------------------------------
// Divisors

Divisor Divisor::constant(const mpz_class &c) {
  if (c == 0)
    throw std::invalid_argument("Divisor: zero constant");
  Divisor d(Kind::Constant);
  d.constant_ = c;
  return d;
}

QtPoly Divisor::as_poly() const {
  const QtPoly q = QtPoly::q();
  const QtPoly t = QtPoly::t();
  switch (kind_) {
  case Kind::TMinusQ:
    return t - q;
  case Kind::QMinusT:
    return q - t;
  case Kind::T2MinusQ:
    return QtPoly::monomial(0, 2) - q;
  case Kind::QMinusT2:
    return q - QtPoly::monomial(0, 2);
  case Kind::Q2MinusT:
    return QtPoly::monomial(2, 0) - t;
  case Kind::TMinusQ2:
    return t - QtPoly::monomial(2, 0);
  case Kind::Q3MinusT:
    return QtPoly::monomial(3, 0) - t;
  case Kind::QMinusT3:
    return q - QtPoly::monomial(0, 3);
  case Kind::QPlusT:
    return q + t;
  case Kind::Constant:
    return QtPoly(constant_);
  }
  return {};
}

std::string Divisor::name() const {
  switch (kind_) {
  case Kind::TMinusQ:
    return "t-q";
  case Kind::QMinusT:
    return "q-t";
  case Kind::T2MinusQ:
    return "t^2-q";
  case Kind::QMinusT2:
    return "q-t^2";
  case Kind::Q2MinusT:
    return "q^2-t";
  case Kind::TMinusQ2:
    return "t-q^2";
  case Kind::Q3MinusT:
    return "q^3-t";
  case Kind::QMinusT3:
    return "q-t^3";
  case Kind::QPlusT:
    return "q+t";
  case Kind::Constant:
    return constant_.get_str();
  }
  return "?";
}

namespace {

// Univariate polynomial in the non-designated variable: exponent -> coeff.
using Univariate = std::map<int, mpz_class>;

void accumulate(Univariate &acc, int exp, const mpz_class &c) {
  if (c == 0)
    return;
  auto [it, inserted] = acc.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      acc.erase(it);
  }
}

// Divisor written as sign * (v - root_sign * w^root_exp), where v is the
// designated variable and w the other one.
struct LinearForm {
  bool designated_is_q;
  int sign;
  int root_sign;
  int root_exp;
};

LinearForm linear_form(Divisor::Kind kind) {
  using K = Divisor::Kind;
  switch (kind) {
  case K::TMinusQ:
    return {true, -1, 1, 1};
  case K::QMinusT:
    return {true, 1, 1, 1};
  case K::T2MinusQ:
    return {true, -1, 1, 2};
  case K::QMinusT2:
    return {true, 1, 1, 2};
  case K::Q2MinusT:
    return {false, -1, 1, 2};
  case K::TMinusQ2:
    return {false, 1, 1, 2};
  case K::Q3MinusT:
    return {false, -1, 1, 3};
  case K::QMinusT3:
    return {true, 1, 1, 3};
  case K::QPlusT:
    return {true, 1, -1, 1};
  case K::Constant:
    break;
  }
  throw std::logic_error("linear_form: constant divisor");
}

} // namespace

QtPoly exact_div(const QtPoly &p, const Divisor &d) {
  if (p.is_zero())
    return {};

  if (d.kind() == Divisor::Kind::Constant) {
    QtPoly out;
    for (const auto &[m, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), d.constant_value().get_mpz_t()))
        throw NonDivisible("exact_div: coefficient not divisible by " + d.name());
      out.add_term(m.q, m.t, c / d.constant_value());
    }
    return out;
  }

  const LinearForm form = linear_form(d.kind());
  auto designated = [&](const Monomial &m) { return form.designated_is_q ? m.q : m.t; };
  auto other = [&](const Monomial &m) { return form.designated_is_q ? m.t : m.q; };

  // p = sum_i c_i(w) v^i
  int top = 0;
  for (const auto &[m, c] : p.terms())
    top = std::max(top, designated(m));
  std::vector<Univariate> coeffs(static_cast<std::size_t>(top) + 1);
  for (const auto &[m, c] : p.terms())
    accumulate(coeffs[static_cast<std::size_t>(designated(m))], other(m), c);

  // Synthetic division by (v - r), r = root_sign * w^root_exp.
  auto times_root = [&](const Univariate &u) {
    Univariate out;
    for (const auto &[e, c] : u)
      accumulate(out, e + form.root_exp, form.root_sign * c);
    return out;
  };

  std::vector<Univariate> quotient(static_cast<std::size_t>(top));
  Univariate carry;
  for (int i = top; i >= 1; --i) {
    Univariate b = coeffs[static_cast<std::size_t>(i)];
    for (const auto &[e, c] : carry)
      accumulate(b, e, c);
    quotient[static_cast<std::size_t>(i - 1)] = b;
    carry = times_root(b);
  }
  Univariate remainder = coeffs[0];
  for (const auto &[e, c] : carry)
    accumulate(remainder, e, c);
  if (!remainder.empty())
    throw NonDivisible("exact_div: nonzero remainder dividing by " + d.name());

  QtPoly out;
  for (std::size_t i = 0; i < quotient.size(); ++i) {
    for (const auto &[e, c] : quotient[i]) {
      const int v = static_cast<int>(i);
      if (form.designated_is_q)
        out.add_term(v, e, form.sign * c);
      else
        out.add_term(e, v, form.sign * c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// q,t-analogs

QtPoly qt_analog(int n) {
  if (n < 0)
    throw std::invalid_argument("qt_analog: negative argument");
  QtPoly out;
  for (int s = 0; s < n; ++s)
    out.add_term(n - 1 - s, s, 1);
  return out;
}

QtPoly qt_analog_base(int n, AnalogBase base) {
  if (n < 0)
    throw std::invalid_argument("qt_analog_base: negative argument");
  QtPoly out;
  for (int s = 0; s < n; ++s) {
    if (base == AnalogBase::T2Q)
      out.add_term(s, 2 * (n - 1 - s), 1);
    else
      out.add_term(2 * (n - 1 - s), s, 1);
  }
  return out;
}

QtPoly qt_range(int n, int m) {
  if (n < 0)
    throw std::invalid_argument("qt_range: negative lower end");
  QtPoly out;
  for (int i = n; i <= m; ++i)
    out += qt_analog(i);
  return out;
}

mpq_class eval_rational(const QtPoly &p, const mpq_class &q0, const mpq_class &t0) {
  mpq_class sum = 0;
  for (const auto &[m, c] : p.terms()) {
    mpq_class term(c);
    for (int i = 0; i < m.q; ++i)
      term *= q0;
    for (int i = 0; i < m.t; ++i)
      term *= t0;
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

// ---------------------------------------------------------------------------
// Output

std::string to_string(const QtPoly &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    mpz_class mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;

    const bool constant = m.q == 0 && m.t == 0;
    if (mag != 1 || constant) {
      os << mag.get_str();
      if (!constant)
        os << '*';
    }
    if (m.q > 0) {
      os << 'q';
      if (m.q > 1)
        os << '^' << m.q;
      if (m.t > 0)
        os << '*';
    }
    if (m.t > 0) {
      os << 't';
      if (m.t > 1)
        os << '^' << m.t;
    }
  }
  return os.str();
}

nlohmann::json to_json(const QtPoly &p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &[m, c] : p.terms())
    terms.push_back({{"q", m.q}, {"t", m.t}, {"c", c.get_str()}});
  return {{"terms", terms}};
}

QtPoly qt_poly_from_json(const nlohmann::json &j) {
  QtPoly out;
  for (const auto &term : j.at("terms")) {
    mpz_class c(term.at("c").get<std::string>());
    out.add_term(term.at("q").get<int>(), term.at("t").get<int>(), c);
  }
  return out;
}

} // namespace qtpos
