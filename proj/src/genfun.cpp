#include "qtpos/genfun.hpp"

#include <numeric>
#include <stdexcept>

namespace qtpos {

namespace {

int total(const UKey &k) { return k[0] + k[1] + k[2]; }

UTerm m(int q, int t, int a, int b, int d) { return {1, q, t, {a, b, d}}; }

} // namespace

USeries USeries::one(int degree_bound) {
  USeries s(degree_bound);
  s.add_term({0, 0, 0}, QtPoly(1));
  return s;
}

QtPoly USeries::coeff(int a, int b, int c) const {
  auto it = coeffs_.find({a, b, c});
  return it == coeffs_.end() ? QtPoly{} : it->second;
}

void USeries::add_term(const UKey &key, const QtPoly &p) {
  if (total(key) > bound_ || p.is_zero())
    return;
  auto &slot = coeffs_[key];
  slot += p;
  if (slot.is_zero())
    coeffs_.erase(key);
}

USeries &USeries::operator+=(const USeries &rhs) {
  if (rhs.bound_ < bound_) {
    bound_ = rhs.bound_;
    std::erase_if(coeffs_, [&](const auto &kv) { return total(kv.first) > bound_; });
  }
  for (const auto &[k, p] : rhs.coeffs_)
    add_term(k, p);
  return *this;
}

USeries operator*(const USeries &lhs, const USeries &rhs) {
  USeries out(std::min(lhs.bound_, rhs.bound_));
  for (const auto &[ka, pa] : lhs.coeffs_)
    for (const auto &[kb, pb] : rhs.coeffs_) {
      const UKey k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      if (total(k) <= out.bound_)
        out.add_term(k, pa * pb);
    }
  return out;
}

USeries USeries::operator-() const {
  USeries out(bound_);
  for (const auto &[k, p] : coeffs_)
    out.coeffs_.emplace(k, -p);
  return out;
}

USeries geom_expand(const UTerm &mono, int bound) {
  const int step = mono.u_degree();
  if (step <= 0)
    throw InvalidMonomial("geom_expand: monomial has no u variable");
  USeries out(bound);
  mpz_class c = 1;
  for (int k = 0; k * step <= bound; ++k) {
    out.add_term({k * mono.u[0], k * mono.u[1], k * mono.u[2]},
                 QtPoly::monomial(k * mono.q, k * mono.t, c));
    c *= mono.coeff;
  }
  return out;
}

const std::vector<RationalTerm> &f_terms() {
  // clang-format off
  static const std::vector<UTerm> p9_times_u2t{
      m(2, 5, 2, 3, 0), m(2, 3, 2, 2, 0), m(2, 3, 1, 3, 0), m(1, 3, 2, 1, 0), m(1, 3, 1, 2, 0),
      m(1, 3, 0, 3, 0), m(0, 3, 1, 1, 0), m(0, 3, 0, 2, 0), m(0, 1, 0, 1, 0)};
  static const std::vector<UTerm> p9_times_tu3{
      m(2, 5, 2, 2, 1), m(2, 3, 2, 1, 1), m(2, 3, 1, 2, 1), m(1, 3, 2, 0, 1), m(1, 3, 1, 1, 1),
      m(1, 3, 0, 2, 1), m(0, 3, 1, 0, 1), m(0, 3, 0, 1, 1), m(0, 1, 0, 0, 1)};

  static const std::vector<RationalTerm> terms{
      {-1,
       {m(1, 2, 3, 0, 0), m(1, 2, 2, 1, 0), m(1, 2, 1, 2, 0), m(0, 2, 2, 0, 0), m(0, 2, 1, 1, 0),
        m(0, 2, 0, 2, 0)},
       {m(0, 0, 1, 0, 0), m(0, 1, 0, 1, 0), m(0, 3, 0, 0, 1), m(0, 2, 1, 0, 0), m(0, 3, 0, 1, 0),
        m(2, 2, 3, 0, 0), m(2, 2, 0, 3, 0)}},
      {-1,
       {m(0, 4, 0, 3, 0), m(1, 2, 0, 3, 0)},
       {m(0, 0, 1, 0, 0), m(0, 1, 0, 1, 0), m(0, 3, 0, 0, 1), m(0, 2, 1, 0, 0), m(0, 3, 0, 1, 0),
        m(2, 2, 0, 3, 0), m(0, 2, 0, 1, 0)}},
      {-1,
       p9_times_u2t,
       {m(0, 0, 1, 0, 0), m(0, 1, 0, 1, 0), m(0, 3, 0, 0, 1), m(0, 3, 0, 1, 0), m(2, 2, 3, 0, 0),
        m(2, 2, 0, 3, 0), m(1, 1, 0, 1, 0)}},
      {-1,
       {m(1, 3, 4, 0, 0), m(0, 3, 3, 0, 0)},
       {m(2, 2, 3, 0, 0), m(0, 2, 1, 0, 0), m(0, 3, 0, 0, 1), m(0, 1, 0, 1, 0), m(1, 1, 0, 1, 0),
        m(0, 0, 1, 0, 0), m(0, 1, 1, 0, 0)}},
      {-1,
       {m(0, 2, 1, 1, 0)},
       {m(0, 2, 1, 0, 0), m(0, 3, 0, 0, 1), m(0, 1, 0, 1, 0), m(1, 1, 0, 1, 0), m(0, 0, 1, 0, 0),
        m(0, 1, 1, 0, 0), m(0, 3, 0, 1, 0)}},
      {-1,
       {m(1, 4, 3, 0, 1), m(0, 4, 2, 0, 1), m(0, 2, 1, 0, 1)},
       {m(0, 0, 1, 0, 0), m(1, 1, 0, 1, 0), m(0, 1, 0, 1, 0), m(0, 3, 0, 0, 1), m(2, 2, 3, 0, 0),
        m(1, 1, 0, 0, 1), m(0, 1, 1, 0, 0)}},
      {-1,
       p9_times_tu3,
       {m(0, 0, 1, 0, 0), m(1, 1, 0, 1, 0), m(0, 1, 0, 1, 0), m(0, 3, 0, 0, 1), m(2, 2, 3, 0, 0),
        m(2, 2, 0, 3, 0), m(1, 1, 0, 0, 1)}},
  };
  // clang-format on
  return terms;
}

USeries expand_term(const RationalTerm &term, int bound) {
  USeries out(bound);
  for (const auto &n : term.numerator)
    out.add_term(n.u, QtPoly::monomial(n.q, n.t, term.sign * n.coeff));
  // 1 / (m - 1) = -sum m^k
  for (const auto &f : term.denominator_factors)
    out = out * -geom_expand(f, bound);
  return out;
}

namespace {

mpq_class pow_q(const mpq_class &x, int e) {
  mpq_class out = 1;
  for (int i = 0; i < e; ++i)
    out *= x;
  return out;
}

mpq_class eval_uterm(const UTerm &m, const mpq_class &u1, const mpq_class &u2,
                     const mpq_class &u3, const mpq_class &q0, const mpq_class &t0) {
  return mpq_class(m.coeff) * pow_q(q0, m.q) * pow_q(t0, m.t) * pow_q(u1, m.u[0]) *
         pow_q(u2, m.u[1]) * pow_q(u3, m.u[2]);
}

} // namespace

mpq_class eval_term(const RationalTerm &term, const mpq_class &u1, const mpq_class &u2,
                    const mpq_class &u3, const mpq_class &q0, const mpq_class &t0) {
  mpq_class num = 0;
  for (const auto &n : term.numerator)
    num += eval_uterm(n, u1, u2, u3, q0, t0);
  mpq_class den = 1;
  for (const auto &f : term.denominator_factors)
    den *= eval_uterm(f, u1, u2, u3, q0, t0) - 1;
  if (den == 0)
    throw std::domain_error("eval_term: point is a pole");
  return term.sign * num / den;
}

USeries build_F(int bound, const std::vector<int> &order) {
  const auto &terms = f_terms();
  std::vector<int> idx = order;
  if (idx.empty()) {
    idx.resize(terms.size());
    std::iota(idx.begin(), idx.end(), 0);
  }
  USeries out(bound);
  for (int k : idx)
    out += expand_term(terms.at(static_cast<std::size_t>(k)), bound);
  return out;
}

QtPoly g_via_genfun(const USeries &F, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c > F.degree_bound())
    throw OutOfBound("g_via_genfun: (a,b,c) outside the truncation");
  const QtPoly f = F.coeff(a, b, c);
  return exact_div(f - tau_swap(f), Divisor::Kind::TMinusQ);
}

QtPoly g_via_genfun(int a, int b, int c, int bound) {
  if (a < 0 || b < 0 || c < 0 || a + b + c > bound)
    throw OutOfBound("g_via_genfun: (a,b,c) outside the truncation");
  return g_via_genfun(build_F(bound), a, b, c);
}

FPropertyReport check_F_properties(const USeries &F) {
  FPropertyReport r;
  for (const auto &[k, p] : F.coeffs()) {
    ++r.coefficients_checked;
    for (const auto &[mono, c] : p.terms()) {
      if (c < 0)
        r.nonnegative = false;
      if (mono.t <= mono.q)
        r.t_heavy = false;
    }
  }
  return r;
}

FPropertyReport check_F_properties(int bound) { return check_F_properties(build_F(bound)); }

} // namespace qtpos
