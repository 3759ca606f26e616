#include "qtpos/delta_e3.hpp"

#include "qtpos/recursion.hpp"

namespace qtpos {

BAlphabet b_alphabet(const Partition &mu) {
  if (mu.size() != 4)
    throw WrongSize("b_alphabet: partition must have size 4");
  BAlphabet b{mu, {}};
  for (int row = 0; row < mu.length(); ++row)
    for (int col = 0; col < mu[row]; ++col)
      b.letters.push_back({col, row});
  return b;
}

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

QtPoly lin(int q_exp, int t_exp, int sign) {
  // q^q_exp + sign * t^t_exp
  return QtPoly::monomial(q_exp, 0) + QtPoly::monomial(0, t_exp, sign);
}

} // namespace

QtPoly delta3_coefficient(const Partition &lambda) {
  if (lambda.size() == 0 || lambda.first() > 4)
    return {};
  const Partition nu = conjugate(lambda);
  auto s = [&](std::vector<int> mu) { return schur_eval(nu, b_alphabet(P(std::move(mu))).alphabet()); };

  const QtPoly q_t = lin(1, 1, -1);   // q - t
  const QtPoly qpt = lin(1, 1, 1);    // q + t
  const QtPoly q2_t = lin(2, 1, -1);  // q^2 - t
  const QtPoly q3_t = lin(3, 1, -1);  // q^3 - t
  const QtPoly q_t2 = lin(1, 2, -1);  // q - t^2
  const QtPoly q_t3 = lin(1, 3, -1);  // q - t^3
  const QtPoly one(1);
  const QtPoly q = QtPoly::q();
  const QtPoly t = QtPoly::t();

  QtPoly num = q_t * qpt * q_t2 * q_t3 * s({4});
  num -= (q * q + q + t + one) * q2_t * q_t2 * q_t3 * s({3, 1});
  num -= (q * t - one) * qpt * q3_t * q_t3 * s({2, 2});
  num += (t * t + q + t + one) * q2_t * q3_t * q_t2 * s({2, 1, 1});
  num -= q_t * qpt * q2_t * q3_t * s({1, 1, 1, 1});

  using K = Divisor::Kind;
  try {
    for (K k : {K::QMinusT, K::QMinusT, K::QPlusT, K::Q2MinusT, K::Q3MinusT, K::QMinusT2,
                K::QMinusT3})
      num = exact_div(num, k);
  } catch (const NonDivisible &e) {
    throw NonPolynomial("delta3_coefficient(" + to_string(lambda) + "): " + e.what());
  }
  return num;
}

namespace {

mpq_class schur_at(const Partition &nu, std::vector<Monomial> letters, const mpq_class &q0,
                   const mpq_class &t0) {
  return eval_rational(schur_eval(nu, Alphabet(std::move(letters))), q0, t0);
}

// F_nu(q0, t0)
mpq_class f_value(const Partition &nu, const mpq_class &q0, const mpq_class &t0) {
  const mpq_class b4 = schur_at(nu, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, q0, t0);     // 1+q+q^2+q^3
  const mpq_class b22 = schur_at(nu, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, q0, t0);    // 1+q+t+qt
  const mpq_class b31 = schur_at(nu, {{0, 0}, {1, 0}, {0, 1}, {2, 0}}, q0, t0);    // 1+q+t+q^2
  const mpq_class q2 = q0 * q0;
  mpq_class out = (b4 - b22) / ((q0 - 1) * q2 * (q2 - t0));
  out -= (b4 - b31) / (q2 * (q0 - 1) * (q2 * q0 - t0));
  out -= (q0 + 1) * (b31 - b22) / (2 * (q0 - t0) * q2 * (q0 - 1));
  out += b22 / (2 * q2 * t0);
  return out;
}

void require_generic(const mpq_class &q0, const mpq_class &t0) {
  const bool pole = q0 == 0 || t0 == 0 || q0 == 1 || t0 == 1 || q0 == t0 || q0 == -t0 ||
                    q0 * q0 == t0 || q0 * q0 * q0 == t0 || q0 == t0 * t0 || q0 == t0 * t0 * t0;
  if (pole)
    throw InvalidSample("delta3 sample point is a pole");
}

} // namespace

mpq_class delta3_via_F_value(const Partition &lambda, const mpq_class &q0, const mpq_class &t0) {
  require_generic(q0, t0);
  if (lambda.size() == 0 || lambda.first() > 4)
    return 0;
  const Partition nu = conjugate(lambda);
  const mpq_class s1 = schur_at(nu, {{0, 0}, {1, 0}, {0, 1}, {2, 0}}, q0, t0); // 1+q+t+q^2
  const mpq_class s2 = schur_at(nu, {{0, 0}, {1, 0}, {0, 1}, {0, 2}}, q0, t0); // 1+q+t+t^2
  mpq_class out = (f_value(nu, q0, t0) - f_value(nu, t0, q0)) / (q0 - t0);
  out -= (s1 / (q0 * q0) - s2 / (t0 * t0)) / (2 * (q0 * q0 - t0 * t0));
  return out;
}

bool delta3_via_F_samplecheck(const Partition &lambda, const std::vector<RationalPoint> &samples) {
  for (const auto &[q0, t0] : samples)
    require_generic(q0, t0);
  const QtPoly d = delta3_coefficient(lambda);
  for (const auto &[q0, t0] : samples)
    if (delta3_via_F_value(lambda, q0, t0) != eval_rational(d, q0, t0))
      return false;
  return true;
}

PositivityReport positivity_report(const Partition &lambda) {
  PositivityReport r;
  r.value = delta3_coefficient(lambda);
  r.nonnegative = r.value.is_nonnegative();
  r.tau_symmetric = tau_swap(r.value) == r.value;
  r.at_one = eval_rational(r.value, 1, 1);
  return r;
}

} // namespace qtpos
