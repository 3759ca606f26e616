#include "qtpos/recursion.hpp"

#include <algorithm>

#include "qtpos/delta_core.hpp"

namespace qtpos {

QtPoly w_weight(int omega1, int omega2) {
  const QtPoly numerator =
      QtPoly::monomial(0, omega1) * qt_analog_base(omega2, AnalogBase::T2Q) -
      QtPoly::monomial(omega1, 0) * qt_analog_base(omega2, AnalogBase::Q2T);
  return exact_div(numerator, Divisor::Kind::TMinusQ);
}

QtPoly g_block_bruteforce(const BlockArgs &args) {
  QtPoly out;
  for (int j = 0; j <= args.k1; ++j)
    for (int i = 0; i <= args.k2; ++i)
      out += w_weight(args.a + i + j, args.a + args.k1 + args.k2 - i - j);
  return out;
}

std::vector<ShiftedRange> g_00k_ranges(int k) {
  std::vector<ShiftedRange> out;
  if (k < 2)
    return out;
  const int top = (2 * k - 2) / 3 - (k % 3 == 1 ? 1 : 0);
  for (int i = 0; i <= top; ++i)
    out.push_back({i, k - i - (i + 1) / 2, 2 * k - 2 - 3 * i});
  return out;
}

QtPoly g_00k_closed(int k) {
  QtPoly out;
  for (const auto &r : g_00k_ranges(k))
    out += QtPoly::qt_power(r.shift) * qt_range(r.lo, r.hi);
  return out;
}

QtPoly g_a0k_closed(int a, int k) {
  QtPoly out = QtPoly::qt_power(a) * g_00k_closed(k);
  for (int i = 1; i <= a; ++i)
    out += QtPoly::qt_power(a - i) * qt_range(k + 3 * i - 2, 2 * k + 3 * i - 2);
  return out;
}

QtPoly g_block(const BlockArgs &args) {
  const int lo = std::min(args.k1, args.k2);
  const int hi = std::max(args.k1, args.k2);
  QtPoly out;
  for (int i = 0; i <= lo; ++i)
    out += g_a0k_closed(args.a + i, lo + hi - 2 * i);
  return out;
}

std::vector<BlockArgs> recursion_terms(const ThreePartShape &shape) {
  std::vector<BlockArgs> out;
  for (int i = 0; i <= shape.b; ++i)
    out.push_back({shape.a + i, shape.b - i, shape.c});
  for (int i = 1; i <= shape.c; ++i)
    out.push_back({shape.a, shape.b, shape.c - i});
  return out;
}

QtPoly g_via_recursion(const ThreePartShape &shape) {
  QtPoly out;
  for (const auto &args : recursion_terms(shape))
    out += g_block(args);
  return out;
}

namespace {

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

mpq_class q_integer(int m, const mpq_class &q0) {
  mpq_class sum = 0;
  mpq_class power = 1;
  for (int i = 0; i < m; ++i) {
    sum += power;
    power *= q0;
  }
  return sum;
}

mpq_class q_binomial(int n, int k, const mpq_class &q0) {
  mpq_class out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= q_integer(n - k + i, q0);
    out /= q_integer(i, q0);
  }
  return out;
}

mpq_class power(const mpq_class &base, int exp) {
  mpq_class out = 1;
  const mpq_class factor = exp >= 0 ? base : mpq_class(1) / base;
  for (int i = 0; i < std::abs(exp); ++i)
    out *= factor;
  return out;
}

} // namespace

bool check_qt1(int n) {
  if (n < 2)
    throw std::invalid_argument("check_qt1: n must be at least 2");
  return eval_rational(g_coefficient(column(n)), 1, 1) == mpq_class(2 * binomial(n + 2, 4));
}

mpq_class rank_rhs(int n, const mpq_class &q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw InvalidSample("check_rank: sample must avoid 0 and +-1");
  const int k = 2;
  const int exponent = 1 - k * (n - 1); // C(2,2) - k(n-1)
  mpq_class out = power(q0, exponent) / q_integer(k + 1, q0);
  out *= q_binomial(n, k, q0);
  out *= q_binomial(n + k, k, q0);
  return out;
}

bool check_rank(int n, const std::vector<mpq_class> &samples) {
  if (n < 2)
    throw std::invalid_argument("check_rank: n must be at least 2");
  for (const auto &q0 : samples)
    if (q0 == 0 || q0 == 1 || q0 == -1)
      throw InvalidSample("check_rank: sample must avoid 0 and +-1");
  const QtPoly g = g_coefficient(column(n));
  for (const auto &q0 : samples)
    if (eval_rational(g, q0, mpq_class(1) / q0) != rank_rhs(n, q0))
      return false;
  return true;
}

} // namespace qtpos
