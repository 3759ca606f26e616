#include <doctest.h>

#include "helpers.hpp"
#include "qtpos/delta_core.hpp"
#include "qtpos/recursion.hpp"

using namespace qtpos;
using qtpos::testing::poly;

TEST_CASE("w weight") {
  CHECK(w_weight(3, 0).is_zero());
  CHECK(w_weight(1, 1) == QtPoly(1));
  CHECK(w_weight(0, 2) == poly({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}));
}

TEST_CASE("brute-force blocks") {
  CHECK(g_block_bruteforce({0, 0, 2}) == QtPoly::q() + QtPoly::t());
  CHECK(g_block_bruteforce({1, 0, 1}) == qt_analog(2) + qt_analog(3));
  CHECK(g_block_bruteforce({0, 0, 1}).is_zero());
}

TEST_CASE("g[0,0,k] printed expansions") {
  const auto qt = [](int k) { return QtPoly::qt_power(k); };
  CHECK(g_00k_closed(5) == qt_range(5, 8) + qt(1) * qt_range(3, 5) + qt(2) * qt_analog(2));
  CHECK(g_00k_closed(12) == qt_range(12, 22) + qt(1) * qt_range(10, 19) + qt(2) * qt_range(9, 16) +
                                qt(3) * qt_range(7, 13) + qt(4) * qt_range(6, 10) +
                                qt(5) * qt_range(4, 7) + qt(6) * qt_range(3, 4) + qt(7));
  CHECK(g_00k_closed(1).is_zero());
  CHECK(g_00k_closed(0).is_zero());
}

TEST_CASE("g[0,0,k] ranges start at 1 or above") {
  for (int k = 0; k <= 20; ++k) {
    for (const auto &r : g_00k_ranges(k))
      if (r.hi >= r.lo)
        CHECK(r.lo >= 1);
    CHECK(g_00k_closed(k) == g_block_bruteforce({0, 0, k}));
  }
}

TEST_CASE("g[a,0,k] worked values") {
  CHECK(g_a0k_closed(1, 0) == QtPoly(1));
  CHECK(g_a0k_closed(1, 1) == qt_analog(2) + qt_analog(3));
  CHECK(g_a0k_closed(1, 2) == QtPoly::qt_power(1) * qt_analog(2) + qt_range(3, 5));
  for (int a = 0; a <= 6; ++a)
    for (int k = 0; k <= 12; ++k)
      CHECK(g_a0k_closed(a, k) == g_block_bruteforce({a, 0, k}));
}

TEST_CASE("g[a,k1,k2] reduction") {
  CHECK(g_block({0, 1, 1}) == qt_analog(2) + qt_analog(1));
  CHECK(g_block({0, 1, 2}) ==
        qt_analog(3) + qt_analog(4) + QtPoly::qt_power(1) + qt_analog(2) + qt_analog(3));
  CHECK(g_block({0, 2, 1}) == g_block({0, 1, 2}));
  for (int a = 0; a <= 12; ++a)
    for (int k1 = 0; a + k1 <= 12; ++k1)
      for (int k2 = 0; a + k1 + k2 <= 12; ++k2)
        CHECK(g_block({a, k1, k2}) == g_block_bruteforce({a, k1, k2}));
}

TEST_CASE("recursion agrees with the algebraic route") {
  for (int a = 0; 3 * a <= 12; ++a)
    for (int b = 0; 3 * a + 2 * b <= 12; ++b)
      for (int c = 0; 3 * a + 2 * b + c <= 12; ++c)
        CHECK(g_via_recursion({a, b, c}) == g_coefficient(three_part_shape(a, b, c)));
  CHECK(g_via_recursion({1, 0, 0}) == g_coefficient({3}));
}

TEST_CASE("specializations") {
  for (int n = 2; n <= 10; ++n)
    CHECK(check_qt1(n));
  CHECK(eval_rational(g_coefficient({1, 1, 1, 1}), 1, 1) == 30);

  // LHS values from the independent oracle
  CHECK(eval_rational(g_coefficient({1, 1}), 2, mpq_class(1, 2)) == mpq_class(5, 2));
  CHECK(rank_rhs(2, 2) == mpq_class(5, 2));
  CHECK(rank_rhs(2, 3) == mpq_class(10, 3));
  CHECK(rank_rhs(2, mpq_class(5, 2)) == mpq_class(29, 10));
  CHECK(rank_rhs(3, 2) == mpq_class(155, 8));
  CHECK(rank_rhs(3, 3) == mpq_class(1210, 27));
  CHECK(rank_rhs(3, mpq_class(5, 2)) == mpq_class(29899, 1000));
  CHECK(check_rank(3, {2}));
  CHECK(check_rank(8, {2, 3, mpq_class(5, 2), mpq_class(-7, 3)}));
  CHECK_THROWS_AS(check_rank(3, {1}), InvalidSample);
  CHECK_THROWS_AS(check_rank(3, {0}), InvalidSample);
  CHECK_THROWS_AS(check_rank(3, {-1}), InvalidSample);

  for (int n = 2; n <= 15; ++n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + 1), 3);
    CHECK(eval_rational(g_00k_closed(n), 1, 1) == mpq_class(2 * c));
  }
}
