#include <doctest.h>

#include "helpers.hpp"
#include "qtpos/qt_poly.hpp"

using namespace qtpos;
using qtpos::testing::poly;

TEST_CASE("arithmetic strips zeros") {
  const QtPoly q = QtPoly::q(), t = QtPoly::t();
  CHECK((q - q).is_zero());
  CHECK((q + t) * (q - t) == poly({{2, 0, 1}, {0, 2, -1}}));
  CHECK((q + t).size() == 2);
  CHECK(QtPoly(0).is_zero());
  QtPoly p = q;
  p.add_term(1, 0, -1);
  CHECK(p.terms().empty());
}

TEST_CASE("degrees and coefficients") {
  const QtPoly p = poly({{3, 1, 2}, {0, 4, -1}});
  CHECK(p.degree_q() == 3);
  CHECK(p.degree_t() == 4);
  CHECK(p.coeff(3, 1) == 2);
  CHECK(p.coeff(1, 1) == 0);
  CHECK_FALSE(p.is_nonnegative());
}

TEST_CASE("tau swaps q and t") {
  CHECK(tau_swap(poly({{2, 1, 3}})) == poly({{1, 2, 3}}));
  CHECK(tau_swap(qt_analog(4)) == qt_analog(4));
}

TEST_CASE("tau is an involution on random polynomials") {
  std::mt19937 rng(17);
  for (int k = 0; k < 200; ++k) {
    const QtPoly p = qtpos::testing::random_poly(rng, 6, 8);
    CHECK(tau_swap(tau_swap(p)) == p);
  }
}

TEST_CASE("exact division round trip on random polynomials") {
  using K = Divisor::Kind;
  std::mt19937 rng(4242);
  for (K k : {K::TMinusQ, K::QMinusT, K::T2MinusQ, K::QMinusT2, K::Q2MinusT, K::TMinusQ2,
              K::Q3MinusT, K::QMinusT3, K::QPlusT}) {
    const Divisor d(k);
    for (int trial = 0; trial < 50; ++trial) {
      const QtPoly u = qtpos::testing::random_poly(rng, 5, 7);
      CHECK(exact_div(u * d.as_poly(), d) == u);
    }
  }
  const Divisor three = Divisor::constant(3);
  CHECK(exact_div(poly({{1, 1, 6}, {0, 0, -3}}), three) == poly({{1, 1, 2}, {0, 0, -1}}));
}

TEST_CASE("exact division reports remainders") {
  CHECK_THROWS_AS(exact_div(QtPoly(1), Divisor::Kind::TMinusQ), NonDivisible);
  CHECK_THROWS_AS(exact_div(QtPoly::q(), Divisor::Kind::T2MinusQ), NonDivisible);
  CHECK_THROWS_AS(exact_div(poly({{0, 0, 5}}), Divisor::constant(2)), NonDivisible);
  CHECK(exact_div(poly({{0, 2, 1}, {1, 0, -1}}), Divisor::Kind::T2MinusQ) == QtPoly(1));
}

TEST_CASE("analogs") {
  CHECK(qt_analog(0).is_zero());
  CHECK(qt_analog(1) == QtPoly(1));
  CHECK(qt_analog(3) == poly({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));
  CHECK(qt_analog_base(2, AnalogBase::T2Q) == poly({{0, 2, 1}, {1, 0, 1}}));
  CHECK(qt_analog_base(3, AnalogBase::Q2T) == poly({{4, 0, 1}, {2, 1, 1}, {0, 2, 1}}));
  CHECK(qt_range(2, 3) == qt_analog(2) + qt_analog(3));
  CHECK(qt_range(4, 3).is_zero());
}

TEST_CASE("analog identity (q - t)[n] = q^n - t^n") {
  for (int n = 0; n < 12; ++n)
    CHECK((QtPoly::q() - QtPoly::t()) * qt_analog(n) ==
          QtPoly::monomial(n, 0) - QtPoly::monomial(0, n));
}

TEST_CASE("rational evaluation") {
  const QtPoly p = poly({{1, 0, 1}, {0, 2, 1}});
  CHECK(eval_rational(p, mpq_class(1, 2), 3) == mpq_class(19, 2));
  CHECK(eval_rational(QtPoly{}, 5, 7) == 0);
}

TEST_CASE("json round trip and format") {
  const QtPoly p = poly({{0, 1, 1}, {2, 0, -4}});
  const auto j = to_json(p);
  CHECK(j.dump() == R"({"terms":[{"c":"1","q":0,"t":1},{"c":"-4","q":2,"t":0}]})");
  CHECK(qt_poly_from_json(j) == p);

  mpz_class big("123456789012345678901234567890");
  const QtPoly b = QtPoly::monomial(1, 1, big);
  CHECK(qt_poly_from_json(to_json(b)) == b);
}

TEST_CASE("string form") {
  CHECK(to_string(QtPoly{}) == "0");
  CHECK(to_string(poly({{0, 0, 1}, {1, 1, 2}, {0, 3, -1}})) == "1 - t^3 + 2*q*t");
}
