#include <doctest.h>

#include "helpers.hpp"
#include "qtpos/delta_core.hpp"
#include "qtpos/enriched.hpp"
#include "qtpos/recursion.hpp"

using namespace qtpos;

namespace {

// Shape (5) filled with the given number of 0's, 1's and 2's.
EnrichedTableau row5(int zeros, int ones, int undecorated, int barred) {
  const int twos = undecorated + barred + 1;
  std::vector<int> row;
  row.insert(row.end(), zeros, 0);
  row.insert(row.end(), ones, 1);
  row.insert(row.end(), twos, 2);
  EnrichedTableau e{Ssyt{Partition({5}), {row}}, undecorated, barred};
  REQUIRE(e.is_valid());
  return e;
}

} // namespace

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_enriched(Partition({1})).size() == 3);
  CHECK(enumerate_enriched(Partition({2})).size() == 7);
  CHECK(enumerate_enriched(Partition{}).size() == 1);
  int five_twos = 0;
  for (const auto &e : enumerate_enriched(Partition({5})))
    five_twos += e.base.count(2) == 5;
  CHECK(five_twos == 5);
}

TEST_CASE("decorations follow the reading order") {
  const auto e = row5(0, 0, 2, 2);
  const auto twos = e.twos();
  REQUIRE(twos.size() == 5);
  CHECK(twos[0].decoration == EnrichedTableau::Decoration::Plain);
  CHECK(twos[1].decoration == EnrichedTableau::Decoration::Plain);
  CHECK(twos[2].decoration == EnrichedTableau::Decoration::Barred);
  CHECK(twos[3].decoration == EnrichedTableau::Decoration::Barred);
  CHECK(twos[4].decoration == EnrichedTableau::Decoration::Hat);
  CHECK_FALSE(EnrichedTableau{e.base, 1, 1}.is_valid());
}

TEST_CASE("weight classes") {
  CHECK(weight_class(row5(0, 1, 2, 1)) == WeightClass{3, 2});
  CHECK(weight_class(row5(0, 0, 0, 4)) == WeightClass{8, 0});
  const EnrichedTableau zeros{Ssyt{Partition({5}), {{0, 0, 0, 0, 0}}}, 0, 0};
  CHECK(weight_class(zeros) == WeightClass{0, 0});
}

TEST_CASE("weight counts") {
  const auto one = weight_counts(Partition({1}));
  CHECK(one.at({0, 0}) == 2);
  CHECK(one.at({1, 0}) == 1);
  CHECK(weight_counts(Partition({4})).at({0, 3}) == 1);
  CHECK(weight_counts(Partition{}).at({0, 0}) == 1);
  CHECK(weighted_counts(Partition({1})).at({0, 0}) == 1);
  CHECK_FALSE(weighted_counts(Partition({1})).contains({1, 0}));
}

TEST_CASE("leftover examples on a single row") {
  CHECK(is_leftover(row5(0, 0, 2, 2)));
  CHECK_FALSE(is_leftover(row5(0, 3, 1, 0)));
  CHECK_FALSE(is_leftover(row5(0, 4, 0, 0)));
  CHECK_FALSE(is_leftover(row5(0, 0, 4, 0)));
}

TEST_CASE("both enriched routes give g") {
  for (int n = 1; n <= 9; ++n)
    for (const auto &lambda : partitions_of(n)) {
      if (lambda.first() > 3)
        continue;
      const QtPoly g = g_coefficient(lambda);
      CHECK(g_via_all_enriched(lambda) == g);
      CHECK(g_via_leftovers(lambda) == g);
    }
  CHECK(g_via_all_enriched({4}).is_zero());
  CHECK(g_via_leftovers({1, 1}) == QtPoly::q() + QtPoly::t());
}

TEST_CASE("zero-free leftovers of (1^5) give the printed g[0,0,5]") {
  QtPoly sum;
  for_each_enriched(Partition({5}), [&](const EnrichedTableau &e) {
    if (e.base.count(0) == 0 && is_leftover(e)) {
      const auto w = weight_class(e);
      sum += QtPoly::qt_power(w.q_exp) * qt_analog(w.t_exp - w.q_exp);
    }
  });
  CHECK(sum == qt_range(5, 8) + QtPoly::qt_power(1) * qt_range(3, 5) +
                   QtPoly::qt_power(2) * qt_analog(2));
}

TEST_CASE("leftovers are t-heavy") {
  for (int n = 1; n <= 8; ++n)
    for (const auto &lambda : partitions_of(n))
      if (lambda.first() <= 3)
        for_each_enriched(conjugate(lambda), [&](const EnrichedTableau &e) {
          if (is_leftover(e)) {
            const auto w = weight_class(e);
            CHECK(w.t_exp > w.q_exp);
          }
        });
}

TEST_CASE("injection case examples") {
  const auto img = injection_case_maps(row5(0, 0, 4, 0), 4, 0);
  CHECK(img.which == InjectionCase::BottomRowSwap);
  CHECK(weight_class(img.image) == WeightClass{4, 0});

  // a 2 over a 0 becomes a 1 over a 0
  const EnrichedTableau col{Ssyt{Partition({1, 1}), {{0}, {2}}}, 0, 0};
  CHECK_THROWS_AS(injection_case_maps(col, 0, 0), std::invalid_argument);
  const EnrichedTableau two{Ssyt{Partition({2, 2}), {{0, 0}, {2, 2}}}, 1, 0};
  REQUIRE(weight_class(two) == WeightClass{0, 1});
  const auto raised = injection_case_maps(two, 1, 0);
  CHECK(raised.which == InjectionCase::RaiseToOnes);
  CHECK(raised.image.base.rows[1][0] == 1);
  CHECK(weight_class(raised.image) == WeightClass{1, 0});
}

TEST_CASE("injection accounting and maps for small shapes") {
  for (int n = 1; n <= 8; ++n)
    for (const auto &lambda : partitions_of(n))
      if (lambda.first() <= 3) {
        const auto report = injection_report(conjugate(lambda));
        CHECK(report.accounting_holds());
        CHECK(report.maps_are_injective());
      }
}
