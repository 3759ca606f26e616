#include "qtpos/verify.hpp"

#include "qtpos/delta_core.hpp"
#include "qtpos/enriched.hpp"
#include "qtpos/genfun.hpp"
#include "qtpos/recursion.hpp"

namespace qtpos {

const char *status_name(Status s) {
  switch (s) {
  case Status::Pass:
    return "PASS";
  case Status::Fail:
    return "FAIL";
  case Status::Warn:
    return "WARN";
  }
  return "?";
}

void RunReport::append(std::vector<CheckResult> rs) {
  for (auto &r : rs)
    results.push_back(std::move(r));
}

bool RunReport::failed() const {
  for (const auto &r : results)
    if (r.status == Status::Fail)
      return true;
  return false;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto &r : results)
    rs.push_back({{"name", r.name}, {"status", status_name(r.status)}, {"payload", r.payload}});
  return {{"command", command}, {"inputs", inputs}, {"results", rs}, {"ok", !failed()}};
}

std::vector<Partition> three_column_partitions(int n) {
  std::vector<Partition> out;
  for (auto &p : partitions_of(n))
    if (p.first() <= 3)
      out.push_back(p);
  return out;
}

CheckResult check(std::string name, bool ok, nlohmann::json payload) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(payload)};
}

namespace {

std::string label(const Partition &p) { return to_string(p); }

} // namespace

std::vector<CheckResult> injection_checks(const Partition &lambda) {
  const Partition shape = conjugate(lambda);
  const auto report = injection_report(shape);

  nlohmann::json classes = nlohmann::json::array();
  long long failures = 0, collisions = 0, on_leftovers = 0;
  for (const auto &row : report.rows) {
    classes.push_back({{"t", row.heavy.t_exp},
                       {"q", row.heavy.q_exp},
                       {"count", std::to_string(row.heavy_count)},
                       {"reverse_count", std::to_string(row.light_count)},
                       {"leftover", std::to_string(row.leftover_count)}});
    failures += row.map_failures;
    collisions += row.image_collisions;
    on_leftovers += row.images_on_leftovers;
  }

  bool leftovers_heavy = true;
  for_each_enriched(shape, [&](const EnrichedTableau &e) {
    const auto w = weight_class(e);
    if (is_leftover(e) && w.t_exp <= w.q_exp)
      leftovers_heavy = false;
  });

  std::vector<CheckResult> out;
  out.push_back(check("injection accounting " + label(lambda), report.accounting_holds(),
                      {{"classes", classes}}));
  out.push_back(check("leftovers are t-heavy " + label(lambda), leftovers_heavy));
  CheckResult maps{"injection maps " + label(lambda),
                   report.maps_are_injective() ? Status::Pass : Status::Warn,
                   {{"map_failures", std::to_string(failures)},
                    {"image_collisions", std::to_string(collisions)},
                    {"images_on_leftovers", std::to_string(on_leftovers)}}};
  out.push_back(std::move(maps));
  return out;
}

std::vector<CheckResult> injection_suite(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_n; ++n)
    for (const auto &lambda : three_column_partitions(n))
      for (auto &r : injection_checks(lambda))
        out.push_back(std::move(r));
  return out;
}

std::vector<CheckResult> agreement_suite(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto &lambda : three_column_partitions(n)) {
      const QtPoly g = g_coefficient(lambda);
      int c = 0, b = 0, a = 0;
      for (int part : lambda.parts())
        (part == 3 ? a : part == 2 ? b : c)++;
      const bool raw = g_raw_quotient(lambda) == g;
      const bool rec = g_via_recursion({a, b, c}) == g;
      const bool all = g_via_all_enriched(lambda) == g;
      const bool left = g_via_leftovers(lambda) == g;
      out.push_back(check("g agreement " + label(lambda), raw && rec && all && left,
                          {{"raw_quotient", raw},
                           {"recursion", rec},
                           {"all_enriched", all},
                           {"leftovers", left},
                           {"g", to_json(g)}}));
    }
  return out;
}

std::vector<CheckResult> positivity_suite(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto &lambda : partitions_of(n)) {
      const Certificate cert = extract_certificate(f_poly(lambda));
      const bool rebuilt = reconstruct(cert) == g_coefficient(lambda);
      out.push_back(check("certificate " + label(lambda), cert.is_positive() && rebuilt,
                          {{"certificate", to_json(cert)}, {"reconstructs", rebuilt}}));
    }
  return out;
}

std::vector<CheckResult> closed_form_suite(int max_a, int max_k) {
  std::vector<CheckResult> out;
  bool a0k = true;
  nlohmann::json bad = nlohmann::json::array();
  for (int a = 0; a <= max_a; ++a)
    for (int k = 0; k <= max_k; ++k)
      if (g_a0k_closed(a, k) != g_block_bruteforce({a, 0, k})) {
        a0k = false;
        bad.push_back({{"a", a}, {"k", k}});
      }
  out.push_back(check("g[a,0,k] closed form", a0k, {{"mismatches", bad}}));

  bool blocks = true;
  for (int a = 0; a <= 3; ++a)
    for (int k1 = 0; k1 <= 4; ++k1)
      for (int k2 = 0; k2 <= 6; ++k2)
        blocks = blocks && g_block({a, k1, k2}) == g_block_bruteforce({a, k1, k2});
  out.push_back(check("g[a,k1,k2] closed form", blocks));

  const bool printed = g_a0k_closed(1, 0) == qt_analog(1) &&
                       g_a0k_closed(1, 1) == qt_analog(2) + qt_analog(3) &&
                       g_a0k_closed(1, 2) == QtPoly::qt_power(1) * qt_analog(2) + qt_range(3, 5);
  out.push_back(check("g[1,0,k] worked values", printed));
  return out;
}

std::vector<CheckResult> recursion_suite(int max_n) {
  std::vector<CheckResult> out = agreement_suite(max_n);
  for (auto &r : closed_form_suite(6, 12))
    out.push_back(std::move(r));
  return out;
}

std::vector<CheckResult> series_suite(int degree) {
  const USeries F = build_F(degree);
  std::vector<CheckResult> out;
  const auto props = check_F_properties(F);
  out.push_back(check("F nonnegative", props.nonnegative,
                      {{"coefficients", std::to_string(props.coefficients_checked)}}));
  out.push_back(check("F t-heavy", props.t_heavy));
  for (int s = 0; s <= degree; ++s)
    for (int a = s; a >= 0; --a)
      for (int b = s - a; b >= 0; --b) {
        const int c = s - a - b;
        const Partition lambda = three_part_shape(c, b, a);
        const bool ok = g_via_genfun(F, a, b, c) == g_coefficient(lambda);
        out.push_back(check("series (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ") = g" + label(lambda),
                            ok));
      }
  return out;
}

std::vector<CheckResult> delta1_suite(int max_n) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto &lambda : partitions_of(n))
      out.push_back(check("delta_e1 closed form " + label(lambda),
                          delta_e1_coefficient(lambda) == delta_e1_closed(lambda)));
  return out;
}

std::vector<RationalPoint> default_delta3_samples() {
  return {{mpq_class(2), mpq_class(3)}, {mpq_class(5), mpq_class(2)}, {mpq_class(7, 3), mpq_class(-4, 5)}};
}

std::vector<CheckResult> delta3_suite(int max_n, const std::vector<RationalPoint> &samples) {
  std::vector<CheckResult> out;
  for (const auto &lambda : partitions_of(3)) {
    QtPoly expected = g_coefficient(lambda) - delta_e1_coefficient(lambda);
    if (lambda == Partition({1, 1, 1}))
      expected += QtPoly(1);
    out.push_back(check("delta_e3 n=3 identity " + label(lambda),
                        delta3_coefficient(lambda) == expected));
  }
  for (int n = 1; n <= max_n; ++n)
    for (const auto &lambda : partitions_of(n)) {
      try {
        const auto rep = positivity_report(lambda);
        out.push_back(check("delta_e3 tau-symmetric " + label(lambda), rep.tau_symmetric));
        out.push_back({"delta_e3 nonnegative " + label(lambda),
                       rep.nonnegative ? Status::Pass : Status::Warn,
                       {{"at_one", rep.at_one.get_str()}}});
        out.push_back(check("delta_e3 F-formula samples " + label(lambda),
                            delta3_via_F_samplecheck(lambda, samples)));
      } catch (const NonPolynomial &e) {
        out.push_back(check("delta_e3 polynomial " + label(lambda), false, {{"error", e.what()}}));
      }
    }
  return out;
}

std::vector<CheckResult> specialization_suite(int max_n, const std::vector<mpq_class> &samples) {
  std::vector<CheckResult> out;
  for (int n = 2; n <= max_n; ++n)
    out.push_back(check("g(1^" + std::to_string(n) + ") at q=t=1", check_qt1(n)));
  for (int n = 2; n <= max_n; ++n)
    out.push_back(check("g(1^" + std::to_string(n) + ") at t=1/q", check_rank(n, samples)));
  for (int n = 2; n <= max_n; ++n) {
    mpz_class expected;
    mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(n + 1), 3);
    expected *= 2;
    out.push_back(check("g[0,0," + std::to_string(n) + "] at q=t=1",
                        eval_rational(g_00k_closed(n), 1, 1) == mpq_class(expected)));
  }
  return out;
}

} // namespace qtpos
