// qtpos command-line front end.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qtpos/delta_core.hpp"
#include "qtpos/delta_e3.hpp"
#include "qtpos/enriched.hpp"
#include "qtpos/recursion.hpp"
#include "qtpos/verify.hpp"

using namespace qtpos;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpq_class parse_rational(const std::string &s) {
  mpq_class r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw UsageError("not a rational number: " + s);
  if (r.get_den() == 0)
    throw UsageError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::vector<mpq_class> parse_samples(const std::string &s) {
  std::vector<mpq_class> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_rational(item));
  if (out.empty())
    throw UsageError("empty sample list");
  return out;
}

Partition lambda_arg(const std::string &s) {
  try {
    return parse_partition(s);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

void print_poly(const std::string &label, const QtPoly &p) {
  std::cout << label << ": " << to_string(p) << "\n";
  std::cout << label << " json: " << to_json(p).dump() << "\n";
}

void print_certificate(const Certificate &c) {
  std::cout << "certificate: " << to_json(c).dump() << "\n";
  if (c.is_positive())
    std::cout << "analog form: " << format_analog(c) << "\n";
}

void print_results(const RunReport &r) {
  int pass = 0, fail = 0, warn = 0;
  for (const auto &c : r.results) {
    std::cout << status_name(c.status) << "  " << c.name << "\n";
    (c.status == Status::Pass ? pass : c.status == Status::Fail ? fail : warn)++;
  }
  std::cout << "summary: " << pass << " passed, " << fail << " failed, " << warn << " warnings\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Schur coefficients of Delta_{e2} e_n and friends"};
  app.require_subcommand(1);

  std::string lambda_s, samples_s, json_path;
  int max_n = 8, series_degree = 4, n_arg = 10;

  auto add_json = [&](CLI::App *cmd) { cmd->add_option("--json", json_path, "write a JSON report here"); };

  auto *gcoeff = app.add_subcommand("gcoeff", "g_lambda with its analog certificate");
  gcoeff->add_option("--lambda", lambda_s, "partition, e.g. 2,1,1")->required();
  add_json(gcoeff);

  auto *certify = app.add_subcommand("certify", "positivity certificate of F");
  certify->add_option("--lambda", lambda_s)->required();
  add_json(certify);

  auto *delta1 = app.add_subcommand("delta1", "<Delta_{e1} e_n, s_lambda>");
  delta1->add_option("--lambda", lambda_s)->required();
  add_json(delta1);

  auto *delta3 = app.add_subcommand("delta3", "<Delta_{e3} e_n, s_lambda> and positivity report");
  delta3->add_option("--lambda", lambda_s)->required();
  delta3->add_option("--samples", samples_s, "q0/t0 pairs as q0,t0,q0,t0,...");
  add_json(delta3);

  auto *verify = app.add_subcommand("verify", "cross-method verification suites");
  verify->require_subcommand(1);
  auto *v_inj = verify->add_subcommand("injection", "weight-class accounting");
  v_inj->add_option("--lambda", lambda_s);
  v_inj->add_option("--max-n", max_n);
  add_json(v_inj);
  auto *v_rec = verify->add_subcommand("recursion", "agreement of every route to g");
  v_rec->add_option("--max-n", max_n);
  add_json(v_rec);
  auto *v_ser = verify->add_subcommand("series", "generating function expansion");
  v_ser->add_option("--series-degree,--degree", series_degree);
  add_json(v_ser);
  auto *v_all = verify->add_subcommand("all", "every suite");
  v_all->add_option("--max-n", max_n);
  v_all->add_option("--series-degree,--degree", series_degree);
  add_json(v_all);

  auto *specialize = app.add_subcommand("check-specializations", "q=t=1 and t=1/q checks");
  specialize->add_option("--n", n_arg);
  specialize->add_option("--samples", samples_s, "rationals such as 2,3,5/2");
  add_json(specialize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    if (max_n < 0 || series_degree < 0 || n_arg < 2)
      throw UsageError("numeric arguments out of range");

    if (*gcoeff) {
      const Partition lambda = lambda_arg(lambda_s);
      report.command = "gcoeff";
      report.inputs = {{"lambda", to_string(lambda)}};
      const QtPoly g = g_coefficient(lambda);
      const Certificate c = extract_certificate(f_poly(lambda));
      print_poly("g", g);
      print_certificate(c);
      report.add(check("certificate reconstructs g", reconstruct(c) == g,
                       {{"g", to_json(g)}, {"certificate", to_json(c)}}));
      report.add(check("certificate positive", c.is_positive()));
    } else if (*certify) {
      const Partition lambda = lambda_arg(lambda_s);
      report.command = "certify";
      report.inputs = {{"lambda", to_string(lambda)}};
      const QtPoly f = f_poly(lambda);
      const Certificate c = extract_certificate(f);
      print_poly("F", f);
      print_certificate(c);
      report.add(check("certificate positive", c.is_positive(), {{"certificate", to_json(c)}}));
      report.add(check("certificate reconstructs g", reconstruct(c) == g_coefficient(lambda)));
    } else if (*delta1) {
      const Partition lambda = lambda_arg(lambda_s);
      report.command = "delta1";
      report.inputs = {{"lambda", to_string(lambda)}};
      const QtPoly d = delta_e1_coefficient(lambda);
      print_poly("delta_e1", d);
      report.add(check("closed form", d == delta_e1_closed(lambda), {{"value", to_json(d)}}));
    } else if (*delta3) {
      const Partition lambda = lambda_arg(lambda_s);
      report.command = "delta3";
      report.inputs = {{"lambda", to_string(lambda)}};
      std::vector<RationalPoint> pts = default_delta3_samples();
      if (!samples_s.empty()) {
        const auto flat = parse_samples(samples_s);
        if (flat.size() % 2 != 0)
          throw UsageError("--samples needs an even number of values");
        pts.clear();
        for (std::size_t i = 0; i < flat.size(); i += 2)
          pts.emplace_back(flat[i], flat[i + 1]);
      }
      try {
        const auto rep = positivity_report(lambda);
        print_poly("delta_e3", rep.value);
        std::cout << "nonnegative: " << (rep.nonnegative ? "yes" : "no") << "\n";
        std::cout << "tau-symmetric: " << (rep.tau_symmetric ? "yes" : "no") << "\n";
        std::cout << "value at q=t=1: " << rep.at_one.get_str() << "\n";
        report.add({"nonnegative", rep.nonnegative ? Status::Pass : Status::Warn,
                    {{"value", to_json(rep.value)}, {"at_one", rep.at_one.get_str()}}});
        report.add(check("tau-symmetric", rep.tau_symmetric));
        report.add(check("F-formula samples", delta3_via_F_samplecheck(lambda, pts)));
      } catch (const NonPolynomial &e) {
        std::cout << "non-polynomial: " << e.what() << "\n";
        report.add(check("polynomial", false, {{"error", e.what()}}));
      } catch (const InvalidSample &e) {
        throw UsageError(e.what());
      }
    } else if (*verify) {
      if (*v_inj) {
        report.command = "verify injection";
        if (!lambda_s.empty()) {
          const Partition lambda = lambda_arg(lambda_s);
          report.inputs = {{"lambda", to_string(lambda)}};
          auto rs = injection_checks(lambda);
          std::cout << "classes (t,q): count reverse leftover\n";
          for (const auto &c : rs.front().payload["classes"])
            std::cout << "  (" << c["t"].get<int>() << "," << c["q"].get<int>()
                      << "): " << c["count"].get<std::string>() << " "
                      << c["reverse_count"].get<std::string>() << " "
                      << c["leftover"].get<std::string>() << "\n";
          report.append(std::move(rs));
        } else {
          report.inputs = {{"max_n", max_n}};
          report.append(injection_suite(max_n));
        }
      } else if (*v_rec) {
        report.command = "verify recursion";
        report.inputs = {{"max_n", max_n}};
        report.append(recursion_suite(max_n));
      } else if (*v_ser) {
        report.command = "verify series";
        report.inputs = {{"series_degree", series_degree}};
        report.append(series_suite(series_degree));
      } else {
        report.command = "verify all";
        report.inputs = {{"max_n", max_n}, {"series_degree", series_degree}};
        report.append(recursion_suite(max_n));
        report.append(positivity_suite(max_n));
        report.append(injection_suite(max_n));
        report.append(series_suite(series_degree));
        report.append(delta1_suite(max_n));
        report.append(delta3_suite(std::min(max_n, 7), default_delta3_samples()));
        report.append(specialization_suite(max_n, {2, 3, mpq_class(5, 2)}));
      }
      print_results(report);
    } else if (*specialize) {
      report.command = "check-specializations";
      std::vector<mpq_class> samples{2, 3, mpq_class(5, 2)};
      if (!samples_s.empty())
        samples = parse_samples(samples_s);
      json echo = json::array();
      for (const auto &s : samples)
        echo.push_back(s.get_str());
      report.inputs = {{"n", n_arg}, {"samples", echo}};
      try {
        report.append(specialization_suite(n_arg, samples));
      } catch (const InvalidSample &e) {
        throw UsageError(e.what());
      }
      print_results(report);
    }
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!*verify && !*specialize)
    for (const auto &c : report.results)
      std::cout << status_name(c.status) << "  " << c.name << "\n";
  std::cerr << "elapsed: " << report.elapsed_seconds << " s\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << report.to_json().dump(2) << "\n";
  }
  return report.exit_code();
}
