/**
 * This code is part of qkent.
 *
 * (C) Copyright 2026 qkent contributors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qkent/bounds.hpp"
#include "qkent/entropy.hpp"
#include "qkent/fef.hpp"
#include "qkent/states.hpp"
#include "qkent/steering.hpp"

namespace {

using nlohmann::ordered_json;
using qkent::kdeform::Alpha;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitBadParameter = 2;
constexpr int kExitIo = 3;

struct OutputOptions {
  std::string format = "json";
  std::string path;  // empty: stdout
  int precision = 6;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest text for `value` after rounding to `precision` decimals:
// fixed-format, then trailing zeros (and a bare dot) stripped.
std::string format_number(double value, int precision) {
  std::string s = fmt::format("{:.{}f}", value, precision);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

double round_to(double value, int precision) {
  const double scale = std::pow(10.0, precision);
  return std::round(value * scale) / scale;
}

void write_output(const OutputOptions& opts, const std::string& text) {
  if (opts.path.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(opts.path);
  if (path.is_relative()) {
    if (const char* base = std::getenv("QKENT_OUTPUT_DIR")) {
      path = std::filesystem::path(base) / path;
    }
  }
  std::ofstream out(path);
  if (!out) {
    throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  }
  out << text;
  if (!out) {
    throw IoError(fmt::format("failed while writing '{}'", path.string()));
  }
}

void emit(const OutputOptions& opts, const ordered_json& json_doc,
          const std::string& csv_doc) {
  if (opts.format == "csv") {
    write_output(opts, csv_doc);
  } else {
    write_output(opts, json_doc.dump(2) + "\n");
  }
}

ordered_json verdict_json(const qkent::bounds::BoundVerdict& v, int precision) {
  auto j = qkent::bounds::to_json(v);
  j["lhs"] = round_to(j["lhs"].get<double>(), precision);
  j["rhs"] = round_to(j["rhs"].get<double>(), precision);
  return j;
}

// ---------------------------------------------------------------------------
// entropy
// ---------------------------------------------------------------------------

int run_entropy(const std::string& state_text, const std::vector<double>& alphas,
                const OutputOptions& opts) {
  const auto family = qkent::states::parse_state(state_text);
  ordered_json rows = ordered_json::array();
  std::string csv = "alpha,joint,marginal_b,conditional,mutual\n";
  for (double a : alphas) {
    const auto rep = qkent::entropy::report(Alpha(a), family);
    rows.push_back(ordered_json{{"alpha", rep.alpha},
                                {"state", qkent::states::to_string(family)},
                                {"joint", round_to(rep.joint, opts.precision)},
                                {"marginal_b", round_to(rep.marginal_b, opts.precision)},
                                {"conditional", round_to(rep.conditional, opts.precision)},
                                {"mutual", round_to(*rep.mutual, opts.precision)}});
    csv += fmt::format("{},{},{},{},{}\n", format_number(rep.alpha, opts.precision),
                       format_number(rep.joint, opts.precision),
                       format_number(rep.marginal_b, opts.precision),
                       format_number(rep.conditional, opts.precision),
                       format_number(*rep.mutual, opts.precision));
  }
  emit(opts, rows.size() == 1 ? rows.front() : rows, csv);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fef
// ---------------------------------------------------------------------------

int run_fef(const std::string& state_text, int samples, std::uint64_t seed,
            const OutputOptions& opts) {
  const auto family = qkent::states::parse_state(state_text);
  const auto analytic = qkent::fef::fef_analytic(family);

  ordered_json j{{"state", qkent::states::to_string(family)},
                 {"value", round_to(analytic.value, opts.precision)},
                 {"useful_for_teleportation", analytic.useful_for_teleportation},
                 {"source", "analytic"}};
  if (!analytic.warning.empty()) j["warning"] = analytic.warning;

  const bool two_qubit = std::holds_alternative<qkent::states::Werner2>(family) ||
                         std::holds_alternative<qkent::states::Weyl2>(family);
  if (two_qubit) {
    const auto rho = qkent::states::build(family);
    const auto tensor = qkent::fef::fef_tensor(rho);
    j["tensor_value"] = round_to(tensor.value, opts.precision);
    j["consistent"] = qkent::fef::fef_consistency(family);
    if (samples > 0) {
      j["sampled_lower_bound"] =
          round_to(qkent::fef::max_sampled_overlap(rho, samples, seed), opts.precision);
      j["samples"] = samples;
      j["seed"] = seed;
    }
  }
  std::string csv = "state,value,useful_for_teleportation\n";
  csv += fmt::format("{},{},{}\n", qkent::states::to_string(family),
                     format_number(analytic.value, opts.precision),
                     analytic.useful_for_teleportation ? 1 : 0);
  emit(opts, j, csv);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

ordered_json certification_json(const qkent::bounds::CertificationResult& r,
                                int precision) {
  ordered_json j{{"theorem", r.theorem},
                 {"evaluated", r.evaluated},
                 {"inconsistent", r.inconsistent}};
  if (r.semantic_flags > 0) j["semantic_flags"] = r.semantic_flags;
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(verdict_json(w, precision));
  j["witnesses"] = witnesses;
  return j;
}

int run_check_grid(const std::string& id, const OutputOptions& opts) {
  std::vector<qkent::bounds::CertificationResult> results;
  if (id == "all") {
    for (const auto& each : qkent::bounds::certifiable_ids()) {
      results.push_back(qkent::bounds::certify(each));
    }
    results.push_back(qkent::steering::certify_propositions());
  } else if (id == "p7" || id == "p8") {
    results.push_back(qkent::steering::certify_propositions());
  } else {
    results.push_back(qkent::bounds::certify(id));
  }

  long inconsistent = 0;
  ordered_json report = ordered_json::array();
  std::string csv = "theorem,evaluated,inconsistent,semantic_flags\n";
  for (const auto& r : results) {
    inconsistent += r.inconsistent;
    report.push_back(certification_json(r, opts.precision));
    csv += fmt::format("{},{},{},{}\n", r.theorem, r.evaluated, r.inconsistent,
                       r.semantic_flags);
    std::cerr << fmt::format("{}: {} inconsistencies over {} points", r.theorem,
                             r.inconsistent, r.evaluated);
    if (r.semantic_flags > 0) {
      std::cerr << fmt::format(
          " (semantic probe: {} points where the non-usefulness conclusion "
          "meets FEF > 1/2)",
          r.semantic_flags);
    }
    std::cerr << "\n";
  }
  emit(opts, report.size() == 1 ? report.front() : report, csv);
  return inconsistent == 0 ? kExitOk : kExitInconsistent;
}

struct PointArgs {
  std::optional<double> alpha;
  std::optional<double> p;
  std::vector<double> t;
  std::optional<int> d;
  std::optional<double> fidelity;
  std::optional<int> x;
  std::optional<int> k;
  double eps = 0.1;
};

int run_check_point(const std::string& id, const PointArgs& args,
                    const OutputOptions& opts) {
  using namespace qkent;
  if (!args.alpha) throw std::invalid_argument("point check requires --alpha");
  const Alpha alpha(*args.alpha);

  auto need_p = [&]() {
    if (!args.p) throw std::invalid_argument("this theorem requires --p");
    return *args.p;
  };
  auto need_t = [&]() {
    if (args.t.size() != 3) throw std::invalid_argument("this theorem requires --t t1,t2,t3");
    return std::array<double, 3>{args.t[0], args.t[1], args.t[2]};
  };
  auto need_d = [&]() {
    if (!args.d) throw std::invalid_argument("this theorem requires --d");
    return *args.d;
  };

  bounds::BoundVerdict v;
  if (id == "1") {
    v = bounds::theorem1_check(alpha, need_p());
  } else if (id == "2") {
    v = bounds::theorem2_check(alpha, need_p());
  } else if (id == "c11") {
    v = bounds::corollary11_check(alpha, need_p(), args.eps);
  } else if (id == "3") {
    v = bounds::theorem3_check(alpha, need_t());
  } else if (id == "4") {
    v = bounds::theorem4_check(alpha, need_t());
  } else if (id == "5") {
    if (!args.fidelity) throw std::invalid_argument("theorem 5 requires --F");
    v = bounds::theorem5_check(alpha, need_d(), *args.fidelity);
  } else if (id == "6") {
    if (!args.x) throw std::invalid_argument("theorem 6 requires --x");
    v = bounds::theorem6_check(alpha, need_d(), *args.x);
  } else if (id == "p7" || id == "p8") {
    if (!args.k || !args.fidelity) {
      throw std::invalid_argument("propositions require --k and --F");
    }
    v = steering::proposition_check(alpha, need_d(), *args.k, *args.fidelity);
  } else {
    throw std::invalid_argument(fmt::format("unknown theorem id '{}'", id));
  }

  const auto j = verdict_json(v, opts.precision);
  std::string csv = "theorem,antecedent,lhs,rhs,holds,applicable,consistent\n";
  csv += fmt::format("{},{},{},{},{},{},{}\n", v.theorem, v.antecedent_holds ? 1 : 0,
                     format_number(v.bound_lhs, opts.precision),
                     format_number(v.bound_rhs, opts.precision), v.bound_holds ? 1 : 0,
                     v.applicable ? 1 : 0, v.consistent ? 1 : 0);
  emit(opts, j, csv);
  return v.consistent ? kExitOk : kExitInconsistent;
}

// ---------------------------------------------------------------------------
// region
// ---------------------------------------------------------------------------

ordered_json interval_json(const qkent::bounds::Interval& iv, int precision) {
  return ordered_json{{"lo", round_to(iv.lo, precision)},
                      {"hi", round_to(iv.hi, precision)},
                      {"lo_closed", iv.lo_closed},
                      {"hi_closed", iv.hi_closed}};
}

ordered_json region_json(const qkent::bounds::RegionSet& region, int precision) {
  ordered_json intervals = ordered_json::array();
  for (const auto& iv : region.intervals()) {
    intervals.push_back(interval_json(iv, precision));
  }
  return ordered_json{{"empty", region.empty()}, {"intervals", intervals}};
}

int run_region(int which, const std::vector<double>& alphas,
               const std::vector<double>& t, const OutputOptions& opts) {
  ordered_json rows = ordered_json::array();
  std::string csv = "alpha,region,empty\n";
  for (double a : alphas) {
    const Alpha alpha(a);
    if (which == 1) {
      const auto region = qkent::bounds::exception_region1(alpha);
      ordered_json j{{"alpha", a}, {"region", "exception_region1"}};
      j.update(region_json(region, opts.precision));
      rows.push_back(j);
      csv += fmt::format("{},1,{}\n", format_number(a, opts.precision),
                         region.empty() ? 1 : 0);
    } else {
      if (t.size() != 3) {
        throw std::invalid_argument("region 2 requires --t t1,t2,t3");
      }
      const auto regions =
          qkent::bounds::exception_region2(alpha, {t[0], t[1], t[2]});
      ordered_json j{{"alpha", a},
                     {"region", "exception_region2"},
                     {"t", {t[0], t[1], t[2]}}};
      ordered_json parts = ordered_json::array();
      for (const auto& region : regions) {
        parts.push_back(region_json(region, opts.precision));
      }
      j["axes"] = parts;
      rows.push_back(j);
      csv += fmt::format("{},2,{}\n", format_number(a, opts.precision),
                         (regions[0].empty() && regions[1].empty() &&
                          regions[2].empty())
                             ? 1
                             : 0);
    }
  }
  emit(opts, rows.size() == 1 ? rows.front() : rows, csv);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table / sweep / limit
// ---------------------------------------------------------------------------

int run_table(const std::vector<int>& tables, const OutputOptions& opts) {
  const std::vector<double> table12_alphas{1e-5, 0.1, 0.3, 0.5, 0.75};
  std::vector<qkent::steering::TableCell> cells;
  for (int which : tables) {
    std::vector<qkent::steering::TableCell> part;
    if (which == 1) {
      part = qkent::steering::critical_f_table(table12_alphas, {2});
    } else if (which == 2) {
      part = qkent::steering::critical_f_table(table12_alphas, {6});
    } else if (which == 3) {
      part = qkent::steering::critical_f_table({0.1, 0.5}, {6, 7, 8});
    } else {
      throw std::invalid_argument(fmt::format("unknown table {}; expected 1, 2 or 3", which));
    }
    cells.insert(cells.end(), part.begin(), part.end());
  }
  ordered_json rows = ordered_json::array();
  for (const auto& cell : cells) {
    rows.push_back(ordered_json{{"alpha", cell.alpha},
                                {"d", cell.d},
                                {"critical_F", round_to(cell.critical_f, opts.precision)}});
  }
  emit(opts, rows, qkent::steering::table_csv(cells));
  return kExitOk;
}

int run_sweep(int d, const std::vector<double>& alphas, int points,
              const OutputOptions& opts) {
  if (points < 2) throw std::invalid_argument("sweep requires at least 2 points");
  ordered_json rows = ordered_json::array();
  std::string csv = "alpha,F,conditional\n";
  for (double a : alphas) {
    const Alpha alpha = a == 0.0 ? Alpha(1e-5) : Alpha(a);
    for (int i = 0; i < points; ++i) {
      const double f = static_cast<double>(i) / (points - 1);
      const double cond =
          qkent::entropy::conditional_k(alpha, qkent::states::Isotropic{d, f});
      rows.push_back(ordered_json{{"alpha", alpha.value()},
                                  {"F", round_to(f, opts.precision)},
                                  {"conditional", round_to(cond, opts.precision)}});
      csv += fmt::format("{},{},{}\n", format_number(alpha.value(), opts.precision),
                         format_number(f, opts.precision),
                         format_number(cond, opts.precision));
    }
  }
  emit(opts, rows, csv);
  return kExitOk;
}

int run_limit(int d_max, const OutputOptions& opts) {
  const auto est = qkent::steering::limit_estimate(d_max);
  ordered_json j{{"alpha", 1e-5},
                 {"d_max", d_max},
                 {"critical_F_at_dmax", round_to(est.at_dmax, opts.precision)},
                 {"fitted_asymptote", round_to(est.fitted_asymptote, opts.precision)},
                 {"strictly_decreasing", est.strictly_decreasing},
                 {"analytic_limit", 0.5},
                 {"quoted_finite_scale_reading", 0.506}};
  std::string csv = "d,critical_F\n";
  ordered_json seq = ordered_json::array();
  for (const auto& point : est.sequence) {
    csv += fmt::format("{},{:.6f}\n", point.d, point.f_star);
    seq.push_back(ordered_json{{"d", point.d},
                               {"critical_F", round_to(point.f_star, opts.precision)}});
  }
  j["sequence"] = seq;
  emit(opts, j, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Kaniadakis entropy toolkit: entropies, fully entangled "
               "fractions, implicit-bound certification and k-copy steering "
               "thresholds for Werner, Weyl and isotropic states"};
  app.require_subcommand(1);

  OutputOptions opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", opts.path,
                 "output file (default stdout; relative paths resolve under "
                 "$QKENT_OUTPUT_DIR when set)");
  app.add_option("--precision", opts.precision, "decimal digits in output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  std::string state_text;
  std::vector<double> alphas;
  int samples = 0;
  std::uint64_t seed = 12345;

  auto* entropy_cmd =
      app.add_subcommand("entropy", "kappa and von Neumann entropies of a state");
  entropy_cmd->fallthrough();
  entropy_cmd->add_option("--state", state_text, "state, e.g. werner2:p=0.5")->required();
  entropy_cmd->add_option("--alpha", alphas, "deformation parameters (0 = classical)")
      ->required()
      ->delimiter(',');

  auto* fef_cmd = app.add_subcommand("fef", "fully entangled fraction of a state");
  fef_cmd->fallthrough();
  fef_cmd->add_option("--state", state_text, "state, e.g. weyl2:t=0.1,0.2,0.3")->required();
  fef_cmd->add_option("--samples", samples,
                      "Haar-sampled local-unitary overlaps (0 = skip the sampler)");
  fef_cmd->add_option("--seed", seed, "sampler seed")->capture_default_str();

  std::string theorem_id;
  std::string grid;
  PointArgs point;
  std::vector<double> t_components;
  auto* check_cmd = app.add_subcommand(
      "check", "evaluate a theorem at a point or certify it on the default grid");
  check_cmd->fallthrough();
  check_cmd->add_option("--theorem", theorem_id, "1..6, c11, p7, p8, or all")->required();
  check_cmd->add_option("--grid", grid, "certification grid (only 'default')");
  double point_alpha = 0.0, point_p = 0.0, point_fidelity = 0.0;
  int point_d = 0, point_x = 0, point_k = 0;
  auto* alpha_opt = check_cmd->add_option("--alpha", point_alpha, "deformation parameter");
  auto* p_opt = check_cmd->add_option("--p", point_p, "Werner visibility");
  check_cmd->add_option("--t", t_components, "Weyl tensor components")->delimiter(',');
  auto* d_opt = check_cmd->add_option("--d", point_d, "local dimension");
  auto* f_opt = check_cmd->add_option("--F", point_fidelity, "isotropic fidelity");
  auto* x_opt = check_cmd->add_option("--x", point_x, "qudit Werner extreme point (+1/-1)");
  auto* k_opt = check_cmd->add_option("--k", point_k, "number of copies");
  check_cmd->add_option("--eps", point.eps, "mutual-information bound for c11")
      ->capture_default_str();

  int region_which = 1;
  auto* region_cmd = app.add_subcommand("region", "exception regions 1 and 2");
  region_cmd->fallthrough();
  region_cmd->add_option("--region", region_which, "1 or 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  region_cmd->add_option("--alpha", alphas, "deformation parameters")
      ->required()
      ->delimiter(',');
  region_cmd->add_option("--t", t_components, "Weyl tensor components (region 2)")
      ->delimiter(',');

  std::vector<int> tables;
  auto* table_cmd =
      app.add_subcommand("table", "critical-fidelity tables (alpha,d,critical_F)");
  table_cmd->fallthrough();
  table_cmd->add_option("--tables", tables, "tables to emit: subsets of 1,2,3")
      ->required()
      ->delimiter(',');

  int sweep_d = 2;
  int sweep_points = 101;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "conditional kappa-entropy vs fidelity curves (figure data)");
  sweep_cmd->fallthrough();
  sweep_cmd->add_option("--d", sweep_d, "local dimension")->capture_default_str();
  sweep_cmd->add_option("--alpha", alphas, "deformation parameters (0 = 1e-5 row)")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--points", sweep_points, "fidelity samples in [0,1]")
      ->capture_default_str();

  int limit_dmax = 1000;
  auto* limit_cmd = app.add_subcommand(
      "limit", "large-d trend of the critical fidelity at alpha = 1e-5");
  limit_cmd->fallthrough();
  limit_cmd->add_option("--dmax", limit_dmax, "largest dimension, up to 10^4")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadParameter;
  }

  try {
    if (entropy_cmd->parsed()) return run_entropy(state_text, alphas, opts);
    if (fef_cmd->parsed()) return run_fef(state_text, samples, seed, opts);
    if (check_cmd->parsed()) {
      if (*alpha_opt) point.alpha = point_alpha;
      if (*p_opt) point.p = point_p;
      if (*d_opt) point.d = point_d;
      if (*f_opt) point.fidelity = point_fidelity;
      if (*x_opt) point.x = point_x;
      if (*k_opt) point.k = point_k;
      point.t = t_components;
      const bool point_mode = point.alpha.has_value();
      if (!grid.empty() && grid != "default") {
        throw std::invalid_argument(fmt::format("unknown grid '{}'", grid));
      }
      return point_mode ? run_check_point(theorem_id, point, opts)
                        : run_check_grid(theorem_id, opts);
    }
    if (region_cmd->parsed()) {
      return run_region(region_which, alphas, t_components, opts);
    }
    if (table_cmd->parsed()) return run_table(tables, opts);
    if (sweep_cmd->parsed()) return run_sweep(sweep_d, alphas, sweep_points, opts);
    if (limit_cmd->parsed()) return run_limit(limit_dmax, opts);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParameter;
  }
  return kExitOk;
}
