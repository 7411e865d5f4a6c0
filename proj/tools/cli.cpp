// Copyright 2026 The Boxsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "boxsearch/asymptotics.hpp"
#include "boxsearch/error.hpp"
#include "boxsearch/maxent.hpp"
#include "boxsearch/measure.hpp"
#include "boxsearch/montecarlo.hpp"
#include "boxsearch/products.hpp"
#include "boxsearch/work.hpp"
#include "report.hpp"

namespace boxsearch::cli {
namespace {

struct CommonOptions {
  std::string format = "json";
  bool format_given = false;
  bool renormalize = false;
};

void emit(std::ostream& out, const CommonOptions& common,
          const Report& report) {
  if (common.format == "text") {
    write_text(out, report);
  } else {
    write_json(out, report);
  }
}

Report to_array(std::span<const double> values) {
  Report a = Report::array();
  for (double v : values) a.push_back(v);
  return a;
}

Report finite_or_null(double v) {
  return std::isfinite(v) ? Report(v) : Report(nullptr);
}

Report density_record(const HidingDensity& p) {
  Report r;
  r["n"] = p.size();
  r["labels"] = p.labels();
  r["p"] = to_array(p.probs());
  return r;
}

// ---- analyze -------------------------------------------------------------

Report analyze(const HidingDensity& p) {
  Report r;
  r["command"] = "analyze";
  r.update(density_record(p));

  const WorkReport w = bounds_report(p);
  r["ideal_work"] = w.ideal_work;
  r["holder_half"] = w.holder_half;
  r["entropy"] = w.entropy;
  r["harmonic_n"] = w.harmonic_n;
  r["lower_bound"] = w.lower_bound;
  r["lower_bound_log"] = w.lower_bound_log;
  r["upper_bound_simple"] = w.upper_bound_simple;
  r["upper_bound_improved"] = w.upper_bound_improved;
  r["entropy_lower"] = w.entropy_lower;
  r["entropy_work_cap"] = w.entropy_work_cap;

  Report order = Report::array();
  for (std::size_t i : ideal_order(p)) order.push_back(p.labels()[i]);
  r["ideal_order"] = std::move(order);

  const SearchDensity q = best_search_density(p);
  r["best_q"] = to_array(q.probs());
  r["best_random_work"] = random_work(p, q);
  r["duplicated_work_best"] = duplicated_work(p, q);

  // Largest entropy any density on N boxes with this ideal work can have.
  if (p.size() >= 2 && w.ideal_work > 1.0 &&
      w.ideal_work < static_cast<double>(p.size())) {
    const GeometricFamilyPoint fp = solve_family_point(w.ideal_work, p.size());
    Report m;
    m["x"] = fp.x;
    m["mean_work"] = fp.mean_work;
    m["entropy"] = entropy(geometric_density(fp.x, fp.n));
    r["maxent"] = std::move(m);
  } else {
    r["maxent"] = nullptr;
  }
  return r;
}

// ---- power ---------------------------------------------------------------

Report asymptotic_record(const AsymptoticWork& a, const LatticeInfo& info) {
  Report r;
  r["branch"] = a.is_lattice ? "lattice" : "non-lattice";
  r["value"] = finite_or_null(a.value);
  r["log_value"] = a.log_value;
  r["sigma_sq"] = info.sigma_sq;
  r["period"] = a.is_lattice ? Report(info.period) : Report(nullptr);
  r["marginal"] = info.marginal;
  return r;
}

struct PowerOptions {
  std::size_t k = 1;
  std::string mode = "exact";
  double tol_lattice = kDefaultLatticeTolerance;
};

Report power(const HidingDensity& p, const PowerOptions& o) {
  Report r;
  r["command"] = "power";
  r["k"] = o.k;
  r["mode"] = o.mode;
  r["holder_half"] = holder_half(p);
  const bool all = o.mode == "all";

  std::optional<double> log_exact;
  if (all || o.mode == "exact") {
    const PowerWork pw = evaluate_power_work(p, o.k);
    Report e;
    double linear = NAN;
    try {
      linear = pw.value();
    } catch (const DomainError&) {
    }
    e["value"] = finite_or_null(linear);
    e["log_value"] = pw.log_value();
    e["integral"] = pw.integral;
    e["atoms"] = pw.atoms;
    log_exact = pw.log_value();
    r["exact"] = std::move(e);
  }

  if (all || o.mode == "oracle") {
    try {
      const double v = power_oracle_work(p, o.k);
      Report e;
      e["value"] = v;
      e["log_value"] = std::log(v);
      r["oracle"] = std::move(e);
    } catch (const DomainError& ex) {
      if (!all) throw;
      r["oracle"] = nullptr;
      r["oracle_skipped"] = ex.what();
    }
  }

  if (all || o.mode == "asymptotic") {
    try {
      const LatticeInfo info = lattice_info(p, o.tol_lattice);
      const AsymptoticWork a = asymptotic_work_detail(p, o.k, o.tol_lattice);
      Report e = asymptotic_record(a, info);
      if (info.marginal) {
        const double period = info.is_lattice ? 0.0 : info.candidate_period;
        const AsymptoticWork alt =
            asymptotic_work_branch(p, o.k, !info.is_lattice, period);
        Report other;
        other["branch"] = alt.is_lattice ? "lattice" : "non-lattice";
        other["value"] = finite_or_null(alt.value);
        other["log_value"] = alt.log_value;
        if (alt.is_lattice) other["period"] = period;
        e["alternate"] = std::move(other);
      }
      if (log_exact) {
        r["ratio_asymptotic_over_exact"] = std::exp(a.log_value - *log_exact);
      }
      r["asymptotic"] = std::move(e);
    } catch (const DegenerateDensity& ex) {
      if (!all) throw;
      r["asymptotic"] = nullptr;
      r["asymptotic_skipped"] = "degenerate";
      r["log_exact_fallback"] = ex.log_exact_work();
    }
  }
  return r;
}

// ---- maxent --------------------------------------------------------------

Report maxent(double work, std::size_t boxes) {
  const GeometricFamilyPoint fp = solve_family_point(work, boxes);
  const HidingDensity d = geometric_density(fp.x, fp.n);
  Report r;
  r["command"] = "maxent";
  r["work"] = work;
  r["boxes"] = boxes;
  r["x"] = fp.x;
  r["mean_work"] = fp.mean_work;
  r["p"] = to_array(d.probs());
  r["entropy"] = entropy(d);
  r["entropy_upper_bound"] = entropy_upper_bound(work);
  return r;
}

// ---- measure -------------------------------------------------------------

AtomicMeasure build_measure(const HidingDensity& p, const std::string& which,
                            std::size_t k) {
  AtomicMeasure m;
  if (which == "phi") {
    m = phi(p);
  } else if (which == "psi") {
    m = psi(p);
  } else if (which == "mu") {
    m = mu_of(p);
  } else {
    m = zeta_of(p);
  }
  return k == 1 ? m : convolve_power(m, k);
}

Report measure_record(const AtomicMeasure& m, const std::string& which,
                      std::size_t k) {
  Report r;
  r["command"] = "measure";
  r["which"] = which;
  r["k"] = k;
  r["basis"] = to_array(m.basis());
  r["total_mass"] = m.total_mass();
  Report atoms = Report::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Report a;
    a["position"] = m.position(i);
    a["mass"] = m.mass(i);
    const auto c = m.coefficients(i);
    a["coefficients"] = std::vector<std::int32_t>(c.begin(), c.end());
    atoms.push_back(std::move(a));
  }
  r["atoms"] = std::move(atoms);
  return r;
}

// ---- simulate ------------------------------------------------------------

struct SimulateOptions {
  std::string strategy = "random";
  std::string q_source = "best";
  std::string q_file;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = kDefaultMaxSteps;
  unsigned threads = 0;
};

Report simulate(const HidingDensity& p, const SimulateOptions& o,
                bool renormalize) {
  Report r;
  r["command"] = "simulate";
  r["strategy"] = o.strategy;
  r["trials"] = o.trials;
  r["seed"] = o.seed;
  SimResult s;
  if (o.strategy == "ideal") {
    s = simulate_ideal(p, o.trials, o.seed, o.threads);
    r["expected_work"] = ideal_work(p);
    r["expected_duplicates"] = 0.0;
  } else {
    std::optional<SearchDensity> q;
    if (o.q_source == "best") {
      q = best_search_density(p);
    } else if (o.q_source == "uniform") {
      q = SearchDensity::uniform(p.size());
    } else {
      if (o.q_file.empty()) {
        throw InvalidInput("--q-source file needs --q-file");
      }
      const HidingDensity qd = read_density_file(o.q_file, renormalize);
      if (qd.size() != p.size()) {
        throw InvalidInput("search density file has " +
                           std::to_string(qd.size()) + " boxes, expected " +
                           std::to_string(p.size()));
      }
      q = SearchDensity({qd.probs().begin(), qd.probs().end()});
    }
    r["q_source"] = o.q_source;
    r["q"] = to_array(q->probs());
    r["max_steps"] = o.max_steps;
    s = simulate_random(p, *q, o.trials, o.seed, o.max_steps, o.threads);
    r["expected_work"] = random_work(p, *q);
    r["expected_duplicates"] = duplicated_work(p, *q);
  }
  r["mean_work"] = s.mean_work;
  r["mean_duplicates"] = s.mean_duplicates;
  r["std_err_work"] = s.std_err_work;
  r["std_err_duplicates"] = s.std_err_duplicates;
  r["truncated_trials"] = s.truncated_trials;
  return r;
}

void add_common(CLI::App* sub, CommonOptions& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->each([&](const std::string&) { common.format_given = true; });
  sub->add_flag("--normalize", common.renormalize,
                "Rescale input masses to sum to 1");
}

}  // namespace

HidingDensity parse_density(const std::string& text, bool renormalize) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("density file is not valid JSON: ") +
                       e.what());
  }

  std::vector<double> masses;
  std::vector<std::string> labels;
  auto read_masses = [&](const nlohmann::json& arr) {
    if (!arr.is_array() || arr.empty()) {
      throw InvalidInput("density masses must be a non-empty array");
    }
    for (const auto& v : arr) {
      if (!v.is_number()) throw InvalidInput("density mass is not a number");
      masses.push_back(v.get<double>());
    }
  };

  if (doc.is_array()) {
    read_masses(doc);
    labels = default_labels(masses.size());
  } else if (doc.is_object() && doc.contains("p")) {
    read_masses(doc.at("p"));
    if (doc.contains("labels")) {
      const auto& ls = doc.at("labels");
      if (!ls.is_array()) throw InvalidInput("density labels must be an array");
      for (const auto& l : ls) {
        if (!l.is_string()) throw InvalidInput("density label is not a string");
        labels.push_back(l.get<std::string>());
      }
      if (labels.size() != masses.size()) {
        throw InvalidInput("density file has " + std::to_string(labels.size()) +
                           " labels for " + std::to_string(masses.size()) +
                           " masses");
      }
    } else {
      labels = default_labels(masses.size());
    }
  } else {
    throw InvalidInput(
        "density file must be an array of masses or {\"labels\", \"p\"}");
  }

  if (renormalize) {
    std::vector<std::string> kept_labels;
    std::vector<double> kept;
    for (std::size_t i = 0; i < masses.size(); ++i) {
      if (masses[i] == 0.0) continue;
      kept_labels.push_back(labels[i]);
      kept.push_back(masses[i]);
    }
    return normalize(kept, std::move(kept_labels));
  }
  return HidingDensity::dropping_zeros(std::move(labels), std::move(masses));
}

HidingDensity read_density_file(const std::string& path, bool renormalize) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open density file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_density(buf.str(), renormalize);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Expected-work analysis for the prize-in-N-boxes search problem",
               "boxsearch"};
  app.require_subcommand(1);
  CommonOptions common;

  std::string file;

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Ideal work, random-strategy work and bound chain");
  analyze_cmd->add_option("file", file, "Density file")->required();
  add_common(analyze_cmd, common);

  PowerOptions power_opts;
  auto* power_cmd = app.add_subcommand(
      "power", "Ideal work of the k-fold Cartesian power");
  power_cmd->add_option("file", file, "Density file")->required();
  power_cmd->add_option("-k", power_opts.k, "Power")
      ->required()
      ->check(CLI::PositiveNumber);
  power_cmd->add_option("--mode", power_opts.mode, "Evaluation route")
      ->check(CLI::IsMember({"exact", "oracle", "asymptotic", "all"}));
  power_cmd->add_option("--tol-lattice", power_opts.tol_lattice,
                        "Relative tolerance for lattice detection")
      ->check(CLI::PositiveNumber);
  add_common(power_cmd, common);

  double work = 0.0;
  std::size_t boxes = 0;
  auto* maxent_cmd = app.add_subcommand(
      "maxent", "Maximum-entropy density with a given mean work");
  maxent_cmd->add_option("--work", work, "Target mean work")->required();
  maxent_cmd->add_option("--boxes", boxes, "Number of boxes")->required();
  add_common(maxent_cmd, common);

  std::string which = "zeta";
  std::size_t measure_k = 1;
  auto* measure_cmd = app.add_subcommand(
      "measure", "Dump the atoms of phi, psi, mu or zeta (optionally a power)");
  measure_cmd->add_option("file", file, "Density file")->required();
  measure_cmd->add_option("--which", which, "Measure to dump")
      ->check(CLI::IsMember({"phi", "psi", "mu", "zeta"}));
  measure_cmd->add_option("-k,--power", measure_k, "Convolution power")
      ->check(CLI::PositiveNumber);
  add_common(measure_cmd, common);

  SimulateOptions sim;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo estimate of work and duplicated work");
  simulate_cmd->add_option("file", file, "Density file")->required();
  simulate_cmd->add_option("--strategy", sim.strategy, "Search strategy")
      ->check(CLI::IsMember({"random", "ideal"}));
  simulate_cmd->add_option("--q-source", sim.q_source, "Search density")
      ->check(CLI::IsMember({"best", "uniform", "file"}));
  simulate_cmd->add_option("--q-file", sim.q_file,
                           "Search density file for --q-source file");
  simulate_cmd->add_option("--trials", sim.trials, "Number of trials")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", sim.seed, "64-bit seed")->required();
  simulate_cmd->add_option("--max-steps", sim.max_steps, "Per-trial step cap")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--threads", sim.threads,
                           "Worker threads (0 = all cores)");
  add_common(simulate_cmd, common);

  std::vector<const char*> argv{"boxsearch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*analyze_cmd) {
      emit(out, common, analyze(read_density_file(file, common.renormalize)));
    } else if (*power_cmd) {
      emit(out, common,
           power(read_density_file(file, common.renormalize), power_opts));
    } else if (*maxent_cmd) {
      emit(out, common, maxent(work, boxes));
    } else if (*measure_cmd) {
      const HidingDensity p = read_density_file(file, common.renormalize);
      const AtomicMeasure m = build_measure(p, which, measure_k);
      if (common.format_given) {
        emit(out, common, measure_record(m, which, measure_k));
      } else {
        write_atom_dump(out, m);
      }
    } else if (*simulate_cmd) {
      emit(out, common,
           simulate(read_density_file(file, common.renormalize), sim,
                    common.renormalize));
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace boxsearch::cli
