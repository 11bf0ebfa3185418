#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "randwave/experiment/config.hpp"
#include "randwave/experiment/report.hpp"
#include "randwave/experiment/runner.hpp"
#include "randwave/experiment/suites.hpp"

namespace {

using namespace randwave;

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<std::string> out;
  std::optional<int> n_max;
  std::optional<int> grid;
  std::optional<std::string> box;
  std::optional<double> T;
  std::optional<int> steps;
  bool partial = false;
};

ExperimentConfig resolve(const Overrides& o) {
  ExperimentConfig c = o.config.empty() ? ExperimentConfig{} : load_config(o.config);
  if (o.seed) c.base_seed = *o.seed;
  if (o.samples) c.samples = *o.samples;
  if (o.out) c.output_dir = *o.out;
  if (o.n_max) c.n_max = *o.n_max;
  if (o.grid) c.n_points = *o.grid;
  if (o.box) c.box_length = parse_length(*o.box);
  if (o.T) c.T = *o.T;
  if (o.steps) c.n_steps = *o.steps;
  if (o.partial) c.partial = true;
  return c;
}

void print_verdicts(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    std::printf("%-4s %-24s %-36s measured=%.6g threshold=%.6g\n", v.pass ? "ok" : "FAIL",
                v.operation.c_str(), v.parameters.c_str(), v.measured, v.threshold);
  }
}

void write_verdicts(const ExperimentConfig& c, const std::string& name,
                    const std::vector<Verdict>& verdicts) {
  std::filesystem::create_directories(c.output_dir);
  const auto path = c.output_dir / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_verdict_csv(out, verdicts);
}

int finish(const ExperimentReport& report) {
  emit_report(report, report.config.output_dir);
  print_verdicts(report.verdicts);
  std::printf("report written to %s\n", report.config.output_dir.string().c_str());
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized data, Picard iterates and tree expansions for a derivative wave equation"};
  app.require_subcommand(1);
  Overrides o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "INI configuration file")->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "base seed");
    sub->add_option("--samples", o.samples, "Monte Carlo samples M");
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--n-max", o.n_max, "largest iterate order");
    sub->add_option("--grid", o.grid, "grid points per axis");
    sub->add_option("--box", o.box, "box length, e.g. 16pi");
    sub->add_option("--t", o.T, "time interval length");
    sub->add_option("--steps", o.steps, "time steps");
    sub->add_flag("--partial", o.partial, "dump final-time fields of every iterate");
  };
  auto* trees = app.add_subcommand("trees", "tree closed forms, counts and bounds");
  auto* moments = app.add_subcommand("moments", "moment identities and combinatorial bounds");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo iterates and moment ratios");
  auto* scaling = app.add_subcommand("scaling", "interval scaling of the median norms");
  auto* tails = app.add_subcommand("tails", "empirical tails against the moment bound");
  auto* report = app.add_subcommand("report", "simulate, scaling and tails in one report");
  for (auto* s : {trees, moments, simulate, scaling, tails, report}) add_common(s);

  CLI11_PARSE(app, argc, argv);
  try {
    const ExperimentConfig config = resolve(o);
    if (*trees) {
      const TreeSuiteResult r = run_tree_suite(config);
      std::filesystem::create_directories(config.output_dir);
      std::ofstream csv(config.output_dir / "trees.csv");
      write_tree_csv(csv, r.rows);
      write_verdicts(config, "tree_verdicts.csv", r.verdicts);
      print_verdicts(r.verdicts);
      return all_pass(r.verdicts) ? 0 : 1;
    }
    if (*moments) {
      const auto v = run_moment_suite(config.base_seed);
      write_verdicts(config, "moment_verdicts.csv", v);
      print_verdicts(v);
      return all_pass(v) ? 0 : 1;
    }
    if (*simulate) return finish(run_experiment(config));
    if (*scaling) {
      ExperimentReport r = run_experiment(config);
      r.scaling = interval_scaling_study(config);
      for (auto& v : scaling_verdicts(*r.scaling)) r.verdicts.push_back(v);
      return finish(r);
    }
    if (*tails) {
      ExperimentConfig c = config;
      c.n_max = std::max(c.n_max, c.tail_order);
      ExperimentReport r = run_experiment(c);
      r.tail = tail_study(r, c.tail_order);
      for (auto& v : tail_verdicts(*r.tail)) r.verdicts.push_back(v);
      return finish(r);
    }
    if (*report) {
      ExperimentReport r = run_experiment(config);
      r.scaling = interval_scaling_study(config);
      for (auto& v : scaling_verdicts(*r.scaling)) r.verdicts.push_back(v);
      if (config.samples >= kMinTailSamples && config.tail_order <= config.n_max) {
        r.tail = tail_study(r, config.tail_order);
        for (auto& v : tail_verdicts(*r.tail)) r.verdicts.push_back(v);
      }
      return finish(r);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "randwave: %s\n", e.what());
    return 2;
  }
  return 0;
}
