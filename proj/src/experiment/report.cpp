#include "randwave/experiment/report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace randwave {
namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void write_rows_csv(std::ostream& out, const ExperimentReport& report) {
  out << "sample,seed,n,finite,linf_h1,linf_l2_dt,l2t_l4x,energy_constant\n";
  for (const auto& r : report.rows) {
    out << r.sample << ',' << r.seed << ',' << r.n << ',' << (r.finite ? 1 : 0) << ','
        << format_double(r.h1_sup) << ',' << format_double(r.l2_dt_sup) << ','
        << format_double(r.l2t_l4x) << ',' << format_double(r.energy_constant) << '\n';
  }
}

nlohmann::json summary_json(const ExperimentReport& report) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& s : report.orders) {
    orders.push_back({{"n", s.n},
                      {"finite_fraction", s.finite_fraction},
                      {"mean", number(s.mean)},
                      {"median", number(s.median)},
                      {"quantiles", {{"0.05", number(s.q05)}, {"0.25", number(s.q25)},
                                     {"0.75", number(s.q75)}, {"0.95", number(s.q95)}}},
                      {"energy_constant_max", number(s.energy_constant_max)}});
  }
  nlohmann::json moments = nlohmann::json::array();
  for (const auto& m : report.moments) {
    moments.push_back({{"n", m.n}, {"p", m.p}, {"moment", number(m.moment)},
                       {"ci", {number(m.ci.lower), number(m.ci.upper)}}, {"bound", number(m.bound)},
                       {"ratio", number(m.ratio)}, {"pass", m.pass}});
  }
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"operation", v.operation}, {"parameters", v.parameters},
                        {"measured", number(v.measured)}, {"threshold", number(v.threshold)},
                        {"pass", v.pass}});
  }
  const Calibration& c = report.calibration;
  nlohmann::json j = {
      {"version", kCodeVersion},
      {"config", report.config.to_json()},
      {"config_hash", report.config_hash},
      {"seeds", {{"base", report.config.base_seed}, {"samples", report.sample_seeds}}},
      {"calibration",
       {{"c_cal", c.c_cal}, {"phi0_h1", c.phi0_h1}, {"T", c.T}, {"regime_product", c.regime_product},
        {"active_blocks", c.active_blocks},
        {"note", "moment and tail verdicts are relative to this frozen constant"}}},
      {"orders", orders},
      {"moments", moments},
      {"verdicts", verdicts},
      {"all_pass", report.all_pass()},
  };
  if (report.scaling) {
    const auto& s = *report.scaling;
    nlohmann::json med = nlohmann::json::array();
    for (const auto& row : s.medians) {
      nlohmann::json r = nlohmann::json::array();
      for (double v : row) r.push_back(number(v));
      med.push_back(r);
    }
    j["scaling"] = {{"intervals", s.intervals}, {"medians", med}, {"slopes", s.slopes},
                    {"monotone", s.monotone}};
  }
  if (report.tail) {
    const auto& t = *report.tail;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : t.points) {
      pts.push_back({{"lambda", p.lambda}, {"empirical", p.empirical}, {"bound", number(p.bound)},
                     {"vacuous", p.vacuous}, {"pass", p.pass}});
    }
    j["tail"] = {{"n", t.n},
                 {"moment_bound", {{"C", t.moment_bound.C}, {"alpha", t.moment_bound.alpha},
                                   {"N", t.moment_bound.N}, {"k", t.moment_bound.k},
                                   {"p0", t.moment_bound.p0}}},
                 {"points", pts}};
  }
  return j;
}

void emit_report(const ExperimentReport& report, const std::filesystem::path& directory) {
  if (report.rows.empty()) throw std::invalid_argument("refusing to emit a report without samples");
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw std::runtime_error("cannot create " + directory.string() + ": " + ec.message());

  const auto rows_path = directory / "rows.csv";
  auto rows = open_for_write(rows_path);
  write_rows_csv(rows, report);
  finish(rows, rows_path);

  const auto summary_path = directory / "summary.json";
  auto summary = open_for_write(summary_path);
  summary << summary_json(report).dump(2) << '\n';
  finish(summary, summary_path);

  if (report.tail) {
    const auto path = directory / "tails.csv";
    auto out = open_for_write(path);
    out << "lambda,empirical,bound\n";
    for (const auto& p : report.tail->points) {
      out << format_double(p.lambda) << ',' << format_double(p.empirical) << ','
          << format_double(p.bound) << '\n';
    }
    finish(out, path);
  }
  if (report.scaling) {
    const auto& s = *report.scaling;
    for (std::size_t n = 0; n < s.medians.size(); ++n) {
      const auto path = directory / ("scaling_n" + std::to_string(n) + ".csv");
      auto out = open_for_write(path);
      out << "log_T,log_median\n";
      for (std::size_t i = 0; i < s.intervals.size(); ++i) {
        out << format_double(std::log(s.intervals[i])) << ','
            << format_double(std::log(s.medians[n][i])) << '\n';
      }
      finish(out, path);
    }
  }
}

}  // namespace randwave
