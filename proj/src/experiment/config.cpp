#include "randwave/experiment/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace randwave {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
std::vector<T> parse_list(const std::string& text, T (*conv)(const std::string&)) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(conv(item));
  }
  return out;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

int to_int(const std::string& s) {
  std::size_t pos = 0;
  const long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return static_cast<int>(v);
}

bool to_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw std::invalid_argument("not a boolean: " + s);
}

}  // namespace

double parse_length(const std::string& text) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    std::string factor = trim(s.substr(0, s.size() - 2));
    if (!factor.empty() && factor.back() == '*') factor = trim(factor.substr(0, factor.size() - 1));
    return (factor.empty() ? 1.0 : to_double(factor)) * std::numbers::pi;
  }
  return to_double(s);
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json modes = nlohmann::json::array();
  for (const auto& m : data.modes) modes.push_back({m.amplitude, m.m1, m.m2});
  nlohmann::json d = {
      {"family", to_string(data.family)}, {"amplitude", data.amplitude},
      {"sigma", data.sigma},              {"max_frequency", data.max_frequency},
      {"h1_norm", data.h1_norm},          {"seed", data.seed},
      {"modes", modes},                   {"path", data.path},
  };
  if (data.center) d["center"] = {data.center->first, data.center->second};
  return {
      {"grid", {{"n_points", n_points}, {"box_length", box_length}}},
      {"time", {{"T", T}, {"n_steps", n_steps}}},
      {"iterates", {{"n_max", n_max}, {"deriv", to_string(deriv)}}},
      {"sampling",
       {{"samples", samples},
        {"seed", base_seed},
        {"bootstrap", bootstrap},
        {"enforce_small_regime", enforce_small_regime}}},
      {"data", d},
      {"moments", {{"p_list", p_list}, {"tail_order", tail_order}, {"tail_points", tail_points}}},
      {"scaling", {{"intervals", interval_list}}},
      {"output", {{"dir", output_dir.string()}, {"partial", partial}}},
  };
}

std::string ExperimentConfig::hash() const {
  nlohmann::json j = to_json();
  j.erase("output");  // where results go does not change them
  const std::string text = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExperimentConfig parse_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config syntax: ") + e.what());
  }
  ExperimentConfig c;
  std::optional<double> cx;
  std::optional<double> cy;
  for (const auto& [section, body] : tree) {
    for (const auto& [key, node] : body) {
      const std::string v = trim(node.get_value<std::string>());
      const std::string name = section + "." + key;
      try {
        if (name == "grid.n_points") c.n_points = to_int(v);
        else if (name == "grid.box_length") c.box_length = parse_length(v);
        else if (name == "time.T") c.T = to_double(v);
        else if (name == "time.n_steps") c.n_steps = to_int(v);
        else if (name == "iterates.n_max") c.n_max = to_int(v);
        else if (name == "iterates.deriv") c.deriv = parse_deriv(v);
        else if (name == "sampling.samples") c.samples = to_int(v);
        else if (name == "sampling.seed") c.base_seed = std::stoull(v);
        else if (name == "sampling.bootstrap") c.bootstrap = to_int(v);
        else if (name == "sampling.enforce_small_regime") c.enforce_small_regime = to_bool(v);
        else if (name == "data.family") c.data.family = parse_family(v);
        else if (name == "data.amplitude") c.data.amplitude = to_double(v);
        else if (name == "data.sigma") c.data.sigma = to_double(v);
        else if (name == "data.center_x") cx = parse_length(v);
        else if (name == "data.center_y") cy = parse_length(v);
        else if (name == "data.max_frequency") c.data.max_frequency = to_double(v);
        else if (name == "data.h1_norm") c.data.h1_norm = to_double(v);
        else if (name == "data.seed") c.data.seed = std::stoull(v);
        else if (name == "data.modes") c.data.modes = parse_modes(v);
        else if (name == "data.path") c.data.path = v;
        else if (name == "moments.p_list") c.p_list = parse_list<int>(v, to_int);
        else if (name == "moments.tail_order") c.tail_order = to_int(v);
        else if (name == "moments.tail_points") c.tail_points = to_int(v);
        else if (name == "scaling.intervals") c.interval_list = parse_list<double>(v, to_double);
        else if (name == "output.dir") c.output_dir = v;
        else if (name == "output.partial") c.partial = to_bool(v);
        else throw std::invalid_argument("unknown config key");
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("config key " + name + ": " + e.what());
      } catch (const std::out_of_range&) {
        throw std::invalid_argument("config key " + name + ": value out of range");
      }
    }
  }
  if (cx.has_value() != cy.has_value()) throw std::invalid_argument("data.center_x and data.center_y go together");
  if (cx) c.data.center = std::make_pair(*cx, *cy);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  return parse_config(in);
}

std::optional<double> support_clearance(const ExperimentConfig& config) {
  const auto radius = support_radius(config.data);
  if (!radius) return std::nullopt;
  const double L = config.box_length;
  const auto center = config.data.center.value_or(std::make_pair(0.5 * L, 0.5 * L));
  const double edge = std::min({center.first, L - center.first, center.second, L - center.second});
  return edge - *radius;
}

void validate_static(const ExperimentConfig& c) {
  if (c.samples < 1) throw std::invalid_argument("an experiment needs at least one sample");
  if (c.n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (c.n_steps < 1 || !(c.T > 0.0)) throw std::invalid_argument("time grid needs T > 0 and n_steps >= 1");
  if (c.bootstrap < 1) throw std::invalid_argument("bootstrap needs at least one resample");
  for (int p : c.p_list)
    if (p < 2) throw std::invalid_argument("moment orders must be >= 2");
  for (std::size_t i = 1; i < c.interval_list.size(); ++i) {
    const double ratio = c.interval_list[i - 1] / c.interval_list[i];
    if (std::abs(ratio - 2.0) > 1e-9) throw std::invalid_argument("scaling intervals must halve successively");
  }
  const auto clearance = support_clearance(c);
  if (clearance) {
    double t_max = c.T;
    for (double t : c.interval_list) t_max = std::max(t_max, t);
    if (!(t_max < *clearance)) {
      throw std::invalid_argument("time interval exceeds the distance from the data support to the box edge");
    }
  }
}

}  // namespace randwave
