#include "cli/config_file.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "brl/errors.hpp"

namespace brl::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
    throw DomainError(what + ": '" + text + "' is not a finite number");
  return v;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
  if (t.empty() || t[0] == '-' || end != t.c_str() + t.size() || errno == ERANGE)
    throw DomainError(what + ": '" + text + "' is not a nonnegative integer");
  return v;
}

}  // namespace

Vec4 parse_point(const std::string& text) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 4)
    throw DomainError("point '" + text + "' must have exactly 4 comma-separated coordinates");
  Vec4 p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = parse_double(parts[i], "point coordinate");
  return p;
}

std::vector<Vec4> parse_point_list(const std::string& text) {
  std::vector<Vec4> pts;
  for (const std::string& item : split(text, ';'))
    if (!item.empty()) pts.push_back(parse_point(item));
  if (pts.empty()) throw DomainError("point list '" + text + "' is empty");
  return pts;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_double(item, "number list"));
  if (out.empty()) throw DomainError("number list is empty");
  return out;
}

void apply_config_file(const std::string& path, ExperimentConfig& cfg) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw DomainError("cannot read config file: " + std::string(e.what()));
  }

  using Setter = std::function<void(const std::string&)>;
  auto num = [](double& field, const std::string& key) -> Setter {
    return [&field, key](const std::string& v) { field = parse_double(v, key); };
  };
  auto count = [](std::size_t& field, const std::string& key) -> Setter {
    return [&field, key](const std::string& v) { field = parse_unsigned(v, key); };
  };
  const std::map<std::string, Setter> setters{
      {"domain.rho_in", num(cfg.rho_in, "rho_in")},
      {"series.max_terms",
       [&](const std::string& v) {
         cfg.series.max_terms = static_cast<int>(parse_unsigned(v, "max_terms"));
       }},
      {"series.target_tol", num(cfg.series.target_tol, "target_tol")},
      {"configuration.points", [&](const std::string& v) { cfg.points = parse_point_list(v); }},
      {"configuration.ring_k", count(cfg.ring_k, "ring_k")},
      {"configuration.ring_r", num(cfg.ring_r, "ring_r")},
      {"configuration.sample_k", count(cfg.sample_k, "sample_k")},
      {"configuration.seed", [&](const std::string& v) { cfg.seed = parse_unsigned(v, "seed"); }},
      {"configuration.sep", num(cfg.sep, "sep")},
      {"scan.k", count(cfg.k, "k")},
      {"scan.grid_points", count(cfg.grid_points, "grid_points")},
      {"scan.golden_tol", num(cfg.golden_tol, "golden_tol")},
      {"threshold.rho_lo", num(cfg.rho_lo, "rho_lo")},
      {"threshold.rho_hi", num(cfg.rho_hi, "rho_hi")},
      {"threshold.tol", num(cfg.threshold_tol, "tol")},
      {"reduce.epsilon", [&](const std::string& v) { cfg.epsilons = parse_number_list(v); }},
      {"reduce.hessian_step", num(cfg.hessian_step, "hessian_step")},
      {"profile.x1_min", num(cfg.x1_min, "x1_min")},
      {"profile.x1_max", num(cfg.x1_max, "x1_max")},
      {"profile.x2_min", num(cfg.x2_min, "x2_min")},
      {"profile.x2_max", num(cfg.x2_max, "x2_max")},
      {"profile.n1", count(cfg.n1, "n1")},
      {"profile.n2", count(cfg.n2, "n2")},
      {"output.path", [&](const std::string& v) { cfg.out = trim(v); }},
      {"run.workers",
       [&](const std::string& v) { cfg.workers = static_cast<unsigned>(parse_unsigned(v, "workers")); }},
  };

  for (const auto& [section, body] : tree) {
    if (body.empty())
      throw DomainError("config key '" + section + "' must appear inside a [section]");
    for (const auto& [key, value] : body) {
      const std::string full = section + "." + key;
      const auto it = setters.find(full);
      if (it == setters.end()) throw DomainError("unknown config key '" + full + "'");
      it->second(value.data());
    }
  }
}

json to_json(const ExperimentConfig& cfg) {
  json points = json::array();
  for (const Vec4& p : cfg.points) points.push_back({p[0], p[1], p[2], p[3]});
  return json{
      {"rho_in", cfg.rho_in},
      {"max_terms", cfg.series.max_terms},
      {"target_tol", cfg.series.target_tol},
      {"points", points},
      {"ring_k", cfg.ring_k},
      {"ring_r", cfg.ring_r},
      {"sample_k", cfg.sample_k},
      {"seed", cfg.seed},
      {"sep", cfg.sep},
      {"k", cfg.k},
      {"grid_points", cfg.grid_points},
      {"golden_tol", cfg.golden_tol},
      {"rho_lo", cfg.rho_lo},
      {"rho_hi", cfg.rho_hi},
      {"threshold_tol", cfg.threshold_tol},
      {"epsilon", cfg.epsilons},
      {"hessian_step", cfg.hessian_step},
      {"grid", {{"x1", {cfg.x1_min, cfg.x1_max, cfg.n1}}, {"x2", {cfg.x2_min, cfg.x2_max, cfg.n2}}}},
  };
}

}  // namespace brl::cli
