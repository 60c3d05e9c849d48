#include "twisteq/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace twisteq {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<double> parse_reals(const std::string& s, const std::string& key) {
  std::vector<double> out;
  std::istringstream is(s);
  double v;
  while (is >> v) out.push_back(v);
  if (out.empty()) throw ConfigError("key '" + key + "' needs at least one number");
  return out;
}

double parse_one_real(const std::string& s, const std::string& key) {
  const auto v = parse_reals(s, key);
  if (v.size() != 1) throw ConfigError("key '" + key + "' takes one value");
  return v[0];
}

}  // namespace

ModelSpec parse_model_spec(const std::string& spec, double gap) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw ConfigError("empty model spec");
  try {
    if (parts[0] == "principal") {
      if (parts.size() != 3 || (parts[1] != "+" && parts[1] != "-")) {
        throw ConfigError("principal model spec is principal:<+|->:<Im nu>");
      }
      const double t = std::stod(parts[2]);
      const Parity d = parts[1] == "+" ? Parity::Plus : Parity::Minus;
      return {make_params(Series::Principal, Complex{0.0, t}, d, gap), spec};
    }
    if (parts[0] == "complementary") {
      if (parts.size() != 2) throw ConfigError("complementary model spec is complementary:<nu>");
      const double v = std::stod(parts[1]);
      return {make_params(Series::Complementary, Complex{v, 0.0}, Parity::Plus,
                          std::max(gap, std::abs(v))),
              spec};
    }
    if (parts[0] == "discrete") {
      if (parts.size() != 2) throw ConfigError("discrete model spec is discrete:<integer nu>");
      const double v = std::stod(parts[1]);
      if (v == 0.0 || v != std::floor(v)) {
        throw ConfigError("discrete nu must be a nonzero integer");
      }
      const Series s = v > 0 ? Series::DiscreteHolomorphic : Series::DiscreteAntiholomorphic;
      const Parity d = v > 0 ? Parity::Plus : Parity::Minus;
      return {make_params(s, Complex{v, 0.0}, d, gap), spec};
    }
  } catch (const ModelError& e) {
    throw ConfigError("model spec '" + spec + "': " + e.what());
  } catch (const std::invalid_argument&) {
    throw ConfigError("model spec '" + spec + "': bad number");
  }
  throw ConfigError("unknown model kind in '" + spec + "'");
}

void RunConfig::validate() const {
  if (models.empty()) throw ConfigError("model grid is empty");
  if (m_grid.empty()) throw ConfigError("m grid is empty");
  for (double m : m_grid) {
    if (m == 0.0) throw ConfigError("m grid must avoid 0 (untwisted case)");
  }
  if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
  if (truncation < 8) throw ConfigError("truncation radius too small");
  if (num_g < 1 || support_radius < 2) throw ConfigError("bad data generation sizes");
  if (growth_lo < 4 || growth_hi <= growth_lo) throw ConfigError("bad growth range");
  for (double t : sobolev_orders) {
    if (t < 0.0) throw ConfigError("Sobolev orders must be >= 0");
  }
}

RunConfig default_config() {
  RunConfig c;
  const char* specs[] = {"principal:+:1", "principal:-:1", "principal:+:2",
                         "principal:-:2", "complementary:0.3", "complementary:-0.6",
                         "discrete:1",    "discrete:2",      "discrete:5"};
  for (const char* s : specs) c.models.push_back(parse_model_spec(s, c.gap));
  return c;
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::istringstream is(text);
  std::string line;
  std::string model_line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "models") model_line = val;
    else if (key == "m_grid") c.m_grid = parse_reals(val, key);
    else if (key == "n_max") c.n_max = static_cast<int>(parse_one_real(val, key));
    else if (key == "growth_range") {
      const auto v = parse_reals(val, key);
      if (v.size() != 2) throw ConfigError("growth_range takes two values");
      c.growth_lo = static_cast<int>(v[0]);
      c.growth_hi = static_cast<int>(v[1]);
    } else if (key == "sobolev_orders") c.sobolev_orders = parse_reals(val, key);
    else if (key == "truncation") c.truncation = static_cast<int>(parse_one_real(val, key));
    else if (key == "tol") c.tol = parse_one_real(val, key);
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_one_real(val, key));
    else if (key == "out") c.out = val;
    else if (key == "support_radius") c.support_radius = static_cast<int>(parse_one_real(val, key));
    else if (key == "num_g") c.num_g = static_cast<int>(parse_one_real(val, key));
    else if (key == "gap") c.gap = parse_one_real(val, key);
    else if (key == "threads") c.threads = static_cast<int>(parse_one_real(val, key));
    else throw ConfigError("unknown key '" + key + "'");
  }
  if (model_line.empty()) {
    c.models = default_config().models;
  } else {
    for (const auto& spec : split(model_line, ',')) {
      c.models.push_back(parse_model_spec(spec, c.gap));
    }
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace twisteq
