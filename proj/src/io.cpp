#include "twisteq/io.hpp"

#include <cstdio>
#include <fstream>

namespace twisteq {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("expected [re, im] pair");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

Series series_from_string(const std::string& s) {
  if (s == "principal") return Series::Principal;
  if (s == "complementary") return Series::Complementary;
  if (s == "discrete_holomorphic") return Series::DiscreteHolomorphic;
  if (s == "discrete_antiholomorphic") return Series::DiscreteAntiholomorphic;
  throw FormatError("unknown series '" + s + "'");
}

}  // namespace

json params_to_json(const RepParams& p) {
  return json{{"series", to_string(p.series())},
              {"nu", complex_to_json(p.nu())},
              {"delta", to_string(p.delta())}};
}

RepParams params_from_json(const json& j) {
  const Series series = series_from_string(j.at("series").get<std::string>());
  const Complex nu = complex_from_json(j.at("nu"));
  const std::string d = j.at("delta").get<std::string>();
  if (d != "+" && d != "-") throw FormatError("delta must be '+' or '-'");
  const Parity delta = d == "+" ? Parity::Plus : Parity::Minus;
  double gap = 0.9;
  if (series == Series::Complementary) gap = std::abs(nu.real());
  try {
    return make_params(series, nu, delta, gap);
  } catch (const ModelError& e) {
    throw FormatError(std::string("invalid model parameters: ") + e.what());
  }
}

json coeff_to_json(const CoeffVector& f) {
  json j = params_to_json(f.params());
  json entries = json::array();
  for (const auto& [k, v] : f.entries()) {
    entries.push_back(json::array({k, v.real(), v.imag()}));
  }
  j["entries"] = std::move(entries);
  return j;
}

CoeffVector coeff_from_json(const json& j) {
  CoeffVector f(params_from_json(j));
  const auto& entries = j.at("entries");
  if (!entries.is_array()) throw FormatError("entries must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) {
      throw FormatError("entry must be [k, re, im]");
    }
    const int k = e[0].get<int>();
    try {
      f.set(k, Complex{e[1].get<double>(), e[2].get<double>()});
    } catch (const ModelError&) {
      throw FormatError("entry index " + std::to_string(k) +
                        " lies outside the model index set");
    }
  }
  return f;
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

json obstruction_report_to_json(const ObstructionReport& r) {
  json values = json::object();
  for (const auto& [n, v] : r.values) values[std::to_string(n)] = complex_to_json(v);
  return json{{"values", values}, {"order", r.order}};
}

json split_report_to_json(const SplitReport& r) {
  return json{{"n", r.n},
              {"g_tilde", coeff_to_json(r.g_tilde)},
              {"closed_form", {{"E1", complex_to_json(r.closed_E1)},
                               {"E2", complex_to_json(r.closed_E2)}}},
              {"agreement", {{"E1", r.agree_E1}, {"E2", r.agree_E2}}},
              {"off_support_residue", r.off_support_residue}};
}

namespace {

json tame_pairs_to_json(const std::vector<TamePair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back(json::array({p.t, p.lhs, p.rhs}));
  return out;
}

}  // namespace

json solve_result_to_json(const SolveResult& r, double m) {
  json j{{"m", m},
         {"f", coeff_to_json(r.f)},
         {"obstructions", obstruction_report_to_json(r.obstructions)},
         {"residual", r.residual},
         {"residual_scale", r.residual_scale},
         {"tame_pairs", tame_pairs_to_json(r.tame_pairs)}};
  if (!r.mode_pairs.empty()) {
    json mp = json::array();
    for (const auto& p : r.mode_pairs) {
      mp.push_back(json::array({p.n, p.mode_norm, p.tail_norm, p.rhs_theta3,
                                p.rhs_theta5}));
    }
    j["mode_pairs"] = std::move(mp);
  }
  return j;
}

json one_sided_result_to_json(const OneSidedResult& r, double m) {
  return json{{"m", m},
              {"f_tilde", coeff_to_json(r.f_tilde)},
              {"split", split_report_to_json(r.split)},
              {"f_pairs", tame_pairs_to_json(r.f_pairs)},
              {"g_pairs", tame_pairs_to_json(r.g_pairs)}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CsvWriter::field_raw(const std::string& s) {
  if (row_open_) buf_ += ',';
  buf_ += s;
  row_open_ = true;
}

void CsvWriter::field(const std::string& s) { field_raw(s); }

void CsvWriter::field(double v) { field_raw(format_double(v)); }

void CsvWriter::end_row() {
  buf_ += '\n';
  row_open_ = false;
}

void CsvWriter::write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out << buf_;
}

}  // namespace twisteq
