#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "twisteq/obstructions.hpp"
#include "twisteq/solver.hpp"

namespace twisteq {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wire format:
//   {"series": "principal", "nu": [re, im], "delta": "+", "entries":
//    [[k, re, im], ...]}
// entries sorted by k; doubles round-trip exactly. Complementary parameters
// reload with gap = |nu|.
nlohmann::json coeff_to_json(const CoeffVector& f);
CoeffVector coeff_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const RepParams& p);
RepParams params_from_json(const nlohmann::json& j);

void save_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json load_json(const std::filesystem::path& path);

nlohmann::json obstruction_report_to_json(const ObstructionReport& r);
nlohmann::json split_report_to_json(const SplitReport& r);
nlohmann::json solve_result_to_json(const SolveResult& r, double m);
nlohmann::json one_sided_result_to_json(const OneSidedResult& r, double m);

// Deterministic CSV emission: doubles print as shortest round-trip ("%.17g").
class CsvWriter {
 public:
  explicit CsvWriter(std::string header) : buf_(std::move(header)) { buf_ += '\n'; }

  void field(const std::string& s);
  void field(const char* s) { field(std::string(s)); }
  void field(double v);
  void field(int v) { field_raw(std::to_string(v)); }
  void field(bool v) { field_raw(v ? "1" : "0"); }
  void end_row();

  const std::string& str() const { return buf_; }
  void write(const std::filesystem::path& path) const;

 private:
  void field_raw(const std::string& s);
  std::string buf_;
  bool row_open_ = false;
};

std::string format_double(double v);

}  // namespace twisteq
