#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace thinseq::app {

/// A value with its error bar. Missing quantities (no inner function, or a row
/// whose computation failed) are empty optionals.
struct Measured {
  double value = 0.0;
  double error = 0.0;
  friend bool operator==(const Measured& a, const Measured& b);
};

using Cell = std::optional<Measured>;

struct SweepRow {
  std::size_t n = 0;
  Cell delta_min;
  Cell c_lower;   // c_N
  Cell c_upper;   // C_N
  Cell carleson_mu;
  Cell r2_nu;
  Cell kappa;
  Cell carleson_theta;
  Cell r2_theta;
  Cell eis_hardy;
  Cell eis_model;
  std::string status = "ok";

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepReport {
  std::string sequence;  // generator description
  std::string theta;     // inner function description, empty for Hardy only
  std::size_t cutoff = 0;
  std::vector<SweepRow> rows;

  bool has_errors() const;
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Column names of the quantities, in CSV order; each is followed by "<name>_err".
inline constexpr std::array<const char*, 10> kSweepQuantities{
    "delta_min", "c_N", "C_N", "C_mu", "R2_nu", "kappa_N", "C_theta", "R2_theta", "eis_H2", "eis_K"};

std::string csv_header();
std::string to_csv(const SweepReport& r);

nlohmann::json to_json(const SweepReport& r);
SweepReport sweep_from_json(const nlohmann::json& j);

/// Doubles as JSON: finite values are numbers, others the strings "nan", "inf", "-inf".
nlohmann::json number_to_json(double v);
double number_from_json(const nlohmann::json& j);

/// Shortest round-trip formatting shared by every text output.
std::string format_double(double v);

}  // namespace thinseq::app
