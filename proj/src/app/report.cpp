#include "thinseq/app/report.hpp"

#include <cmath>
#include <charconv>
#include <limits>
#include <sstream>

namespace thinseq::app {

namespace {

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

std::array<const Cell*, 10> cells(const SweepRow& r) {
  return {&r.delta_min, &r.c_lower,        &r.c_upper,  &r.carleson_mu, &r.r2_nu,
          &r.kappa,     &r.carleson_theta, &r.r2_theta, &r.eis_hardy,   &r.eis_model};
}

std::array<Cell*, 10> cells(SweepRow& r) {
  return {&r.delta_min, &r.c_lower,        &r.c_upper,  &r.carleson_mu, &r.r2_nu,
          &r.kappa,     &r.carleson_theta, &r.r2_theta, &r.eis_hardy,   &r.eis_model};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool operator==(const Measured& a, const Measured& b) {
  return same(a.value, b.value) && same(a.error, b.error);
}

bool SweepReport::has_errors() const {
  for (const auto& r : rows)
    if (r.status != "ok") return true;
  return false;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_header() {
  std::string h = "N";
  for (const char* q : kSweepQuantities) {
    h += ",";
    h += q;
    h += ",";
    h += q;
    h += "_err";
  }
  return h + ",status";
}

std::string to_csv(const SweepReport& r) {
  std::ostringstream out;
  out << csv_header() << "\n";
  for (const auto& row : r.rows) {
    out << row.n;
    for (const Cell* c : cells(row)) {
      if (*c)
        out << "," << format_double((*c)->value) << "," << format_double((*c)->error);
      else
        out << ",,";
    }
    out << "," << csv_escape(row.status) << "\n";
  }
  return out.str();
}

nlohmann::json number_to_json(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double number_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw std::invalid_argument("not a number: " + s);
}

nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json j;
  j["sequence"] = r.sequence;
  j["theta"] = r.theta;
  j["cutoff"] = r.cutoff;
  j["columns"] = nlohmann::json::array();
  for (const char* q : kSweepQuantities) j["columns"].push_back(q);
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json jr;
    jr["N"] = row.n;
    const auto cs = cells(row);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const Cell& c = *cs[i];
      jr[kSweepQuantities[i]] = c ? nlohmann::json{{"value", number_to_json(c->value)},
                                                  {"error", number_to_json(c->error)}}
                                  : nlohmann::json(nullptr);
    }
    jr["status"] = row.status;
    j["rows"].push_back(std::move(jr));
  }
  return j;
}

SweepReport sweep_from_json(const nlohmann::json& j) {
  SweepReport r;
  r.sequence = j.at("sequence").get<std::string>();
  r.theta = j.at("theta").get<std::string>();
  r.cutoff = j.at("cutoff").get<std::size_t>();
  for (const auto& jr : j.at("rows")) {
    SweepRow row;
    row.n = jr.at("N").get<std::size_t>();
    auto cs = cells(row);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& jc = jr.at(kSweepQuantities[i]);
      if (!jc.is_null())
        *cs[i] = Measured{number_from_json(jc.at("value")), number_from_json(jc.at("error"))};
    }
    row.status = jr.at("status").get<std::string>();
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace thinseq::app
