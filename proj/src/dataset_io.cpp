#include "secrecy/dataset_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace secrecy {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool needs_series_column(const Dataset& data) {
  for (const auto& row : data.rows)
    if (!row.series.empty()) return true;
  return false;
}

}  // namespace

const char* unit_name(RateUnit unit) { return unit == RateUnit::Bits ? "bits" : "nats"; }

double convert_rate(double nats, RateUnit unit) {
  constexpr double ln2 = 0.69314718055994530942;
  return unit == RateUnit::Bits ? nats / ln2 : nats;
}

std::string dataset_to_csv(const Dataset& data, RateUnit unit, bool with_jensen) {
  const bool series = needs_series_column(data);
  std::string out;
  // Resolved experiment echo rides along as a comment so the file is
  // self-describing; parsers should skip '#' lines.
  out += "# spec: " + (data.meta_json.empty() ? std::string("{}") : data.meta_json) +
         " unit: " + unit_name(unit) + "\n";
  if (series) out += "series,";
  out += "point,mc_mean,mc_stderr,analytic,trials";
  if (with_jensen) out += ",jensen";
  out += "\n";
  for (const auto& row : data.rows) {
    if (series) {
      out += row.series;
      out += ',';
    }
    out += fmt(row.point);
    out += ',';
    out += fmt(convert_rate(row.mc_mean, unit));
    out += ',';
    out += fmt(convert_rate(row.mc_stderr, unit));
    out += ',';
    out += fmt(convert_rate(row.analytic, unit));
    out += ',';
    out += std::to_string(row.trials);
    if (with_jensen) {
      out += ',';
      out += fmt(convert_rate(row.jensen, unit));
    }
    out += '\n';
  }
  return out;
}

std::string dataset_to_json(const Dataset& data, RateUnit unit, bool with_jensen) {
  nlohmann::json doc;
  doc["spec"] = nlohmann::json::parse(data.meta_json.empty() ? "{}" : data.meta_json);
  doc["unit"] = unit_name(unit);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : data.rows) {
    nlohmann::json r;
    if (!row.series.empty()) r["series"] = row.series;
    r["point"] = row.point;
    r["mc_mean"] = convert_rate(row.mc_mean, unit);
    r["mc_stderr"] = convert_rate(row.mc_stderr, unit);
    if (std::isnan(row.analytic))
      r["analytic"] = nullptr;
    else
      r["analytic"] = convert_rate(row.analytic, unit);
    r["trials"] = row.trials;
    if (with_jensen) r["jensen"] = convert_rate(row.jensen, unit);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + path.string());
  os << contents;
  if (!os) throw std::runtime_error("failed writing output file " + path.string());
}

}  // namespace secrecy
