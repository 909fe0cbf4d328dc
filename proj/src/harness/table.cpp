#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "tcdyn/harness.hpp"
#include "tcdyn/version.hpp"

namespace tcdyn::harness {

void Table::add(std::string column, std::vector<double> values) {
  if (!columns.empty() && values.size() != rows()) throw std::invalid_argument("column '" + column + "' has wrong length");
  columns.push_back(std::move(column));
  numeric.push_back(std::move(values));
  text.emplace_back();
}

void Table::add_text(std::string column, std::vector<std::string> values) {
  if (!columns.empty() && values.size() != rows()) throw std::invalid_argument("column '" + column + "' has wrong length");
  columns.push_back(std::move(column));
  numeric.emplace_back();
  text.push_back(std::move(values));
}

std::size_t Table::rows() const {
  if (columns.empty()) return 0;
  return text[0].empty() ? numeric[0].size() : text[0].size();
}

const std::vector<double>& Table::column(const std::string& col) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == col && text[i].empty()) return numeric[i];
  throw std::out_of_range("table " + name + " has no numeric column '" + col + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& t) {
  std::string out = "# tcdyn v" + std::string(kVersion) + " scenario=" + t.scenario + "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  const std::size_t n = t.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) out += ',';
      out += t.text[c].empty() ? format_number(t.numeric[c][r]) : t.text[c][r];
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json doc;
  doc["tcdyn"] = kVersion;
  doc["scenario"] = t.scenario;
  doc["table"] = t.name;
  doc["columns"] = t.columns;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (!t.text[c].empty()) {
      data[t.columns[c]] = t.text[c];
      continue;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (double v : t.numeric[c]) {
      if (std::isfinite(v)) arr.push_back(v);
      else arr.push_back(format_number(v));
    }
    data[t.columns[c]] = std::move(arr);
  }
  doc["data"] = std::move(data);
  return doc.dump(1) + "\n";
}

}  // namespace tcdyn::harness
