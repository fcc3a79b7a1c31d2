#include "guplab/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace guplab {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("Table: row width does not match column count");
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "divergent";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  return std::get<std::string>(c);
}

nlohmann::json cell_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (std::isnan(v)) return "divergent";
    return v;
  }
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(const Table& table, std::ostream& os) {
  for (const auto& [key, value] : table.meta) os << "# " << key << "=" << cell_text(value) << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << table.columns[i] << (i + 1 < table.columns.size() ? "," : "");
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << cell_text(row[i]) << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
  for (const auto& [key, value] : table.footer) os << "# " << key << "=" << cell_text(value) << "\n";
}

void write_json(const Table& table, std::ostream& os) {
  nlohmann::json j;
  j["name"] = table.name;
  j["meta"] = nlohmann::json::object();
  for (const auto& [key, value] : table.meta) j["meta"][key] = cell_json(value);
  j["columns"] = table.columns;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& c : row) jr.push_back(cell_json(c));
    j["rows"].push_back(jr);
  }
  if (!table.footer.empty()) {
    j["footer"] = nlohmann::json::object();
    for (const auto& [key, value] : table.footer) j["footer"][key] = cell_json(value);
  }
  os << j.dump(2) << "\n";
}

}  // namespace guplab
