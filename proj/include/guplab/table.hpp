#pragma once

#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace guplab {

using Cell = std::variant<double, long long, std::string>;

// Columnar result table with a meta block (echoed configuration) and an
// optional footer of named scalars.  Serialization is deterministic: doubles
// are printed with 17 significant digits and no locale or timestamp leaks in.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::map<std::string, Cell> meta;
  std::vector<std::pair<std::string, Cell>> footer;

  void add_row(std::vector<Cell> row);
};

std::string format_double(double v);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);

}  // namespace guplab
