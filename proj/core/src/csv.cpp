#include "tprabi/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tprabi/types.hpp"

namespace tprabi {

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {
  if (header_.empty()) throw InvalidParameter("CsvTable: empty header");
}

void CsvTable::push_row(std::vector<Cell> cells) {
  if (cells.size() != header_.size())
    throw InvalidParameter("CsvTable: row arity does not match header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::format_cell(const Cell& cell) {
  if (std::holds_alternative<std::string>(cell))
    return std::get<std::string>(cell);
  if (std::holds_alternative<long long>(cell))
    return std::to_string(std::get<long long>(cell));
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(cell));
  return buf;
}

std::string CsvTable::to_string() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

void CsvTable::write(std::ostream& os) const {
  for (std::size_t k = 0; k < header_.size(); ++k) {
    if (k) os << ',';
    os << header_[k];
  }
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ',';
      os << format_cell(row[k]);
    }
    os << '\n';
  }
}

void CsvTable::write_path(const std::string& path) const {
  if (path == "-" || path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParameter("CsvTable: cannot open " + path);
  write(file);
}

}  // namespace tprabi
