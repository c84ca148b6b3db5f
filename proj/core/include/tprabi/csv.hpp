#ifndef TPRABI_CSV_HPP
#define TPRABI_CSV_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace tprabi {

// Rectangular CSV table. Complex quantities are always split into re_/im_
// column pairs by the producers; cells are formatted with "%.17g" using '.'
// as the decimal separator, independent of any locale. Identical content
// serializes to identical bytes.
class CsvTable {
 public:
  using Cell = std::variant<double, long long, std::string>;

  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<Cell>& row(std::size_t i) const { return rows_[i]; }

  // Throws InvalidParameter if the arity does not match the header.
  void push_row(std::vector<Cell> cells);

  std::string to_string() const;
  void write(std::ostream& os) const;
  // "-" writes to stdout.
  void write_path(const std::string& path) const;

  static std::string format_cell(const Cell& cell);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace tprabi

#endif  // TPRABI_CSV_HPP
