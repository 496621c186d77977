#pragma once

#include <string>
#include <vector>

namespace nf {

// Formats a double so that reading it back reproduces the same bits.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> comments;  // leading '#' lines, kept verbatim
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t col_index(const std::string& name) const;
};

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

}  // namespace nf
