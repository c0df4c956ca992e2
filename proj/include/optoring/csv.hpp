// csv.hpp — deterministic CSV emission (12 significant digits, fixed column
// order, header always present).
#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace optoring {

std::string format_float(double v);  // %.12g

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);

    void write_row(const std::vector<double>& values);
    void write_row_mixed(const std::vector<std::string>& values);
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::ofstream out_;
    size_t n_cols_;
};

}  // namespace optoring
