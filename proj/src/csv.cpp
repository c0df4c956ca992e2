#include "optoring/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace optoring {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns)
    : path_(path), out_(path), n_cols_(columns.size()) {
    if (!out_) throw std::runtime_error("cannot write " + path);
    for (size_t i = 0; i < columns.size(); ++i)
        out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::write_row(const std::vector<double>& values) {
    if (values.size() != n_cols_)
        throw std::runtime_error("column count mismatch in " + path_);
    for (size_t i = 0; i < values.size(); ++i)
        out_ << format_float(values[i]) << (i + 1 < values.size() ? "," : "\n");
    if (!out_) throw std::runtime_error("write failure on " + path_);
}

void CsvWriter::write_row_mixed(const std::vector<std::string>& values) {
    if (values.size() != n_cols_)
        throw std::runtime_error("column count mismatch in " + path_);
    for (size_t i = 0; i < values.size(); ++i)
        out_ << values[i] << (i + 1 < values.size() ? "," : "\n");
    if (!out_) throw std::runtime_error("write failure on " + path_);
}

}  // namespace optoring
