#include "eos/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace eos {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc{}) {
        throw std::runtime_error("cannot format double");
    }
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path, const std::string& provenance, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), columns_(header.size()) {
    if (!out_) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out_ << '#' << ' ' << provenance << '\n';
    row_text(header);
}

void CsvWriter::row_text(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) {
        throw std::invalid_argument("csv row width does not match header in " + path_);
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) {
            out_ << ',';
        }
        out_ << cells[k];
    }
    out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) {
        cells.push_back(format_double(v));
    }
    row_text(cells);
}

void CsvWriter::row(std::span<const std::optional<double>> values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (const auto& v : values) {
        cells.push_back(v ? format_double(*v) : std::string());
    }
    row_text(cells);
}

}  // namespace eos
