#pragma once

#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eos {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// CSV file with a '#' provenance line, a header row and LF line endings.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& provenance, const std::vector<std::string>& header);

    void row(std::span<const double> values);
    /// Empty optionals become empty cells.
    void row(std::span<const std::optional<double>> values);
    void row_text(const std::vector<std::string>& cells);
    void flush() { out_.flush(); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
    std::size_t columns_;
};

}  // namespace eos
