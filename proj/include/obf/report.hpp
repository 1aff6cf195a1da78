#pragma once

#include <charconv>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace obf {

// Shortest round-trip decimal form of a double: the same value always
// produces the same bytes, which is what makes reports reproducible.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

// CSV with `# key=value` metadata lines before the header.  Metadata must
// carry everything needed to reproduce the run (parameters, seed, version)
// and nothing volatile (timestamps, worker counts), so identical runs give
// identical bytes.
class CsvReport {
  public:
    void add_metadata(std::string key, std::string value) {
        metadata_.emplace_back(std::move(key), std::move(value));
    }
    void add_metadata(std::string key, double value) {
        metadata_.emplace_back(std::move(key), format_double(value));
    }
    void set_header(std::vector<std::string> columns) { header_ = std::move(columns); }
    void add_row(std::vector<double> row) {
        if (row.size() != header_.size())
            throw std::logic_error("CsvReport: row arity does not match header");
        rows_.push_back(std::move(row));
    }

    const std::vector<std::pair<std::string, std::string>>& metadata() const { return metadata_; }
    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    void write(std::ostream& os) const {
        for (const auto& [k, v] : metadata_)
            os << "# " << k << "=" << v << "\n";
        for (std::size_t i = 0; i < header_.size(); ++i)
            os << (i ? "," : "") << header_[i];
        os << "\n";
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << format_double(row[i]);
            os << "\n";
        }
    }

  private:
    std::vector<std::pair<std::string, std::string>> metadata_;
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

} // namespace obf
