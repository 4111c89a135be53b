#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "olapcube/cube.hpp"

namespace olapcube {

// A parsed CSV document: header row plus data rows, all strings.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const CsvTable&) const = default;
};

// RFC 4180 subset: comma separator, first line is the header, quoted fields
// with doubled quotes, LF or CRLF line endings. Every data row must have
// header arity. Blank lines are skipped.
CsvTable parse_csv(const std::string& text);

CsvTable read_csv_file(const std::filesystem::path& path);

// Writes with `\n` endings, quoting fields only when they need it.
std::string write_csv(const CsvTable& table);

// Binds a CSV to a cube: dimensions are every column except the measure
// column (the last column when `measure` is empty), measure values must be
// non-negative integers.
FactTable fact_table_from_csv(const CsvTable& csv, const std::string& measure = "");

// Cube back to CSV: dimension columns then the measure, cells in key order.
CsvTable fact_table_to_csv(const FactTable& facts);

DetailStore detail_store_from_csv(const CsvTable& csv);

}  // namespace olapcube
