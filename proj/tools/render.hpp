#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fibdens::cli {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_format(std::string_view name);

/// 12 significant digits, trailing zeros kept, "C" decimal point.
std::string format_float(double value);

/// Minimal CSV document: leading "# " comment lines, one header row, data
/// rows. Fields never contain commas or quotes, so no escaping is done.
struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render() const;
    static CsvTable parse(std::string_view text);
};

/// Whitespace-aligned columns for human reading.
std::string render_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace fibdens::cli
