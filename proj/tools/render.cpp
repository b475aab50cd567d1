#include "render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fibdens::cli {

OutputFormat parse_format(std::string_view name)
{
    if (name == "table") {
        return OutputFormat::Table;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string format_float(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.12g", value);
    return buf;
}

namespace {

std::vector<std::string> split_fields(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

void join_fields(std::string& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += fields[i];
    }
    out += '\n';
}

}  // namespace

std::string CsvTable::render() const
{
    std::string out;
    for (const auto& c : comments) {
        out += "# " + c + "\n";
    }
    join_fields(out, header);
    for (const auto& row : rows) {
        join_fields(out, row);
    }
    return out;
}

CsvTable CsvTable::parse(std::string_view text)
{
    CsvTable table;
    bool have_header = false;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const auto line = text.substr(start, end - start);
        start = end + 1;
        if (!have_header && line.starts_with("# ")) {
            table.comments.emplace_back(line.substr(2));
        } else if (!have_header) {
            table.header = split_fields(line);
            have_header = true;
        } else {
            table.rows.push_back(split_fields(line));
        }
    }
    if (!have_header) {
        throw std::invalid_argument("csv: missing header row");
    }
    return table;
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                line += "  ";
            }
            line += row[c];
            if (c + 1 < row.size()) {
                line.append(widths[c] - row[c].size(), ' ');
            }
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace fibdens::cli
