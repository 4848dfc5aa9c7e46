#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace crosswash::csv {

using Row = std::vector<std::string>;

/// In-memory CSV document: a header row plus data rows, all with the same arity.
struct Table {
    Row header;
    std::vector<Row> rows;

    std::size_t column(std::string_view name) const;  // throws ValidationError if absent
};

/// Strict RFC-4180-style reader: comma delimiter, double-quote escaping,
/// CRLF tolerated, header row required, uniform arity enforced.
/// Throws ParseError with 1-based line/column on any violation.
Table read_string(std::string_view text, const std::string& origin);
Table read_file(const std::filesystem::path& path);

std::string escape(std::string_view field);
std::string to_string(const Table& table);
void write_file(const std::filesystem::path& path, const Table& table);

/// Whole-field numeric parsing; throws ParseError quoting the offending text.
double parse_double(std::string_view field, const std::string& origin, std::size_t line,
                    std::size_t column);
long long parse_int(std::string_view field, const std::string& origin, std::size_t line,
                    std::size_t column);

}  // namespace crosswash::csv
