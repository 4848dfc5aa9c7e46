#include "crosswash/csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "crosswash/errors.hpp"

namespace crosswash::csv {
namespace {

struct Parser {
    std::string_view text;
    std::string origin;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(origin, line, column, what);
    }

    // Reads one record (until unquoted newline or EOF). Returns false when the
    // input is exhausted before any character is seen.
    bool read_record(Row& out) {
        out.clear();
        if (eof()) {
            return false;
        }
        std::string field;
        bool quoted = false;
        bool saw_quote_end = false;  // field was quoted and the quote is closed
        while (true) {
            if (eof()) {
                if (quoted) {
                    fail("unterminated quoted field");
                }
                out.push_back(std::move(field));
                return true;
            }
            char c = peek();
            if (quoted) {
                advance();
                if (c == '"') {
                    if (!eof() && peek() == '"') {
                        advance();
                        field.push_back('"');
                    } else {
                        quoted = false;
                        saw_quote_end = true;
                    }
                } else {
                    field.push_back(c);
                }
                continue;
            }
            if (c == ',') {
                advance();
                out.push_back(std::move(field));
                field.clear();
                saw_quote_end = false;
                continue;
            }
            if (c == '\r') {
                advance();
                if (eof() || peek() != '\n') {
                    fail("bare carriage return");
                }
                continue;  // consume the \n next
            }
            if (c == '\n') {
                advance();
                out.push_back(std::move(field));
                return true;
            }
            if (c == '"') {
                if (!field.empty() || saw_quote_end) {
                    fail("unexpected quote inside unquoted field");
                }
                advance();
                quoted = true;
                continue;
            }
            advance();
            field.push_back(c);
        }
    }
};

bool is_blank(const Row& row) {
    return row.size() == 1 && row[0].empty();
}

}  // namespace

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw ValidationError("missing column '" + std::string(name) + "'");
}

Table read_string(std::string_view text, const std::string& origin) {
    Parser parser{text, origin};
    Table table;
    Row record;
    if (!parser.read_record(record) || is_blank(record)) {
        throw ParseError(origin, 1, 1, "empty file (header row required)");
    }
    table.header = std::move(record);
    std::size_t record_line = parser.line;
    while (parser.read_record(record)) {
        if (is_blank(record)) {  // tolerate a trailing newline
            record_line = parser.line;
            continue;
        }
        if (record.size() != table.header.size()) {
            throw ParseError(origin, record_line, 1,
                             "expected " + std::to_string(table.header.size()) + " fields, got " +
                                 std::to_string(record.size()));
        }
        table.rows.push_back(std::move(record));
        record_line = parser.line;
    }
    return table;
}

Table read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_string(buffer.str(), path.string());
}

std::string escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) {
        return std::string(field);
    }
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

namespace {
void append_row(std::string& out, const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += escape(row[i]);
    }
    out.push_back('\n');
}
}  // namespace

std::string to_string(const Table& table) {
    std::string out;
    append_row(out, table.header);
    for (const Row& row : table.rows) {
        append_row(out, row);
    }
    return out;
}

void write_file(const std::filesystem::path& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << to_string(table);
}

double parse_double(std::string_view field, const std::string& origin, std::size_t line,
                    std::size_t column) {
    std::string buffer(field);
    errno = 0;
    char* end = nullptr;
    double value = std::strtod(buffer.c_str(), &end);
    if (buffer.empty() || end != buffer.c_str() + buffer.size() || errno == ERANGE) {
        throw ParseError(origin, line, column, "not a number: '" + buffer + "'");
    }
    return value;
}

long long parse_int(std::string_view field, const std::string& origin, std::size_t line,
                    std::size_t column) {
    std::string buffer(field);
    errno = 0;
    char* end = nullptr;
    long long value = std::strtoll(buffer.c_str(), &end, 10);
    if (buffer.empty() || end != buffer.c_str() + buffer.size() || errno == ERANGE) {
        throw ParseError(origin, line, column, "not an integer: '" + buffer + "'");
    }
    return value;
}

}  // namespace crosswash::csv
