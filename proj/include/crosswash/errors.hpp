#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace crosswash {

// Base for every failure caused by bad input or configuration. The CLI maps
// these to exit code 2; anything else escaping is an internal error (exit 1).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::string origin, std::size_t line, std::size_t column, const std::string& what)
        : Error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          origin_(std::move(origin)), line_(line), column_(column) {}

    const std::string& origin() const noexcept { return origin_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string origin_;
    std::size_t line_;
    std::size_t column_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class OutOfRangeLevel : public ValidationError {
public:
    OutOfRangeLevel(const std::string& field, long long value)
        : ValidationError(field + " level " + std::to_string(value) + " is outside 0-5") {}
};

class DuplicateCode : public ValidationError {
public:
    explicit DuplicateCode(std::string code)
        : ValidationError("duplicate activity code '" + code + "'"), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class MissingAttribute : public ValidationError {
public:
    explicit MissingAttribute(std::string code)
        : ValidationError("no attribute row for activity code '" + code + "'"), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class CriteriaMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MissingValue : public ValidationError {
public:
    MissingValue(std::string code, std::string criterion)
        : ValidationError("activity '" + code + "' has no value for criterion '" + criterion + "'"),
          code_(std::move(code)), criterion_(std::move(criterion)) {}
    const std::string& code() const noexcept { return code_; }
    const std::string& criterion() const noexcept { return criterion_; }

private:
    std::string code_;
    std::string criterion_;
};

}  // namespace crosswash
