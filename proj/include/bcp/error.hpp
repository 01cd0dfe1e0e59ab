#pragma once

#include <stdexcept>
#include <string>

namespace bcp {

enum class ErrorCode {
    syntax_error,
    negative_time,
    negative_weight,
    non_positive_speed,
    duplicate_point,
    shared_endpoint,
    empty_input,
    duplicate_rank,
    unknown_id,
    invalid_interval,
    cyclic_pred,
    not_a_path,
    too_large,
    not_crossing,
    uncoverable,
    invariant_breach,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Input-file problems carry a 1-based line/column.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, int line, int column, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                          ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace bcp
