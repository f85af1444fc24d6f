#pragma once

#include <stdexcept>
#include <string>

namespace resint {

// Error taxonomy mirrored by the CLI exit codes:
//   hypothesis_error -> 1, parse_error -> 2, resource_limit_error -> 3,
//   internal_check_error -> 4. Everything else is a plain invalid_argument-style
//   usage error and also maps to 2 at the CLI boundary.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class ring_mismatch_error : public error {
public:
    explicit ring_mismatch_error(const std::string& what) : error(what) {}
};

class parse_error : public error {
public:
    parse_error(const std::string& what, int line, int column)
        : error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class resource_limit_error : public error {
public:
    explicit resource_limit_error(const std::string& what) : error(what) {}
};

// A stated hypothesis of a theorem-backed pipeline step failed.
class hypothesis_error : public error {
public:
    explicit hypothesis_error(const std::string& what) : error(what) {}
};

// Two independent code paths that must agree disagreed.
class internal_check_error : public error {
public:
    explicit internal_check_error(const std::string& what) : error(what) {}
};

}  // namespace resint
