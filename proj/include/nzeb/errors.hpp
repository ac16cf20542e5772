// errors.hpp -- error taxonomy shared by all modules
//
// domain_error  bad argument values (outside the documented domain)
// parse_error   malformed input file; carries file and 1-based line/row
// design_error  structurally infeasible design (e.g. empty string-sizing window)
//
// The CLI maps these to exit codes 2 (domain/parse), 3 (design), 1 (anything else).

#pragma once

#include <stdexcept>
#include <string>

namespace nzeb {

class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class design_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::string file, long line, const std::string& msg)
        : std::runtime_error(file + (line > 0 ? ":" + std::to_string(line) : "") + ": " + msg),
          file_(std::move(file)), line_(line) {}

    const std::string& file() const { return file_; }
    long line() const { return line_; }  // 0 when unknown

private:
    std::string file_;
    long line_;
};

} // namespace nzeb
