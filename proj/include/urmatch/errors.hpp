#ifndef URMATCH_ERRORS_HPP
#define URMATCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace urmatch {

// Raised by the file-format parsers; line numbers are 1-based physical lines.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Typed refusal from the exhaustive routines: the instance exceeds a size or
// time cap. Never a silent partial answer.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace urmatch

#endif // URMATCH_ERRORS_HPP
