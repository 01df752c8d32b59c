#ifndef DSR_ERRORS_HPP
#define DSR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dsr {

// Operation invoked on the wrong graph mode (directed/undirected/colored).
struct VariantError : std::runtime_error {
    explicit VariantError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotADagError : std::runtime_error {
    explicit NotADagError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition failed; the message names the failed check.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Search or sweep exceeded its configured budget. Never a silent answer.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace dsr

#endif
