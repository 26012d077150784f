#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coauth {

/// Malformed input data. Carries the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A metric was requested on a graph where it is undefined (too few nodes,
/// disconnected input where connectivity is required, and so on).
class MetricError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative solver failed to converge within its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

/// Two artifacts that must share parameters (seeds, sample sizes, schemes)
/// were produced under different ones.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lookup of an author or node that does not exist.
class NotFoundError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace coauth
