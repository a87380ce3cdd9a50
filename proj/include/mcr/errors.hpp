#ifndef MCR_ERRORS_HPP_
#define MCR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mcr {

/// Input file could not be opened or read.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input (edge-list line, CLI table, ...). Carries file/line context
/// in the message and, when applicable, the 1-based line number.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A lattice resource budget (max level, max cores, wall clock) was exceeded.
/// Distinct from success: no partial lattice is ever returned silently.
class ResourceBudgetError : public std::runtime_error {
public:
    explicit ResourceBudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A correlation or similar statistic is undefined for the given input
/// (constant vector, no defined layer pairs, degenerate fit data).
class UndefinedMetricError : public std::runtime_error {
public:
    explicit UndefinedMetricError(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative solver failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Configuration-model wiring could not realize a degree sequence as a simple
/// graph within the rewiring budget.
class InfeasibleDegreeError : public std::runtime_error {
public:
    explicit InfeasibleDegreeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcr

#endif  // MCR_ERRORS_HPP_
