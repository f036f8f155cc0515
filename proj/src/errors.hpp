#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pebblelab {

// Base class for everything this library throws on bad input or
// exhausted resources. `kind` lets the C API map to stable status codes.
class Error : public std::runtime_error {
public:
    enum class Kind {
        invalid_argument,
        parse,
        size_budget,
        inconclusive,
    };

    Error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Invalid arguments, violated invariants (non-simple / disconnected graphs,
// structurally invalid moves, out-of-range parameters).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message)
        : Error(Kind::invalid_argument, message) {}
};

// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error(Kind::parse, "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A generator or loader would exceed the configured vertex budget,
// or a quantity does not fit the engine's fixed-width counters.
class SizeBudgetError : public Error {
public:
    explicit SizeBudgetError(const std::string& message)
        : Error(Kind::size_budget, message) {}
};

// An exact search ran out of its query budget before producing a proof.
// Carries the best-known bracket so the caller can resume with more budget.
class InconclusiveError : public Error {
public:
    InconclusiveError(std::int64_t lower_bound,
                      std::optional<std::int64_t> upper_bound,
                      std::uint64_t queries_used)
        : Error(Kind::inconclusive, "search budget exhausted"),
          lower_bound_(lower_bound),
          upper_bound_(upper_bound),
          queries_used_(queries_used) {}

    std::int64_t lower_bound() const { return lower_bound_; }
    std::optional<std::int64_t> upper_bound() const { return upper_bound_; }
    std::uint64_t queries_used() const { return queries_used_; }

private:
    std::int64_t lower_bound_;
    std::optional<std::int64_t> upper_bound_;
    std::uint64_t queries_used_;
};

} // namespace pebblelab
