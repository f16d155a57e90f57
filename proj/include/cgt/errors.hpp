#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgt {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Numeric literal that is not of the form n/2^m where the grammar demands one.
class NonDyadicNumber : public ParseError {
public:
    NonDyadicNumber(const std::string& what, std::size_t position)
        : ParseError(what, position) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// Standard part requested for an element with no finite limit.
class InfiniteValue : public Error {
public:
    InfiniteValue() : Error("element is infinite; no standard part") {}
};

// game_to_number called on a game that is not equal to any number.
class NotANumber : public Error {
public:
    NotANumber() : Error("game is not a number") {}
};

// Comparison endpoint of a mean-value bound is not a dyadic rational.
class NonDyadicBound : public Error {
public:
    explicit NonDyadicBound(const std::string& what) : Error(what) {}
};

// No probability vector satisfies all accepted bets.
class IncoherentBets : public Error {
public:
    IncoherentBets() : Error("accepted bets admit no probability vector") {}
};

// Doubling search for game multipliers exceeded the configured budget.
class MultiplierBudgetExceeded : public Error {
public:
    explicit MultiplierBudgetExceeded(const std::string& what) : Error(what) {}
};

// Exhaustive play-out visited more positions than the configured budget.
class SearchBudgetExceeded : public Error {
public:
    explicit SearchBudgetExceeded(const std::string& what) : Error(what) {}
};

// Input file violates a JSON schema; the message names the offending field.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error(what) {}
};

}  // namespace cgt
