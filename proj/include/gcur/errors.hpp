#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcur {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad caller input: empty matrices, shape mismatches, invalid parameters.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

class DegenerateInput : public InputError {
public:
    explicit DegenerateInput(const std::string& msg) : InputError(msg) {}
};

class DimensionMismatch : public InputError {
public:
    explicit DimensionMismatch(const std::string& msg) : InputError(msg) {}
};

/// File could not be parsed; carries the 1-based line number when known.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t line)
        : InputError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Numerical failure: the computation ran but the data violated a rank or
/// conditioning assumption.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

/// Sketch X lost rank: |t_ll| fell below sqrt(eps)*|t_11| in the CPQR.
class RankDeficientSketch : public NumericalError {
public:
    RankDeficientSketch(const std::string& msg, std::size_t numerical_rank)
        : NumericalError(msg + " (numerical rank " + std::to_string(numerical_rank) + ")"),
          numerical_rank_(numerical_rank) {}
    std::size_t numerical_rank() const { return numerical_rank_; }

private:
    std::size_t numerical_rank_;
};

/// Selected columns/rows turned out linearly dependent.
class RankDeficientFactor : public NumericalError {
public:
    RankDeficientFactor(const std::string& msg, std::size_t numerical_rank)
        : NumericalError(msg + " (numerical rank " + std::to_string(numerical_rank) + ")"),
          numerical_rank_(numerical_rank) {}
    std::size_t numerical_rank() const { return numerical_rank_; }

private:
    std::size_t numerical_rank_;
};

/// Oblique-projector core is numerically singular.
class SingularCore : public NumericalError {
public:
    explicit SingularCore(const std::string& msg) : NumericalError(msg) {}
};

/// relative_error against a zero matrix.
class UndefinedRelativeError : public NumericalError {
public:
    explicit UndefinedRelativeError(const std::string& msg) : NumericalError(msg) {}
};

/// Parameter outside a formula's domain (e.g. n <= k+p, p < 2).
class DomainError : public InputError {
public:
    explicit DomainError(const std::string& msg) : InputError(msg) {}
};

}  // namespace gcur
