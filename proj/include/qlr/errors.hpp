#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qlr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A split-complex argument was outside the positive cone (x^2 - y^2 <= 0).
class NotInPositiveCone : public Error {
  public:
    explicit NotInPositiveCone(const std::string &what) : Error(what) {}
};

/// Two phase factors (or scalars) of different kinds were combined.
class KindMismatch : public Error {
  public:
    explicit KindMismatch(const std::string &what) : Error(what) {}
};

/// A quotient or square root with a vanishing denominator.
class DegenerateDenominator : public Error {
  public:
    explicit DegenerateDenominator(const std::string &what) : Error(what) {}
};

/// A computed probability fell outside the open interval (0, 1).
class NonProbability : public Error {
  public:
    NonProbability(std::string quantity, double value)
        : Error(quantity + " = " + std::to_string(value) + " is not inside (0, 1)"),
          quantity_(std::move(quantity)), value_(value) {}
    const std::string &quantity() const noexcept { return quantity_; }
    double value() const noexcept { return value_; }

  private:
    std::string quantity_;
    double value_;
};

/// Basis or state violating orthonormality / normalization.
class InvalidQuantumSide : public Error {
  public:
    explicit InvalidQuantumSide(const std::string &what) : Error(what) {}
};

class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

class SchemaError : public Error {
  public:
    SchemaError(std::string field, const std::string &what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// The input data did not pass validation; carries the first failing constraint.
class ValidationFailed : public Error {
  public:
    explicit ValidationFailed(const std::string &what) : Error(what) {}
};

/// No phase assignment reproduces the three coefficients of one b-row.
class InfeasibleRow : public Error {
  public:
    InfeasibleRow(int row, const std::string &what) : Error(what), row_(row) {}
    int row() const noexcept { return row_; }

  private:
    int row_;
};

/// A row whose coefficients mix |lambda| <= 1 and |lambda| > 1.
class NoMixedRow : public InfeasibleRow {
  public:
    NoMixedRow(int row, const std::string &what) : InfeasibleRow(row, what) {}
};

/// Per-row constraints are solvable but no combination yields a unitary U.
class NoUnitaryCombination : public Error {
  public:
    NoUnitaryCombination(const std::string &what, double best_residual)
        : Error(what), best_residual_(best_residual) {}
    double best_residual() const noexcept { return best_residual_; }

  private:
    double best_residual_;
};

class ZeroState : public Error {
  public:
    explicit ZeroState(const std::string &what) : Error(what) {}
};

class ExhaustedRejection : public Error {
  public:
    ExhaustedRejection(const std::string &what, int attempts)
        : Error(what), attempts_(attempts) {}
    int attempts() const noexcept { return attempts_; }

  private:
    int attempts_;
};

} // namespace qlr
