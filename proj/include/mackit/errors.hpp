#ifndef MACKIT_ERRORS_HPP
#define MACKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mackit {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

// Raised when a rational function cannot be mapped into Q(q)[t]/(Phi_l(t))
// because its denominator vanishes in the quotient.
class NonInvertibleDenominator : public Error {
public:
    explicit NonInvertibleDenominator(const std::string& what) : Error(what) {}
};

class CellOutsideDiagram : public Error {
public:
    explicit CellOutsideDiagram(const std::string& what) : Error(what) {}
};

class WeightMismatch : public Error {
public:
    explicit WeightMismatch(const std::string& what) : Error(what) {}
};

class InvalidStrip : public Error {
public:
    explicit InvalidStrip(const std::string& what) : Error(what) {}
};

class NotAHorizontalStrip : public Error {
public:
    explicit NotAHorizontalStrip(const std::string& what) : Error(what) {}
};

// A computation that must produce a polynomial produced a proper fraction.
class NonPolynomialResult : public Error {
public:
    explicit NonPolynomialResult(const std::string& what) : Error(what) {}
};

class NonIntegralResult : public Error {
public:
    explicit NonIntegralResult(const std::string& what) : Error(what) {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

} // namespace mackit

#endif
