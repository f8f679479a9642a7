#pragma once

#include <stdexcept>
#include <string>

namespace t3kit {

// Input/precondition failures (bad documents, degenerate forms, rejected
// arguments). CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically inconsistent data (contradictory equation systems,
// unresolvable exact comparisons). CLI maps these to exit code 3.
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Reeb data requested where the contact condition a x a' > 0 fails.
class ContactDegeneracyError : public ValidationError {
public:
    explicit ContactDegeneracyError(const std::string& what) : ValidationError(what) {}
};

// A root the bracketing finder cannot certify (g = g' = 0 within tolerance,
// even-multiplicity zeros that never change sign).
class RootFinderError : public MathError {
public:
    explicit RootFinderError(const std::string& what) : MathError(what) {}
};

// A Morse-Bott root with vanishing a' x a'' : the nondegenerate perturbation
// that splits orbit tori into hyperbolic/elliptic pairs is unavailable.
class HypothesisViolationError : public ValidationError {
public:
    explicit HypothesisViolationError(const std::string& what) : ValidationError(what) {}
};

} // namespace t3kit
