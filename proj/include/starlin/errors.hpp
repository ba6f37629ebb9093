#pragma once

#include <stdexcept>
#include <string>

namespace starlin {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live in different scalar algebras.
struct algebra_mismatch_error : error {
    explicit algebra_mismatch_error(const std::string& msg) : error(msg) {}
};

// Inversion of a non-invertible element (e.g. a multiple of delta).
struct zero_divisor_error : error {
    explicit zero_divisor_error(const std::string& msg) : error(msg) {}
};

// v*v is not invertible, so the vector cannot be normalised.
struct degenerate_norm_error : error {
    explicit degenerate_norm_error(const std::string& msg) : error(msg) {}
};

// Input violates a documented precondition (shape, symmetry class, ...).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// A computed factorisation failed its residual check.
struct numerical_error : error {
    explicit numerical_error(const std::string& msg) : error(msg) {}
};

}  // namespace starlin
