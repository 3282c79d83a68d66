#pragma once

#include <stdexcept>
#include <string>

namespace layerkit {

/// No sign change on the search interval handed to the root finder.
struct RootNotBracketed : std::runtime_error {
    explicit RootNotBracketed(const std::string& what) : std::runtime_error(what) {}
};

/// Zero (or non-finite) pivot during tridiagonal elimination.
struct PivotBreakdown : std::runtime_error {
    explicit PivotBreakdown(const std::string& what) : std::runtime_error(what) {}
};

/// Sampled coefficient violates its sign condition (e.g. b < gamma).
struct SignError : std::runtime_error {
    explicit SignError(const std::string& what) : std::runtime_error(what) {}
};

/// No positive step vector satisfies the requested mesh constraints.
struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature could not reach its tolerance (non-integrable input).
struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace layerkit
