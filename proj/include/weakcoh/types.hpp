// types.hpp — Shared aliases, subsystem tags, and error types.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace weakcoh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Which half of a bipartite system an argument refers to.
enum class Subsystem { a, b };

// Structural precondition failures: dimension mismatches, out-of-range
// parameters, malformed input files.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Matrix required to be Hermitian deviates beyond tolerance.
struct NotHermitianError : InvalidInput {
    double max_deviation;
    explicit NotHermitianError(double dev);
};

// Matrix required to be PSD has an eigenvalue below -clamp_tol.
struct NotPsdError : std::runtime_error {
    double min_eigenvalue;
    explicit NotPsdError(double eig);
};

// Density-matrix invariant violated (trace, Hermiticity, positivity).
// `value` is the offending quantity named in the message.
struct UnphysicalStateError : std::runtime_error {
    double value;
    UnphysicalStateError(const std::string& what, double value);
};

// Post-selection overlap |<phi|psi>|^2 below threshold; weak values diverge.
struct OrthogonalPostselectionError : std::runtime_error {
    double overlap;
    explicit OrthogonalPostselectionError(double overlap);
};

// Hellinger distance between survey states is numerically zero; the
// uncertainty-product denominator is degenerate.
struct DegenerateStatesError : std::runtime_error {
    double hellinger;
    explicit DegenerateStatesError(double hellinger);
};

}  // namespace weakcoh
