// optimize.hpp — Derivative-free optimization over measurement bases.
//
// Qubits use a coarse (θ, φ) grid followed by Nelder-Mead refinement from
// the top grid points; general d_a uses the exp(iH) unitary manifold with
// deterministic multi-start. A dense-grid brute-force oracle backs the
// tests. Objectives must be pure functions; evaluation and tie-breaking
// order are fixed, so identical inputs give identical results.

#pragma once

#include "weakcoh/measurements.hpp"
#include "weakcoh/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace weakcoh {

enum class Direction { maximize, minimize };

struct OptimizationConfig {
    int n_theta = 32;
    int n_phi = 64;
    int refine_starts = 5;
    double simplex_tolerance = 1e-8;  // on parameter spread and value spread
    int max_evals = 10000;
    Direction direction = Direction::maximize;
};

struct OptimizationResult {
    double best_value = 0.0;
    std::vector<double> best_params;  // (θ, φ) for qubits, packed H params otherwise
    ProjectiveMeasurement best_measurement;
    int evaluations = 0;
    bool converged = false;
};

using MeasurementObjective = std::function<double(const ProjectiveMeasurement&)>;

// Restriction to measurements leaving a given marginal invariant.
// Nondegenerate eigenvalues pin their eigenvectors; eigenvalue clusters
// closer than `degeneracy_gap` admit free rotation within the subspace.
struct LocalInvarianceRestriction {
    Matrix rho_a;
    double degeneracy_gap = 1e-8;
};

OptimizationResult optimize_measurement(
    const MeasurementObjective& objective, int d_a,
    const OptimizationConfig& config = {},
    const std::optional<LocalInvarianceRestriction>& restriction = std::nullopt,
    const std::vector<std::vector<double>>& extra_starts = {});

// Exhaustive qubit scan at the stated angular resolution. Ground truth for
// tests: a lower bound for maxima, upper bound for minima.
OptimizationResult dense_grid_oracle(const MeasurementObjective& objective,
                                     double resolution_deg,
                                     Direction direction = Direction::maximize);

// Generic Nelder-Mead used by the refinement stage (standard reflection/
// expansion/contraction/shrink coefficients 1, 2, 0.5, 0.5). Converges when
// both the simplex value spread and vertex spread drop below tol.
struct SimplexResult {
    std::vector<double> best_point;
    double best_value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& start, double step, double tol,
                          int max_evals);

}  // namespace weakcoh
