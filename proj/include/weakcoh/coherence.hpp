// coherence.hpp — Hellinger-distance coherence relative to projective and
// weak measurements, skew information, and the measurement-optimized
// quantities (H-MIN and its weak-measurement counterpart).

#pragma once

#include "weakcoh/measurements.hpp"
#include "weakcoh/optimize.hpp"
#include "weakcoh/states.hpp"
#include "weakcoh/types.hpp"

#include <optional>

namespace weakcoh {

enum class CoherenceMethod { hellinger_direct, skew_sum };

// Measurement parameters echoed with every coherence value so results are
// reproducible from the report alone.
struct MeasurementParams {
    std::vector<double> basis_params;  // (θ, φ) or packed unitary params
    int split = 1;
    double x = 0.0;  // 0 marks a purely projective quantity
};

struct CoherenceReport {
    double value = 0.0;  // clamped to 0 when within -1e-12 of it
    MeasurementParams params;
    CoherenceMethod method = CoherenceMethod::hellinger_direct;
    bool converged = true;  // false only when an optimizer hit max_evals
};

// ||√ρ − √σ||²_HS = 2(1 − tr(√ρ√σ)). Symmetric, in [0, 2].
double hellinger_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Wigner-Yanase skew information −½ tr([√ρ, K]²) for Hermitian K.
double skew_information(const DensityMatrix& rho, const Matrix& K);
double skew_information_sqrt(const Matrix& sqrt_rho, const Matrix& K);

// 1 − tr(√ρ · Π^a(√ρ)), cross-checked internally against the skew-sum
// Σ_i I(ρ, Π_i⊗1) at 1e-10.
CoherenceReport coherence_projective(const DensityMatrix& rho, const ProjectiveMeasurement& pm);

// ||√ρ − Ω(√ρ)||². Equals (1−τ)² times the coherence of the measurement the
// weak channel dephases toward (for a qubit subsystem, coherence_projective
// of the base).
CoherenceReport coherence_weak(const DensityMatrix& rho, const WeakMeasurement& wm);

// Skew-information form Σ_{k=±x} I(ρ, Ω_k⊗1). NOTE: this equals
// (1−τ)·coherence of the base measurement, one factor of (1−τ) away from
// coherence_weak; discrepancy_ratio quantifies it.
CoherenceReport coherence_weak_skew(const DensityMatrix& rho, const WeakMeasurement& wm);

// coherence_weak / coherence_weak_skew; algebraically 1 − τ(x) whenever the
// denominator is nonzero.
double discrepancy_ratio(const DensityMatrix& rho, const WeakMeasurement& wm);

// (1 − sech x)², the factor scaling projective coherence down to weak
// coherence. Monotone increasing from 0 toward 1.
double strength_ratio(double x);

// Max of coherence_projective over measurements on a. With
// restrict_locally_invariant the domain shrinks to measurements leaving ρ^a
// invariant (singleton eigenbasis when ρ^a is nondegenerate; vacuous when
// maximally mixed).
CoherenceReport hmin(const DensityMatrix& rho, bool restrict_locally_invariant = true,
                     const OptimizationConfig& config = {});

// (1 − τ(x))² · hmin(ρ). hmin_weak_direct optimizes coherence_weak itself
// (over basis and, for d_a > 2, the block split); the two agree within
// optimizer tolerance for qubit subsystems.
CoherenceReport hmin_weak(const DensityMatrix& rho, double x,
                          bool restrict_locally_invariant = true,
                          const OptimizationConfig& config = {});
CoherenceReport hmin_weak_direct(const DensityMatrix& rho, double x,
                                 bool restrict_locally_invariant = true,
                                 const OptimizationConfig& config = {});

// Fast paths used by optimizer loops: the caller owns √ρ.
double coherence_projective_value(const Matrix& sqrt_rho, const ProjectiveMeasurement& pm);
double coherence_weak_value(const Matrix& sqrt_rho, const WeakMeasurement& wm);

// Clamp tiny negative floating-point results ([-1e-12, 0)) to zero.
double clamp_coherence(double value);

}  // namespace weakcoh
