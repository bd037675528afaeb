// measurements.hpp — Projective measurements on subsystem a and the
// two-outcome weak measurement built on top of them.

#pragma once

#include "weakcoh/linalg.hpp"
#include "weakcoh/types.hpp"

#include <optional>
#include <vector>

namespace weakcoh {

// Strength x is capped here to keep cosh finite; tau underflows to exact 0
// near x ≈ 745, which is the exact-projective regime.
inline constexpr double kMaxMeasurementStrength = 700.0;

// Complete set of d_a orthogonal rank-1 projectors on subsystem a.
// Validated at construction: Π_i Π_j = δ_ij Π_i and Σ Π_i = I within 1e-10.
struct ProjectiveMeasurement {
    std::vector<Matrix> projectors;

    // Bloch angles when constructed via projective_qubit; echoed into
    // reports so optimizer results are reproducible from the output alone.
    std::optional<std::array<double, 2>> bloch_angles;

    ProjectiveMeasurement() = default;
    explicit ProjectiveMeasurement(std::vector<Matrix> projectors);

    int dim() const { return projectors.empty() ? 0 : static_cast<int>(projectors[0].rows()); }
    int outcomes() const { return static_cast<int>(projectors.size()); }
};

// Projectors (I ± n̂·σ)/2 with n̂ = (sinθ cosφ, sinθ sinφ, cosθ).
ProjectiveMeasurement projective_qubit(double theta, double phi);

// Projectors U|i><i|U†. Throws on non-unitary input.
ProjectiveMeasurement projective_from_unitary(const Matrix& U);

// sech x. Monotone decreasing, tau(0) = 1. Negative x is rejected.
double tau(double x);

// Two-outcome weak measurement of strength x > 0 on the base measurement,
// with block split Π¹ = Σ_{i<=split} Π_i, Π² the rest (1 <= split < d_a):
//   Ω_{+x} = τ₁ Π¹ + τ₂ Π²,  Ω_{−x} = τ₂ Π¹ + τ₁ Π²,
//   τ₁ = √((1−tanh x)/2),  τ₂ = √((1+tanh x)/2).
struct WeakMeasurement {
    ProjectiveMeasurement base;
    int split = 1;
    double x = 0.0;

    WeakMeasurement() = default;
    WeakMeasurement(ProjectiveMeasurement base, int split, double x);

    double tau1() const;
    double tau2() const;
    double tau() const;  // 2 τ₁τ₂ = sech x

    Matrix block1() const;  // Π¹ on subsystem a
    Matrix block2() const;  // Π²
    Matrix omega(bool positive) const;  // Ω_{+x} or Ω_{−x}
};

// Σ_k (Π_k ⊗ 1) M (Π_k ⊗ 1). d_b is inferred from dim(M)/d_a. Idempotent,
// trace- and Hermiticity-preserving.
Matrix apply_projective(const ProjectiveMeasurement& pm, const Matrix& M);

// The weak channel Σ_{k=±x} (Ω_k ⊗ 1) M (Ω_k ⊗ 1), computed in the
// algebraically equal convex form τ M + (1−τ)(Π¹MΠ¹ + Π²MΠ²). For a qubit
// subsystem the block term is apply_projective(base, M).
Matrix apply_weak(const WeakMeasurement& wm, const Matrix& M);

// Explicit operator-sum form; the slow cross-check oracle for apply_weak.
Matrix apply_weak_kraus(const WeakMeasurement& wm, const Matrix& M);

// Two-outcome block dephasing (Π¹⊗1)M(Π¹⊗1) + (Π²⊗1)M(Π²⊗1).
Matrix apply_block_projective(const WeakMeasurement& wm, const Matrix& M);

// True iff Σ Π_i ρ_a Π_i = ρ_a within tol (Hilbert-Schmidt norm).
bool is_locally_invariant(const ProjectiveMeasurement& pm, const Matrix& rho_a, double tol);

}  // namespace weakcoh
