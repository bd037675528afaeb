// uncertainty.hpp — Variance decomposition into quantum and classical
// parts, quantum uncertainty of weak measurements, the skew-information
// uncertainty product, and weak values / weak variance.

#pragma once

#include "weakcoh/measurements.hpp"
#include "weakcoh/states.hpp"
#include "weakcoh/types.hpp"

#include <cstdint>

namespace weakcoh {

inline constexpr double kOverlapTol = 1e-12;

// Pre-selected |ψ>, post-selected |φ>, observable O. Overlap α = |<φ|ψ>|²
// is recorded at construction; both vectors must be unit norm.
struct WeakValueContext {
    Vector pre_state;
    Vector post_state;
    Matrix observable;
    double overlap = 0.0;  // α

    WeakValueContext(Vector pre, Vector post, Matrix obs);
};

// total = quantum + classical within 1e-10 by construction.
struct UncertaintyBreakdown {
    double total = 0.0;
    double quantum = 0.0;   // skew information, >= 0
    double classical = 0.0;  // total - quantum
};

// tr(ρ A₀²) with A₀ = A − tr(ρA)·I. Zero for eigenstates.
double variance(const DensityMatrix& rho, const Matrix& A);

// quantum = skew information; classical = variance − quantum
// = tr(√ρ A √ρ A) − tr(ρA)². Classical vanishes for pure states.
UncertaintyBreakdown uncertainty_breakdown(const DensityMatrix& rho, const Matrix& A);

// Σ_i I(ρ, Ω_i⊗1): same number as the skew-sum weak coherence, read as the
// quantum uncertainty of the measurement operators in ρ.
double quantum_uncertainty_weak(const DensityMatrix& rho, const WeakMeasurement& wm);

// Same quantity for a weak measurement acting directly on a single system.
double quantum_uncertainty_weak_single(const DensityMatrix& rho, const WeakMeasurement& wm);

// Survey record for the skew-information uncertainty product
//   I(ρ,K)·I(σ,K) >= 4 |tr([·,·] K)|⁴ / (H² − 4H)²,  H = ||√ρ − √σ||².
// The commutator reading is ambiguous in the source material, so both
// [√ρ,√σ] and [ρ,σ] are evaluated and flagged; nothing is asserted.
struct UncertaintyProductRecord {
    double lhs = 0.0;
    double rhs_sqrt_commutator = 0.0;
    double rhs_plain_commutator = 0.0;
    bool holds_sqrt = false;
    bool holds_plain = false;
    double hellinger = 0.0;
};

// Throws DegenerateStatesError when H <= 1e-12.
UncertaintyProductRecord uncertainty_product_check(const DensityMatrix& rho,
                                                   const DensityMatrix& sigma,
                                                   const Matrix& K);

// <φ|O|ψ> / <φ|ψ>. Generally complex, possibly outside the spectrum of O.
Complex weak_value(const WeakValueContext& ctx);

// <O²>_w / α − <O>_w². Returned as complex without coercion to real.
Complex weak_variance(const WeakValueContext& ctx);

// Deterministic survey over seeded random (ρ, σ, K) triples.
struct UncertaintyProductSurvey {
    int trials = 0;
    int holds_sqrt = 0;
    int holds_plain = 0;
    double worst_margin_sqrt = 0.0;
    double worst_margin_plain = 0.0;
    std::uint64_t worst_seed_sqrt = 0;
    std::uint64_t worst_seed_plain = 0;
    int degenerate_skipped = 0;
    // Margin histogram bins (per variant): (-inf,-1e-3], (-1e-3,-1e-6],
    // (-1e-6,-1e-12], (-1e-12,1e-12), [1e-12,1e-6), [1e-6,1e-3), [1e-3,inf)
    std::array<int, 7> histogram_sqrt{};
    std::array<int, 7> histogram_plain{};
};

// commuting = true draws diagonal-only triples (hold rate must be 1).
UncertaintyProductSurvey run_uncertainty_product_survey(int trials, std::uint64_t seed,
                                                        int dim = 2, bool commuting = false);

}  // namespace weakcoh
