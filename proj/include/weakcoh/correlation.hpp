// correlation.hpp — Coherence-induced quantum correlation: the marginal
// coherence gap Δ_w, its minimum Q_w over measurements, and the sampled
// CPTP / local-unitary audit machinery.

#pragma once

#include "weakcoh/coherence.hpp"
#include "weakcoh/states.hpp"
#include "weakcoh/types.hpp"

#include <cstdint>

namespace weakcoh {

// Kraus operators of a CPTP map; Σ A_k†A_k = I within 1e-9 at construction.
struct KrausChannel {
    std::vector<Matrix> operators;

    KrausChannel() = default;
    explicit KrausChannel(std::vector<Matrix> ops);

    int dim_in() const { return operators.empty() ? 0 : static_cast<int>(operators[0].cols()); }
    int dim_out() const { return operators.empty() ? 0 : static_cast<int>(operators[0].rows()); }
};

struct CorrelationReport {
    double q_value = 0.0;  // clamped at -1e-9
    MeasurementParams minimizing_measurement;
    double delta_at_min = 0.0;
    bool converged = true;
};

// C_H(ρ|Ω) − C_H(ρ^a|Ω), both terms in the Hellinger form, the second with
// the same weak measurement acting directly on subsystem a.
double delta_w(const DensityMatrix& rho, const WeakMeasurement& wm);

// Min over measurement bases (and block splits when d_a > 2) of delta_w at
// fixed strength x.
CorrelationReport q_w(const DensityMatrix& rho, double x,
                      const OptimizationConfig& config = {});

// Stinespring sampling: Kraus operators A_k = (I ⊗ <k|) U (I ⊗ |0>) from a
// seeded Haar-random unitary on system ⊗ environment.
KrausChannel sample_cptp(int dim, int dim_env, std::uint64_t seed);

// Σ (I ⊗ A_k) ρ (I ⊗ A_k)†.
DensityMatrix apply_channel_b(const DensityMatrix& rho, const KrausChannel& ch);

struct UnitaryInvarianceRecord {
    double q_before = 0.0;
    double q_after = 0.0;
    double max_deviation = 0.0;
};

// |Q_w(ρ) − Q_w((U_a⊗U_b) ρ (U_a⊗U_b)†)|. The after-optimization is seeded
// with the transported minimizer, so the deviation stays within optimizer
// slack.
UnitaryInvarianceRecord local_unitary_invariance_check(const DensityMatrix& rho,
                                                       const Matrix& U_a, const Matrix& U_b,
                                                       double x,
                                                       const OptimizationConfig& config = {});

}  // namespace weakcoh
