// audit.hpp — Randomized falsification audits of the coherence axioms,
// the strength-law identity, and the correlation-measure properties.
//
// Every trial derives its own seed as mix_seed(spec.seed, trial_index);
// a violating trial can be replayed in isolation from the report alone.

#pragma once

#include "weakcoh/types.hpp"
#include "weakcoh/uncertainty.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace weakcoh {

enum class AuditProperty {
    theorem1,      // weak coherence = (1 - sech x)^2 * projective coherence
    c1,            // positivity; zero iff partially incoherent
    c3,            // convexity under mixing
    c4,            // 0 <= weak <= projective, monotone in x
    qw_positivity, // Q_w >= 0; zero on classically correlated states
    qw_monotone,   // Q_w non-increasing under channels on b
    qw_unitary,    // Q_w invariant under local unitaries
    t3_survey,     // uncertainty-product survey (informational)
    eq10_vs_eq11,  // Hellinger form / skew-sum form ratio = 1 - sech x (informational)
};

const char* audit_property_name(AuditProperty p);
std::vector<AuditProperty> all_audit_properties();

struct AuditSpec {
    int trials = 100;
    std::uint64_t seed = 0;
    int d_a = 2;
    int d_b = 2;
    double x_min = 0.25;
    double x_max = 6.0;
    std::vector<AuditProperty> properties;  // empty selects all
};

struct PropertyReport {
    std::string name;
    int trials = 0;
    int violations = 0;
    double max_violation = 0.0;  // worst residual / inequality excess seen
    double tolerance = 0.0;
    std::vector<std::uint64_t> violating_seeds;  // capped at 16
    bool asserting = true;   // informational surveys never fail the run
    bool pass = true;
    std::vector<std::pair<std::string, double>> extras;  // named diagnostics
};

struct AuditReport {
    AuditSpec spec;
    std::vector<PropertyReport> properties;
    bool pass = true;
};

// Trials run on a small thread pool; results are aggregated in trial order
// so reports are deterministic.
AuditReport run_audit(const AuditSpec& spec);

std::string audit_report_to_json(const AuditReport& report);

std::string uncertainty_product_survey_to_json(const UncertaintyProductSurvey& survey,
                                               std::uint64_t seed, int dim, bool commuting);

}  // namespace weakcoh
