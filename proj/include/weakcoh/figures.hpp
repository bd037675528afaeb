// figures.hpp — Parameter sweeps over the Bell-diagonal and Werner
// families: weak coherence at several strengths against the projective
// value, evaluated at the optimal measurement.

#pragma once

#include "weakcoh/io.hpp"
#include "weakcoh/types.hpp"

#include <string>
#include <vector>

namespace weakcoh {

enum class SweepFamily { bell, werner };

// bell sweeps c over [-1/3, 1] with c1 = c2 = c3 = -c; werner sweeps
// y over [-1, 1] at dimension werner_d.
struct SweepSpec {
    SweepFamily family = SweepFamily::bell;
    double param_min = 0.0;
    double param_max = 1.0;
    int samples = 200;
    std::vector<double> x_values = {1.0, 2.0, 3.0, 50.0};
    int werner_d = 2;
};

// Validates the range against the family's physical region (throws
// InvalidInput before any computation). Columns: parameter, one weak
// coherence column per x, then the projective value. The coherence is
// direction-independent for both families; this is re-verified at runtime
// on each row (UnphysicalStateError on failure, which no physical
// parameter reaches).
CsvTable figure1_table(const SweepSpec& spec);

}  // namespace weakcoh
