// io.hpp — State JSON files and locale-independent CSV output.

#pragma once

#include "weakcoh/states.hpp"
#include "weakcoh/types.hpp"

#include <string>
#include <vector>

namespace weakcoh {

// State schema: {"d_a": int, "d_b": int, "matrix": [[re, im], ...]} with
// the matrix flattened row-major. Schema violations throw InvalidInput
// naming the offending path; physical-invariant violations propagate from
// the DensityMatrix constructor.
DensityMatrix load_state_json(const std::string& path);
DensityMatrix parse_state_json(const std::string& text, const std::string& origin = "<string>");
std::string state_to_json(const DensityMatrix& rho);
void save_state_json(const DensityMatrix& rho, const std::string& path);

// 12 significant digits, '.' decimal point, no grouping. Used for every
// numeric CSV cell so output is byte-stable across runs and locales.
std::string format_csv_number(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Header row + comma-separated rows, LF line endings.
std::string csv_to_string(const CsvTable& table);
void save_csv(const CsvTable& table, const std::string& path);

}  // namespace weakcoh
