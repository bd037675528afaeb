// states.hpp — Bipartite density matrices and the named state families.

#pragma once

#include "weakcoh/linalg.hpp"
#include "weakcoh/types.hpp"

#include <cstdint>
#include <vector>

namespace weakcoh {

inline constexpr double kTraceTol = 1e-8;
inline constexpr double kStateEigTol = 1e-9;

// Bipartite state rho on a (d_a x d_b)-dimensional space. Construction
// validates Hermiticity (1e-9 elementwise), unit trace (1e-8) and
// positivity (min eigenvalue >= -1e-9). Off-tolerance inputs are rejected,
// never renormalized.
struct DensityMatrix {
    Matrix matrix;
    int d_a = 0;
    int d_b = 0;

    DensityMatrix() = default;
    DensityMatrix(Matrix m, int d_a, int d_b);

    int dim() const { return d_a * d_b; }
};

// Correlation-vector parameters of the two-qubit Bell-diagonal family.
// Not every point of the cube [-1,1]^3 is physical; constructors check.
struct BellDiagonalParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

// Bell-basis eigenvalues of the family, in the fixed order
// (Phi+, Phi-, Psi+, Psi-) with Phi± = (|00>±|11>)/√2, Psi± = (|01>±|10>)/√2.
// This ordering makes the closed-form square root below exact; it was fixed
// by matching against psd_sqrt across the physical region.
std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalParams& p);

// (I⊗I + Σ c_i σ_i⊗σ_i)/4. Throws UnphysicalStateError (with the minimum
// eigenvalue) outside the physical region.
DensityMatrix bell_diagonal(const BellDiagonalParams& p);

// Closed-form square root (δ I⊗I + Σ d_i σ_i⊗σ_i)/4 with δ = Σ √λ_i and
//   d1 = √λ1 − √λ2 + √λ3 − √λ4
//   d2 = −√λ1 + √λ2 + √λ3 − √λ4
//   d3 = √λ1 + √λ2 − √λ3 − √λ4
// in the (Phi+, Phi-, Psi+, Psi-) eigenvalue order above. Agrees with
// psd_sqrt(bell_diagonal(p)) to ~1e-15.
Matrix bell_diagonal_sqrt_closed_form(const BellDiagonalParams& p);

struct WernerParams {
    int d = 2;
    double y = 0.0;
};

// (d−y)/(d³−d) · I + (yd−1)/(d³−d) · F, with F the swap operator.
DensityMatrix werner(const WernerParams& p);

// Swap (flip) operator Σ |α><β| ⊗ |β><α| on d x d.
Matrix swap_operator(int d);

// |ψ><ψ| from a normalized state vector on a (d_a x d_b) space.
DensityMatrix pure(const Vector& state_vector, int d_a, int d_b);

DensityMatrix product(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

// Σ_k p_k |b_k><b_k| ⊗ ρ_k with |b_k> the columns of `basis` (unitary on
// subsystem a). Satisfies Π^a(ρ) = ρ for the measurement in that basis.
DensityMatrix classical_correlated(const std::vector<double>& probs,
                                   const Matrix& basis,
                                   const std::vector<Matrix>& states_b);

// Reduced state of the kept subsystem.
DensityMatrix marginal(const DensityMatrix& rho, Subsystem keep);

// Ginibre sampling G G†/tr(G G†) with G of shape (d_a·d_b × rank), filled
// row-major from Rng(seed). Identical (dims, rank, seed) give identical
// bytes.
DensityMatrix random_density(int d_a, int d_b, int rank, std::uint64_t seed);

}  // namespace weakcoh
