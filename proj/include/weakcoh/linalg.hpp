// linalg.hpp — Dense complex linear-algebra kernel.
//
// Everything here is a pure function of its inputs. Matrices are the
// universal carrier for states, projectors, and observables; dimensions
// stay small (target <= 16), so there is no sparse path.

#pragma once

#include "weakcoh/types.hpp"

#include <vector>

namespace weakcoh {

inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kPsdClampTol = 1e-10;

// 2x2 building blocks.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix identity(int dim);

// Throws NotHermitianError when max|M - M^dag| exceeds tol elementwise.
void require_hermitian(const Matrix& M, double tol = kHermitianTol);

bool is_unitary(const Matrix& U, double tol = kHermitianTol);

// Eigensystem of a Hermitian matrix. Eigenvalues ascend; eigenvector
// columns carry a deterministic phase (largest-magnitude component made
// real positive) so identical inputs give identical decompositions.
struct EigenDecomposition {
    RealVector eigenvalues;
    Matrix eigenvectors;  // columns
};

EigenDecomposition hermitian_eig(const Matrix& M, double hermitian_tol = kHermitianTol);

// V diag(sqrt(max(lambda_i, 0))) V^dag. Eigenvalues below -clamp_tol throw
// NotPsdError; tiny negatives from rank-deficient inputs clamp to zero.
Matrix psd_sqrt(const Matrix& M, double clamp_tol = kPsdClampTol);

// Hilbert-Schmidt inner product tr(A^dag B) and squared norm.
Complex hs_inner(const Matrix& A, const Matrix& B);
double hs_norm_sq(const Matrix& A);
double hs_norm(const Matrix& A);

Matrix kron(const Matrix& A, const Matrix& B);

// Trace out one subsystem of an operator on a (d_a x d_b)-dimensional
// bipartite space. `traced_out` names the subsystem that disappears.
Matrix partial_trace(const Matrix& M, int d_a, int d_b, Subsystem traced_out);

Matrix commutator(const Matrix& A, const Matrix& B);

// Hermitian matrix from a packed real parameter vector of length dim^2:
// diagonal first, then (re, im) per upper-triangle entry. Used by the
// measurement-manifold parameterization exp(iH).
Matrix hermitian_from_params(const std::vector<double>& params, int dim);

// exp(iH) for Hermitian H, via the eigendecomposition.
Matrix unitary_exp_ih(const Matrix& H);

}  // namespace weakcoh
