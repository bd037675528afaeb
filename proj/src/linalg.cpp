#include "weakcoh/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

namespace weakcoh {

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

NotHermitianError::NotHermitianError(double dev)
    : InvalidInput("matrix is not Hermitian: max |M - M^dag| = " + format_double(dev)),
      max_deviation(dev) {}

NotPsdError::NotPsdError(double eig)
    : std::runtime_error("matrix is not positive semidefinite: eigenvalue " + format_double(eig)),
      min_eigenvalue(eig) {}

UnphysicalStateError::UnphysicalStateError(const std::string& what, double v)
    : std::runtime_error(what + " (" + format_double(v) + ")"), value(v) {}

OrthogonalPostselectionError::OrthogonalPostselectionError(double a)
    : std::runtime_error("post-selection overlap " + format_double(a) +
                         " below 1e-12; weak value diverges"),
      overlap(a) {}

DegenerateStatesError::DegenerateStatesError(double h)
    : std::runtime_error("states coincide (Hellinger distance " + format_double(h) +
                         "); uncertainty-product denominator is degenerate"),
      hellinger(h) {}

Matrix pauli_x() {
    Matrix M(2, 2);
    M << 0, 1, 1, 0;
    return M;
}

Matrix pauli_y() {
    Matrix M(2, 2);
    M << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return M;
}

Matrix pauli_z() {
    Matrix M(2, 2);
    M << 1, 0, 0, -1;
    return M;
}

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

void require_hermitian(const Matrix& M, double tol) {
    if (M.rows() != M.cols()) throw InvalidInput("require_hermitian: matrix is not square");
    const double dev = (M - M.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol) throw NotHermitianError(dev);
}

bool is_unitary(const Matrix& U, double tol) {
    if (U.rows() != U.cols()) return false;
    const Matrix G = U.adjoint() * U;
    return (G - Matrix::Identity(U.rows(), U.cols())).cwiseAbs().maxCoeff() <= tol;
}

EigenDecomposition hermitian_eig(const Matrix& M, double hermitian_tol) {
    require_hermitian(M, hermitian_tol);
    // Symmetrize before solving so the result depends only on the Hermitian
    // part permitted by the tolerance.
    const Matrix H = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(H);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");

    EigenDecomposition dec{solver.eigenvalues(), solver.eigenvectors()};

    // Fix each eigenvector's global phase: the largest-magnitude component
    // (lowest index on ties) becomes real positive.
    const int n = static_cast<int>(dec.eigenvectors.cols());
    for (int j = 0; j < n; ++j) {
        int pivot = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            const double m = std::abs(dec.eigenvectors(i, j));
            if (m > best + 1e-15) {
                best = m;
                pivot = i;
            }
        }
        const Complex p = dec.eigenvectors(pivot, j);
        if (std::abs(p) > 0.0) dec.eigenvectors.col(j) *= std::conj(p) / std::abs(p);
    }
    return dec;
}

Matrix psd_sqrt(const Matrix& M, double clamp_tol) {
    const EigenDecomposition dec = hermitian_eig(M);
    const int n = static_cast<int>(dec.eigenvalues.size());
    RealVector roots(n);
    for (int i = 0; i < n; ++i) {
        const double lambda = dec.eigenvalues[i];
        if (lambda < -clamp_tol) throw NotPsdError(lambda);
        roots[i] = std::sqrt(std::max(lambda, 0.0));
    }
    return dec.eigenvectors * roots.asDiagonal() * dec.eigenvectors.adjoint();
}

Complex hs_inner(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw InvalidInput("hs_inner: dimension mismatch");
    return (A.adjoint() * B).trace();
}

double hs_norm_sq(const Matrix& A) { return hs_inner(A, A).real(); }

double hs_norm(const Matrix& A) { return std::sqrt(std::max(hs_norm_sq(A), 0.0)); }

Matrix kron(const Matrix& A, const Matrix& B) { return Eigen::kroneckerProduct(A, B); }

Matrix partial_trace(const Matrix& M, int d_a, int d_b, Subsystem traced_out) {
    if (d_a <= 0 || d_b <= 0) throw InvalidInput("partial_trace: dimensions must be positive");
    if (M.rows() != M.cols() || M.rows() != static_cast<Eigen::Index>(d_a) * d_b)
        throw InvalidInput("partial_trace: matrix dimension is not d_a * d_b");

    if (traced_out == Subsystem::b) {
        Matrix out = Matrix::Zero(d_a, d_a);
        for (int i = 0; i < d_a; ++i)
            for (int j = 0; j < d_a; ++j)
                for (int k = 0; k < d_b; ++k) out(i, j) += M(i * d_b + k, j * d_b + k);
        return out;
    }
    Matrix out = Matrix::Zero(d_b, d_b);
    for (int i = 0; i < d_b; ++i)
        for (int j = 0; j < d_b; ++j)
            for (int k = 0; k < d_a; ++k) out(i, j) += M(k * d_b + i, k * d_b + j);
    return out;
}

Matrix commutator(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw InvalidInput("commutator: dimension mismatch");
    return A * B - B * A;
}

Matrix hermitian_from_params(const std::vector<double>& params, int dim) {
    if (static_cast<int>(params.size()) != dim * dim)
        throw InvalidInput("hermitian_from_params: expected dim^2 parameters");
    Matrix H = Matrix::Zero(dim, dim);
    std::size_t k = 0;
    for (int i = 0; i < dim; ++i) H(i, i) = params[k++];
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            const Complex v(params[k], params[k + 1]);
            k += 2;
            H(i, j) = v;
            H(j, i) = std::conj(v);
        }
    }
    return H;
}

Matrix unitary_exp_ih(const Matrix& H) {
    const EigenDecomposition dec = hermitian_eig(H);
    const int n = static_cast<int>(dec.eigenvalues.size());
    Vector phases(n);
    for (int i = 0; i < n; ++i)
        phases[i] = std::exp(Complex(0.0, dec.eigenvalues[i]));
    return dec.eigenvectors * phases.asDiagonal() * dec.eigenvectors.adjoint();
}

}  // namespace weakcoh
