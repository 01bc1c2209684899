#pragma once

// Dense complex linear algebra for small (dim <= 16) Hermitian problems:
// eigendecomposition, unitary exponentials of Hermitian generators, and
// compression onto orthonormal subspaces. Storage and the everyday matrix
// algebra (product, adjoint, trace) come straight from Eigen; this header
// adds the Hermitian-specific entry points with explicit tolerance checks.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Relative hermiticity tolerance: |M - M^dag|_max <= kHermTol * (1 + |M|_max).
inline constexpr double kHermTol = 1e-12;

inline double max_abs_entry(const ComplexMatrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Largest entry-wise deviation from M = M^dag.
inline double hermiticity_error(const ComplexMatrix& m)
{
    return max_abs_entry(m - m.adjoint());
}

inline bool all_finite(const ComplexMatrix& m)
{
    return m.allFinite();
}

inline bool is_hermitian(const ComplexMatrix& m, double rel_tol = kHermTol)
{
    if (m.rows() != m.cols())
        return false;
    return hermiticity_error(m) <= rel_tol * (1.0 + max_abs_entry(m));
}

/// Throws std::invalid_argument naming the offending asymmetry if `m` is not
/// Hermitian within kHermTol (relative).
inline void require_hermitian(const ComplexMatrix& m, const char* what)
{
    if (m.rows() != m.cols()) {
        std::ostringstream oss;
        oss << what << ": matrix is " << m.rows() << "x" << m.cols() << ", expected square";
        throw std::invalid_argument(oss.str());
    }
    const double err = hermiticity_error(m);
    const double allowed = kHermTol * (1.0 + max_abs_entry(m));
    if (!(err <= allowed)) {
        std::ostringstream oss;
        oss << what << ": matrix is not Hermitian, max asymmetry |M - M^dag| = " << err
            << " exceeds " << allowed;
        throw std::invalid_argument(oss.str());
    }
}

/// Eigensystem of a Hermitian matrix: eigenvalues real and ascending,
/// eigenvectors the orthonormal columns of `vectors` (same order).
struct HermitianEigen {
    RealVector values;
    ComplexMatrix vectors;
};

/// Eigendecomposition of a Hermitian matrix. Rejects non-Hermitian input
/// beyond kHermTol with a diagnostic naming the max asymmetry.
inline HermitianEigen herm_eig(const ComplexMatrix& m)
{
    require_hermitian(m, "herm_eig");
    if (m.rows() < 1)
        throw std::invalid_argument("herm_eig: dimension must be >= 1");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("herm_eig: eigendecomposition did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

/// exp(i s H) for Hermitian H, via the spectral decomposition
/// sum_k e^{i s lambda_k} v_k v_k^dag. The result is unitary by construction.
inline ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double s)
{
    require_hermitian(h, "expm_i_hermitian");
    const HermitianEigen eig = herm_eig(h);
    const Eigen::Index n = h.rows();
    ComplexVector phases(n);
    for (Eigen::Index k = 0; k < n; ++k)
        phases[k] = std::polar(1.0, s * eig.values[k]);
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

/// Compression of M onto the span of k orthonormal vectors: the k x k matrix
/// C[i][j] = <basis_i| M |basis_j>. Hermitian whenever M is.
inline ComplexMatrix compress_onto(const ComplexMatrix& m,
                                   const std::vector<ComplexVector>& basis)
{
    const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
    if (k == 0)
        throw std::invalid_argument("compress_onto: empty basis");
    for (const ComplexVector& v : basis)
        if (v.size() != m.rows() || m.rows() != m.cols())
            throw std::invalid_argument("compress_onto: dimension mismatch");
    ComplexMatrix c(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            c(i, j) = basis[static_cast<std::size_t>(i)].dot(m * basis[static_cast<std::size_t>(j)]);
    return c;
}

inline double unitarity_error(const ComplexMatrix& u)
{
    return max_abs_entry(u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols()));
}

}  // namespace gp
