#pragma once

// Two-qubit transverse-field XX model and its Werner-family initial states.
//
// Basis order is fixed throughout as (|11>, |10>, |01>, |00>), particle 1
// listed first, with S^z|1> = +1/2|1>. All angles are radians and hbar = 1.

#include "geomphase/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gp {

inline constexpr double kPi = std::numbers::pi;

/// Default absolute tolerance for merging eigenvalues into degenerate groups.
inline constexpr double kGroupTol = 1e-8;

inline constexpr int kBasis11 = 0;
inline constexpr int kBasis10 = 1;
inline constexpr int kBasis01 = 2;
inline constexpr int kBasis00 = 3;

/// Field frequencies and XX coupling, all in radians per unit time.
struct SystemParams {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double g = 0.0;  // antiferromagnetic coupling, g >= 0

    void validate() const
    {
        if (!std::isfinite(omega1) || !std::isfinite(omega2) || !std::isfinite(g))
            throw std::invalid_argument("SystemParams: parameters must be finite");
        if (g < 0.0)
            throw std::invalid_argument("SystemParams: coupling g must be >= 0");
    }
};

enum class StateFamily { Phi, Psi };

inline const char* family_name(StateFamily f)
{
    return f == StateFamily::Phi ? "phi" : "psi";
}

inline std::optional<StateFamily> parse_family(const std::string& s)
{
    if (s == "phi" || s == "Phi")
        return StateFamily::Phi;
    if (s == "psi" || s == "Psi")
        return StateFamily::Psi;
    return std::nullopt;
}

/// Reduces theta into the state family's fundamental domain [0, pi].
/// (sin, cos) -> (-sin, -cos) under theta -> theta + pi flips the state
/// vector's global sign only, so the density matrix is unchanged.
inline double reduce_theta(double theta)
{
    if (!std::isfinite(theta))
        throw std::invalid_argument("theta must be finite");
    if (theta >= 0.0 && theta <= kPi)
        return theta;
    double reduced = theta - kPi * std::floor(theta / kPi);
    if (reduced < 0.0)
        reduced = 0.0;
    return reduced;
}

inline bool theta_needs_reduction(double theta)
{
    return std::isfinite(theta) && (theta < 0.0 || theta > kPi);
}

/// Entangled-pair member and mixing weight of the initial state
/// rho(0) = (1-r)/4 I + r |state><state|.
struct InitialStateSpec {
    StateFamily family = StateFamily::Phi;
    double theta = 0.0;  // entanglement angle, reduced mod pi into [0, pi]
    double r = 1.0;      // mixing, in (0, 1]; r = 0 (trivial unit-matrix case) excluded

    void validate() const
    {
        if (!std::isfinite(theta))
            throw std::invalid_argument("InitialStateSpec: theta must be finite");
        if (!(r > 0.0) || r > 1.0)
            throw std::invalid_argument(
                "InitialStateSpec: r must lie in (0, 1]; r = 0 gives the fully mixed state "
                "whose phase is trivially zero and is excluded");
    }
};

/// H = omega1 S1^z + omega2 S2^z + g (S1^+ S2^- + S1^- S2^+) on the fixed
/// basis (|11>, |10>, |01>, |00>); diagonal +-(omega1 +- omega2)/2, the only
/// off-diagonal elements couple |10> <-> |01> with strength g.
inline ComplexMatrix build_hamiltonian(const SystemParams& p)
{
    p.validate();
    ComplexMatrix h = ComplexMatrix::Zero(4, 4);
    h(kBasis11, kBasis11) = (p.omega1 + p.omega2) / 2.0;
    h(kBasis10, kBasis10) = (p.omega1 - p.omega2) / 2.0;
    h(kBasis01, kBasis01) = -(p.omega1 - p.omega2) / 2.0;
    h(kBasis00, kBasis00) = -(p.omega1 + p.omega2) / 2.0;
    h(kBasis10, kBasis01) = p.g;
    h(kBasis01, kBasis10) = p.g;
    return h;
}

/// |phi> = sin(theta)|11> + cos(theta)|00>  or
/// |psi> = sin(theta)|10> + cos(theta)|01>.
inline ComplexVector state_vector(StateFamily family, double theta)
{
    const double th = reduce_theta(theta);
    ComplexVector v = ComplexVector::Zero(4);
    if (family == StateFamily::Phi) {
        v[kBasis11] = std::sin(th);
        v[kBasis00] = std::cos(th);
    } else {
        v[kBasis10] = std::sin(th);
        v[kBasis01] = std::cos(th);
    }
    return v;
}

/// rho(0) = (1-r)/4 I4 + r |state><state|. Hermitian, trace 1, PSD, with
/// spectrum {(1+3r)/4} once and {(1-r)/4} three times.
inline ComplexMatrix build_initial_state(const InitialStateSpec& spec)
{
    spec.validate();
    const ComplexVector v = state_vector(spec.family, spec.theta);
    ComplexMatrix rho = ComplexMatrix::Identity(4, 4) * ((1.0 - spec.r) / 4.0);
    rho += spec.r * (v * v.adjoint());
    return rho;
}

/// One degenerate eigenvalue with an orthonormal basis of its eigenspace.
struct EigenGroup {
    double eigenvalue = 0.0;
    std::vector<ComplexVector> vectors;
};

/// Eigenvalue groups of a density matrix, ascending in eigenvalue; the union
/// of all group vectors is an orthonormal basis of the full space.
struct SpectralDecomposition {
    Eigen::Index dim = 0;
    std::vector<EigenGroup> groups;

    std::size_t vector_count() const
    {
        std::size_t n = 0;
        for (const EigenGroup& g : groups)
            n += g.vectors.size();
        return n;
    }
};

/// Spectral decomposition of a density matrix with degeneracy made explicit:
/// adjacent ascending eigenvalues are merged into one group whenever they
/// differ by at most group_tol. Rejects non-Hermitian input, trace != 1, and
/// eigenvalues below -1e-10.
inline SpectralDecomposition state_eigensystem(const ComplexMatrix& rho,
                                               double group_tol = kGroupTol)
{
    require_hermitian(rho, "state_eigensystem");
    const double tr_err = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (tr_err > 1e-10) {
        std::ostringstream oss;
        oss << "state_eigensystem: trace deviates from 1 by " << tr_err;
        throw std::invalid_argument(oss.str());
    }
    const HermitianEigen eig = herm_eig(rho);
    if (eig.values[0] < -1e-10) {
        std::ostringstream oss;
        oss << "state_eigensystem: negative eigenvalue " << eig.values[0]
            << " -- not a physical density matrix";
        throw std::invalid_argument(oss.str());
    }

    SpectralDecomposition dec;
    dec.dim = rho.rows();
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        const bool new_group =
            dec.groups.empty() ||
            eig.values[k] - dec.groups.back().eigenvalue > group_tol;
        if (new_group)
            dec.groups.push_back({eig.values[k], {}});
        dec.groups.back().vectors.push_back(eig.vectors.col(k));
    }
    return dec;
}

namespace detail {

// Basis index <-> spin bits (b1, b2), each 1 or 0, index = 2(1-b1) + (1-b2).
inline int basis_index(int b1, int b2)
{
    return 2 * (1 - b1) + (1 - b2);
}

}  // namespace detail

/// Partial transpose with respect to `particle` (1 or 2).
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, int particle)
{
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("partial_transpose: expected a 4x4 two-qubit matrix");
    if (particle != 1 && particle != 2)
        throw std::invalid_argument("partial_transpose: particle must be 1 or 2");
    ComplexMatrix out(4, 4);
    for (int a1 = 0; a1 <= 1; ++a1)
        for (int a2 = 0; a2 <= 1; ++a2)
            for (int b1 = 0; b1 <= 1; ++b1)
                for (int b2 = 0; b2 <= 1; ++b2) {
                    const int row = detail::basis_index(a1, a2);
                    const int col = detail::basis_index(b1, b2);
                    // Transposing particle i swaps its bra/ket bits.
                    const int src_row = particle == 2 ? detail::basis_index(a1, b2)
                                                      : detail::basis_index(b1, a2);
                    const int src_col = particle == 2 ? detail::basis_index(b1, a2)
                                                      : detail::basis_index(a1, b2);
                    out(row, col) = rho(src_row, src_col);
                }
    return out;
}

/// Entanglement negativity: sum of |negative eigenvalues| of the partial
/// transpose. Strictly positive iff the two-qubit state is entangled.
inline double negativity(const ComplexMatrix& rho, int particle = 2)
{
    require_hermitian(rho, "negativity");
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10)
        throw std::invalid_argument("negativity: input must have unit trace");
    const HermitianEigen eig = herm_eig(partial_transpose(rho, particle));
    double neg = 0.0;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        neg += std::max(0.0, -eig.values[k]);
    return neg;
}

}  // namespace gp
