#pragma once

// Numeric geometric phase for (possibly degenerate) mixed states under
// unitary evolution:
//
//   gamma = Arg Tr[ U(t) V(t) rho(0) ],   U(t) = exp(-i H t),
//
// where V(t) undoes the dynamical phase blockwise over the eigenvalue groups
// of rho(0): within each group's span, V acts as exp(+i t PHP) with PHP the
// compression of H onto the group; elements between different groups are
// zero. A vanishing trace means the phase is undefined (singular point).

#include "geomphase/matrix.hpp"
#include "geomphase/spin_model.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gp {

/// Default threshold on |Tr[U_par rho(0)]| below which the phase is treated
/// as undefined.
inline constexpr double kSingTol = 1e-9;

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double x)
{
    double r = std::remainder(x, 2.0 * kPi);
    if (r <= -kPi)
        r += 2.0 * kPi;
    if (r == 0.0)
        r = 0.0;  // normalize -0.0
    return r;
}

/// Minimal angular distance between two phases on the circle.
inline double circle_distance(double a, double b)
{
    return std::abs(wrap_angle(a - b));
}

/// Geometric-phase value in (-pi, pi], or undefined (singular) when the
/// interferometric visibility |Tr[U_par rho(0)]| falls below the threshold.
struct GPResult {
    std::optional<double> phase;
    double trace_magnitude = 0.0;
    bool singular = false;

    static GPResult from_trace(Complex z, double sing_tol)
    {
        GPResult res;
        res.trace_magnitude = std::abs(z);
        res.singular = res.trace_magnitude < sing_tol;
        if (!res.singular)
            res.phase = wrap_angle(std::atan2(z.imag(), z.real()));
        return res;
    }
};

/// U(t) = exp(-i H t).
inline ComplexMatrix evolution(const ComplexMatrix& h, double t)
{
    if (!(t >= 0.0))
        throw std::invalid_argument("evolution: time must be >= 0");
    return expm_i_hermitian(h, -t);
}

/// The parallel-transport correction V(t), block-diagonal over the eigenvalue
/// groups of rho(0): each group contributes exp(+i t PHP) on its span (PHP =
/// compression of H onto the group), singleton groups reduce to the scalar
/// phase e^{i <k|H|k> t}, and cross-group elements are zero.
inline ComplexMatrix parallel_transport_correction(const SpectralDecomposition& dec,
                                                   const ComplexMatrix& h, double t)
{
    require_hermitian(h, "parallel_transport_correction");
    if (dec.dim != h.rows() || dec.vector_count() != static_cast<std::size_t>(dec.dim))
        throw std::invalid_argument(
            "parallel_transport_correction: decomposition does not span the Hamiltonian space");

    ComplexMatrix v = ComplexMatrix::Zero(dec.dim, dec.dim);
    for (const EigenGroup& group : dec.groups) {
        const ComplexMatrix block = expm_i_hermitian(compress_onto(h, group.vectors), t);
        const Eigen::Index k = static_cast<Eigen::Index>(group.vectors.size());
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = 0; j < k; ++j)
                v += block(i, j) * (group.vectors[static_cast<std::size_t>(i)] *
                                    group.vectors[static_cast<std::size_t>(j)].adjoint());
    }
    return v;
}

/// gamma = Arg Tr[U(t) V(t) rho0] with the decomposition supplied by the
/// caller (it must decompose the same rho0 that is traced against).
inline GPResult geometric_phase(const SpectralDecomposition& dec, const ComplexMatrix& rho0,
                                const ComplexMatrix& h, double t, double sing_tol = kSingTol)
{
    if (!(t >= 0.0))
        throw std::invalid_argument("geometric_phase: time must be >= 0");
    if (!(sing_tol > 0.0))
        throw std::invalid_argument("geometric_phase: sing_tol must be > 0");
    const ComplexMatrix u = evolution(h, t);
    const ComplexMatrix v = parallel_transport_correction(dec, h, t);
    const Complex z = (u * v * rho0).trace();
    return GPResult::from_trace(z, sing_tol);
}

/// gamma = Arg Tr[U(t) V(t) rho0] for a density matrix rho0, Hamiltonian h.
inline GPResult geometric_phase(const ComplexMatrix& rho0, const ComplexMatrix& h, double t,
                                double sing_tol = kSingTol, double group_tol = kGroupTol)
{
    return geometric_phase(state_eigensystem(rho0, group_tol), rho0, h, t, sing_tol);
}

/// Convenience evaluation straight from the model inputs.
inline GPResult geometric_phase(const InitialStateSpec& state, const SystemParams& params,
                                double t, double sing_tol = kSingTol)
{
    return geometric_phase(build_initial_state(state), build_hamiltonian(params), t, sing_tol);
}

/// A grid point whose parallel-transport trace magnitude fell below the
/// singularity threshold.
struct SingularPoint {
    InitialStateSpec state;
    double t = 0.0;
    double trace_magnitude = 0.0;
};

/// Scans states x times and returns every singular grid point, sorted by
/// trace magnitude ascending (most singular first).
inline std::vector<SingularPoint> scan_singularities(const std::vector<InitialStateSpec>& states,
                                                     const SystemParams& params,
                                                     const std::vector<double>& times,
                                                     double sing_tol = kSingTol)
{
    const ComplexMatrix h = build_hamiltonian(params);
    std::vector<SingularPoint> hits;
    for (const InitialStateSpec& state : states) {
        const ComplexMatrix rho0 = build_initial_state(state);
        const SpectralDecomposition dec = state_eigensystem(rho0);
        for (double t : times) {
            const GPResult res = geometric_phase(dec, rho0, h, t, sing_tol);
            if (res.singular)
                hits.push_back({state, t, res.trace_magnitude});
        }
    }
    std::stable_sort(hits.begin(), hits.end(),
                     [](const SingularPoint& a, const SingularPoint& b) {
                         return a.trace_magnitude < b.trace_magnitude;
                     });
    return hits;
}

}  // namespace gp
