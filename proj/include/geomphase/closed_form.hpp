#pragma once

// Analytic geometric-phase expressions for the two state families, plus the
// grid cross-check against the numeric engine.
//
// Free case (g = 0), with a = (omega1 + omega2)/2 for family Phi and
// a = (omega1 - omega2)/2 for family Psi, alpha = cos(2 theta) a t,
// beta = a t:
//
//   N = -r (sin alpha cos beta - cos2theta cos alpha sin beta)
//   D = (1-r)/2 + (1+r)/2 (cos alpha cos beta + cos2theta sin alpha sin beta)
//   gamma = atan2(N, D)
//
// Coupled case (family Psi, any g >= 0), obtained by diagonalizing the
// Hamiltonian's middle block [[b, g], [g, -b]] on span{|10>, |01>}
// (b = (omega1 - omega2)/2):
//
//   lambda1 = [ (omega1 - omega2) cos2theta - 2 g sin2theta ] / 2
//   lambda2 = sqrt( (omega1 - omega2)^2 + 4 g^2 ) / 2
//   kappa   = lambda1 / lambda2          (|kappa| <= 1 by Cauchy-Schwarz)
//   N = -r (sin lambda1 t cos lambda2 t - kappa cos lambda1 t sin lambda2 t)
//   D = (1-r)/2 + (1+r)/2 (cos lambda1 t cos lambda2 t
//                          + kappa sin lambda1 t sin lambda2 t)
//   gamma = atan2(N, D)
//
// lambda2 = 0 forces lambda1 = 0 and is handled as the explicit limit
// (N = 0, D = 1, phase 0). At g = 0, kappa = sign(b) cos2theta and the
// coupled form reduces to the free form exactly. N and D are the imaginary
// and real parts of Tr[U_par rho(0)], so the two-argument angle matches the
// engine's Arg on every branch; singularity is |N + iD| < sing_tol as there.

#include "geomphase/phase_engine.hpp"
#include "geomphase/spin_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gp {

/// Middle-block frequencies of the coupled Hamiltonian for family Psi.
struct LambdaPair {
    double lambda1 = 0.0;  // signed dynamical frequency of |psi(theta)>
    double lambda2 = 0.0;  // half splitting of the middle block, >= 0
};

inline LambdaPair lambda_pair(const SystemParams& p, double theta)
{
    p.validate();
    const double th = reduce_theta(theta);
    LambdaPair l;
    l.lambda1 = ((p.omega1 - p.omega2) * std::cos(2.0 * th) - 2.0 * p.g * std::sin(2.0 * th)) / 2.0;
    l.lambda2 = std::sqrt((p.omega1 - p.omega2) * (p.omega1 - p.omega2) + 4.0 * p.g * p.g) / 2.0;
    return l;
}

namespace detail {

/// Shared free-case kernel: Tr[U_par rho] = D + iN for a two-level rotation
/// of frequency `a` acting on the entangled pair.
inline GPResult free_phase_kernel(double a, double theta, double r, double t, double sing_tol)
{
    const double c2 = std::cos(2.0 * theta);
    const double alpha = c2 * a * t;
    const double beta = a * t;
    const double num = -r * (std::sin(alpha) * std::cos(beta) - c2 * std::cos(alpha) * std::sin(beta));
    const double den = (1.0 - r) / 2.0 +
                       (1.0 + r) / 2.0 *
                           (std::cos(alpha) * std::cos(beta) + c2 * std::sin(alpha) * std::sin(beta));
    return GPResult::from_trace(Complex(den, num), sing_tol);
}

inline void validate_closed_inputs(const SystemParams& p, double r, double t)
{
    p.validate();
    if (!(r > 0.0) || r > 1.0)
        throw std::invalid_argument("closed form: r must lie in (0, 1]");
    if (!(t >= 0.0))
        throw std::invalid_argument("closed form: time must be >= 0");
}

}  // namespace detail

/// Free-case closed form for family Phi (requires g = 0).
inline GPResult gp1_closed(const SystemParams& p, double theta, double r, double t,
                           double sing_tol = kSingTol)
{
    detail::validate_closed_inputs(p, r, t);
    if (p.g != 0.0)
        throw std::invalid_argument("gp1_closed: formula is for the free case, g must be 0");
    return detail::free_phase_kernel((p.omega1 + p.omega2) / 2.0, reduce_theta(theta), r, t,
                                     sing_tol);
}

/// Free-case closed form for family Psi (requires g = 0).
inline GPResult gp2_closed_free(const SystemParams& p, double theta, double r, double t,
                                double sing_tol = kSingTol)
{
    detail::validate_closed_inputs(p, r, t);
    if (p.g != 0.0)
        throw std::invalid_argument("gp2_closed_free: formula is for the free case, g must be 0");
    return detail::free_phase_kernel((p.omega1 - p.omega2) / 2.0, reduce_theta(theta), r, t,
                                     sing_tol);
}

/// Coupled-case closed form for family Psi, valid for any g >= 0.
inline GPResult gp2_closed_coupled(const SystemParams& p, double theta, double r, double t,
                                   double sing_tol = kSingTol)
{
    detail::validate_closed_inputs(p, r, t);
    const LambdaPair l = lambda_pair(p, theta);
    if (l.lambda2 == 0.0) {
        // omega1 = omega2 and g = 0: the middle block vanishes, the state
        // commutes with H and the phase is zero with full visibility.
        return GPResult::from_trace(Complex(1.0, 0.0), sing_tol);
    }
    const double kappa = l.lambda1 / l.lambda2;
    const double s1 = std::sin(l.lambda1 * t), c1 = std::cos(l.lambda1 * t);
    const double s2 = std::sin(l.lambda2 * t), c2 = std::cos(l.lambda2 * t);
    const double num = -r * (s1 * c2 - kappa * c1 * s2);
    const double den = (1.0 - r) / 2.0 + (1.0 + r) / 2.0 * (c1 * c2 + kappa * s1 * s2);
    return GPResult::from_trace(Complex(den, num), sing_tol);
}

/// Closed-form phase for any supported input: family Phi uses the free-case
/// expression with the coupling dropped (exact, since the interaction
/// commutes with every family-Phi state), family Psi uses the free or
/// coupled expression as g dictates.
inline GPResult closed_form_phase(StateFamily family, const SystemParams& p, double theta,
                                  double r, double t, double sing_tol = kSingTol)
{
    if (family == StateFamily::Phi) {
        SystemParams free = p;
        free.g = 0.0;
        return gp1_closed(free, theta, r, t, sing_tol);
    }
    if (p.g == 0.0)
        return gp2_closed_free(p, theta, r, t, sing_tol);
    return gp2_closed_coupled(p, theta, r, t, sing_tol);
}

/// Dimensionless verification grid over (family, theta, r, n = omega2/omega1,
/// J = g/omega1, omega1 t).
struct VerifyGrid {
    std::vector<StateFamily> families{StateFamily::Phi, StateFamily::Psi};
    std::vector<double> thetas;
    std::vector<double> rs;
    std::vector<double> ns;
    std::vector<double> Js;
    std::vector<double> omega1ts;
    double omega1 = 1.0;
};

struct VerifyPointId {
    StateFamily family = StateFamily::Phi;
    double theta = 0.0, r = 0.0, n = 0.0, J = 0.0, omega1t = 0.0;
};

struct VerifyReport {
    long compared = 0;
    long singular_skipped = 0;
    double max_deviation = 0.0;  // circle distance, radians
    VerifyPointId argmax;
    double min_trace_magnitude = 0.0;  // smallest visibility among compared points
};

/// Default exclusion threshold for verification runs. The phase's condition
/// number is ~1/|Tr|, so points with visibility below this cannot be compared
/// at 1e-9 in double precision; they are counted as singular skips instead.
inline constexpr double kVerifyExclusionTol = 1e-6;

/// Compares the closed forms against the numeric engine over a grid.
/// Points where either route reports |Tr| < sing_tol are excluded from the
/// deviation statistics and counted separately.
inline VerifyReport verify_closed_vs_numeric(const VerifyGrid& grid,
                                             double sing_tol = kVerifyExclusionTol)
{
    if (!(sing_tol > 0.0))
        throw std::invalid_argument("verify_closed_vs_numeric: sing_tol must be > 0");
    VerifyReport report;
    report.min_trace_magnitude = std::numeric_limits<double>::infinity();
    for (StateFamily family : grid.families)
        for (double n : grid.ns)
            for (double J : grid.Js) {
                const SystemParams p{grid.omega1, n * grid.omega1, J * grid.omega1};
                const ComplexMatrix h = build_hamiltonian(p);
                for (double theta : grid.thetas)
                    for (double r : grid.rs) {
                        const InitialStateSpec state{family, theta, r};
                        const ComplexMatrix rho0 = build_initial_state(state);
                        const SpectralDecomposition dec = state_eigensystem(rho0);
                        for (double w1t : grid.omega1ts) {
                            const double t = w1t / grid.omega1;
                            const GPResult closed =
                                closed_form_phase(family, p, theta, r, t, sing_tol);
                            const GPResult engine = geometric_phase(dec, rho0, h, t, sing_tol);
                            if (closed.singular || engine.singular) {
                                ++report.singular_skipped;
                                continue;
                            }
                            ++report.compared;
                            report.min_trace_magnitude =
                                std::min(report.min_trace_magnitude, engine.trace_magnitude);
                            const double dev = circle_distance(*closed.phase, *engine.phase);
                            if (dev > report.max_deviation) {
                                report.max_deviation = dev;
                                report.argmax = {family, theta, r, n, J, w1t};
                            }
                        }
                    }
            }
    if (report.compared == 0)
        report.min_trace_magnitude = 0.0;
    return report;
}

/// The grid used by `geomphase verify` and the acceptance suite:
/// `points` theta samples over [0, pi] crossed with fixed r/n/J lists and
/// eight omega1t values spanning (0, 2 pi].
inline VerifyGrid default_verify_grid(int points = 21)
{
    if (points < 2)
        throw std::invalid_argument("default_verify_grid: points must be >= 2");
    VerifyGrid grid;
    for (int i = 0; i < points; ++i)
        grid.thetas.push_back(kPi * static_cast<double>(i) / (points - 1));
    for (int i = 1; i <= 10; ++i)
        grid.rs.push_back(0.1 * i);
    grid.ns = {0.0, 0.5, 1.0, 2.0};
    grid.Js = {0.0, 0.3, 1.0, 5.0};
    for (int i = 1; i <= 8; ++i)
        grid.omega1ts.push_back(2.0 * kPi * i / 8.0);
    return grid;
}

}  // namespace gp
