#include "geomphase/phase_engine.hpp"

#include "geomphase/closed_form.hpp"
#include "oracles.hpp"

#include <catch2/catch.hpp>

#include <cmath>
#include <random>

using namespace gp;

TEST_CASE("wrap_angle lands in (-pi, pi]", "[phase_engine]")
{
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(kPi) == Approx(kPi));
    CHECK(wrap_angle(-kPi) == Approx(kPi));
    CHECK(wrap_angle(3.0 * kPi) == Approx(kPi));
    CHECK(wrap_angle(2.0 * kPi + 0.25) == Approx(0.25).margin(1e-14));
    CHECK(wrap_angle(-2.0 * kPi - 0.25) == Approx(-0.25).margin(1e-14));
    CHECK(circle_distance(kPi - 1e-12, -kPi + 1e-12) < 1e-11);
}

TEST_CASE("evolution at t = 0 is the identity", "[phase_engine]")
{
    const ComplexMatrix h = build_hamiltonian({1.0, 0.7, 0.2});
    CHECK(max_abs_entry(evolution(h, 0.0) - ComplexMatrix::Identity(4, 4)) < 1e-14);
}

TEST_CASE("evolution of a diagonal Hamiltonian", "[phase_engine]")
{
    const ComplexMatrix h = build_hamiltonian({1.0, 1.0, 0.0});  // diag(1, 0, 0, -1)
    const ComplexMatrix u = evolution(h, kPi);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected.diagonal() << -1.0, 1.0, 1.0, -1.0;
    CHECK(max_abs_entry(u - expected) < 1e-12);
}

TEST_CASE("evolution matches the product-integrator oracle", "[phase_engine]")
{
    const ComplexMatrix h = build_hamiltonian({1.0, 0.5, 0.3});
    const ComplexMatrix u = evolution(h, 2.0);
    CHECK(unitarity_error(u) < 1e-10);
    CHECK(max_abs_entry(u - oracles::evolution_product_integrator(h, 2.0)) < 1e-8);
}

TEST_CASE("evolution rejects negative times", "[phase_engine]")
{
    CHECK_THROWS_AS(evolution(ComplexMatrix::Identity(4, 4), -0.5), std::invalid_argument);
}

TEST_CASE("a single full-space group cancels the evolution entirely", "[phase_engine]")
{
    const ComplexMatrix rho = ComplexMatrix::Identity(4, 4) / 4.0;
    const ComplexMatrix h = build_hamiltonian({1.2, 0.4, 0.6});
    const SpectralDecomposition dec = state_eigensystem(rho);
    REQUIRE(dec.groups.size() == 1);
    const ComplexMatrix v = parallel_transport_correction(dec, h, 1.3);
    CHECK(max_abs_entry(v - expm_i_hermitian(h, 1.3)) < 1e-10);
    const GPResult res = geometric_phase(rho, h, 1.3);
    REQUIRE_FALSE(res.singular);
    CHECK(*res.phase == Approx(0.0).margin(1e-10));
    CHECK(res.trace_magnitude == Approx(1.0).margin(1e-10));
}

TEST_CASE("singleton groups with a diagonal Hamiltonian give zero phase", "[phase_engine]")
{
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho.diagonal() << 0.1, 0.2, 0.3, 0.4;
    const ComplexMatrix h = build_hamiltonian({1.0, 0.3, 0.0});
    const SpectralDecomposition dec = state_eigensystem(rho);
    REQUIRE(dec.groups.size() == 4);
    const ComplexMatrix v = parallel_transport_correction(dec, h, 2.1);
    CHECK(max_abs_entry(evolution(h, 2.1) * v - ComplexMatrix::Identity(4, 4)) < 1e-10);
    const GPResult res = geometric_phase(rho, h, 2.1);
    CHECK(*res.phase == Approx(0.0).margin(1e-10));
}

TEST_CASE("V is blocked in the state eigenbasis", "[phase_engine]")
{
    const ComplexMatrix rho = build_initial_state({StateFamily::Phi, 0.9, 0.5});
    const ComplexMatrix h = build_hamiltonian({1.0, 0.6, 0.4});
    const SpectralDecomposition dec = state_eigensystem(rho);
    REQUIRE(dec.groups.size() == 2);
    REQUIRE(dec.groups[0].vectors.size() == 3);

    const ComplexMatrix v = parallel_transport_correction(dec, h, 1.7);
    CHECK(unitarity_error(v) < 1e-10);
    CHECK(unitarity_error(evolution(h, 1.7) * v) < 1e-10);
    // cross-group elements vanish; the singleton block is a pure phase
    const ComplexVector top = dec.groups[1].vectors[0];
    for (const ComplexVector& mu : dec.groups[0].vectors) {
        CHECK(std::abs(mu.dot(v * top)) < 1e-12);
        CHECK(std::abs(top.dot(v * mu)) < 1e-12);
    }
    CHECK(std::abs(std::abs(top.dot(v * top)) - 1.0) < 1e-12);
}

TEST_CASE("geometric phase at t = 0 is zero with unit visibility", "[phase_engine]")
{
    const GPResult res = geometric_phase(InitialStateSpec{StateFamily::Phi, 1.1, 0.4},
                                         SystemParams{1.0, 0.5, 0.7}, 0.0);
    CHECK(*res.phase == 0.0);
    CHECK(res.trace_magnitude == Approx(1.0).margin(1e-12));
}

TEST_CASE("Werner-Psi free case picks up no phase", "[phase_engine]")
{
    const GPResult res = geometric_phase(InitialStateSpec{StateFamily::Psi, kPi / 4.0, 0.9},
                                         SystemParams{1.0, 1.0, 0.0}, kPi / 4.0);
    REQUIRE_FALSE(res.singular);
    CHECK(*res.phase == Approx(0.0).margin(1e-12));
}

TEST_CASE("Werner-Phi pure state hits the singular point", "[phase_engine]")
{
    const GPResult res = geometric_phase(InitialStateSpec{StateFamily::Phi, kPi / 4.0, 1.0},
                                         SystemParams{1.0, 1.0, 0.0}, kPi / 2.0);
    CHECK(res.singular);
    CHECK_FALSE(res.phase.has_value());
    CHECK(res.trace_magnitude < 1e-12);

    // the same point at r = 0.99 is defined
    const GPResult near = geometric_phase(InitialStateSpec{StateFamily::Phi, kPi / 4.0, 0.99},
                                          SystemParams{1.0, 1.0, 0.0}, kPi / 2.0);
    REQUIRE_FALSE(near.singular);
    CHECK(*near.phase == Approx(0.0).margin(1e-10));
}

TEST_CASE("one particle in zero field can also hit a singular point", "[phase_engine]")
{
    const GPResult res = geometric_phase(InitialStateSpec{StateFamily::Phi, kPi / 4.0, 1.0},
                                         SystemParams{1.0, 0.0, 0.0}, kPi);
    CHECK(res.singular);
}

TEST_CASE("pure states reproduce the rank-one phase oracle", "[phase_engine]")
{
    const SystemParams p{1.0, 0.4, 0.8};
    const ComplexMatrix h = build_hamiltonian(p);
    const double t = 1.9;
    const ComplexVector v = state_vector(StateFamily::Phi, kPi / 3.0);
    const GPResult res =
        geometric_phase(InitialStateSpec{StateFamily::Phi, kPi / 3.0, 1.0}, p, t);
    REQUIRE_FALSE(res.singular);
    CHECK(circle_distance(*res.phase, oracles::pure_state_phase(v, evolution(h, t), h, t)) <
          1e-9);
}

TEST_CASE("geometric phase rejects bad arguments", "[phase_engine]")
{
    const ComplexMatrix rho = build_initial_state({StateFamily::Phi, 0.3, 0.5});
    const ComplexMatrix h = build_hamiltonian({1.0, 0.5, 0.0});
    CHECK_THROWS_AS(geometric_phase(rho, h, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(geometric_phase(rho, h, 1.0, 0.0), std::invalid_argument);

    // decomposition dimension must match the Hamiltonian
    const SpectralDecomposition dec = state_eigensystem(rho);
    CHECK_THROWS_AS(parallel_transport_correction(dec, ComplexMatrix::Zero(3, 3), 1.0),
                    std::invalid_argument);
}

TEST_CASE("phase is invariant under remixing a degenerate group", "[phase_engine]")
{
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> theta_dist(0.0, kPi);
    std::uniform_real_distribution<double> r_dist(0.1, 0.95);
    std::uniform_real_distribution<double> misc(0.0, 2.0);
    for (int rep = 0; rep < 30; ++rep) {
        const InitialStateSpec spec{rep % 2 ? StateFamily::Phi : StateFamily::Psi,
                                    theta_dist(rng), r_dist(rng)};
        const SystemParams p{1.0, misc(rng), misc(rng)};
        const double t = misc(rng) * kPi;
        const ComplexMatrix rho = build_initial_state(spec);
        const ComplexMatrix h = build_hamiltonian(p);
        const SpectralDecomposition dec = state_eigensystem(rho);

        SpectralDecomposition remixed = dec;
        for (EigenGroup& group : remixed.groups) {
            const auto k = static_cast<Eigen::Index>(group.vectors.size());
            if (k < 2)
                continue;
            const ComplexMatrix w = oracles::random_unitary(rng, k);
            std::vector<ComplexVector> mixed(group.vectors.size(),
                                             ComplexVector::Zero(remixed.dim));
            for (Eigen::Index j = 0; j < k; ++j)
                for (Eigen::Index i = 0; i < k; ++i)
                    mixed[static_cast<std::size_t>(j)] +=
                        w(i, j) * group.vectors[static_cast<std::size_t>(i)];
            group.vectors = std::move(mixed);
        }

        const GPResult a = geometric_phase(dec, rho, h, t);
        const GPResult b = geometric_phase(remixed, rho, h, t);
        REQUIRE(a.singular == b.singular);
        if (!a.singular)
            CHECK(circle_distance(*a.phase, *b.phase) < 1e-9);
    }
}

TEST_CASE("family-Phi phase does not depend on the coupling", "[phase_engine]")
{
    const InitialStateSpec spec{StateFamily::Phi, kPi / 3.0, 0.7};
    const GPResult base = geometric_phase(spec, SystemParams{1.0, 0.5, 0.0}, 1.0);
    for (double g : {0.5, 2.0, 10.0}) {
        const GPResult res = geometric_phase(spec, SystemParams{1.0, 0.5, g}, 1.0);
        REQUIRE_FALSE(res.singular);
        CHECK(circle_distance(*res.phase, *base.phase) < 1e-10);
    }
}

TEST_CASE("phase is continuous in t away from singular points", "[phase_engine]")
{
    const InitialStateSpec spec{StateFamily::Psi, 0.6, 0.8};
    const SystemParams p{1.0, 0.3, 0.5};
    const ComplexMatrix rho = build_initial_state(spec);
    const ComplexMatrix h = build_hamiltonian(p);
    const SpectralDecomposition dec = state_eigensystem(rho);
    double prev = *geometric_phase(dec, rho, h, 0.1).phase;
    for (int k = 1; k <= 200; ++k) {
        const double t = 0.1 + 0.01 * k;
        const GPResult res = geometric_phase(dec, rho, h, t);
        REQUIRE_FALSE(res.singular);
        CHECK(circle_distance(*res.phase, prev) < 0.1);
        prev = *res.phase;
    }
}

TEST_CASE("scan_singularities finds the Werner singular point", "[phase_engine]")
{
    std::vector<InitialStateSpec> states;
    for (double r : {0.5, 0.9, 1.0})
        states.push_back({StateFamily::Phi, kPi / 4.0, r});
    const std::vector<double> times{kPi / 4.0, kPi / 2.0, kPi};

    const auto hits = scan_singularities(states, {1.0, 1.0, 0.0}, times);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].state.r == 1.0);
    CHECK(hits[0].t == Approx(kPi / 2.0));
    CHECK(hits[0].trace_magnitude < 1e-12);
}

TEST_CASE("scan_singularities is empty for bounded mixing", "[phase_engine]")
{
    std::vector<InitialStateSpec> states;
    for (double theta : {0.0, 0.5, kPi / 4.0, 1.2, kPi / 2.0})
        for (double r : {0.1, 0.3, 0.5})
            states.push_back({StateFamily::Phi, theta, r});
    const auto hits = scan_singularities(states, {1.0, 1.0, 0.0}, {kPi / 2.0});
    CHECK(hits.empty());
}

TEST_CASE("scan_singularities with an empty time grid", "[phase_engine]")
{
    const auto hits =
        scan_singularities({{StateFamily::Phi, kPi / 4.0, 1.0}}, {1.0, 1.0, 0.0}, {});
    CHECK(hits.empty());
}
