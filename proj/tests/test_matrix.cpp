#include "geomphase/matrix.hpp"

#include "oracles.hpp"

#include <catch2/catch.hpp>

#include <cmath>
#include <random>

using namespace gp;

TEST_CASE("herm_eig handles the identity", "[matrix]")
{
    const HermitianEigen eig = herm_eig(ComplexMatrix::Identity(4, 4));
    for (int k = 0; k < 4; ++k)
        CHECK(eig.values[k] == Approx(1.0).margin(1e-14));
    CHECK(max_abs_entry(eig.vectors * eig.vectors.adjoint() - ComplexMatrix::Identity(4, 4)) <
          1e-10);
}

TEST_CASE("herm_eig returns ascending eigenvalues of a diagonal matrix", "[matrix]")
{
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 0.1;
    m(1, 1) = 0.1;
    m(2, 2) = 0.1;
    m(3, 3) = 0.7;
    const HermitianEigen eig = herm_eig(m);
    CHECK(eig.values[0] == Approx(0.1).margin(1e-14));
    CHECK(eig.values[1] == Approx(0.1).margin(1e-14));
    CHECK(eig.values[2] == Approx(0.1).margin(1e-14));
    CHECK(eig.values[3] == Approx(0.7).margin(1e-14));
}

TEST_CASE("herm_eig matches the 2x2 characteristic polynomial", "[matrix]")
{
    // [[a, g], [g, -a]] has eigenvalues +-sqrt(a^2 + g^2)
    const double a = 0.25, g = 0.5;
    ComplexMatrix m(2, 2);
    m << a, g, g, -a;
    const double root = std::sqrt(a * a + g * g);
    const HermitianEigen eig = herm_eig(m);
    CHECK(eig.values[0] == Approx(-root).margin(1e-12));
    CHECK(eig.values[1] == Approx(root).margin(1e-12));
    CHECK(root == Approx(0.5590169943749475).margin(1e-15));
}

TEST_CASE("herm_eig rejects non-Hermitian input naming the asymmetry", "[matrix]")
{
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = Complex(0.0, 0.5);
    m(1, 0) = Complex(0.0, 0.5);  // conj would be -0.5i
    CHECK_THROWS_WITH(herm_eig(m), Catch::Contains("max asymmetry"));
    CHECK_THROWS_AS(herm_eig(m), std::invalid_argument);
}

TEST_CASE("herm_eig residuals and orthonormality on random Hermitian input", "[matrix]")
{
    std::mt19937 rng(20240811);
    for (int rep = 0; rep < 50; ++rep) {
        const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng() % 3);
        const ComplexMatrix m = oracles::random_hermitian(rng, dim);
        const HermitianEigen eig = herm_eig(m);
        const double scale = 1.0 + max_abs_entry(m);
        for (Eigen::Index k = 0; k < dim; ++k) {
            const ComplexVector v = eig.vectors.col(k);
            CHECK(max_abs_entry(m * v - eig.values[k] * v) < 1e-10 * scale);
        }
        CHECK(max_abs_entry(eig.vectors.adjoint() * eig.vectors -
                            ComplexMatrix::Identity(dim, dim)) < 1e-10);
        // spectral reconstruction
        ComplexMatrix rebuilt = ComplexMatrix::Zero(dim, dim);
        for (Eigen::Index k = 0; k < dim; ++k)
            rebuilt += eig.values[k] * (eig.vectors.col(k) * eig.vectors.col(k).adjoint());
        CHECK(max_abs_entry(rebuilt - m) < 1e-10 * scale);
    }
}

TEST_CASE("expm_i_hermitian of the zero generator is the identity", "[matrix]")
{
    const ComplexMatrix u = expm_i_hermitian(ComplexMatrix::Zero(3, 3), 1.7);
    CHECK(max_abs_entry(u - ComplexMatrix::Identity(3, 3)) < 1e-14);
}

TEST_CASE("expm_i_hermitian of a diagonal generator", "[matrix]")
{
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 0) = 1.0;
    h(1, 1) = -1.0;
    const ComplexMatrix u = expm_i_hermitian(h, kPi);
    CHECK(max_abs_entry(u + ComplexMatrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("expm_i_hermitian matches the power series", "[matrix]")
{
    ComplexMatrix h(2, 2);  // sigma_x / 2
    h << 0.0, 0.5, 0.5, 0.0;
    const ComplexMatrix u = expm_i_hermitian(h, kPi);
    ComplexMatrix expected(2, 2);
    expected << 0.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 0.0;
    CHECK(max_abs_entry(u - expected) < 1e-14);
    CHECK(max_abs_entry(u - oracles::expm_series(Complex(0.0, kPi) * h)) < 1e-13);

    // keep |s H| small enough that the raw series is well conditioned
    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix g = oracles::random_hermitian(rng, 4) / 4.0;
        const double s = 0.1 + 0.2 * rep;
        CHECK(max_abs_entry(expm_i_hermitian(g, s) - oracles::expm_series(Complex(0.0, s) * g)) <
              1e-11);
    }
}

TEST_CASE("expm_i_hermitian group properties", "[matrix]")
{
    std::mt19937 rng(99);
    for (int rep = 0; rep < 25; ++rep) {
        const ComplexMatrix h = oracles::random_hermitian(rng, 4);
        std::uniform_real_distribution<double> dist(-3.0, 3.0);
        const double s = dist(rng), u = dist(rng);
        const ComplexMatrix a = expm_i_hermitian(h, s);
        CHECK(unitarity_error(a) < 1e-10);
        CHECK(max_abs_entry(a * expm_i_hermitian(h, -s) - ComplexMatrix::Identity(4, 4)) < 1e-10);
        CHECK(max_abs_entry(expm_i_hermitian(h, s + u) - a * expm_i_hermitian(h, u)) < 1e-10);
    }
}

TEST_CASE("trace and adjoint basics", "[matrix]")
{
    CHECK(ComplexMatrix::Identity(4, 4).trace() == Complex(4.0, 0.0));

    std::mt19937 rng(5);
    const ComplexMatrix a = oracles::random_hermitian(rng, 4);
    const ComplexMatrix b = oracles::random_unitary(rng, 4);
    CHECK(max_abs_entry(a.adjoint().adjoint() - a) == 0.0);
    CHECK(std::abs((a * b).trace() - (b * a).trace()) < 1e-12);
}

TEST_CASE("compression onto a coordinate subspace picks the sub-block", "[matrix]")
{
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m.diagonal() << 1.0, 2.0, 3.0, 4.0;
    std::vector<ComplexVector> basis{ComplexVector::Unit(4, 1), ComplexVector::Unit(4, 2)};
    const ComplexMatrix c = compress_onto(m, basis);
    REQUIRE(c.rows() == 2);
    CHECK(std::abs(c(0, 0) - Complex(2.0, 0.0)) < 1e-15);
    CHECK(std::abs(c(1, 1) - Complex(3.0, 0.0)) < 1e-15);
    CHECK(std::abs(c(0, 1)) < 1e-15);
}

TEST_CASE("compression of a Hermitian matrix is Hermitian", "[matrix]")
{
    std::mt19937 rng(31);
    const ComplexMatrix m = oracles::random_hermitian(rng, 4);
    const ComplexMatrix q = oracles::random_unitary(rng, 4);
    std::vector<ComplexVector> basis{q.col(0), q.col(1), q.col(2)};
    CHECK(is_hermitian(compress_onto(m, basis)));
}

TEST_CASE("compression rejects dimension mismatch", "[matrix]")
{
    const ComplexMatrix m = ComplexMatrix::Identity(4, 4);
    std::vector<ComplexVector> basis{ComplexVector::Unit(3, 0)};
    CHECK_THROWS_AS(compress_onto(m, basis), std::invalid_argument);
}
