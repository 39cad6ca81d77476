#include <doctest.h>

#include <entprod/linalg.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace entprod;
using std::numbers::pi;

namespace {

ComplexMatrix random_complex(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

ComplexMatrix random_hermitian(Eigen::Index dim, std::uint64_t seed) {
    const ComplexMatrix g = random_complex(dim, seed);
    return 0.5 * (g + g.adjoint());
}

ComplexMatrix diag2(Complex a, Complex b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

// Two-qubit Ising Hamiltonian, written out directly so checks here do not
// depend on the models module.
ComplexMatrix ising2(double h, double j) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = -h + j / 2.0;
    m(1, 1) = -j / 2.0;
    m(2, 2) = -j / 2.0;
    m(3, 3) = h + j / 2.0;
    return m;
}

} // namespace

TEST_CASE("kron identity and diagonal cases") {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    CHECK((kron(i2, i2) - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    const ComplexMatrix d = kron(diag2(2.0, 3.0), diag2(5.0, 7.0));
    CHECK(d(0, 0) == Complex(10.0));
    CHECK(d(1, 1) == Complex(14.0));
    CHECK(d(2, 2) == Complex(15.0));
    CHECK(d(3, 3) == Complex(21.0));
    CHECK(d.cwiseAbs().sum() == doctest::Approx(60.0));

    const ComplexMatrix sz = diag2(0.5, -0.5);
    const ComplexMatrix zz = kron(sz, sz);
    CHECK(zz(0, 0) == Complex(0.25));
    CHECK(zz(1, 1) == Complex(-0.25));
    CHECK(zz(2, 2) == Complex(-0.25));
    CHECK(zz(3, 3) == Complex(0.25));
}

TEST_CASE("kron index layout and bilinearity") {
    const ComplexMatrix a = random_complex(2, 11);
    const ComplexMatrix b = random_complex(3, 12);
    const ComplexMatrix k = kron(a, b);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index r = 0; r < 3; ++r)
                for (Eigen::Index s = 0; s < 3; ++s)
                    CHECK(std::abs(k(i * 3 + r, j * 3 + s) - a(i, j) * b(r, s)) < 1e-14);

    const Complex alpha(0.3, -1.7);
    CHECK((kron(alpha * a, b) - alpha * k).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("trace") {
    CHECK(trace(ComplexMatrix::Identity(4, 4)) == Complex(4.0));
    CHECK(trace(ComplexMatrix::Zero(3, 3)) == Complex(0.0));

    // Tr U(pi) for the two-qubit register at h = J = 1: the four diagonal
    // phases sum to 2 cos(pi) e^{-i pi/2} + 2 e^{i pi/2} = 4i.
    const ComplexMatrix u = evolve_operator(ising2(1.0, 1.0), pi);
    const Complex tr = trace(u);
    // Brute-force diagonal sum as the cross-check.
    Complex brute = 0.0;
    for (Eigen::Index k = 0; k < 4; ++k) brute += u(k, k);
    CHECK(std::abs(tr - Complex(0.0, 4.0)) < 1e-12);
    CHECK(std::abs(tr - brute) < 1e-15);
}

TEST_CASE("singular values") {
    const RealVector s = singular_values(diag2(3.0, -1.0));
    CHECK(s(0) == doctest::Approx(3.0));
    CHECK(s(1) == doctest::Approx(1.0));

    const ComplexMatrix u = evolve_operator(random_hermitian(5, 21), 0.7);
    const RealVector su = singular_values(u);
    for (Eigen::Index i = 0; i < 5; ++i) CHECK(std::abs(su(i) - 1.0) < 1e-12);

    // Oracle: squared singular values are the eigenvalues of A^+ A.
    const ComplexMatrix a = random_complex(4, 22);
    const RealVector sa = singular_values(a);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.adjoint() * a);
    for (Eigen::Index i = 0; i < 4; ++i) {
        CHECK(std::abs(sa(i) - std::sqrt(es.eigenvalues()(3 - i))) < 1e-10);
    }
}

TEST_CASE("schatten norms") {
    CHECK(schatten_norm(ComplexMatrix::Identity(5, 5), 2.0) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(schatten_norm(diag2(3.0, 1.0), schatten_inf) == doctest::Approx(3.0));
    CHECK_THROWS_AS(schatten_norm(diag2(1.0, 1.0), 0.5), std::domain_error);

    // ||U||_2^2 equals the space dimension for any unitary.
    const ComplexMatrix u = evolve_operator(random_hermitian(6, 31), 1.3);
    const double n2 = schatten_norm(u, 2.0);
    CHECK(n2 * n2 == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("schatten-2 agrees with the Tr(A^+A) route") {
    for (std::uint64_t seed : {41, 42, 43}) {
        const ComplexMatrix a = random_complex(5, seed);
        const double via_svd = schatten_norm(a, 2.0);
        const double via_trace = hilbert_schmidt_norm(a);
        CHECK(std::abs(via_svd - via_trace) < 1e-10 * via_trace);
    }
}

TEST_CASE("unitary invariance of schatten norms") {
    const ComplexMatrix a = random_complex(5, 51);
    const ComplexMatrix u1 = evolve_operator(random_hermitian(5, 52), 0.9);
    const ComplexMatrix u2 = evolve_operator(random_hermitian(5, 53), -1.4);
    for (double p : {1.0, 2.0, 3.0, schatten_inf}) {
        const double base = schatten_norm(a, p);
        const double rotated = schatten_norm(u1 * a * u2, p);
        CHECK(std::abs(rotated - base) < 1e-9 * base);
    }
}

TEST_CASE("hilbert-schmidt norm as a basis sum") {
    const ComplexMatrix a = random_complex(4, 61);
    double acc = 0.0;
    for (Eigen::Index k = 0; k < 4; ++k) {
        acc += (a * ComplexMatrix::Identity(4, 4).col(k)).squaredNorm();
    }
    const double n = hilbert_schmidt_norm(a);
    CHECK(std::abs(n * n - acc) < 1e-10 * acc);
}

TEST_CASE("hermitian_eig") {
    SUBCASE("diagonal input, ascending eigenvalues") {
        const EigenSystem es = hermitian_eig(diag2(2.0, 1.0));
        CHECK(es.eigenvalues(0) == doctest::Approx(1.0));
        CHECK(es.eigenvalues(1) == doctest::Approx(2.0));
        CHECK(std::abs(std::abs(es.eigenvectors(1, 0)) - 1.0) < 1e-14);
        CHECK(std::abs(std::abs(es.eigenvectors(0, 1)) - 1.0) < 1e-14);
    }
    SUBCASE("two-qubit Ising spectrum at h = J = 1") {
        const EigenSystem es = hermitian_eig(ising2(1.0, 1.0));
        CHECK(es.eigenvalues(0) == doctest::Approx(-0.5));
        CHECK(es.eigenvalues(1) == doctest::Approx(-0.5));
        CHECK(es.eigenvalues(2) == doctest::Approx(-0.5));
        CHECK(es.eigenvalues(3) == doctest::Approx(1.5));
    }
    SUBCASE("reconstruction and orthonormality on a random 8x8") {
        const ComplexMatrix h = random_hermitian(8, 71);
        const EigenSystem es = hermitian_eig(h);
        const ComplexMatrix rebuilt = es.eigenvectors *
                                      es.eigenvalues.cast<Complex>().asDiagonal() *
                                      es.eigenvectors.adjoint();
        CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-11);
        CHECK((es.eigenvectors.adjoint() * es.eigenvectors - ComplexMatrix::Identity(8, 8))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12 * 8);
    }
    SUBCASE("non-Hermitian input is rejected") {
        ComplexMatrix bad = diag2(1.0, 2.0);
        bad(0, 1) = 1e-6;
        CHECK_THROWS_AS(hermitian_eig(bad), std::domain_error);
    }
}

TEST_CASE("evolve_operator") {
    const ComplexMatrix h = random_hermitian(6, 81);

    SUBCASE("t = 0 gives the identity") {
        CHECK((evolve_operator(h, 0.0) - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() <
              1e-13);
    }
    SUBCASE("diagonal Hamiltonian gives diagonal phases") {
        const ComplexMatrix u = evolve_operator(diag2(1.0, 2.0), 0.3);
        CHECK(std::abs(u(0, 0) - std::exp(Complex(0.0, -0.3))) < 1e-14);
        CHECK(std::abs(u(1, 1) - std::exp(Complex(0.0, -0.6))) < 1e-14);
        CHECK(std::abs(u(0, 1)) < 1e-14);
    }
    SUBCASE("group property U(t1) U(t2) = U(t1+t2)") {
        const ComplexMatrix lhs = evolve_operator(h, 0.3) * evolve_operator(h, 0.4);
        const ComplexMatrix rhs = evolve_operator(h, 0.7);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
    }
    SUBCASE("unitarity over a spread of times") {
        for (double t : {0.1, 1.0, 10.0, -25.0}) {
            const ComplexMatrix u = evolve_operator(h, t);
            CHECK((u.adjoint() * u - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() <
                  1e-11);
        }
    }
}

TEST_CASE("imaginary_time_operator") {
    CHECK((imaginary_time_operator(random_hermitian(4, 91), 0.0) -
           ComplexMatrix::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-13);

    const ComplexMatrix w = imaginary_time_operator(diag2(1.0, 2.0), 0.5);
    CHECK(std::abs(w(0, 0) - std::exp(-0.5)) < 1e-14);
    CHECK(std::abs(w(1, 1) - std::exp(-1.0)) < 1e-14);

    // Tr e^{-H} at h = 0, J = 1: energies (1/2, -1/2, -1/2, 1/2).
    const Complex z = trace(imaginary_time_operator(ising2(0.0, 1.0), 1.0));
    CHECK(std::abs(z - Complex(2.0 * std::exp(-0.5) + 2.0 * std::exp(0.5))) < 1e-12);

    CHECK_THROWS_AS(imaginary_time_operator(diag2(1.0, 2.0), -0.1), std::domain_error);

    // Positive-definite output.
    const ComplexMatrix g = imaginary_time_operator(random_hermitian(5, 92), 2.0);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("require_valid rejects non-square and non-finite input") {
    ComplexMatrix rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(require_valid(rect, "test"), std::invalid_argument);

    ComplexMatrix nan2 = ComplexMatrix::Zero(2, 2);
    nan2(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(require_valid(nan2, "test"), std::invalid_argument);
}
