#include <doctest.h>

#include <cmath>
#include <random>

#include "qcorr/matrix.hpp"
#include "test_helpers.hpp"

using namespace qcorr;
using namespace qcorr::test;

TEST_CASE("matrix algebra identities on random inputs") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const int dim = 2 + static_cast<int>(rng() % 7);
        const ComplexMatrix a = random_hermitian(dim, rng);
        const ComplexMatrix b = random_hermitian(dim, rng);
        // (AB)+ = B+ A+
        CHECK(max_abs_diff((a * b).adjoint(), b.adjoint() * a.adjoint()) < 1e-12);
        // trace linearity and cyclicity
        CHECK(std::abs((a + b).trace() - a.trace() - b.trace()) < 1e-12);
        CHECK(std::abs((a * b).trace() - (b * a).trace()) < 1e-10);
    }
}

TEST_CASE("von Neumann entropy on reference states") {
    CHECK(vn_entropy(DensityMatrix(pure_state({1.0, 0.0, 0.0, 0.0}))) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(vn_entropy(DensityMatrix(diagonal({0.25, 0.25, 0.25, 0.25}))) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(vn_entropy(DensityMatrix(diagonal({0.5, 0.5, 0.0, 0.0}))) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("invalid states are rejected") {
    ComplexMatrix bad = diagonal({0.5, 0.5});
    bad(0, 1) = complexd(0.1, 0.0); // bad(1,0) stays 0: not Hermitian
    CHECK_THROWS_AS(DensityMatrix{bad}, invalid_state_error);

    CHECK_THROWS_AS(DensityMatrix{diagonal({0.7, 0.7})}, invalid_state_error);  // trace 1.4
    CHECK_THROWS_AS(DensityMatrix{diagonal({1.5, -0.5})}, invalid_state_error); // not positive
}

TEST_CASE("partial trace: Bell marginals are maximally mixed") {
    const DensityMatrix bell(bell_phi_plus());
    for (auto side : {Subsystem::A, Subsystem::B}) {
        const DensityMatrix red = partial_trace(bell, side);
        CHECK(max_abs_diff(red.matrix(), diagonal({0.5, 0.5})) < 1e-12);
    }
}

TEST_CASE("partial trace of a product state returns the exact factor") {
    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix ra = random_density(2, rng);
        const ComplexMatrix rb = random_density(2, rng);
        const DensityMatrix rho(kron2(ra, rb));
        CHECK(max_abs_diff(partial_trace(rho, Subsystem::B).matrix(), ra) < 1e-12);
        CHECK(max_abs_diff(partial_trace(rho, Subsystem::A).matrix(), rb) < 1e-12);
    }
}

TEST_CASE("partial trace of an X state gives diag(a+b, b+d)") {
    XStateSampler sampler(7);
    for (int rep = 0; rep < 20; ++rep) {
        const XState x = sampler.next();
        const DensityMatrix rho = x.to_density_matrix();
        const ComplexMatrix expected = diagonal({x.a + x.b, x.b + x.d});
        CHECK(max_abs_diff(partial_trace(rho, Subsystem::B).matrix(), expected) < 1e-12);
        CHECK(max_abs_diff(partial_trace(rho, Subsystem::A).matrix(), expected) < 1e-12);
    }
}

TEST_CASE("partial trace rejects non-two-qubit input") {
    CHECK_THROWS_AS(partial_trace(DensityMatrix(diagonal({0.5, 0.5})), Subsystem::B),
                    dimension_error);
}

TEST_CASE("hermitian eigenvalues: fixed references") {
    auto eig = hermitian_eigenvalues(diagonal({3.0, 1.0, 2.0}));
    REQUIRE(eig.size() == 3);
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(eig[2] == doctest::Approx(3.0).epsilon(1e-14));

    ComplexMatrix pauli_x(2);
    pauli_x(0, 1) = 1.0;
    pauli_x(1, 0) = 1.0;
    eig = hermitian_eigenvalues(pauli_x);
    CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-14));

    ComplexMatrix skew(2);
    skew(0, 1) = complexd(0.0, 1.0);
    skew(1, 0) = complexd(0.0, 1.0); // Hermiticity would need -i
    CHECK_THROWS_AS(hermitian_eigenvalues(skew), invalid_state_error);
}

TEST_CASE("hermitian eigenvalues agree with characteristic-polynomial roots") {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix m = random_hermitian(4, rng);
        const auto eig = hermitian_eigenvalues(m);

        double sum = 0.0, prod = 1.0;
        for (double l : eig) {
            sum += l;
            prod *= l;
        }
        const double scale = std::max(1.0, std::abs(m.trace().real()));
        CHECK(std::abs(sum - m.trace().real()) < 1e-10 * scale);
        CHECK(determinant(m).real() == doctest::Approx(prod).epsilon(1e-8));

        // locate the roots of det(M - lambda I) independently: scan + bisect
        double bound = 0.0;
        for (int i = 0; i < 4; ++i) {
            double row = 0.0;
            for (int j = 0; j < 4; ++j) row += std::abs(m(i, j));
            bound = std::max(bound, row);
        }
        auto charpoly = [&](double lambda) {
            ComplexMatrix shifted = m;
            for (int i = 0; i < 4; ++i) shifted(i, i) -= lambda;
            return determinant(shifted).real();
        };
        std::vector<double> roots;
        const int samples = 4000;
        double prev_x = -bound, prev_f = charpoly(prev_x);
        for (int s = 1; s <= samples; ++s) {
            const double x = -bound + 2.0 * bound * s / samples;
            const double f = charpoly(x);
            if (prev_f == 0.0 || prev_f * f < 0.0) {
                double lo = prev_x, hi = x;
                for (int it = 0; it < 80; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (charpoly(lo) * charpoly(mid) <= 0.0)
                        hi = mid;
                    else
                        lo = mid;
                }
                roots.push_back(0.5 * (lo + hi));
            }
            prev_x = x;
            prev_f = f;
        }
        REQUIRE(roots.size() == eig.size());
        for (size_t i = 0; i < roots.size(); ++i) CHECK(std::abs(roots[i] - eig[i]) < 1e-8);
    }
}

TEST_CASE("X-form eigenvalues match the closed-form block spectrum") {
    XStateSampler sampler(44);
    for (int rep = 0; rep < 30; ++rep) {
        const XState x = sampler.next();
        const auto jacobi = hermitian_eigenvalues(x.to_matrix());
        const auto closed = x.eigenvalues();
        REQUIRE(jacobi.size() == closed.size());
        for (size_t i = 0; i < closed.size(); ++i) CHECK(std::abs(jacobi[i] - closed[i]) < 1e-10);
    }
}

TEST_CASE("entropy is unitarily invariant and bounded") {
    std::mt19937_64 rng(55);
    for (int rep = 0; rep < 10; ++rep) {
        const int dim = (rep % 2 == 0) ? 4 : 6;
        const ComplexMatrix rho = random_density(dim, rng);
        const ComplexMatrix u = random_unitary(dim, rng);
        const DensityMatrix dm(rho);
        const DensityMatrix rotated(u * rho * u.adjoint());
        const double s = vn_entropy(dm);
        CHECK(std::abs(vn_entropy(rotated) - s) < 1e-9);
        CHECK(s >= 0.0);
        CHECK(s <= std::log2(static_cast<double>(dim)) + 1e-12);
    }
}
