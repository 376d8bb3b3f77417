#include <cmath>
#include <complex>
#include <limits>

#include <lande/algebra.hpp>

#include "doctest.h"
#include "test_support.hpp"

using lande::complex;
using lande::ComplexMatrix;
using lande::ComplexVector;

namespace {

ComplexMatrix random_hermitian(testsup::SplitMix64& g, int dim) {
    ComplexMatrix a(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            a(i, j) = complex(2.0 * g.uniform() - 1.0, 2.0 * g.uniform() - 1.0);
    return a + a.adjoint();
}

}  // namespace

TEST_CASE("matrix constructors and arithmetic") {
    const auto id = ComplexMatrix::identity(3);
    CHECK(id(0, 0) == complex(1.0, 0.0));
    CHECK(id(0, 1) == complex(0.0, 0.0));
    CHECK(id.trace() == complex(3.0, 0.0));

    const auto d = ComplexMatrix::diagonal({1.0, 0.0, -1.0});
    CHECK(d(2, 2) == complex(-1.0, 0.0));
    CHECK((d * d).trace() == complex(2.0, 0.0));

    auto m = testsup::matrix_from({{{0.0, 1.0}, {2.0, 0.0}}, {{0.0, 0.0}, {1.0, -1.0}}});
    const auto sum = m + m;
    CHECK(sum(0, 0) == complex(0.0, 2.0));
    const auto scaled = complex(0.0, 1.0) * m;
    CHECK(scaled(0, 0) == complex(-1.0, 0.0));
    CHECK((m - m).max_abs() == 0.0);

    CHECK_THROWS_AS(ComplexMatrix(0), lande::DimMismatch);
    CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(3), lande::DimMismatch);
    CHECK_THROWS_AS(ComplexMatrix(2) * ComplexMatrix(3), lande::DimMismatch);
}

TEST_CASE("adjoint, transpose, conjugate") {
    const auto m = testsup::matrix_from({{{1.0, 2.0}, {3.0, 4.0}}, {{5.0, 6.0}, {7.0, 8.0}}});
    CHECK(m.adjoint()(0, 1) == complex(5.0, -6.0));
    CHECK(m.transpose()(0, 1) == complex(5.0, 6.0));
    CHECK(m.conjugate()(0, 1) == complex(3.0, -4.0));
    CHECK((m.adjoint() - m.transpose().conjugate()).max_abs() == 0.0);
}

TEST_CASE("hermiticity defect and finiteness") {
    auto m = testsup::matrix_from({{{1.0, 0.0}, {0.0, 1.0}}, {{0.0, 1.0}, {2.0, 0.0}}});
    CHECK(m.hermiticity_defect() == doctest::Approx(2.0));
    CHECK(!m.is_hermitian(1e-12));
    m(1, 0) = complex(0.0, -1.0);
    CHECK(m.is_hermitian(0.0));

    CHECK(m.all_finite());
    m(0, 0) = complex(std::numeric_limits<double>::infinity(), 0.0);
    CHECK(!m.all_finite());
}

TEST_CASE("vector norm and conjugating inner product") {
    ComplexVector v(2);
    v[0] = complex(0.0, 3.0);
    v[1] = complex(4.0, 0.0);
    CHECK(v.norm() == doctest::Approx(5.0));

    ComplexVector w(2);
    w[0] = complex(1.0, 0.0);
    w[1] = complex(0.0, 1.0);
    // dot conjugates the left argument: conj(3i)*1 + conj(4)*i = -3i + 4i = i
    CHECK(v.dot(w) == complex(0.0, 1.0));
    CHECK(w.dot(v) == complex(0.0, -1.0));
    CHECK_THROWS_AS(v.dot(ComplexVector(3)), lande::DimMismatch);
}

TEST_CASE("gauge_fix makes the first large component real positive, idempotently") {
    ComplexVector v(3);
    v[0] = complex(1e-14, -1e-14);  // below the gauge threshold, must be skipped
    v[1] = complex(0.0, -0.6);
    v[2] = complex(0.8, 0.0);
    const auto fixed = lande::gauge_fix(v);
    CHECK(fixed[1].real() == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(std::abs(fixed[1].imag()) < 1e-12);
    // the norm and relative phases are untouched
    CHECK(fixed.norm() == doctest::Approx(v.norm()));
    CHECK(std::abs(fixed[2] - complex(0.0, 0.8)) < 1e-12);

    const auto twice = lande::gauge_fix(fixed);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(twice[i] - fixed[i]) == 0.0);
}

TEST_CASE("eigensystem reconstructs random Hermitian matrices") {
    testsup::SplitMix64 g{0x5eed001};
    for (int dim = 2; dim <= 8; ++dim) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto h = random_hermitian(g, dim);
            const auto eig = lande::hermitian_eigensystem(h);

            // descending eigenvalues
            for (int k = 1; k < dim; ++k)
                CHECK(eig.eigenvalues[static_cast<size_t>(k - 1)] >=
                      eig.eigenvalues[static_cast<size_t>(k)]);

            // orthonormality and the eigen equation
            for (int k = 0; k < dim; ++k) {
                const auto& v = eig.eigenvectors[static_cast<size_t>(k)];
                CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
                const auto residual =
                    (h * v) - (complex(eig.eigenvalues[static_cast<size_t>(k)], 0.0) * v);
                CHECK(residual.norm() < 1e-9 * std::max(1.0, h.max_abs()));
                for (int l = k + 1; l < dim; ++l)
                    CHECK(std::abs(v.dot(eig.eigenvectors[static_cast<size_t>(l)])) < 1e-9);
            }

            // sum_k lambda_k v_k v_k^dagger == H
            ComplexMatrix rebuilt(dim);
            for (int k = 0; k < dim; ++k) {
                const auto& v = eig.eigenvectors[static_cast<size_t>(k)];
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        rebuilt(i, j) +=
                            eig.eigenvalues[static_cast<size_t>(k)] * v[i] * std::conj(v[j]);
            }
            CHECK((rebuilt - h).max_abs() < 1e-9 * std::max(1.0, h.max_abs()));
        }
    }
}

TEST_CASE("eigensystem matches the half-spin direction operator closed form") {
    testsup::SplitMix64 g{0x5eed002};
    for (int trial = 0; trial < 200; ++trial) {
        const double theta = 0.1 + g.uniform() * (testsup::kPi - 0.2);
        const double phi = g.uniform() * 2.0 * testsup::kPi;
        const complex eip(std::cos(phi), std::sin(phi));
        const auto h = testsup::matrix_from(
            {{std::cos(theta), std::sin(theta) * std::conj(eip)},
             {std::sin(theta) * eip, -std::cos(theta)}});
        const auto eig = lande::hermitian_eigensystem(h);
        CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));

        // gauge-fixed closed-form eigenvectors
        const double c2 = std::cos(0.5 * theta);
        const double s2 = std::sin(0.5 * theta);
        CHECK(std::abs(eig.eigenvectors[0][0] - complex(c2, 0.0)) < 1e-12);
        CHECK(std::abs(eig.eigenvectors[0][1] - s2 * eip) < 1e-12);
        CHECK(std::abs(eig.eigenvectors[1][0] - complex(s2, 0.0)) < 1e-12);
        CHECK(std::abs(eig.eigenvectors[1][1] + c2 * eip) < 1e-12);
    }
}

TEST_CASE("eigensystem of a diagonal matrix, including a degenerate pair") {
    const auto eig = lande::hermitian_eigensystem(ComplexMatrix::diagonal({1.0, 1.0, 0.0}));
    CHECK(eig.eigenvalues[0] == 1.0);
    CHECK(eig.eigenvalues[1] == 1.0);
    CHECK(eig.eigenvalues[2] == 0.0);
    // ties broken by the first-large-component index, so the order is e0, e1, e2
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(eig.eigenvectors[static_cast<size_t>(k)][i] -
                           (i == k ? complex(1.0, 0.0) : complex(0.0, 0.0))) < 1e-12);
}

TEST_CASE("eigensystem is bitwise deterministic") {
    testsup::SplitMix64 g{0x5eed003};
    const auto h = random_hermitian(g, 7);
    const auto a = lande::hermitian_eigensystem(h);
    const auto b = lande::hermitian_eigensystem(h);
    for (size_t k = 0; k < a.eigenvalues.size(); ++k) {
        CHECK(a.eigenvalues[k] == b.eigenvalues[k]);
        for (int i = 0; i < 7; ++i) CHECK(a.eigenvectors[k][i] == b.eigenvectors[k][i]);
    }
}

TEST_CASE("eigensystem rejects bad input") {
    auto skew = testsup::matrix_from({{{0.0, 0.0}, {1.0, 0.0}}, {{-1.0, 0.0}, {0.0, 0.0}}});
    CHECK_THROWS_AS(lande::hermitian_eigensystem(skew), lande::NotHermitian);
    CHECK_THROWS_AS(lande::hermitian_eigensystem(ComplexMatrix(22)), lande::DimTooLarge);
}

TEST_CASE("commutator and approx_equal") {
    const auto x = testsup::matrix_from({{{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}});
    const auto y = testsup::matrix_from({{{0.0, 0.0}, {0.0, -1.0}}, {{0.0, 1.0}, {0.0, 0.0}}});
    const auto z = testsup::matrix_from({{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {-1.0, 0.0}}});
    // Pauli algebra: [x, y] = 2iz
    CHECK((lande::commutator(x, y) - complex(0.0, 2.0) * z).max_abs() < 1e-15);

    CHECK(lande::approx_equal(x, x, 0.0));
    CHECK(!lande::approx_equal(x, y, 0.5));
    CHECK(lande::approx_equal(x, y, 2.0));
}
