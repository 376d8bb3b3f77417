#include <cmath>
#include <complex>

#include <lande/algebra.hpp>
#include <lande/direction.hpp>
#include <lande/engine.hpp>
#include <lande/general_j.hpp>
#include <lande/spin1.hpp>

#include "doctest.h"
#include "test_support.hpp"

using lande::AmplitudeTable;
using lande::complex;
using lande::ComplexMatrix;
using lande::ComplexVector;
using lande::Direction;

namespace {

constexpr double kTol = 1e-12;

AmplitudeTable identity_table(const Direction& a) {
    return AmplitudeTable{a, a, ComplexMatrix::identity(3)};
}

ComplexVector table_row(const AmplitudeTable& t, int i) {
    ComplexVector v(t.dim());
    for (int f = 0; f < t.dim(); ++f) v[f] = t.entries(i, f);
    return v;
}

}  // namespace

TEST_CASE("compose: identity neutrality, label checking, dimension checking") {
    testsup::SplitMix64 g{0x200};
    const auto a = testsup::random_direction(g);
    const auto c = testsup::random_direction(g);
    const auto t = lande::general_amplitudes(a, c);

    const auto left = lande::compose(identity_table(a), t);
    CHECK((left.entries - t.entries).max_abs() == 0.0);
    CHECK(lande::same_direction(left.initial, a));
    CHECK(lande::same_direction(left.final, c));

    const auto right = lande::compose(t, identity_table(c));
    CHECK((right.entries - t.entries).max_abs() == 0.0);

    // mismatched intermediate labels must be rejected
    CHECK_THROWS_AS(lande::compose(t, t), lande::LabelMismatch);

    AmplitudeTable wrong{c, a, ComplexMatrix::identity(4)};
    CHECK_THROWS_AS(lande::compose(t, wrong), lande::DimMismatch);
}

TEST_CASE("compose is associative") {
    testsup::SplitMix64 g{0x201};
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = testsup::random_direction(g);
        const auto b = testsup::random_direction(g);
        const auto c = testsup::random_direction(g);
        const auto d = testsup::random_direction(g);
        const auto ab = lande::general_amplitudes(a, b);
        const auto bc = lande::general_amplitudes(b, c);
        const auto cd = lande::general_amplitudes(c, d);
        const auto left = lande::compose(lande::compose(ab, bc), cd);
        const auto right = lande::compose(ab, lande::compose(bc, cd));
        CHECK((left.entries - right.entries).max_abs() < kTol);
        CHECK(lande::same_direction(left.initial, a));
        CHECK(lande::same_direction(left.final, d));
    }
}

TEST_CASE("hermitian_flip is an involution that swaps labels and conjugate-transposes") {
    testsup::SplitMix64 g{0x202};
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testsup::random_direction(g);
        const auto c = testsup::random_direction(g);
        const auto t = lande::general_amplitudes(a, c);
        const auto flipped = lande::hermitian_flip(t);
        CHECK(lande::same_direction(flipped.initial, c));
        CHECK(lande::same_direction(flipped.final, a));
        CHECK((flipped.entries - t.entries.adjoint()).max_abs() == 0.0);
        const auto twice = lande::hermitian_flip(flipped);
        CHECK((twice.entries - t.entries).max_abs() == 0.0);
    }
}

TEST_CASE("operator assembly: identity table and standard weights give the diagonal form") {
    const auto z = Direction(0.0, 0.0);
    const auto r = lande::operator_from_amplitudes(identity_table(z),
                                                   lande::EigenvalueWeights{{1.0, 0.0, -1.0}});
    CHECK((r - ComplexMatrix::diagonal({1.0, 0.0, -1.0})).max_abs() == 0.0);
}

TEST_CASE("operator assembly: constant weights collapse any unitary table to r times identity") {
    testsup::SplitMix64 g{0x203};
    // closed-form tables hold to the tight tier
    for (int trial = 0; trial < 200; ++trial) {
        const auto t =
            lande::general_amplitudes(testsup::random_direction(g), testsup::random_direction(g));
        const auto r = lande::operator_from_amplitudes(t, lande::EigenvalueWeights{{0.7, 0.7, 0.7}});
        CHECK((r - complex(0.7, 0.0) * ComplexMatrix::identity(3)).max_abs() < kTol);
    }
    // eigensolver-derived tables hold to the loose tier
    const lande::SpinSystem s{3};
    for (int trial = 0; trial < 50; ++trial) {
        const auto t = lande::general_amplitudes_j(s, testsup::random_direction(g),
                                                   testsup::random_direction(g));
        const auto r = lande::operator_from_amplitudes(
            t, lande::EigenvalueWeights{{-2.5, -2.5, -2.5, -2.5}});
        CHECK((r - complex(-2.5, 0.0) * ComplexMatrix::identity(4)).max_abs() < 1e-9);
    }
}

TEST_CASE("operator assembly is invariant under final-column rephasing") {
    testsup::SplitMix64 g{0x204};
    for (int trial = 0; trial < 200; ++trial) {
        const auto t =
            lande::general_amplitudes(testsup::random_direction(g), testsup::random_direction(g));
        const lande::EigenvalueWeights w{{g.uniform(), g.uniform(), g.uniform()}};
        const auto r = lande::operator_from_amplitudes(t, w);

        auto rephased = t;
        for (int n = 0; n < 3; ++n) {
            const complex phase = std::polar(1.0, g.uniform() * 2.0 * testsup::kPi);
            for (int k = 0; k < 3; ++k) rephased.entries(k, n) *= phase;
        }
        const auto r2 = lande::operator_from_amplitudes(rephased, w);
        CHECK((r - r2).max_abs() < kTol);
    }
}

TEST_CASE("operator assembly preserves the weight multiset as its spectrum") {
    testsup::SplitMix64 g{0x205};
    for (int trial = 0; trial < 100; ++trial) {
        const auto t =
            lande::general_amplitudes(testsup::random_direction(g), testsup::random_direction(g));
        // distinct weights in descending order
        const double w0 = 2.0 + g.uniform();
        const double w1 = w0 - 0.5 - g.uniform();
        const double w2 = w1 - 0.5 - g.uniform();
        const auto r = lande::operator_from_amplitudes(t, lande::EigenvalueWeights{{w0, w1, w2}});
        CHECK(r.hermiticity_defect() < kTol);
        const auto eig = lande::hermitian_eigensystem(r);
        CHECK(std::abs(eig.eigenvalues[0] - w0) < 1e-9);
        CHECK(std::abs(eig.eigenvalues[1] - w1) < 1e-9);
        CHECK(std::abs(eig.eigenvalues[2] - w2) < 1e-9);
    }

    const auto t = lande::general_amplitudes(Direction(0.4, 0.9), Direction(2.0, 5.0));
    CHECK_THROWS_AS(
        lande::operator_from_amplitudes(t, lande::EigenvalueWeights{{1.0, 0.0}}),
        lande::DimMismatch);
}

TEST_CASE("expectation: diagonal case, probability-sum oracle, closed-form diagonal element") {
    ComplexVector e0(3);
    e0[0] = 1.0;
    CHECK(lande::expectation(e0, ComplexMatrix::diagonal({1.0, 0.0, -1.0})) == 1.0);

    testsup::SplitMix64 g{0x206};
    const lande::EigenvalueWeights proj{{1.0, 0.0, -1.0}};
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = testsup::random_direction(g);
        const auto b = testsup::random_direction(g);
        const auto c = testsup::random_direction(g);
        const int i = static_cast<int>(g.next() % 3);

        // state of projection m_i along a, written in the b eigenbasis; the
        // expectation of the weighted projector sum along c must reduce to
        // sum_k w_k P(i -> k) no matter which working basis b was chosen
        const auto state = table_row(lande::general_amplitudes(a, b), i);
        const auto r = lande::operator_from_amplitudes(lande::general_amplitudes(b, c), proj);
        const auto p = lande::probability_table(a, c);
        const double direct = p[static_cast<size_t>(i)][0] - p[static_cast<size_t>(i)][2];
        CHECK(std::abs(lande::expectation(state, r) - direct) < kTol);

        // and for the +1 state it equals the cosine of the relative angle
        if (i == 0) {
            const double u = std::cos(testsup::angle_between(a, c));
            CHECK(std::abs(lande::expectation(state, r) - u) < kTol);
        }
    }
}

TEST_CASE("expectation rejects bad states and bad operators") {
    ComplexVector small(3);
    small[0] = 0.5;
    CHECK_THROWS_AS(lande::expectation(small, ComplexMatrix::identity(3)), lande::NotNormalized);

    ComplexVector e0(3);
    e0[0] = 1.0;
    auto non_hermitian = ComplexMatrix::identity(3);
    non_hermitian(0, 1) = complex(0.0, 1.0);
    CHECK_THROWS_AS(lande::expectation(e0, non_hermitian), lande::NotHermitian);

    CHECK_THROWS_AS(lande::expectation(e0, ComplexMatrix::identity(2)), lande::DimMismatch);
}

TEST_CASE("reference-vector case taxonomy") {
    const Direction a(1.0, 2.0);
    const Direction c(2.0, 1.0);
    const Direction b(0.5, 4.0);
    using lande::CaseTag;
    CHECK(lande::reference_case(a, a, a) == CaseTag::case_e);
    CHECK(lande::reference_case(a, c, a) == CaseTag::case_b);   // basis matches the state
    CHECK(lande::reference_case(b, a, a) == CaseTag::case_d);   // measurement along the state
    CHECK(lande::reference_case(b, b, a) == CaseTag::case_c);   // basis matches the measurement
    CHECK(lande::reference_case(b, c, a) == CaseTag::case_a);   // fully generic

    // poles compare equal regardless of azimuth
    CHECK(lande::reference_case(Direction(0.0, 1.0), Direction(0.0, 5.0), Direction(0.0, 3.0)) ==
          CaseTag::case_e);
    CHECK(lande::reference_case(Direction(testsup::kPi, 1.0), Direction(testsup::kPi, 2.0), a) ==
          CaseTag::case_c);
}
