#include "lande/general_j.hpp"

#include <cmath>
#include <utility>

namespace lande {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_system(const SpinSystem& s) {
    if (s.two_j < 0) throw Error("spin system: twoJ must be nonnegative");
    if (s.dim() > kMaxDim) throw DimTooLarge("spin system: dimension exceeds 21");
}

EigenvalueWeights projection_weights(const SpinSystem& s) {
    EigenvalueWeights w;
    w.r.reserve(static_cast<size_t>(s.dim()));
    for (int k = 0; k < s.dim(); ++k) w.r.push_back(s.projection(k));
    return w;
}

// map a formally shifted polar angle back into [0, pi] through the antipode
Direction unwrap(double theta, double phi) {
    if (theta > kPi) {
        theta = 2.0 * kPi - theta;
        phi += kPi;
    } else if (theta < 0.0) {
        theta = -theta;
        phi += kPi;
    }
    return Direction(theta, phi);
}

// spin component along `axis`, assembled from amplitudes in the eigenbasis of b
ComplexMatrix assemble_component(const SpinSystem& s, const Direction& b, const Direction& axis) {
    return operator_from_amplitudes(general_amplitudes_j(s, b, axis), projection_weights(s));
}

}  // namespace

StandardOperatorsJ standard_operators_j(const SpinSystem& s) {
    check_system(s);
    const int n = s.dim();
    const double j = s.j();

    ComplexMatrix sz(n);
    for (int k = 0; k < n; ++k) sz(k, k) = s.projection(k);

    ComplexMatrix sp(n);
    for (int i = 0; i + 1 < n; ++i) {
        const double m = s.projection(i + 1);
        sp(i, i + 1) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    ComplexMatrix sm = sp.adjoint();
    ComplexMatrix sx = 0.5 * (sp + sm);
    ComplexMatrix sy = complex{0.0, -0.5} * (sp - sm);
    ComplexMatrix s2 = (j * (j + 1.0)) * ComplexMatrix::identity(n);

    return StandardOperatorsJ{std::move(sz), std::move(sp), std::move(sm),
                              std::move(sx), std::move(sy), std::move(s2)};
}

ComplexMatrix direction_operator_j(const SpinSystem& s, const Direction& a) {
    StandardOperatorsJ ops = standard_operators_j(s);
    ComplexMatrix m = a.x() * ops.sigma_x;
    m += a.y() * ops.sigma_y;
    m += a.z() * ops.sigma_z;
    return m;
}

AmplitudeTable amplitudes_to_intermediate(const SpinSystem& s, const Direction& a) {
    const Eigensystem es = hermitian_eigensystem(direction_operator_j(s, a));
    const int n = s.dim();
    ComplexMatrix t(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) t(k, i) = es.eigenvectors[static_cast<size_t>(k)][i];
    return AmplitudeTable{a, Direction::z_axis(), std::move(t)};
}

AmplitudeTable general_amplitudes_j(const SpinSystem& s, const Direction& a, const Direction& c) {
    return compose(amplitudes_to_intermediate(s, a), hermitian_flip(amplitudes_to_intermediate(s, c)));
}

ComplexMatrix generalized_operator_j(const SpinSystem& s, const Direction& b, const Direction& c,
                                     const EigenvalueWeights& r) {
    check_system(s);
    if (r.dim() != s.dim()) throw DimMismatch("generalized operator: weight count differs from dimension");
    return operator_from_amplitudes(general_amplitudes_j(s, b, c), r);
}

ComponentOperatorsJ component_operators_j(const SpinSystem& s, const Direction& b, const Direction& c) {
    check_system(s);
    const StandardOperatorsJ std_ops = standard_operators_j(s);

    // each family has two sign candidates that are negatives of each other;
    // the one whose aligned limit (frame axis moved onto the basis direction)
    // reproduces the standard matrix is kept
    auto select = [&](const Direction& cand_pos, const Direction& cand_neg,
                      const Direction& test_pos, const Direction& test_neg,
                      const ComplexMatrix& standard, const char* which) {
        if (approx_equal(assemble_component(s, b, test_pos), standard, kEigenTol))
            return assemble_component(s, b, cand_pos);
        if (approx_equal(assemble_component(s, b, test_neg), standard, kEigenTol))
            return assemble_component(s, b, cand_neg);
        throw NoValidTransform(std::string("component operator: no angle-shift sign reproduces the standard ") + which);
    };

    const double half_pi = 0.5 * kPi;
    ComplexMatrix sx = select(unwrap(c.theta() + half_pi, c.phi()), unwrap(c.theta() - half_pi, c.phi()),
                              unwrap(b.theta() + half_pi, b.phi()), unwrap(b.theta() - half_pi, b.phi()),
                              std_ops.sigma_x, "x component");
    ComplexMatrix sy = select(Direction(half_pi, c.phi() + half_pi), Direction(half_pi, c.phi() - half_pi),
                              Direction(half_pi, b.phi() + half_pi), Direction(half_pi, b.phi() - half_pi),
                              std_ops.sigma_y, "y component");
    return ComponentOperatorsJ{std::move(sx), std::move(sy)};
}

}  // namespace lande
