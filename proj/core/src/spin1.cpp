#include "lande/spin1.hpp"

#include <cmath>

namespace lande {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kSqrt2 = std::sqrt(2.0);

complex expi(double x) { return {std::cos(x), std::sin(x)}; }

// the nine closed-form amplitudes from projections along (th, ph) to
// projections along (thp, php). evaluated on raw scalar angles so the
// formal shifts used by the x/y builders can reuse it unchanged.
ComplexMatrix general_entries(double th, double ph, double thp, double php) {
    const double hc = std::cos(0.5 * th) * std::cos(0.5 * th);
    const double hs = std::sin(0.5 * th) * std::sin(0.5 * th);
    const double st = std::sin(th);
    const double ct = std::cos(th);
    const double hcp = std::cos(0.5 * thp) * std::cos(0.5 * thp);
    const double hsp = std::sin(0.5 * thp) * std::sin(0.5 * thp);
    const double stp = std::sin(thp);
    const double ctp = std::cos(thp);
    const double d = ph - php;
    const complex em = expi(-d);
    const complex ep = expi(d);
    const double half = 0.5 * st * stp;

    ComplexMatrix t(3);
    t(0, 0) = hc * hcp * em + hs * hsp * ep + half;
    t(0, 1) = kInvSqrt2 * (hs * stp * ep - hc * stp * em + st * ctp);
    t(0, 2) = hc * hsp * em + hs * hcp * ep - half;
    t(1, 0) = kInvSqrt2 * (-st * hcp * em + st * hsp * ep + ct * stp);
    t(1, 1) = 0.5 * st * stp * em + 0.5 * st * stp * ep + ct * ctp;
    t(1, 2) = kInvSqrt2 * (-st * hsp * em + st * hcp * ep - ct * stp);
    t(2, 0) = hs * hcp * em + hc * hsp * ep - half;
    t(2, 1) = kInvSqrt2 * (-hs * stp * em + hc * stp * ep - st * ctp);
    t(2, 2) = hs * hsp * em + hc * hcp * ep + half;
    return t;
}

// element formulas for the spin component along (thp, php) in the eigenbasis
// of (th, ph); also on raw angles, for the same reason
ComplexMatrix sigma_c_entries(double th, double ph, double thp, double php) {
    const double st = std::sin(th);
    const double ct = std::cos(th);
    const double stp = std::sin(thp);
    const double ctp = std::cos(thp);
    const double d = ph - php;
    const double cd = std::cos(d);
    const double sd = std::sin(d);

    ComplexMatrix r(3);
    r(0, 0) = ct * ctp + st * stp * cd;
    r(0, 1) = kInvSqrt2 * complex{-st * ctp + ct * stp * cd, stp * sd};
    r(1, 0) = std::conj(r(0, 1));
    r(1, 2) = r(0, 1);
    r(2, 1) = r(1, 0);
    r(2, 2) = -r(0, 0);
    return r;
}

// raising-operator element formulas on raw angles
ComplexMatrix ladder_plus_entries(double th, double ph, double thp, double php) {
    const double st = std::sin(th);
    const double ct = std::cos(th);
    const double stp = std::sin(thp);
    const double ctp = std::cos(thp);
    const double d = ph - php;
    const double cd = std::cos(d);
    const double sd = std::sin(d);

    ComplexMatrix r(3);
    r(0, 0) = complex{-ct * stp + st * ctp * cd, st * sd};
    r(0, 1) = kInvSqrt2 * complex{st * stp + ct * ctp * cd + cd, ctp * sd + ct * sd};
    r(1, 0) = kInvSqrt2 * complex{st * stp + ct * ctp * cd - cd, -ctp * sd + ct * sd};
    r(1, 2) = r(0, 1);
    r(2, 1) = r(1, 0);
    r(2, 2) = -r(0, 0);
    return r;
}

std::array<StateVector, 3> states_from_rows(const ComplexMatrix& rows, const Direction& initial,
                                            const Direction& basis) {
    std::array<StateVector, 3> out{
        StateVector{+1, initial, basis, ComplexVector(3)},
        StateVector{0, initial, basis, ComplexVector(3)},
        StateVector{-1, initial, basis, ComplexVector(3)},
    };
    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < 3; ++i) out[static_cast<size_t>(m)].entries[i] = rows(m, i);
    return out;
}

}  // namespace

StandardOperators standard_operators() {
    const Direction z = Direction::z_axis();

    ComplexMatrix sz = ComplexMatrix::diagonal({1.0, 0.0, -1.0});
    ComplexMatrix sp(3);
    sp(0, 1) = kSqrt2;
    sp(1, 2) = kSqrt2;
    ComplexMatrix sm = sp.adjoint();
    ComplexMatrix sx = 0.5 * (sp + sm);
    ComplexMatrix sy = complex{0.0, -0.5} * (sp - sm);
    ComplexMatrix s2 = 2.0 * ComplexMatrix::identity(3);

    return StandardOperators{
        SpinOperator{z, AxisTag::direction, z, std::move(sz)},
        SpinOperator{z, AxisTag::x, std::nullopt, std::move(sx)},
        SpinOperator{z, AxisTag::y, std::nullopt, std::move(sy)},
        SpinOperator{z, AxisTag::plus, std::nullopt, std::move(sp)},
        SpinOperator{z, AxisTag::minus, std::nullopt, std::move(sm)},
        SpinOperator{z, AxisTag::squared, std::nullopt, std::move(s2)},
    };
}

SpinOperator direction_operator(const Direction& a) {
    const double st = std::sin(a.theta());
    const double ct = std::cos(a.theta());
    const complex em = expi(-a.phi());
    const complex ep = expi(a.phi());

    ComplexMatrix m(3);
    m(0, 0) = ct;
    m(0, 1) = kInvSqrt2 * st * em;
    m(1, 0) = kInvSqrt2 * st * ep;
    m(1, 2) = kInvSqrt2 * st * em;
    m(2, 1) = kInvSqrt2 * st * ep;
    m(2, 2) = -ct;
    return SpinOperator{Direction::z_axis(), AxisTag::direction, a, std::move(m)};
}

AmplitudeTable special_amplitudes(const Direction& a) {
    const double hc = std::cos(0.5 * a.theta()) * std::cos(0.5 * a.theta());
    const double hs = std::sin(0.5 * a.theta()) * std::sin(0.5 * a.theta());
    const double st = std::sin(a.theta());
    const double ct = std::cos(a.theta());
    const complex em = expi(-a.phi());
    const complex ep = expi(a.phi());

    ComplexMatrix t(3);
    t(0, 0) = hc * em;
    t(0, 1) = kInvSqrt2 * st;
    t(0, 2) = hs * ep;
    t(1, 0) = -kInvSqrt2 * st * em;
    t(1, 1) = ct;
    t(1, 2) = kInvSqrt2 * st * ep;
    t(2, 0) = -hs * em;
    t(2, 1) = kInvSqrt2 * st;
    t(2, 2) = -hc * ep;
    return AmplitudeTable{a, Direction::z_axis(), std::move(t)};
}

AmplitudeTable general_amplitudes(const Direction& a, const Direction& c) {
    return AmplitudeTable{a, c, general_entries(a.theta(), a.phi(), c.theta(), c.phi())};
}

std::array<std::array<double, 3>, 3> probability_table(const Direction& a, const Direction& c) {
    const double hc = std::cos(0.5 * a.theta()) * std::cos(0.5 * a.theta());
    const double hs = std::sin(0.5 * a.theta()) * std::sin(0.5 * a.theta());
    const double st = std::sin(a.theta());
    const double ct = std::cos(a.theta());
    const double hcp = std::cos(0.5 * c.theta()) * std::cos(0.5 * c.theta());
    const double hsp = std::sin(0.5 * c.theta()) * std::sin(0.5 * c.theta());
    const double stp = std::sin(c.theta());
    const double ctp = std::cos(c.theta());
    const double cd = std::cos(c.phi() - a.phi());

    const double agree = hc * hcp + hs * hsp + 0.5 * st * stp * cd;
    const double cross = hc * hsp + hs * hcp - 0.5 * st * stp * cd;
    const double u = ct * ctp + st * stp * cd;
    const double p00 = agree * agree;
    const double p02 = cross * cross;
    const double p01 = 0.5 * (1.0 - u * u);

    return {{{p00, p01, p02}, {p01, u * u, p01}, {p02, p01, p00}}};
}

SpinOperator generalized_sigma_c(const Direction& b, const Direction& c) {
    return SpinOperator{b, AxisTag::direction, c,
                        sigma_c_entries(b.theta(), b.phi(), c.theta(), c.phi())};
}

std::array<StateVector, 3> generalized_sigma_c_eigvecs(const Direction& b, const Direction& c) {
    return states_from_rows(general_entries(c.theta(), c.phi(), b.theta(), b.phi()), c, b);
}

ComponentWithEigvecs generalized_sigma_x(const Direction& b, const Direction& c) {
    const double thp = c.theta() + 0.5 * kPi;  // formal shift, deliberately unreduced
    SpinOperator op{b, AxisTag::x, c, sigma_c_entries(b.theta(), b.phi(), thp, c.phi())};
    return ComponentWithEigvecs{std::move(op),
                                states_from_rows(general_entries(thp, c.phi(), b.theta(), b.phi()), c, b)};
}

ComponentWithEigvecs generalized_sigma_y(const Direction& b, const Direction& c) {
    const double php = c.phi() + 0.5 * kPi;  // formal shift, with theta' pinned to pi/2
    SpinOperator op{b, AxisTag::y, c, sigma_c_entries(b.theta(), b.phi(), 0.5 * kPi, php)};
    return ComponentWithEigvecs{std::move(op),
                                states_from_rows(general_entries(0.5 * kPi, php, b.theta(), b.phi()), c, b)};
}

LadderPair generalized_ladder(const Direction& b, const Direction& c) {
    ComplexMatrix plus = ladder_plus_entries(b.theta(), b.phi(), c.theta(), c.phi());
    ComplexMatrix minus = plus.adjoint();
    return LadderPair{SpinOperator{b, AxisTag::plus, c, std::move(plus)},
                      SpinOperator{b, AxisTag::minus, c, std::move(minus)}};
}

SpinOperator sigma_squared(const Direction& b, const Direction& c) {
    return SpinOperator{b, AxisTag::squared, c, 2.0 * ComplexMatrix::identity(3)};
}

}  // namespace lande
