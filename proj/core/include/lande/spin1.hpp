#pragma once

#include <array>
#include <optional>

#include "lande/algebra.hpp"
#include "lande/direction.hpp"
#include "lande/engine.hpp"

// closed-form spin-1 objects: the standard matrices, the operator for the
// spin component along an arbitrary direction, special (to-z) and general
// amplitude tables, the probability table, the generalized z/x/y component
// operators with their eigenvectors, ladder operators and the squared spin.
// projection indices are ordered (+1, 0, -1) <-> (0, 1, 2) throughout.

namespace lande {

enum class AxisTag { direction, x, y, plus, minus, squared };

// spin operator expressed in the eigenbasis of `basis`; `axis` is the
// measured direction when tag == direction, otherwise the tag names the
// component (x, y, ladder, squared)
struct SpinOperator {
    Direction basis;
    AxisTag tag;
    std::optional<Direction> axis;
    ComplexMatrix matrix;
};

// state of definite projection along `initial`, written out in the
// eigenbasis of `basis`
struct StateVector {
    int projection;  // +1, 0 or -1
    Direction initial;
    Direction basis;
    ComplexVector entries;
};

struct StandardOperators {
    SpinOperator sigma_z;
    SpinOperator sigma_x;
    SpinOperator sigma_y;
    SpinOperator sigma_plus;
    SpinOperator sigma_minus;
    SpinOperator sigma_squared;
};

struct ComponentWithEigvecs {
    SpinOperator op;
    std::array<StateVector, 3> eigvecs;
};

struct LadderPair {
    SpinOperator plus;
    SpinOperator minus;
};

// the six standard spin-1 matrices: sigma_z = diag(1,0,-1), the ladder pair
// with sqrt(2) coefficients, sigma_x/sigma_y built from the ladder pair, and
// sigma_squared = 2*I
StandardOperators standard_operators();

// operator for the spin component along a: hermitian, eigenvalues {+1,0,-1}
SpinOperator direction_operator(const Direction& a);

// amplitudes from projections along a to projections along the z axis,
// read off the eigenvectors of direction_operator(a)
AmplitudeTable special_amplitudes(const Direction& a);

// amplitudes from projections along a to projections along c; all nine
// closed forms, e.g. entry(+1,+1) =
//   cos²(θ/2)cos²(θ'/2)e^{-i(φ-φ')} + sin²(θ/2)sin²(θ'/2)e^{i(φ-φ')}
//   + ½ sinθ sinθ'
AmplitudeTable general_amplitudes(const Direction& a, const Direction& c);

// squared moduli of general_amplitudes via the closed forms; each row sums
// to 1
std::array<std::array<double, 3>, 3> probability_table(const Direction& a, const Direction& c);

// spin component along c expressed in the eigenbasis of b ("generalized z
// component"); reduces to diag(1,0,-1) at b == c and to
// direction_operator(c) at b == z
SpinOperator generalized_sigma_c(const Direction& b, const Direction& c);

// closed-form eigenvectors of generalized_sigma_c(b, c), i.e. the rows of
// general_amplitudes(c, b); ordered (+1, 0, -1)
std::array<StateVector, 3> generalized_sigma_c_eigvecs(const Direction& b, const Direction& c);

// generalized x component: the sigma_c element formulas evaluated at the
// shifted scalar angle θ' + π/2 (the closed forms are entire in the angles,
// so no range normalization is applied), together with its eigenvectors
ComponentWithEigvecs generalized_sigma_x(const Direction& b, const Direction& c);

// generalized y component: θ' := π/2 and φ' -> φ' + π/2 in the sigma_c
// formulas, together with its eigenvectors
ComponentWithEigvecs generalized_sigma_y(const Direction& b, const Direction& c);

// generalized raising/lowering pair; sigma_minus == adjoint(sigma_plus)
LadderPair generalized_ladder(const Direction& b, const Direction& c);

// squared total spin: diagonal with every entry 2, for any (b, c)
SpinOperator sigma_squared(const Direction& b, const Direction& c);

}  // namespace lande
