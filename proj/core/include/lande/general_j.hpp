#pragma once

#include "lande/algebra.hpp"
#include "lande/direction.hpp"
#include "lande/engine.hpp"

// arbitrary-J machinery: standard operators from the ladder coefficients,
// the direction operator, amplitude tables built from gauge-fixed
// eigenvectors, composition of tables to connect two arbitrary directions,
// operator assembly from amplitudes, and the x/y component operators
// obtained by angle-shift candidates with automatic sign selection.

namespace lande {

// spin system with J = two_j/2; dimension 2J+1; projections listed in
// descending order m_k = J - k for k = 0..2J
struct SpinSystem {
    int two_j;

    int dim() const { return two_j + 1; }
    double j() const { return 0.5 * two_j; }
    // projection for 0-based index k, descending from +J
    double projection(int k) const { return 0.5 * two_j - k; }
};

// thrown when neither sign candidate for a component operator reproduces
// the standard operator in the aligned limit (indicates an engine bug)
class NoValidTransform : public Error {
public:
    using Error::Error;
};

struct StandardOperatorsJ {
    ComplexMatrix sigma_z;
    ComplexMatrix sigma_plus;
    ComplexMatrix sigma_minus;
    ComplexMatrix sigma_x;
    ComplexMatrix sigma_y;
    ComplexMatrix sigma_squared;
};

struct ComponentOperatorsJ {
    ComplexMatrix sigma_x;
    ComplexMatrix sigma_y;
};

// maximum supported dimension (J = 10); chosen to keep the Jacobi
// eigensolver fast and well within tolerance
inline constexpr int kMaxDim = 21;

// sigma_z = diag(J, ..., -J); sigma_± with coefficients
// sqrt(J(J+1) - m(m±1)); sigma_x/sigma_y from the ladder pair;
// sigma_squared = J(J+1)·I.  throws DimTooLarge above kMaxDim.
StandardOperatorsJ standard_operators_j(const SpinSystem& s);

// operator for the spin component along a: sigma_x·a_x + sigma_y·a_y +
// sigma_z·a_z; hermitian with spectrum {J, ..., -J}
ComplexMatrix direction_operator_j(const SpinSystem& s, const Direction& a);

// amplitudes from projections along a to projections along the z axis:
// row i = gauge-fixed eigenvector of direction_operator_j for eigenvalue
// m_i, rows and columns both ordered by descending projection.  unitary.
AmplitudeTable amplitudes_to_intermediate(const SpinSystem& s, const Direction& a);

// amplitudes from projections along a to projections along c, obtained by
// composing a->z with the hermitian flip of c->z
AmplitudeTable general_amplitudes_j(const SpinSystem& s, const Direction& a, const Direction& c);

// operator in the eigenbasis of b for a measurement along c with
// eigenvalue weights r: R_ij = sum_k conj(phi(b_i; c_k)) phi(b_j; c_k) r_k
ComplexMatrix generalized_operator_j(const SpinSystem& s, const Direction& b, const Direction& c,
                                     const EigenvalueWeights& r);

// x and y component operators in the eigenbasis of b for the frame whose z
// axis is c.  candidates are assembled from angle-shifted directions
// (θ'±π/2 for x; θ'=π/2, φ'±π/2 for y, after unwrapping out-of-range
// angles through the antipode); the sign kept is the one whose aligned
// limit — both directions set to b — reproduces standard_operators_j.
// throws NoValidTransform if neither sign passes.
ComponentOperatorsJ component_operators_j(const SpinSystem& s, const Direction& b, const Direction& c);

}  // namespace lande
