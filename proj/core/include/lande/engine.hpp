#pragma once

#include <vector>

#include "lande/algebra.hpp"
#include "lande/direction.hpp"

namespace lande {

struct LabelMismatch : Error {
    using Error::Error;
};
struct NotNormalized : Error {
    using Error::Error;
};

// table of probability amplitudes for measurements from `initial` to
// `final`. entries(i, f): row i = initial projection index, column f =
// final projection index; index 0 is the largest projection, descending
// from there. unitary (rows orthonormal) within the tolerance tier of its
// provenance: kClosedFormTol for closed forms, kEigenTol when
// eigensolver-derived.
struct AmplitudeTable {
    Direction initial;
    Direction final;
    ComplexMatrix entries;

    int dim() const { return entries.dim(); }
};

// value of an observable at each projection index (descending projections)
struct EigenvalueWeights {
    std::vector<double> r;

    int dim() const { return static_cast<int>(r.size()); }
};

// chained amplitudes through an intermediate observable:
// result(i,k) = sum_j ab(i,j) * bc(j,k). ab's final label must match
// bc's initial label.
AmplitudeTable compose(const AmplitudeTable& ab, const AmplitudeTable& bc);

// two-way symmetry of amplitudes: result(i,k) = conj(t(k,i)), with the
// initial/final labels swapped
AmplitudeTable hermitian_flip(const AmplitudeTable& t);

// operator matrix in the basis of phi's initial direction for an
// observable taking value r[n] at final projection n:
// R(k,l) = sum_n conj(phi(k,n)) * phi(l,n) * r[n]
ComplexMatrix operator_from_amplitudes(const AmplitudeTable& phi, const EigenvalueWeights& r);

// <R> = state† R state for a unit-norm state and Hermitian R; the
// vanishing imaginary residue is discarded
double expectation(const ComplexVector& state, const ComplexMatrix& r);

// taxonomy of reference-vector choices for the state/operator pair
// (initial direction a, intermediate b, final c):
//   case_a: all three distinct            (general vectors, general operator)
//   case_b: b == a                        (delta-column vectors)
//   case_c: b == c                        (diagonal operator)
//   case_d: c == a                        (repeat measurement, general basis)
//   case_e: b == a and c == a             (standard forms of both)
enum class CaseTag { case_a, case_b, case_c, case_d, case_e };

CaseTag reference_case(const Direction& b, const Direction& c, const Direction& a);

}  // namespace lande
