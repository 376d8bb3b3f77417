#include "lande/engine.hpp"

#include <cmath>

namespace lande {

AmplitudeTable compose(const AmplitudeTable& ab, const AmplitudeTable& bc) {
    if (ab.dim() != bc.dim()) throw DimMismatch("compose: table dimensions differ");
    if (!same_direction(ab.final, bc.initial))
        throw LabelMismatch("compose: intermediate labels differ");
    return AmplitudeTable{ab.initial, bc.final, ab.entries * bc.entries};
}

AmplitudeTable hermitian_flip(const AmplitudeTable& t) {
    return AmplitudeTable{t.final, t.initial, t.entries.adjoint()};
}

ComplexMatrix operator_from_amplitudes(const AmplitudeTable& phi, const EigenvalueWeights& r) {
    const int n = phi.dim();
    if (r.dim() != n) throw DimMismatch("operator assembly: weight count differs from dimension");
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            complex s{};
            for (int m = 0; m < n; ++m)
                s += std::conj(phi.entries(k, m)) * phi.entries(l, m) * r.r[static_cast<size_t>(m)];
            out(k, l) = s;
        }
    return out;
}

double expectation(const ComplexVector& state, const ComplexMatrix& r) {
    if (state.dim() != r.dim()) throw DimMismatch("expectation: dimensions differ");
    if (std::abs(state.norm() - 1.0) > kEigenTol) throw NotNormalized("expectation: state is not unit norm");
    if (r.hermiticity_defect() > kEigenTol) throw NotHermitian("expectation: operator is not Hermitian");
    return state.dot(r * state).real();
}

CaseTag reference_case(const Direction& b, const Direction& c, const Direction& a) {
    const bool ba = same_direction(b, a);
    const bool ca = same_direction(c, a);
    if (ba && ca) return CaseTag::case_e;
    if (ba) return CaseTag::case_b;
    if (ca) return CaseTag::case_d;
    if (same_direction(b, c)) return CaseTag::case_c;
    return CaseTag::case_a;
}

}  // namespace lande
