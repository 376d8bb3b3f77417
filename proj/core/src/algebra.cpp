#include "lande/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lande {

namespace {

// eigensolver limits: dimension cap keeps the cyclic Jacobi iteration cheap
// and accurate; the sweep budget is far above the ~10 sweeps ever observed
constexpr int kMaxJacobiDim = 21;
constexpr int kMaxJacobiSweeps = 60;
// off-diagonal entries below kJacobiTol * (input max modulus) count as zero
constexpr double kJacobiTol = 1e-15;

}  // namespace

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (o.dim_ != dim_) throw DimMismatch("matrix addition: dimensions differ");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (o.dim_ != dim_) throw DimMismatch("matrix subtraction: dimensions differ");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex s) {
    for (auto& x : a_) x *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimMismatch("matrix product: dimensions differ");
    const int n = a.dim_;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const complex aik = a(i, k);
            if (aik == complex{}) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

complex ComplexMatrix::trace() const {
    complex t{};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& x : a_)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

double ComplexVector::norm() const {
    double s = 0.0;
    for (const auto& x : v_) s += std::norm(x);
    return std::sqrt(s);
}

complex ComplexVector::dot(const ComplexVector& o) const {
    if (o.dim() != dim()) throw DimMismatch("dot product: dimensions differ");
    complex s{};
    for (size_t k = 0; k < v_.size(); ++k) s += std::conj(v_[k]) * o.v_[k];
    return s;
}

bool ComplexVector::all_finite() const {
    for (const auto& x : v_)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
    if (m.dim() != v.dim()) throw DimMismatch("matrix-vector product: dimensions differ");
    const int n = v.dim();
    ComplexVector r(n);
    for (int i = 0; i < n; ++i) {
        complex s{};
        for (int j = 0; j < n; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

ComplexVector operator-(ComplexVector a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw DimMismatch("vector subtraction: dimensions differ");
    for (int i = 0; i < a.dim(); ++i) a[i] -= b[i];
    return a;
}

ComplexVector operator*(complex s, ComplexVector v) {
    for (int i = 0; i < v.dim(); ++i) v[i] *= s;
    return v;
}

ComplexVector gauge_fix(ComplexVector v) {
    for (int i = 0; i < v.dim(); ++i) {
        const double m = std::abs(v[i]);
        if (m > kGaugeThreshold) {
            const complex phase = std::conj(v[i]) / m;
            for (int j = 0; j < v.dim(); ++j) v[j] *= phase;
            return v;
        }
    }
    return v;  // no component above threshold: leave as is
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
    const int n = m.dim();
    if (n > kMaxJacobiDim) throw DimTooLarge("eigensolver limited to dimension 21");
    if (m.hermiticity_defect() > kClosedFormTol) throw NotHermitian("eigensolver input is not Hermitian");

    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(m.max_abs(), 1e-300);
    const double off_tol = kJacobiTol * scale;

    // cyclic Jacobi with a unitary phase folded into each Givens rotation so
    // the complex pivot is annihilated in one step
    bool converged = false;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= off_tol) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                double t;
                if (std::abs(tau) > 1e15) {
                    t = 1.0 / (2.0 * tau);  // asymptotic root, avoids overflow
                } else {
                    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sr = t * c;
                const complex s = sr * (apq / mag);
                const complex sc = std::conj(s);

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const complex akp = a(k, p);
                    const complex akq = a(k, q);
                    a(k, p) = c * akp - sc * akq;
                    a(k, q) = s * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                a(p, p) = c * c * app + sr * sr * aqq - 2.0 * c * sr * mag;
                a(q, q) = sr * sr * app + c * c * aqq + 2.0 * c * sr * mag;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const complex vkp = v(k, p);
                    const complex vkq = v(k, q);
                    v(k, p) = c * vkp - sc * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        double off_max = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) off_max = std::max(off_max, std::abs(a(p, q)));
        converged = off_max <= off_tol;
    }
    if (!converged) throw NoConvergence("Jacobi sweep budget exhausted");

    Eigensystem es;
    es.eigenvalues.resize(static_cast<size_t>(n));
    std::vector<ComplexVector> vecs;
    vecs.reserve(static_cast<size_t>(n));
    std::vector<double> lam(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        lam[static_cast<size_t>(k)] = a(k, k).real();
        ComplexVector w(n);
        for (int i = 0; i < n; ++i) w[i] = v(i, k);
        const double nrm = w.norm();
        if (nrm > 0.0) w = (1.0 / nrm) * w;
        vecs.push_back(gauge_fix(std::move(w)));
    }

    // descending eigenvalues; exact ties broken by the index of the first
    // component above the gauge threshold, keeping degenerate bases stable
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto first_large = [&](int k) {
        const ComplexVector& w = vecs[static_cast<size_t>(k)];
        for (int i = 0; i < n; ++i)
            if (std::abs(w[i]) > kGaugeThreshold) return i;
        return n;
    };
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const double lx = lam[static_cast<size_t>(x)];
        const double ly = lam[static_cast<size_t>(y)];
        if (lx != ly) return lx > ly;
        return first_large(x) < first_large(y);
    });
    for (int k = 0; k < n; ++k) {
        es.eigenvalues[static_cast<size_t>(k)] = lam[static_cast<size_t>(order[static_cast<size_t>(k)])];
        es.eigenvectors.push_back(vecs[static_cast<size_t>(order[static_cast<size_t>(k)])]);
    }
    return es;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (std::abs(a(i, j) - b(i, j)) > tol) return false;
    return true;
}

}  // namespace lande
