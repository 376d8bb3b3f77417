#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace lande {

using complex = std::complex<double>;

// tolerance tiers: closed-form identities must hold to kClosedFormTol,
// anything routed through the iterative eigensolver to kEigenTol
inline constexpr double kClosedFormTol = 1e-12;
inline constexpr double kEigenTol = 1e-9;

// components below this modulus are treated as zero when fixing eigenvector phases
inline constexpr double kGaugeThreshold = 1e-10;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimMismatch : Error {
    using Error::Error;
};
struct DimTooLarge : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};

// dense square complex matrix, row-major, 0-based indexing
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim) : dim_(check_dim(dim)), a_(static_cast<size_t>(dim) * dim) {}

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    int dim() const { return dim_; }

    complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    // largest entry modulus
    double max_abs() const;
    // max entry modulus of M - M†
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }
    complex trace() const;
    bool all_finite() const;

private:
    static int check_dim(int dim) {
        if (dim <= 0) throw DimMismatch("matrix dimension must be positive");
        return dim;
    }

    int dim_;
    std::vector<complex> a_;
};

// dense complex column vector
class ComplexVector {
public:
    explicit ComplexVector(int dim) : v_(check_dim(dim)) {}

    int dim() const { return static_cast<int>(v_.size()); }

    complex& operator[](int i) { return v_[static_cast<size_t>(i)]; }
    const complex& operator[](int i) const { return v_[static_cast<size_t>(i)]; }

    double norm() const;
    // inner product conjugating this vector: Σ conj(this_i) * o_i
    complex dot(const ComplexVector& o) const;
    bool all_finite() const;

    friend ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);
    friend ComplexVector operator-(ComplexVector a, const ComplexVector& b);
    friend ComplexVector operator*(complex s, ComplexVector v);

private:
    static size_t check_dim(int dim) {
        if (dim <= 0) throw DimMismatch("vector dimension must be positive");
        return static_cast<size_t>(dim);
    }

    std::vector<complex> v_;
};

// eigenvalues sorted descending; eigenvectors[i] is the unit-norm,
// gauge-fixed eigenvector paired with eigenvalues[i]
struct Eigensystem {
    std::vector<double> eigenvalues;
    std::vector<ComplexVector> eigenvectors;
};

// multiply v by the unit phase that makes its first component with
// modulus > kGaugeThreshold real and positive; idempotent
ComplexVector gauge_fix(ComplexVector v);

// cyclic-Jacobi eigensolver for Hermitian matrices of dimension <= 21.
// deterministic: same input bits give the same output bits.
// throws NotHermitian if ||M - M†||_max > 1e-12, DimTooLarge past 21,
// NoConvergence if the fixed sweep budget is exhausted.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

// AB - BA
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// true iff the largest entry modulus of A - B is <= tol
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace lande
