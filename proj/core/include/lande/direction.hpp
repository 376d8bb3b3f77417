#pragma once

#include <stdexcept>

namespace lande {

// quantization direction given by polar angles, theta in [0, pi],
// phi in [0, 2*pi). phi is reduced mod 2*pi on construction; theta is
// clamped only when within 1e-12 of a bound and rejected otherwise.
class Direction {
public:
    Direction(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

    // cartesian components of the unit vector
    double x() const;
    double y() const;
    double z() const;

    static Direction z_axis() { return Direction(0.0, 0.0); }

private:
    double theta_;
    double phi_;
};

// equality within an angle-wise tolerance; at a pole (theta within tol of
// 0 or pi) phi is degenerate and ignored
bool same_direction(const Direction& a, const Direction& b, double tol = 1e-12);

}  // namespace lande
