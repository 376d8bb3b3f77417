#include "lande/direction.hpp"

#include <cmath>

namespace lande {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kBoundTol = 1e-12;

}  // namespace

Direction::Direction(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("direction angles must be finite");
    if (theta < 0.0) {
        if (theta < -kBoundTol) throw std::invalid_argument("theta below 0");
        theta = 0.0;
    } else if (theta > kPi) {
        if (theta > kPi + kBoundTol) throw std::invalid_argument("theta above pi");
        theta = kPi;
    }
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;  // fmod rounding right at the boundary
    theta_ = theta;
    phi_ = phi;
}

double Direction::x() const { return std::sin(theta_) * std::cos(phi_); }
double Direction::y() const { return std::sin(theta_) * std::sin(phi_); }
double Direction::z() const { return std::cos(theta_); }

bool same_direction(const Direction& a, const Direction& b, double tol) {
    if (std::abs(a.theta() - b.theta()) > tol) return false;
    // at a pole phi carries no information
    if (a.theta() <= tol || a.theta() >= kPi - tol) return true;
    double d = std::abs(a.phi() - b.phi());
    d = std::min(d, kTwoPi - d);
    return d <= tol;
}

}  // namespace lande
