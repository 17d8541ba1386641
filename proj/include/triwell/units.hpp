#pragma once

#include <cmath>
#include <stdexcept>

namespace triwell {

inline constexpr double hbar_si = 1.054571817e-34;  // J s

// All simulation quantities are dimensionless: lengths in units of
// 1/alpha = sqrt(hbar/(m*omega_x)), times in 1/omega_x, energies in
// hbar*omega_x. UnitSystem carries the trap parameters needed to map
// results back to SI.
struct UnitSystem {
    double omega_x;  // trap angular frequency along the trap axis, rad/s
    double mass;     // atomic mass, kg

    UnitSystem(double omega_x_, double mass_) : omega_x(omega_x_), mass(mass_) {
        if (omega_x <= 0.0 || mass <= 0.0)
            throw std::invalid_argument("UnitSystem: omega_x and mass must be positive");
    }

    // oscillator length 1/alpha, meters
    double length_scale() const { return std::sqrt(hbar_si / (mass * omega_x)); }
};

inline double to_physical_time(double t, const UnitSystem& u) { return t / u.omega_x; }

}  // namespace triwell
