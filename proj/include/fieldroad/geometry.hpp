#pragma once

#include <cmath>
#include <stdexcept>

namespace fieldroad {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Bounded cylinder Omega = omega x (0, height) with the 1-D road
/// omega = (omega_min, omega_max) along its bottom boundary.
struct Geometry {
    double omega_min = 0.0;
    double omega_max = 1.0;
    double height = 1.0;

    double road_measure() const { return omega_max - omega_min; }
    double field_measure() const { return road_measure() * height; }
    double road_diameter() const { return road_measure(); }
    double field_diameter() const {
        return std::hypot(road_measure(), height);
    }

    void validate() const {
        if (!(omega_max > omega_min))
            throw std::invalid_argument("geometry: omega_max must exceed omega_min");
        if (!(height > 0.0))
            throw std::invalid_argument("geometry: height must be positive");
    }
};

} // namespace fieldroad
