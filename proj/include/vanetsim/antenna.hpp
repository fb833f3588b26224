#pragma once

#include <optional>
#include <string>

#include "vanetsim/geometry.hpp"

namespace vanetsim {

enum class PatternKind { isotropic, directional, cone };

// Gain pattern evaluated in boresight-relative angles. Gains are linear
// (dimensionless); nothing is normalized implicitly, so the mean spherical
// gain of a pattern may exceed 1.
struct Pattern {
    PatternKind kind = PatternKind::isotropic;

    // directional: Gaussian main lobe with a sidelobe floor.
    // peak_gain > 1, beamwidth_3db_rad > 0 (full width), sidelobe_floor >= 0.
    double peak_gain = 1.0;
    double beamwidth_3db_rad = 0.0;
    double sidelobe_floor = 0.0;

    // cone: azimuth-uniform belt centred on an elevation.
    double elevation_center_rad = 0.0;
    double elevation_width_rad = 0.0;

    static Pattern isotropic();
    static Pattern directional(double peak_gain, double beamwidth_3db_rad,
                               double sidelobe_floor);
    static Pattern cone(double peak_gain, double elevation_center_rad,
                        double elevation_width_rad);
};

enum class PointingMode { fixed_to_object, locked_to_target };

// fixed_to_object rides the node's own heading; locked_to_target keeps the
// boresight on a named node. rotation_angle_rad rolls the antenna about its
// boresight axis.
struct PointingSpec {
    PointingMode mode = PointingMode::fixed_to_object;
    std::string target_node_id;
    double rotation_angle_rad = 0.0;
};

struct AntennaSystem {
    Pattern pattern;
    PointingSpec pointing;
    bool require_unit_mean_gain = false;
};

// Linear gain toward (theta_rad, phi_rad) in the boresight frame.
// Expects theta in [-pi, pi) and phi in [-pi/2, pi/2].
double gain(const Pattern& pattern, double theta_rad, double phi_rad);

// Peak gain of an aperture: g = 4*pi*area*f^2/c^2. Errors on nonpositive input.
double gain_from_area(double area_m2, double frequency_hz);

// Inverse of gain_from_area.
double effective_area(double gain, double frequency_hz);

// Boresight orientation for a node at one instant. fixed_to_object returns
// the node's heading; locked_to_target aims yaw and pitch along
// node -> target. Roll carries rotation_angle_rad in both modes. Throws
// std::invalid_argument ("degenerate pointing") when node and target
// positions coincide in locked mode.
Orientation resolve_boresight(const PointingSpec& pointing,
                              const Vec3& node_position,
                              const Orientation& node_heading,
                              const std::optional<Vec3>& target_position);

// (1/4pi) * integral of gain over the sphere, by quadrature refined until the
// result is stable to about 1e-4. An ideal lossless pattern averages to 1.
double mean_spherical_gain(const Pattern& pattern);

}  // namespace vanetsim
