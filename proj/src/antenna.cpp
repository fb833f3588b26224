#include "vanetsim/antenna.hpp"

#include <cmath>
#include <stdexcept>

#include "vanetsim/propagation.hpp"

namespace vanetsim {

namespace {

constexpr double kFourLn2 = 2.77258872223978123767;  // 4*ln(2)

void check_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

}  // namespace

Pattern Pattern::isotropic() {
    return Pattern{};
}

Pattern Pattern::directional(double peak_gain, double beamwidth_3db_rad,
                             double sidelobe_floor) {
    if (!(peak_gain > 1.0)) {
        throw std::invalid_argument("directional peak_gain must exceed 1");
    }
    check_positive(beamwidth_3db_rad, "beamwidth_3db_rad");
    if (sidelobe_floor < 0.0) {
        throw std::invalid_argument("sidelobe_floor must be nonnegative");
    }
    Pattern p;
    p.kind = PatternKind::directional;
    p.peak_gain = peak_gain;
    p.beamwidth_3db_rad = beamwidth_3db_rad;
    p.sidelobe_floor = sidelobe_floor;
    return p;
}

Pattern Pattern::cone(double peak_gain, double elevation_center_rad,
                      double elevation_width_rad) {
    check_positive(peak_gain, "cone peak_gain");
    check_positive(elevation_width_rad, "elevation_width_rad");
    Pattern p;
    p.kind = PatternKind::cone;
    p.peak_gain = peak_gain;
    p.elevation_center_rad = elevation_center_rad;
    p.elevation_width_rad = elevation_width_rad;
    return p;
}

double gain(const Pattern& pattern, double theta_rad, double phi_rad) {
    switch (pattern.kind) {
        case PatternKind::isotropic:
            return 1.0;
        case PatternKind::directional: {
            // Half-power falls exactly at theta = beamwidth/2 on the horizon.
            double k = kFourLn2 / (pattern.beamwidth_3db_rad * pattern.beamwidth_3db_rad);
            double lobe = pattern.peak_gain *
                          std::exp(-k * (theta_rad * theta_rad + phi_rad * phi_rad));
            return std::max(lobe, pattern.sidelobe_floor);
        }
        case PatternKind::cone: {
            double off = phi_rad - pattern.elevation_center_rad;
            double w = pattern.elevation_width_rad;
            return pattern.peak_gain * std::exp(-kFourLn2 * off * off / (w * w));
        }
    }
    return 1.0;
}

double gain_from_area(double area_m2, double frequency_hz) {
    check_positive(area_m2, "effective area");
    check_positive(frequency_hz, "frequency");
    double f_over_c = frequency_hz / kSpeedOfLight;
    return 4.0 * kPi * area_m2 * f_over_c * f_over_c;
}

double effective_area(double gain, double frequency_hz) {
    check_positive(gain, "gain");
    check_positive(frequency_hz, "frequency");
    double c_over_f = kSpeedOfLight / frequency_hz;
    return gain * c_over_f * c_over_f / (4.0 * kPi);
}

Orientation resolve_boresight(const PointingSpec& pointing,
                              const Vec3& node_position,
                              const Orientation& node_heading,
                              const std::optional<Vec3>& target_position) {
    Orientation o;
    if (pointing.mode == PointingMode::fixed_to_object) {
        o = node_heading;
    } else {
        if (!target_position) {
            throw std::invalid_argument("locked_to_target requires a target position");
        }
        Vec3 d = *target_position - node_position;
        double horizontal = std::sqrt(d.x * d.x + d.y * d.y);
        if (horizontal == 0.0 && d.z == 0.0) {
            throw std::invalid_argument("degenerate pointing");
        }
        o.yaw = wrap_angle(std::atan2(d.y, d.x));
        o.pitch = std::atan2(d.z, horizontal);
    }
    o.roll = pointing.rotation_angle_rad;
    return o;
}

double mean_spherical_gain(const Pattern& pattern) {
    // Midpoint rule over azimuth x elevation; d(omega) = cos(phi) dphi dtheta.
    auto estimate = [&](int n_theta) {
        int n_phi = n_theta / 2;
        double d_theta = 2.0 * kPi / n_theta;
        double d_phi = kPi / n_phi;
        double sum = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            double phi = -kPi / 2.0 + (j + 0.5) * d_phi;
            double band = 0.0;
            for (int i = 0; i < n_theta; ++i) {
                double theta = -kPi + (i + 0.5) * d_theta;
                band += gain(pattern, theta, phi);
            }
            sum += band * std::cos(phi);
        }
        return sum * d_theta * d_phi / (4.0 * kPi);
    };

    double prev = estimate(64);
    for (int n = 128; n <= 2048; n *= 2) {
        double cur = estimate(n);
        if (std::abs(cur - prev) <= 1e-4 * std::max(std::abs(cur), 1.0)) {
            return cur;
        }
        prev = cur;
    }
    return prev;
}

}  // namespace vanetsim
