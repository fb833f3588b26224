#pragma once

#include <string>

namespace vanetsim {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Below this separation the far-field model stops being meaningful; distances
// are clamped instead of rejected.
inline constexpr double kMinDistanceM = 1.0;

struct Channel {
    std::string id;
    double frequency_hz = 0.0;
    double bandwidth_hz = 0.0;
    double data_rate_bps = 0.0;
    double system_loss = 1.0;  // dimensionless, >= 1
};

double wavelength(double frequency_hz);

// Free-space received power:
//   p_r = p_t * g_t * g_r * lambda^2 / ((4*pi)^2 * d^2 * loss)
// d is clamped to kMinDistanceM; loss must be >= 1. Errors on nonpositive
// power, gains, or wavelength.
double friis_received_power(double tx_power_w, double tx_gain, double rx_gain,
                            double wavelength_m, double distance_m,
                            double system_loss);

double propagation_delay(double distance_m);

}  // namespace vanetsim
