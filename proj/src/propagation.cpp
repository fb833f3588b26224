#include "vanetsim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vanetsim/geometry.hpp"

namespace vanetsim {

namespace {

void check_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

}  // namespace

double wavelength(double frequency_hz) {
    check_positive(frequency_hz, "frequency");
    return kSpeedOfLight / frequency_hz;
}

double friis_received_power(double tx_power_w, double tx_gain, double rx_gain,
                            double wavelength_m, double distance_m,
                            double system_loss) {
    check_positive(tx_power_w, "tx power");
    check_positive(tx_gain, "tx gain");
    check_positive(rx_gain, "rx gain");
    check_positive(wavelength_m, "wavelength");
    if (!(system_loss >= 1.0)) {
        throw std::invalid_argument("system loss must be >= 1");
    }
    double d = std::max(distance_m, kMinDistanceM);
    double numerator = tx_power_w * tx_gain * rx_gain * wavelength_m * wavelength_m;
    double denominator = (4.0 * kPi) * (4.0 * kPi) * (d * d) * system_loss;
    return numerator / denominator;
}

double propagation_delay(double distance_m) {
    if (distance_m < 0.0) {
        throw std::invalid_argument("distance must be nonnegative");
    }
    return distance_m / kSpeedOfLight;
}

}  // namespace vanetsim
