#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "vanetsim/antenna.hpp"
#include "vanetsim/geometry.hpp"
#include "vanetsim/propagation.hpp"

namespace vanetsim {

// Boltzmann constant (exact, 2019 SI) and reference noise temperature.
inline constexpr double kBoltzmann = 1.380649e-23;  // J/K
inline constexpr double kNoiseTemperatureK = 290.0;

struct Transmission {
    std::uint64_t packet_id = 0;
    std::string source_node_id;
    Channel channel;
    std::int64_t size_bits = 0;
    double tx_power_w = 0.0;
    double start_time_s = 0.0;
};

enum class ChannelMatch { valid, noise, ignored };

// valid: same channel id and carrier, demodulated normally. noise: different
// id but the bands [f - b/2, f + b/2] overlap, so it only adds interference.
// ignored: disjoint bands.
ChannelMatch channel_match(const Channel& tx_channel, const Channel& rx_channel);

// Airtime of a packet: size / data rate. Errors on nonpositive input.
double transmission_delay(std::int64_t size_bits, double data_rate_bps);

// Thermal noise floor k * T0 * bandwidth, raised by a receiver noise figure
// in dB. Errors on nonpositive bandwidth or negative noise figure.
double background_noise(double bandwidth_hz, double noise_figure_db);

struct OverlapContribution {
    double rx_power_w = 0.0;
    double overlap_start_s = 0.0;
    double overlap_end_s = 0.0;
};

// Interference averaged over a reception window: each contributor's received
// power weighted by the fraction of the window it covers. Contributions are
// clipped to the window. Errors on a degenerate window.
double interference_power(double window_start_s, double window_end_s,
                          std::span<const OverlapContribution> contributions);

// 10*log10(rx / (noise + interference)). Errors on nonpositive rx power
// ("noiseless channel" when noise + interference is zero).
double snr_db(double rx_power_w, double noise_w, double interference_w);

// Linear Eb/N0 = snr * bandwidth / data_rate, with snr given in dB.
double eb_n0_from_snr(double snr_db, double bandwidth_hz, double data_rate_bps);

// BPSK bit error rate 0.5 * erfc(sqrt(eb_n0)). Errors on negative eb_n0.
double ber_bpsk(double eb_n0);

// Binomial(size_bits, ber) draw by inverse transform; consumes exactly one
// uniform from the stream per call so replay alignment never depends on the
// error probability.
std::int64_t allocate_errors(double ber, std::int64_t size_bits,
                             std::mt19937_64& error_stream);

// Accept when the error count is within the correctable budget.
bool error_correction(std::int64_t bit_errors, std::int64_t threshold_bits);

struct ReceptionRecord {
    std::uint64_t packet_id = 0;
    std::string rx_node_id;
    ChannelMatch match = ChannelMatch::valid;
    double distance_m = 0.0;
    double gain_tx = 1.0;
    double gain_rx = 1.0;
    double rx_power_w = 0.0;
    double background_noise_w = 0.0;
    double interference_w = 0.0;
    double snr_db = 0.0;
    double ber = 0.0;
    std::int64_t size_bits = 0;
    std::int64_t bit_errors = 0;
    bool accepted = false;
    double end_time_s = 0.0;
};

// One endpoint of a link, sampled at the reception window midpoint.
struct EndpointSample {
    Vec3 position;
    Orientation boresight;
    Pattern pattern;
};

// A concurrent emission classified as noise for this receiver, with the
// interval its signal is present at the receiver.
struct NoiseSourceSample {
    Transmission tx;
    EndpointSample endpoint;
    double arrival_start_s = 0.0;
    double arrival_end_s = 0.0;
};

struct ReceptionInputs {
    Transmission tx;
    std::string rx_node_id;
    Channel rx_channel;
    EndpointSample transmitter;
    EndpointSample receiver;
    double noise_figure_db = 0.0;
    std::int64_t fec_threshold_bits = 0;
    std::vector<NoiseSourceSample> noise;
};

struct StageTraceRow {
    std::uint64_t packet_id = 0;
    std::string stage;
    double value = 0.0;
    std::string unit;
};

// Runs the full staged chain for one packet at one receiver: channel match,
// transmission delay, antenna gains, propagation delay, received power,
// background noise and time-averaged interference, SNR, Eb/N0, BER, error
// allocation, error correction. Geometry inside the inputs must already be
// sampled at the window midpoint. Appends one row per stage to trace when
// given. Throws if the channel match is not valid.
ReceptionRecord process_reception(const ReceptionInputs& in,
                                  std::mt19937_64& error_stream,
                                  std::vector<StageTraceRow>* trace = nullptr);

}  // namespace vanetsim
