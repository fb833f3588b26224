#include "vanetsim/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vanetsim/rng.hpp"

namespace vanetsim {

ChannelMatch channel_match(const Channel& tx_channel, const Channel& rx_channel) {
    if (tx_channel.id == rx_channel.id &&
        tx_channel.frequency_hz == rx_channel.frequency_hz) {
        return ChannelMatch::valid;
    }
    double tx_lo = tx_channel.frequency_hz - tx_channel.bandwidth_hz / 2.0;
    double tx_hi = tx_channel.frequency_hz + tx_channel.bandwidth_hz / 2.0;
    double rx_lo = rx_channel.frequency_hz - rx_channel.bandwidth_hz / 2.0;
    double rx_hi = rx_channel.frequency_hz + rx_channel.bandwidth_hz / 2.0;
    if (tx_lo <= rx_hi && rx_lo <= tx_hi) {
        return ChannelMatch::noise;
    }
    return ChannelMatch::ignored;
}

double transmission_delay(std::int64_t size_bits, double data_rate_bps) {
    if (size_bits <= 0) {
        throw std::invalid_argument("packet size must be positive");
    }
    if (!(data_rate_bps > 0.0)) {
        throw std::invalid_argument("data rate must be positive");
    }
    return static_cast<double>(size_bits) / data_rate_bps;
}

double background_noise(double bandwidth_hz, double noise_figure_db) {
    if (!(bandwidth_hz > 0.0)) {
        throw std::invalid_argument("bandwidth must be positive");
    }
    if (noise_figure_db < 0.0) {
        throw std::invalid_argument("noise figure must be nonnegative");
    }
    return kBoltzmann * kNoiseTemperatureK * bandwidth_hz *
           std::pow(10.0, noise_figure_db / 10.0);
}

double interference_power(double window_start_s, double window_end_s,
                          std::span<const OverlapContribution> contributions) {
    if (!(window_end_s > window_start_s)) {
        throw std::invalid_argument("reception window must have positive length");
    }
    double energy = 0.0;  // power * time
    for (const OverlapContribution& c : contributions) {
        if (c.rx_power_w < 0.0) {
            throw std::invalid_argument("interference power must be nonnegative");
        }
        double lo = std::max(c.overlap_start_s, window_start_s);
        double hi = std::min(c.overlap_end_s, window_end_s);
        if (hi > lo) {
            energy += c.rx_power_w * (hi - lo);
        }
    }
    return energy / (window_end_s - window_start_s);
}

double snr_db(double rx_power_w, double noise_w, double interference_w) {
    if (!(rx_power_w > 0.0)) {
        throw std::invalid_argument("rx power must be positive");
    }
    if (noise_w < 0.0 || interference_w < 0.0) {
        throw std::invalid_argument("noise and interference must be nonnegative");
    }
    double denominator = noise_w + interference_w;
    if (denominator == 0.0) {
        throw std::invalid_argument("noiseless channel");
    }
    return 10.0 * std::log10(rx_power_w / denominator);
}

double eb_n0_from_snr(double snr_db, double bandwidth_hz, double data_rate_bps) {
    if (!(bandwidth_hz > 0.0) || !(data_rate_bps > 0.0)) {
        throw std::invalid_argument("bandwidth and data rate must be positive");
    }
    return std::pow(10.0, snr_db / 10.0) * bandwidth_hz / data_rate_bps;
}

double ber_bpsk(double eb_n0) {
    if (eb_n0 < 0.0) {
        throw std::invalid_argument("eb_n0 must be nonnegative");
    }
    return 0.5 * std::erfc(std::sqrt(eb_n0));
}

std::int64_t allocate_errors(double ber, std::int64_t size_bits,
                             std::mt19937_64& error_stream) {
    if (size_bits <= 0) {
        throw std::invalid_argument("packet size must be positive");
    }
    if (!(ber >= 0.0) || ber > 1.0) {
        throw std::invalid_argument("ber must be in [0, 1]");
    }
    double u = uniform01(error_stream);
    if (ber == 0.0) {
        return 0;
    }
    if (ber == 1.0) {
        return size_bits;
    }

    // Inverse transform: smallest k with cdf(k) > u. The pmf is advanced by
    // its neighbour ratio; a log-space prefix covers the range where the pmf
    // would underflow (its cdf contribution is below anything u can resolve).
    const double n = static_cast<double>(size_bits);
    const double odds = ber / (1.0 - ber);
    double log_pmf = n * std::log1p(-ber);
    std::int64_t k = 0;
    while (log_pmf < -700.0 && k < size_bits) {
        log_pmf += std::log((n - static_cast<double>(k)) / (static_cast<double>(k) + 1.0) * odds);
        ++k;
    }
    double pmf = std::exp(log_pmf);
    double cdf = pmf;
    while (u >= cdf && k < size_bits) {
        pmf *= (n - static_cast<double>(k)) / (static_cast<double>(k) + 1.0) * odds;
        ++k;
        cdf += pmf;
    }
    return k;
}

bool error_correction(std::int64_t bit_errors, std::int64_t threshold_bits) {
    if (bit_errors < 0 || threshold_bits < 0) {
        throw std::invalid_argument("bit error counts must be nonnegative");
    }
    return bit_errors <= threshold_bits;
}

namespace {

void push_trace(std::vector<StageTraceRow>* trace, std::uint64_t packet_id,
                const char* stage, double value, const char* unit) {
    if (trace != nullptr) {
        trace->push_back({packet_id, stage, value, unit});
    }
}

}  // namespace

ReceptionRecord process_reception(const ReceptionInputs& in,
                                  std::mt19937_64& error_stream,
                                  std::vector<StageTraceRow>* trace) {
    const std::uint64_t id = in.tx.packet_id;

    ChannelMatch match = channel_match(in.tx.channel, in.rx_channel);
    if (match != ChannelMatch::valid) {
        throw std::logic_error("process_reception requires a valid channel match");
    }
    push_trace(trace, id, "receiver_group", 1.0, "receivers");
    push_trace(trace, id, "channel_match", 1.0, "valid");

    double airtime = transmission_delay(in.tx.size_bits, in.tx.channel.data_rate_bps);
    push_trace(trace, id, "transmission_delay", airtime, "s");

    auto [theta_tx, phi_tx] =
        azimuth_elevation(in.transmitter.boresight, in.transmitter.position, in.receiver.position);
    double g_tx = gain(in.transmitter.pattern, theta_tx, phi_tx);
    push_trace(trace, id, "tx_gain", g_tx, "");

    double d = distance(in.transmitter.position, in.receiver.position);
    double prop = propagation_delay(d);
    push_trace(trace, id, "propagation_delay", prop, "s");

    auto [theta_rx, phi_rx] =
        azimuth_elevation(in.receiver.boresight, in.receiver.position, in.transmitter.position);
    double g_rx = gain(in.receiver.pattern, theta_rx, phi_rx);
    push_trace(trace, id, "rx_gain", g_rx, "");

    double lambda = wavelength(in.tx.channel.frequency_hz);
    double rx_power =
        friis_received_power(in.tx.tx_power_w, g_tx, g_rx, lambda, d, in.tx.channel.system_loss);
    push_trace(trace, id, "rx_power", rx_power, "W");

    double noise_w = background_noise(in.rx_channel.bandwidth_hz, in.noise_figure_db);
    push_trace(trace, id, "background_noise", noise_w, "W");

    double window_start = in.tx.start_time_s + prop;
    double window_end = in.tx.start_time_s + airtime + prop;
    std::vector<OverlapContribution> contributions;
    contributions.reserve(in.noise.size());
    for (const NoiseSourceSample& src : in.noise) {
        auto [th_s, ph_s] =
            azimuth_elevation(src.endpoint.boresight, src.endpoint.position, in.receiver.position);
        double g_src = gain(src.endpoint.pattern, th_s, ph_s);
        auto [th_r, ph_r] =
            azimuth_elevation(in.receiver.boresight, in.receiver.position, src.endpoint.position);
        double g_toward_src = gain(in.receiver.pattern, th_r, ph_r);
        double d_src = distance(src.endpoint.position, in.receiver.position);
        double p_src = friis_received_power(src.tx.tx_power_w, g_src, g_toward_src,
                                            wavelength(src.tx.channel.frequency_hz), d_src,
                                            src.tx.channel.system_loss);
        contributions.push_back({p_src, src.arrival_start_s, src.arrival_end_s});
    }
    double interference = interference_power(window_start, window_end, contributions);
    push_trace(trace, id, "interference", interference, "W");

    double snr = snr_db(rx_power, noise_w, interference);
    push_trace(trace, id, "snr", snr, "dB");

    double eb_n0 = eb_n0_from_snr(snr, in.rx_channel.bandwidth_hz, in.rx_channel.data_rate_bps);
    push_trace(trace, id, "eb_n0", eb_n0, "");

    double ber = ber_bpsk(eb_n0);
    push_trace(trace, id, "ber", ber, "");

    std::int64_t bit_errors = allocate_errors(ber, in.tx.size_bits, error_stream);
    push_trace(trace, id, "bit_errors", static_cast<double>(bit_errors), "bits");

    bool accepted = error_correction(bit_errors, in.fec_threshold_bits);
    push_trace(trace, id, "link_closure", accepted ? 1.0 : 0.0, "accepted");

    ReceptionRecord rec;
    rec.packet_id = id;
    rec.rx_node_id = in.rx_node_id;
    rec.match = match;
    rec.distance_m = d;
    rec.gain_tx = g_tx;
    rec.gain_rx = g_rx;
    rec.rx_power_w = rx_power;
    rec.background_noise_w = noise_w;
    rec.interference_w = interference;
    rec.snr_db = snr;
    rec.ber = ber;
    rec.size_bits = in.tx.size_bits;
    rec.bit_errors = bit_errors;
    rec.accepted = accepted;
    rec.end_time_s = window_end;
    return rec;
}

}  // namespace vanetsim
