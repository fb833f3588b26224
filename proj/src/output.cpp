#include "vanetsim/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace vanetsim {

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

namespace {

std::size_t window_index(const StatsSeries& series, double t) {
    if (series.windows.empty() || !(series.window_s > 0.0)) {
        return 0;
    }
    auto idx = static_cast<std::size_t>(std::max(0.0, std::floor(t / series.window_s)));
    return std::min(idx, series.windows.size() - 1);
}

std::string throughput_cell(const StatsSeries& series, double t) {
    if (series.windows.empty()) {
        return "";
    }
    return format_number(series.windows[window_index(series, t)].bits_per_s);
}

void write_sample_row(const StatsSeries& series, const PowerSample& s, std::ostream& out) {
    out << format_number(s.time_s) << ",sample," << format_number(s.rx_power_w) << ",,,,,"
        << throughput_cell(series, s.time_s) << "\n";
}

void write_packet_row(const StatsSeries& series, const ReceptionRecord& r, std::ostream& out) {
    out << format_number(r.end_time_s) << ",packet," << format_number(r.rx_power_w) << ","
        << format_number(r.snr_db) << "," << format_number(r.ber) << "," << r.bit_errors << ","
        << (r.accepted ? "true" : "false") << "," << throughput_cell(series, r.end_time_s)
        << "\n";
}

}  // namespace

std::size_t emit_csv(const StatsSeries& series, std::ostream& out) {
    out << "time_s,kind,rx_power_w,snr_db,ber,bit_errors,accepted,throughput_bps\n";
    std::size_t si = 0;
    std::size_t pi = 0;
    std::size_t rows = 0;
    while (si < series.samples.size() || pi < series.packets.size()) {
        bool take_sample;
        if (si == series.samples.size()) {
            take_sample = false;
        } else if (pi == series.packets.size()) {
            take_sample = true;
        } else {
            take_sample = series.samples[si].time_s <= series.packets[pi].end_time_s;
        }
        if (take_sample) {
            write_sample_row(series, series.samples[si++], out);
        } else {
            write_packet_row(series, series.packets[pi++], out);
        }
        ++rows;
    }
    return rows;
}

std::size_t emit_trace_csv(const StatsSeries& series, std::ostream& out) {
    out << "packet_id,stage,value,unit\n";
    for (const StageTraceRow& row : series.trace) {
        out << row.packet_id << "," << row.stage << "," << format_number(row.value) << ","
            << row.unit << "\n";
    }
    return series.trace.size();
}

std::string emit_summary(const ScenarioConfig& config, const StatsSeries& series) {
    std::ostringstream out;
    out << "scenario: " << config.name << "\n";
    out << "duration_s: " << format_number(series.duration_s) << "\n";
    out << "packets_sent: " << series.totals.sent << "\n";
    out << "packets_received: " << series.totals.received << "\n";
    out << "packets_rejected: " << series.totals.rejected << "\n";
    out << "bit_errors: " << series.totals.bit_errors << "\n";
    out << "accepted_bits: " << series.totals.accepted_bits << "\n";

    const ReceptionRecord* worst = nullptr;
    for (const ReceptionRecord& r : series.packets) {
        if (worst == nullptr || r.ber > worst->ber) {
            worst = &r;
        }
    }
    if (worst != nullptr) {
        out << "max_ber: " << format_number(worst->ber) << "\n";
        out << "max_ber_time_s: " << format_number(worst->end_time_s) << "\n";
    } else {
        out << "max_ber: n/a\n";
    }

    std::size_t zero = 0;
    for (const ThroughputWindow& w : series.windows) {
        if (w.accepted_bits == 0) {
            ++zero;
        }
    }
    out << "zero_throughput_windows: " << zero << "/" << series.windows.size() << "\n";
    return out.str();
}

std::string emit_comparison_summary(const ScenarioConfig& config,
                                    std::span<const ComparisonResult> results,
                                    std::uint64_t seed) {
    std::ostringstream out;
    out << "scenario: " << config.name << "\n";
    out << "antenna_comparison_seed: " << seed << "\n";
    std::size_t rank = 1;
    for (const ComparisonResult& r : results) {
        out << "rank " << rank++ << ": " << r.label << " bit_errors: " << r.totals.bit_errors
            << " received: " << r.totals.received << " accepted_bits: " << r.totals.accepted_bits
            << "\n";
    }
    return out.str();
}

}  // namespace vanetsim
