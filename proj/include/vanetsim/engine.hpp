#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vanetsim/pipeline.hpp"
#include "vanetsim/scenario.hpp"

namespace vanetsim {

// Hypothetical continuous-wave received power of the broadcast link at one
// sampling instant; emitted on a fixed cadence so the power curve is smooth
// between packets.
struct PowerSample {
    double time_s = 0.0;
    std::string rx_node_id;
    double rx_power_w = 0.0;
    double distance_m = 0.0;
};

struct ThroughputWindow {
    double start_s = 0.0;
    double length_s = 0.0;
    std::int64_t accepted_bits = 0;  // exact accounting; bits_per_s is derived
    double bits_per_s = 0.0;
};

struct RunTotals {
    std::int64_t sent = 0;
    std::int64_t received = 0;
    std::int64_t rejected = 0;
    std::int64_t bit_errors = 0;
    std::int64_t accepted_bits = 0;
};

enum class EventKind { emission, reception, sample, end };

struct ProcessedEvent {
    double time_s = 0.0;
    std::uint64_t sequence = 0;
    EventKind kind = EventKind::end;
};

struct StatsSeries {
    std::vector<ReceptionRecord> packets;
    std::vector<PowerSample> samples;
    std::vector<ThroughputWindow> windows;
    RunTotals totals;
    double window_s = 0.0;
    double duration_s = 0.0;
    std::vector<ProcessedEvent> event_log;
    std::vector<StageTraceRow> trace;
};

// Semantic checks beyond what parsing enforces; returns human-readable
// violations (empty means runnable). run refuses configs with violations.
std::vector<std::string> validate(const ScenarioConfig& config);

// Executes the scenario. seed drives only the bit-error allocation stream;
// mobility uses the per-trajectory seeds, so two runs that differ only in
// seed share every position, gain, and power. Events are ordered by
// (time, insertion sequence) and replay identically for identical inputs.
// Packets still in flight at the end of the run are dropped without records.
StatsSeries run(const ScenarioConfig& config, std::uint64_t seed);

// Accepted bits per aligned window of window_s covering [0, duration_s).
// Records are assigned to windows by completion time.
std::vector<ThroughputWindow> throughput_windows(std::span<const ReceptionRecord> records,
                                                 double window_s, double duration_s);

struct ComparisonVariant {
    std::string label;
    Pattern pattern;
};

struct ComparisonResult {
    std::string label;
    RunTotals totals;
    StatsSeries series;
};

// Re-runs the scenario once per variant, swapping only node_id's gain pattern
// (pointing and everything else held fixed, identical seed and trajectories).
// Results are sorted by cumulative bit errors, fewest first.
std::vector<ComparisonResult> compare_antennas(const ScenarioConfig& config,
                                               const std::string& node_id,
                                               std::span<const ComparisonVariant> variants,
                                               std::uint64_t seed);

}  // namespace vanetsim
