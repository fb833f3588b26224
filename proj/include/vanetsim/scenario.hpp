#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vanetsim/antenna.hpp"
#include "vanetsim/geometry.hpp"
#include "vanetsim/propagation.hpp"

namespace vanetsim {

enum class NodeRole { transmitter, receiver, jammer };

// Declarative description of a trajectory; compiled into a Trajectory for a
// concrete run horizon with build_trajectory.
struct TrajectorySpec {
    TrajectoryKind kind = TrajectoryKind::fixed;
    Vec3 position;                  // fixed
    Vec3 start;                     // linear
    Vec3 velocity_mps;              // linear
    std::vector<TimedPoint> points; // waypoints
    RectBounds bounds;              // random_waypoint
    double speed_mps = 0.0;
    double pause_s = 0.0;
    std::uint64_t seed = 0;
};

struct GeneratorSpec {
    std::int64_t packet_bits = 0;
    double interval_s = 0.0;
    double start_s = 0.0;
    double tx_power_w = 0.0;
};

struct NodeSpec {
    std::string id;
    NodeRole role = NodeRole::receiver;
    TrajectorySpec trajectory;
    AntennaSystem antenna;
    std::string tx_channel_id;  // empty when the node does not transmit
    std::string rx_channel_id;  // empty when the node does not receive
    std::optional<GeneratorSpec> generator;
    double noise_figure_db = 0.0;
    std::int64_t fec_threshold_bits = 0;
};

struct StatsSpec {
    double window_s = 30.0;
    double sample_period_s = 1.0;
    bool trace = false;
};

struct ScenarioConfig {
    std::string name;
    double duration_s = 0.0;
    std::uint64_t seed = 1;
    StatsSpec stats;
    std::vector<Channel> channels;
    std::vector<NodeSpec> nodes;
};

// Parses a YAML scenario in strict mode: unknown keys, missing required keys,
// type mismatches, and out-of-range values all throw std::runtime_error with
// a "<source>:<line>: ..." diagnostic naming the offending key.
ScenarioConfig parse_scenario(const std::string& yaml_text,
                              const std::string& source_name = "scenario");

ScenarioConfig load_scenario(const std::filesystem::path& path);

// Emits a scenario as YAML that parse_scenario reads back to the same config
// (round-trip lossless; numbers use shortest exact form).
std::string serialize_scenario(const ScenarioConfig& config);

Trajectory build_trajectory(const TrajectorySpec& spec, double horizon_s);

std::string to_string(NodeRole role);

}  // namespace vanetsim
