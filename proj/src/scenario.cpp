#include "vanetsim/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>

namespace vanetsim {

namespace {

struct ParseCtx {
    std::string source;
};

[[noreturn]] void fail_at(const ParseCtx& ctx, const YAML::Node& node, const std::string& msg) {
    std::ostringstream out;
    out << ctx.source << ":" << (node.Mark().line + 1) << ": " << msg;
    throw std::runtime_error(out.str());
}

YAML::Node require_key(const ParseCtx& ctx, const YAML::Node& map, const char* key,
                       const std::string& where) {
    YAML::Node v = map[key];
    if (!v.IsDefined()) {
        fail_at(ctx, map, "missing required key '" + std::string(key) + "' in " + where);
    }
    return v;
}

void check_keys(const ParseCtx& ctx, const YAML::Node& map, const std::string& where,
                std::initializer_list<const char*> allowed) {
    if (!map.IsMap()) {
        fail_at(ctx, map, where + " must be a mapping");
    }
    for (const auto& kv : map) {
        std::string key = kv.first.as<std::string>();
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            fail_at(ctx, kv.first, "unknown key '" + key + "' in " + where);
        }
    }
}

double as_double(const ParseCtx& ctx, const YAML::Node& v, const std::string& key) {
    try {
        return v.as<double>();
    } catch (const YAML::Exception&) {
        fail_at(ctx, v, "key '" + key + "': expected a number");
    }
}

std::int64_t as_int(const ParseCtx& ctx, const YAML::Node& v, const std::string& key) {
    try {
        return v.as<std::int64_t>();
    } catch (const YAML::Exception&) {
        fail_at(ctx, v, "key '" + key + "': expected an integer");
    }
}

std::uint64_t as_uint(const ParseCtx& ctx, const YAML::Node& v, const std::string& key) {
    try {
        return v.as<std::uint64_t>();
    } catch (const YAML::Exception&) {
        fail_at(ctx, v, "key '" + key + "': expected a nonnegative integer");
    }
}

bool as_bool(const ParseCtx& ctx, const YAML::Node& v, const std::string& key) {
    try {
        return v.as<bool>();
    } catch (const YAML::Exception&) {
        fail_at(ctx, v, "key '" + key + "': expected a boolean");
    }
}

std::string as_string(const ParseCtx& ctx, const YAML::Node& v, const std::string& key) {
    try {
        return v.as<std::string>();
    } catch (const YAML::Exception&) {
        fail_at(ctx, v, "key '" + key + "': expected a string");
    }
}

double positive_double(const ParseCtx& ctx, const YAML::Node& map, const char* key,
                       const std::string& where) {
    YAML::Node v = require_key(ctx, map, key, where);
    double x = as_double(ctx, v, key);
    if (!(x > 0.0)) {
        fail_at(ctx, v, "key '" + std::string(key) + "': must be positive");
    }
    return x;
}

double nonnegative_double(const ParseCtx& ctx, const YAML::Node& map, const char* key,
                          const std::string& where, double fallback,
                          bool required) {
    YAML::Node v = map[key];
    if (!v.IsDefined()) {
        if (required) {
            fail_at(ctx, map, "missing required key '" + std::string(key) + "' in " + where);
        }
        return fallback;
    }
    double x = as_double(ctx, v, key);
    if (x < 0.0) {
        fail_at(ctx, v, "key '" + std::string(key) + "': must be nonnegative");
    }
    return x;
}

Vec3 parse_vec3(const ParseCtx& ctx, const YAML::Node& v, const std::string& key) {
    if (!v.IsSequence() || v.size() != 3) {
        fail_at(ctx, v, "key '" + key + "': expected [x, y, z]");
    }
    Vec3 p;
    p.x = as_double(ctx, v[0], key);
    p.y = as_double(ctx, v[1], key);
    p.z = as_double(ctx, v[2], key);
    return p;
}

TrajectorySpec parse_trajectory(const ParseCtx& ctx, const YAML::Node& map,
                                const std::string& where) {
    TrajectorySpec spec;
    std::string kind = as_string(ctx, require_key(ctx, map, "kind", where), "kind");
    if (kind == "static") {
        check_keys(ctx, map, where, {"kind", "position_m"});
        spec.kind = TrajectoryKind::fixed;
        spec.position = parse_vec3(ctx, require_key(ctx, map, "position_m", where), "position_m");
    } else if (kind == "linear") {
        check_keys(ctx, map, where, {"kind", "start_m", "velocity_mps"});
        spec.kind = TrajectoryKind::linear;
        spec.start = parse_vec3(ctx, require_key(ctx, map, "start_m", where), "start_m");
        spec.velocity_mps =
            parse_vec3(ctx, require_key(ctx, map, "velocity_mps", where), "velocity_mps");
    } else if (kind == "waypoints") {
        check_keys(ctx, map, where, {"kind", "points"});
        spec.kind = TrajectoryKind::waypoints;
        YAML::Node pts = require_key(ctx, map, "points", where);
        if (!pts.IsSequence() || pts.size() == 0) {
            fail_at(ctx, pts, "key 'points': expected a non-empty list");
        }
        for (const auto& p : pts) {
            check_keys(ctx, p, where + " waypoint", {"t_s", "position_m"});
            TimedPoint tp;
            tp.t_s = as_double(ctx, require_key(ctx, p, "t_s", where), "t_s");
            tp.position = parse_vec3(ctx, require_key(ctx, p, "position_m", where), "position_m");
            if (!spec.points.empty() && !(tp.t_s > spec.points.back().t_s)) {
                fail_at(ctx, p, "key 't_s': waypoint times must be strictly increasing");
            }
            spec.points.push_back(tp);
        }
    } else if (kind == "random_waypoint") {
        check_keys(ctx, map, where, {"kind", "bounds_m", "speed_mps", "pause_s", "seed"});
        spec.kind = TrajectoryKind::random_waypoint;
        YAML::Node b = require_key(ctx, map, "bounds_m", where);
        check_keys(ctx, b, where + " bounds_m", {"min_x", "min_y", "max_x", "max_y"});
        spec.bounds.min_x = as_double(ctx, require_key(ctx, b, "min_x", where), "min_x");
        spec.bounds.min_y = as_double(ctx, require_key(ctx, b, "min_y", where), "min_y");
        spec.bounds.max_x = as_double(ctx, require_key(ctx, b, "max_x", where), "max_x");
        spec.bounds.max_y = as_double(ctx, require_key(ctx, b, "max_y", where), "max_y");
        if (!(spec.bounds.max_x > spec.bounds.min_x) || !(spec.bounds.max_y > spec.bounds.min_y)) {
            fail_at(ctx, b, "key 'bounds_m': must span a nonzero area");
        }
        spec.speed_mps = positive_double(ctx, map, "speed_mps", where);
        spec.pause_s = nonnegative_double(ctx, map, "pause_s", where, 0.0, true);
        spec.seed = as_uint(ctx, require_key(ctx, map, "seed", where), "seed");
    } else {
        fail_at(ctx, map["kind"], "key 'kind': unknown trajectory kind '" + kind + "'");
    }
    return spec;
}

Pattern parse_pattern(const ParseCtx& ctx, const YAML::Node& map, const std::string& where) {
    std::string kind = as_string(ctx, require_key(ctx, map, "kind", where), "kind");
    if (kind == "isotropic") {
        check_keys(ctx, map, where, {"kind"});
        return Pattern::isotropic();
    }
    if (kind == "directional") {
        check_keys(ctx, map, where, {"kind", "peak_gain", "beamwidth_3db_rad", "sidelobe_floor"});
        YAML::Node pg = require_key(ctx, map, "peak_gain", where);
        double peak = as_double(ctx, pg, "peak_gain");
        if (!(peak > 1.0)) {
            fail_at(ctx, pg, "key 'peak_gain': must exceed 1 for a directional pattern");
        }
        double bw = positive_double(ctx, map, "beamwidth_3db_rad", where);
        double floor = nonnegative_double(ctx, map, "sidelobe_floor", where, 0.0, true);
        return Pattern::directional(peak, bw, floor);
    }
    if (kind == "cone") {
        check_keys(ctx, map, where,
                   {"kind", "peak_gain", "elevation_center_rad", "elevation_width_rad"});
        double peak = positive_double(ctx, map, "peak_gain", where);
        YAML::Node c = require_key(ctx, map, "elevation_center_rad", where);
        double center = as_double(ctx, c, "elevation_center_rad");
        double width = positive_double(ctx, map, "elevation_width_rad", where);
        return Pattern::cone(peak, center, width);
    }
    fail_at(ctx, map["kind"], "key 'kind': unknown pattern kind '" + kind + "'");
}

PointingSpec parse_pointing(const ParseCtx& ctx, const YAML::Node& map, const std::string& where) {
    PointingSpec p;
    std::string mode = as_string(ctx, require_key(ctx, map, "mode", where), "mode");
    if (mode == "fixed_to_object") {
        check_keys(ctx, map, where, {"mode", "rotation_angle_rad"});
        p.mode = PointingMode::fixed_to_object;
    } else if (mode == "locked_to_target") {
        check_keys(ctx, map, where, {"mode", "target", "rotation_angle_rad"});
        p.mode = PointingMode::locked_to_target;
        p.target_node_id = as_string(ctx, require_key(ctx, map, "target", where), "target");
    } else {
        fail_at(ctx, map["mode"], "key 'mode': unknown pointing mode '" + mode + "'");
    }
    if (map["rotation_angle_rad"].IsDefined()) {
        p.rotation_angle_rad = as_double(ctx, map["rotation_angle_rad"], "rotation_angle_rad");
    }
    return p;
}

AntennaSystem parse_antenna(const ParseCtx& ctx, const YAML::Node& map, const std::string& where) {
    check_keys(ctx, map, where, {"pattern", "pointing", "require_unit_mean_gain"});
    AntennaSystem a;
    a.pattern = parse_pattern(ctx, require_key(ctx, map, "pattern", where), where + " pattern");
    a.pointing = parse_pointing(ctx, require_key(ctx, map, "pointing", where), where + " pointing");
    if (map["require_unit_mean_gain"].IsDefined()) {
        a.require_unit_mean_gain =
            as_bool(ctx, map["require_unit_mean_gain"], "require_unit_mean_gain");
    }
    return a;
}

GeneratorSpec parse_generator(const ParseCtx& ctx, const YAML::Node& map,
                              const std::string& where) {
    check_keys(ctx, map, where, {"packet_bits", "interval_s", "start_s", "tx_power_w"});
    GeneratorSpec g;
    YAML::Node bits = require_key(ctx, map, "packet_bits", where);
    g.packet_bits = as_int(ctx, bits, "packet_bits");
    if (g.packet_bits <= 0) {
        fail_at(ctx, bits, "key 'packet_bits': must be positive");
    }
    g.interval_s = positive_double(ctx, map, "interval_s", where);
    g.start_s = nonnegative_double(ctx, map, "start_s", where, 0.0, false);
    g.tx_power_w = positive_double(ctx, map, "tx_power_w", where);
    return g;
}

NodeSpec parse_node(const ParseCtx& ctx, const YAML::Node& map) {
    check_keys(ctx, map, "node",
               {"id", "role", "trajectory", "antenna", "tx_channel", "rx_channel", "generator",
                "noise_figure_db", "fec_threshold_bits"});
    NodeSpec n;
    n.id = as_string(ctx, require_key(ctx, map, "id", "node"), "id");
    if (n.id.empty()) {
        fail_at(ctx, map["id"], "key 'id': must not be empty");
    }
    std::string where = "node '" + n.id + "'";
    std::string role = as_string(ctx, require_key(ctx, map, "role", where), "role");
    if (role == "transmitter") {
        n.role = NodeRole::transmitter;
    } else if (role == "receiver") {
        n.role = NodeRole::receiver;
    } else if (role == "jammer") {
        n.role = NodeRole::jammer;
    } else {
        fail_at(ctx, map["role"], "key 'role': unknown role '" + role + "'");
    }
    n.trajectory = parse_trajectory(ctx, require_key(ctx, map, "trajectory", where),
                                    where + " trajectory");
    n.antenna = parse_antenna(ctx, require_key(ctx, map, "antenna", where), where + " antenna");
    if (map["tx_channel"].IsDefined()) {
        n.tx_channel_id = as_string(ctx, map["tx_channel"], "tx_channel");
    }
    if (map["rx_channel"].IsDefined()) {
        n.rx_channel_id = as_string(ctx, map["rx_channel"], "rx_channel");
    }
    if (map["generator"].IsDefined()) {
        n.generator = parse_generator(ctx, map["generator"], where + " generator");
    }
    n.noise_figure_db = nonnegative_double(ctx, map, "noise_figure_db", where, 0.0, false);
    if (map["fec_threshold_bits"].IsDefined()) {
        n.fec_threshold_bits = as_int(ctx, map["fec_threshold_bits"], "fec_threshold_bits");
        if (n.fec_threshold_bits < 0) {
            fail_at(ctx, map["fec_threshold_bits"], "key 'fec_threshold_bits': must be nonnegative");
        }
    }
    return n;
}

Channel parse_channel(const ParseCtx& ctx, const YAML::Node& map) {
    check_keys(ctx, map, "channel",
               {"id", "frequency_hz", "bandwidth_hz", "data_rate_bps", "system_loss"});
    Channel c;
    c.id = as_string(ctx, require_key(ctx, map, "id", "channel"), "id");
    if (c.id.empty()) {
        fail_at(ctx, map["id"], "key 'id': must not be empty");
    }
    std::string where = "channel '" + c.id + "'";
    c.frequency_hz = positive_double(ctx, map, "frequency_hz", where);
    c.bandwidth_hz = positive_double(ctx, map, "bandwidth_hz", where);
    c.data_rate_bps = positive_double(ctx, map, "data_rate_bps", where);
    if (map["system_loss"].IsDefined()) {
        c.system_loss = as_double(ctx, map["system_loss"], "system_loss");
        if (!(c.system_loss >= 1.0)) {
            fail_at(ctx, map["system_loss"], "key 'system_loss': must be >= 1");
        }
    }
    return c;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& yaml_text, const std::string& source_name) {
    ParseCtx ctx{source_name};
    YAML::Node root;
    try {
        root = YAML::Load(yaml_text);
    } catch (const YAML::ParserException& e) {
        throw std::runtime_error(source_name + ":" + std::to_string(e.mark.line + 1) + ": " +
                                 e.msg);
    }
    if (!root.IsMap()) {
        throw std::runtime_error(source_name + ":1: scenario must be a YAML mapping");
    }
    check_keys(ctx, root, "scenario", {"name", "duration_s", "seed", "stats", "channels", "nodes"});

    ScenarioConfig cfg;
    cfg.name = as_string(ctx, require_key(ctx, root, "name", "scenario"), "name");
    cfg.duration_s = positive_double(ctx, root, "duration_s", "scenario");
    if (root["seed"].IsDefined()) {
        cfg.seed = as_uint(ctx, root["seed"], "seed");
    }
    if (root["stats"].IsDefined()) {
        YAML::Node s = root["stats"];
        check_keys(ctx, s, "stats", {"window_s", "sample_period_s", "trace"});
        if (s["window_s"].IsDefined()) {
            cfg.stats.window_s = positive_double(ctx, s, "window_s", "stats");
        }
        if (s["sample_period_s"].IsDefined()) {
            cfg.stats.sample_period_s = positive_double(ctx, s, "sample_period_s", "stats");
        }
        if (s["trace"].IsDefined()) {
            cfg.stats.trace = as_bool(ctx, s["trace"], "trace");
        }
    }

    YAML::Node channels = require_key(ctx, root, "channels", "scenario");
    if (!channels.IsSequence() || channels.size() == 0) {
        fail_at(ctx, channels, "key 'channels': expected a non-empty list");
    }
    for (const auto& c : channels) {
        cfg.channels.push_back(parse_channel(ctx, c));
    }

    YAML::Node nodes = require_key(ctx, root, "nodes", "scenario");
    if (!nodes.IsSequence() || nodes.size() == 0) {
        fail_at(ctx, nodes, "key 'nodes': expected a non-empty list");
    }
    for (const auto& n : nodes) {
        cfg.nodes.push_back(parse_node(ctx, n));
    }
    return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open scenario file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.filename().string());
}

namespace {

// Shortest decimal form that parses back to the same double.
std::string num(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void emit_vec3(YAML::Emitter& out, const Vec3& v) {
    out << YAML::Flow << YAML::BeginSeq << num(v.x) << num(v.y) << num(v.z) << YAML::EndSeq;
}

void emit_trajectory(YAML::Emitter& out, const TrajectorySpec& t) {
    out << YAML::BeginMap;
    switch (t.kind) {
        case TrajectoryKind::fixed:
            out << YAML::Key << "kind" << YAML::Value << "static";
            out << YAML::Key << "position_m" << YAML::Value;
            emit_vec3(out, t.position);
            break;
        case TrajectoryKind::linear:
            out << YAML::Key << "kind" << YAML::Value << "linear";
            out << YAML::Key << "start_m" << YAML::Value;
            emit_vec3(out, t.start);
            out << YAML::Key << "velocity_mps" << YAML::Value;
            emit_vec3(out, t.velocity_mps);
            break;
        case TrajectoryKind::waypoints:
            out << YAML::Key << "kind" << YAML::Value << "waypoints";
            out << YAML::Key << "points" << YAML::Value << YAML::BeginSeq;
            for (const TimedPoint& p : t.points) {
                out << YAML::Flow << YAML::BeginMap;
                out << YAML::Key << "t_s" << YAML::Value << num(p.t_s);
                out << YAML::Key << "position_m" << YAML::Value;
                emit_vec3(out, p.position);
                out << YAML::EndMap;
            }
            out << YAML::EndSeq;
            break;
        case TrajectoryKind::random_waypoint:
            out << YAML::Key << "kind" << YAML::Value << "random_waypoint";
            out << YAML::Key << "bounds_m" << YAML::Value << YAML::Flow << YAML::BeginMap;
            out << YAML::Key << "min_x" << YAML::Value << num(t.bounds.min_x);
            out << YAML::Key << "min_y" << YAML::Value << num(t.bounds.min_y);
            out << YAML::Key << "max_x" << YAML::Value << num(t.bounds.max_x);
            out << YAML::Key << "max_y" << YAML::Value << num(t.bounds.max_y);
            out << YAML::EndMap;
            out << YAML::Key << "speed_mps" << YAML::Value << num(t.speed_mps);
            out << YAML::Key << "pause_s" << YAML::Value << num(t.pause_s);
            out << YAML::Key << "seed" << YAML::Value << t.seed;
            break;
    }
    out << YAML::EndMap;
}

void emit_pattern(YAML::Emitter& out, const Pattern& p) {
    out << YAML::BeginMap;
    switch (p.kind) {
        case PatternKind::isotropic:
            out << YAML::Key << "kind" << YAML::Value << "isotropic";
            break;
        case PatternKind::directional:
            out << YAML::Key << "kind" << YAML::Value << "directional";
            out << YAML::Key << "peak_gain" << YAML::Value << num(p.peak_gain);
            out << YAML::Key << "beamwidth_3db_rad" << YAML::Value << num(p.beamwidth_3db_rad);
            out << YAML::Key << "sidelobe_floor" << YAML::Value << num(p.sidelobe_floor);
            break;
        case PatternKind::cone:
            out << YAML::Key << "kind" << YAML::Value << "cone";
            out << YAML::Key << "peak_gain" << YAML::Value << num(p.peak_gain);
            out << YAML::Key << "elevation_center_rad" << YAML::Value
                << num(p.elevation_center_rad);
            out << YAML::Key << "elevation_width_rad" << YAML::Value
                << num(p.elevation_width_rad);
            break;
    }
    out << YAML::EndMap;
}

}  // namespace

std::string to_string(NodeRole role) {
    switch (role) {
        case NodeRole::transmitter:
            return "transmitter";
        case NodeRole::receiver:
            return "receiver";
        case NodeRole::jammer:
            return "jammer";
    }
    return "receiver";
}

std::string serialize_scenario(const ScenarioConfig& cfg) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << cfg.name;
    out << YAML::Key << "duration_s" << YAML::Value << num(cfg.duration_s);
    out << YAML::Key << "seed" << YAML::Value << cfg.seed;
    out << YAML::Key << "stats" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "window_s" << YAML::Value << num(cfg.stats.window_s);
    out << YAML::Key << "sample_period_s" << YAML::Value << num(cfg.stats.sample_period_s);
    out << YAML::Key << "trace" << YAML::Value << cfg.stats.trace;
    out << YAML::EndMap;

    out << YAML::Key << "channels" << YAML::Value << YAML::BeginSeq;
    for (const Channel& c : cfg.channels) {
        out << YAML::BeginMap;
        out << YAML::Key << "id" << YAML::Value << c.id;
        out << YAML::Key << "frequency_hz" << YAML::Value << num(c.frequency_hz);
        out << YAML::Key << "bandwidth_hz" << YAML::Value << num(c.bandwidth_hz);
        out << YAML::Key << "data_rate_bps" << YAML::Value << num(c.data_rate_bps);
        out << YAML::Key << "system_loss" << YAML::Value << num(c.system_loss);
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;

    out << YAML::Key << "nodes" << YAML::Value << YAML::BeginSeq;
    for (const NodeSpec& n : cfg.nodes) {
        out << YAML::BeginMap;
        out << YAML::Key << "id" << YAML::Value << n.id;
        out << YAML::Key << "role" << YAML::Value << to_string(n.role);
        out << YAML::Key << "trajectory" << YAML::Value;
        emit_trajectory(out, n.trajectory);
        out << YAML::Key << "antenna" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "pattern" << YAML::Value;
        emit_pattern(out, n.antenna.pattern);
        out << YAML::Key << "pointing" << YAML::Value << YAML::BeginMap;
        if (n.antenna.pointing.mode == PointingMode::fixed_to_object) {
            out << YAML::Key << "mode" << YAML::Value << "fixed_to_object";
        } else {
            out << YAML::Key << "mode" << YAML::Value << "locked_to_target";
            out << YAML::Key << "target" << YAML::Value << n.antenna.pointing.target_node_id;
        }
        out << YAML::Key << "rotation_angle_rad" << YAML::Value
            << num(n.antenna.pointing.rotation_angle_rad);
        out << YAML::EndMap;
        if (n.antenna.require_unit_mean_gain) {
            out << YAML::Key << "require_unit_mean_gain" << YAML::Value << true;
        }
        out << YAML::EndMap;
        if (!n.tx_channel_id.empty()) {
            out << YAML::Key << "tx_channel" << YAML::Value << n.tx_channel_id;
        }
        if (!n.rx_channel_id.empty()) {
            out << YAML::Key << "rx_channel" << YAML::Value << n.rx_channel_id;
        }
        if (n.generator) {
            out << YAML::Key << "generator" << YAML::Value << YAML::BeginMap;
            out << YAML::Key << "packet_bits" << YAML::Value << n.generator->packet_bits;
            out << YAML::Key << "interval_s" << YAML::Value << num(n.generator->interval_s);
            out << YAML::Key << "start_s" << YAML::Value << num(n.generator->start_s);
            out << YAML::Key << "tx_power_w" << YAML::Value << num(n.generator->tx_power_w);
            out << YAML::EndMap;
        }
        out << YAML::Key << "noise_figure_db" << YAML::Value << num(n.noise_figure_db);
        out << YAML::Key << "fec_threshold_bits" << YAML::Value << n.fec_threshold_bits;
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

Trajectory build_trajectory(const TrajectorySpec& spec, double horizon_s) {
    switch (spec.kind) {
        case TrajectoryKind::fixed:
            return Trajectory::make_static(spec.position);
        case TrajectoryKind::linear:
            return Trajectory::make_linear(spec.start, spec.velocity_mps);
        case TrajectoryKind::waypoints:
            return Trajectory::make_waypoints(spec.points);
        case TrajectoryKind::random_waypoint:
            return Trajectory::make_random_waypoint(spec.bounds, spec.speed_mps, spec.pause_s,
                                                    spec.seed, horizon_s);
    }
    throw std::logic_error("unhandled trajectory kind");
}

}  // namespace vanetsim
