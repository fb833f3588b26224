#include "vanetsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vanetsim {

namespace {

struct CompiledNode {
    const NodeSpec* spec = nullptr;
    Trajectory trajectory;
    std::optional<std::size_t> lock_target;
    const Channel* tx_channel = nullptr;
    const Channel* rx_channel = nullptr;

    explicit CompiledNode(Trajectory t) : trajectory(std::move(t)) {}
};

struct Event {
    double time_s = 0.0;
    std::uint64_t sequence = 0;
    EventKind kind = EventKind::end;
    std::size_t node = 0;    // emission: source; reception: receiver
    std::size_t flight = 0;  // reception: index into the transmission log
};

struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
        if (a.time_s != b.time_s) {
            return a.time_s > b.time_s;
        }
        return a.sequence > b.sequence;
    }
};

class Simulation {
public:
    Simulation(const ScenarioConfig& cfg, std::uint64_t seed)
        : m_cfg(cfg), m_error_stream(seed) {}

    StatsSeries execute();

private:
    void compile();
    void schedule(Event ev);
    void handle_emission(const Event& ev);
    void handle_reception(const Event& ev);
    void handle_sample(const Event& ev);

    Vec3 node_position(std::size_t idx, double t) const;
    Orientation node_boresight(std::size_t idx, double t) const;

    const ScenarioConfig& m_cfg;
    std::mt19937_64 m_error_stream;
    std::vector<CompiledNode> m_nodes;
    std::size_t m_transmitter = 0;
    std::vector<std::size_t> m_receivers;
    std::vector<Transmission> m_flights;
    std::priority_queue<Event, std::vector<Event>, EventAfter> m_queue;
    std::uint64_t m_next_sequence = 0;
    std::uint64_t m_next_packet_id = 0;
    StatsSeries m_series;
};

void Simulation::compile() {
    m_nodes.reserve(m_cfg.nodes.size());
    for (const NodeSpec& spec : m_cfg.nodes) {
        CompiledNode node(build_trajectory(spec.trajectory, m_cfg.duration_s));
        node.spec = &spec;
        for (const Channel& c : m_cfg.channels) {
            if (c.id == spec.tx_channel_id) {
                node.tx_channel = &c;
            }
            if (c.id == spec.rx_channel_id) {
                node.rx_channel = &c;
            }
        }
        m_nodes.push_back(std::move(node));
    }
    for (std::size_t i = 0; i < m_nodes.size(); ++i) {
        const NodeSpec& spec = *m_nodes[i].spec;
        if (spec.antenna.pointing.mode == PointingMode::locked_to_target) {
            for (std::size_t j = 0; j < m_nodes.size(); ++j) {
                if (m_nodes[j].spec->id == spec.antenna.pointing.target_node_id) {
                    m_nodes[i].lock_target = j;
                }
            }
        }
        if (spec.role == NodeRole::transmitter) {
            m_transmitter = i;
        }
        if (spec.role == NodeRole::receiver && m_nodes[i].rx_channel != nullptr) {
            m_receivers.push_back(i);
        }
    }
}

void Simulation::schedule(Event ev) {
    ev.sequence = m_next_sequence++;
    m_queue.push(ev);
}

Vec3 Simulation::node_position(std::size_t idx, double t) const {
    return position_at(m_nodes[idx].trajectory, t);
}

Orientation Simulation::node_boresight(std::size_t idx, double t) const {
    const CompiledNode& node = m_nodes[idx];
    std::optional<Vec3> target;
    if (node.lock_target) {
        target = node_position(*node.lock_target, t);
    }
    return resolve_boresight(node.spec->antenna.pointing, node_position(idx, t),
                             heading_at(node.trajectory, t), target);
}

void Simulation::handle_emission(const Event& ev) {
    const CompiledNode& src = m_nodes[ev.node];
    const GeneratorSpec& gen = *src.spec->generator;

    Transmission tx;
    tx.packet_id = m_next_packet_id++;
    tx.source_node_id = src.spec->id;
    tx.channel = *src.tx_channel;
    tx.size_bits = gen.packet_bits;
    tx.tx_power_w = gen.tx_power_w;
    tx.start_time_s = ev.time_s;
    std::size_t flight = m_flights.size();
    m_flights.push_back(tx);

    if (src.spec->role == NodeRole::transmitter) {
        m_series.totals.sent += 1;
    }

    double airtime = transmission_delay(tx.size_bits, tx.channel.data_rate_bps);
    for (std::size_t r : m_receivers) {
        if (r == ev.node) {
            continue;
        }
        if (channel_match(tx.channel, *m_nodes[r].rx_channel) != ChannelMatch::valid) {
            continue;
        }
        double mid = ev.time_s + airtime / 2.0;
        double d_est = distance(node_position(ev.node, mid), node_position(r, mid));
        double end_est = ev.time_s + airtime + propagation_delay(d_est);
        if (end_est <= m_cfg.duration_s) {
            schedule({end_est, 0, EventKind::reception, r, flight});
        }
    }

    double next = ev.time_s + gen.interval_s;
    if (next < m_cfg.duration_s) {
        schedule({next, 0, EventKind::emission, ev.node, 0});
    }
}

void Simulation::handle_reception(const Event& ev) {
    const Transmission& tx = m_flights[ev.flight];
    const CompiledNode& rx = m_nodes[ev.node];
    std::size_t src_idx = 0;
    for (std::size_t i = 0; i < m_nodes.size(); ++i) {
        if (m_nodes[i].spec->id == tx.source_node_id) {
            src_idx = i;
        }
    }

    // Geometry is sampled once per packet, at the reception window midpoint.
    double airtime = transmission_delay(tx.size_bits, tx.channel.data_rate_bps);
    double mid_emit = tx.start_time_s + airtime / 2.0;
    double d_est = distance(node_position(src_idx, mid_emit), node_position(ev.node, mid_emit));
    double t_mid = mid_emit + propagation_delay(d_est);

    ReceptionInputs in;
    in.tx = tx;
    in.rx_node_id = rx.spec->id;
    in.rx_channel = *rx.rx_channel;
    in.transmitter = {node_position(src_idx, t_mid), node_boresight(src_idx, t_mid),
                      m_nodes[src_idx].spec->antenna.pattern};
    in.receiver = {node_position(ev.node, t_mid), node_boresight(ev.node, t_mid),
                   rx.spec->antenna.pattern};
    in.noise_figure_db = rx.spec->noise_figure_db;
    in.fec_threshold_bits = rx.spec->fec_threshold_bits;

    double window_start = tx.start_time_s + propagation_delay(d_est);
    double window_end = tx.start_time_s + airtime + propagation_delay(d_est);
    for (std::size_t i = 0; i < m_flights.size(); ++i) {
        if (i == ev.flight) {
            continue;
        }
        const Transmission& other = m_flights[i];
        if (channel_match(other.channel, *rx.rx_channel) != ChannelMatch::noise) {
            continue;
        }
        std::size_t other_idx = 0;
        for (std::size_t j = 0; j < m_nodes.size(); ++j) {
            if (m_nodes[j].spec->id == other.source_node_id) {
                other_idx = j;
            }
        }
        double other_air = transmission_delay(other.size_bits, other.channel.data_rate_bps);
        double d_other =
            distance(node_position(other_idx, t_mid), node_position(ev.node, t_mid));
        double arrive = other.start_time_s + propagation_delay(d_other);
        if (arrive >= window_end || arrive + other_air <= window_start) {
            continue;
        }
        NoiseSourceSample sample;
        sample.tx = other;
        sample.endpoint = {node_position(other_idx, t_mid), node_boresight(other_idx, t_mid),
                           m_nodes[other_idx].spec->antenna.pattern};
        sample.arrival_start_s = arrive;
        sample.arrival_end_s = arrive + other_air;
        in.noise.push_back(sample);
    }

    ReceptionRecord rec = process_reception(
        in, m_error_stream, m_cfg.stats.trace ? &m_series.trace : nullptr);
    if (rec.accepted) {
        m_series.totals.received += 1;
        m_series.totals.accepted_bits += tx.size_bits;
    } else {
        m_series.totals.rejected += 1;
    }
    m_series.totals.bit_errors += rec.bit_errors;
    m_series.packets.push_back(std::move(rec));
}

void Simulation::handle_sample(const Event& ev) {
    double t = ev.time_s;
    const CompiledNode& tx_node = m_nodes[m_transmitter];
    if (tx_node.tx_channel == nullptr || !tx_node.spec->generator) {
        return;
    }
    double lambda = wavelength(tx_node.tx_channel->frequency_hz);
    for (std::size_t r : m_receivers) {
        Vec3 tx_pos = node_position(m_transmitter, t);
        Vec3 rx_pos = node_position(r, t);
        Orientation tx_bore = node_boresight(m_transmitter, t);
        Orientation rx_bore = node_boresight(r, t);
        auto [th_t, ph_t] = azimuth_elevation(tx_bore, tx_pos, rx_pos);
        auto [th_r, ph_r] = azimuth_elevation(rx_bore, rx_pos, tx_pos);
        double g_t = gain(tx_node.spec->antenna.pattern, th_t, ph_t);
        double g_r = gain(m_nodes[r].spec->antenna.pattern, th_r, ph_r);
        double d = distance(tx_pos, rx_pos);
        double p = friis_received_power(tx_node.spec->generator->tx_power_w, g_t, g_r, lambda, d,
                                        tx_node.tx_channel->system_loss);
        m_series.samples.push_back({t, m_nodes[r].spec->id, p, d});
    }
}

StatsSeries Simulation::execute() {
    compile();
    m_series.window_s = m_cfg.stats.window_s;
    m_series.duration_s = m_cfg.duration_s;

    // The end marker is scheduled first: at equal timestamps the lowest
    // sequence wins, so nothing at t == duration is processed after it.
    schedule({m_cfg.duration_s, 0, EventKind::end, 0, 0});
    if (m_cfg.stats.sample_period_s > 0.0) {
        schedule({0.0, 0, EventKind::sample, 0, 0});
    }
    for (std::size_t i = 0; i < m_nodes.size(); ++i) {
        const NodeSpec& spec = *m_nodes[i].spec;
        if (spec.generator && m_nodes[i].tx_channel != nullptr &&
            spec.generator->start_s < m_cfg.duration_s) {
            schedule({spec.generator->start_s, 0, EventKind::emission, i, 0});
        }
    }

    while (!m_queue.empty()) {
        Event ev = m_queue.top();
        m_queue.pop();
        m_series.event_log.push_back({ev.time_s, ev.sequence, ev.kind});
        if (ev.kind == EventKind::end) {
            break;
        }
        switch (ev.kind) {
            case EventKind::emission:
                handle_emission(ev);
                break;
            case EventKind::reception:
                handle_reception(ev);
                break;
            case EventKind::sample: {
                handle_sample(ev);
                double next = ev.time_s + m_cfg.stats.sample_period_s;
                if (next < m_cfg.duration_s) {
                    schedule({next, 0, EventKind::sample, 0, 0});
                }
                break;
            }
            case EventKind::end:
                break;
        }
    }

    m_series.windows =
        throughput_windows(m_series.packets, m_cfg.stats.window_s, m_cfg.duration_s);
    return std::move(m_series);
}

}  // namespace

std::vector<std::string> validate(const ScenarioConfig& cfg) {
    std::vector<std::string> violations;
    auto add = [&](const std::string& v) { violations.push_back(v); };

    if (!(cfg.duration_s > 0.0)) {
        add("duration_s must be positive");
    }
    if (!(cfg.stats.window_s > 0.0)) {
        add("stats window_s must be positive");
    }
    if (!(cfg.stats.sample_period_s > 0.0)) {
        add("stats sample_period_s must be positive");
    }

    std::set<std::string> channel_ids;
    for (const Channel& c : cfg.channels) {
        if (!channel_ids.insert(c.id).second) {
            add("duplicate channel id '" + c.id + "'");
        }
        if (!(c.frequency_hz > 0.0) || !(c.bandwidth_hz > 0.0) || !(c.data_rate_bps > 0.0)) {
            add("channel '" + c.id + "': frequency, bandwidth, and data rate must be positive");
        }
        if (!(c.system_loss >= 1.0)) {
            add("channel '" + c.id + "': system_loss must be >= 1");
        }
    }
    if (cfg.channels.empty()) {
        add("at least one channel required");
    }

    std::set<std::string> node_ids;
    int transmitters = 0;
    int receivers = 0;
    for (const NodeSpec& n : cfg.nodes) {
        if (n.id.empty()) {
            add("node with empty id");
        }
        if (!node_ids.insert(n.id).second) {
            add("duplicate node id '" + n.id + "'");
        }
        std::string who = "node '" + n.id + "'";
        if (n.role == NodeRole::transmitter) {
            ++transmitters;
        }
        if (n.role == NodeRole::receiver) {
            ++receivers;
        }

        if (n.role == NodeRole::transmitter || n.role == NodeRole::jammer) {
            if (!n.generator) {
                add(who + ": " + to_string(n.role) + " requires a generator");
            }
            if (n.tx_channel_id.empty()) {
                add(who + ": " + to_string(n.role) + " requires a tx_channel");
            } else if (channel_ids.count(n.tx_channel_id) == 0) {
                add(who + ": tx_channel '" + n.tx_channel_id + "' is not a defined channel");
            }
        }
        if (n.role == NodeRole::receiver) {
            if (n.rx_channel_id.empty()) {
                add(who + ": receiver requires an rx_channel");
            } else if (channel_ids.count(n.rx_channel_id) == 0) {
                add(who + ": rx_channel '" + n.rx_channel_id + "' is not a defined channel");
            }
        }
        if (!n.rx_channel_id.empty() && channel_ids.count(n.rx_channel_id) == 0 &&
            n.role != NodeRole::receiver) {
            add(who + ": rx_channel '" + n.rx_channel_id + "' is not a defined channel");
        }

        if (n.generator) {
            if (n.generator->packet_bits <= 0 || !(n.generator->interval_s > 0.0) ||
                !(n.generator->tx_power_w > 0.0)) {
                add(who + ": generator packet_bits, interval_s, and tx_power_w must be positive");
            }
            if (n.generator->start_s < 0.0) {
                add(who + ": generator start_s must be nonnegative");
            }
        }

        const Pattern& p = n.antenna.pattern;
        if (p.kind == PatternKind::directional &&
            (!(p.peak_gain > 1.0) || !(p.beamwidth_3db_rad > 0.0) || p.sidelobe_floor < 0.0)) {
            add(who + ": directional pattern requires peak_gain > 1, positive beamwidth, "
                      "nonnegative sidelobe_floor");
        }
        if (p.kind == PatternKind::cone &&
            (!(p.peak_gain > 0.0) || !(p.elevation_width_rad > 0.0))) {
            add(who + ": cone pattern requires positive peak_gain and elevation_width_rad");
        }
        if (n.antenna.require_unit_mean_gain) {
            double mean = mean_spherical_gain(p);
            if (std::abs(mean - 1.0) > 0.05) {
                std::ostringstream msg;
                msg << who << ": mean spherical gain " << mean
                    << " violates the unit-mean requirement (|mean - 1| <= 0.05)";
                add(msg.str());
            }
        }

        if (n.antenna.pointing.mode == PointingMode::locked_to_target) {
            const std::string& target = n.antenna.pointing.target_node_id;
            if (target.empty()) {
                add(who + ": locked_to_target requires a target");
            } else if (target == n.id) {
                add(who + ": locked_to_target must not target itself");
            } else {
                bool found = false;
                for (const NodeSpec& other : cfg.nodes) {
                    if (other.id == target) {
                        found = true;
                    }
                }
                if (!found) {
                    add(who + ": locked_to_target target '" + target + "' does not exist");
                }
            }
        }

        const TrajectorySpec& t = n.trajectory;
        if (t.kind == TrajectoryKind::waypoints) {
            if (t.points.empty()) {
                add(who + ": waypoint trajectory requires at least one point");
            }
            for (std::size_t i = 1; i < t.points.size(); ++i) {
                if (!(t.points[i].t_s > t.points[i - 1].t_s)) {
                    add(who + ": waypoint times must be strictly increasing");
                    break;
                }
            }
        }
        if (t.kind == TrajectoryKind::random_waypoint) {
            if (!(t.bounds.max_x > t.bounds.min_x) || !(t.bounds.max_y > t.bounds.min_y)) {
                add(who + ": random_waypoint bounds must span a nonzero area");
            }
            if (!(t.speed_mps > 0.0)) {
                add(who + ": random_waypoint speed_mps must be positive");
            }
            if (t.pause_s < 0.0) {
                add(who + ": random_waypoint pause_s must be nonnegative");
            }
        }
        if (n.noise_figure_db < 0.0) {
            add(who + ": noise_figure_db must be nonnegative");
        }
        if (n.fec_threshold_bits < 0) {
            add(who + ": fec_threshold_bits must be nonnegative");
        }
    }

    if (transmitters != 1) {
        std::ostringstream msg;
        msg << "exactly one transmitter required (found " << transmitters << ")";
        add(msg.str());
    }
    if (receivers < 1) {
        add("at least one receiver required");
    }
    return violations;
}

StatsSeries run(const ScenarioConfig& config, std::uint64_t seed) {
    std::vector<std::string> violations = validate(config);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "scenario invalid: " << violations.front();
        if (violations.size() > 1) {
            msg << " (+" << violations.size() - 1 << " more)";
        }
        throw std::runtime_error(msg.str());
    }
    Simulation sim(config, seed);
    return sim.execute();
}

std::vector<ThroughputWindow> throughput_windows(std::span<const ReceptionRecord> records,
                                                 double window_s, double duration_s) {
    if (!(window_s > 0.0) || !(duration_s > 0.0)) {
        throw std::invalid_argument("window and duration must be positive");
    }
    std::size_t count = static_cast<std::size_t>(std::ceil(duration_s / window_s - 1e-9));
    count = std::max<std::size_t>(count, 1);
    std::vector<ThroughputWindow> windows(count);
    for (std::size_t k = 0; k < count; ++k) {
        windows[k].start_s = static_cast<double>(k) * window_s;
        windows[k].length_s = std::min(window_s, duration_s - windows[k].start_s);
    }
    for (const ReceptionRecord& rec : records) {
        if (!rec.accepted) {
            continue;
        }
        auto idx = static_cast<std::size_t>(std::max(0.0, std::floor(rec.end_time_s / window_s)));
        idx = std::min(idx, count - 1);
        windows[idx].accepted_bits += rec.size_bits;
    }
    for (ThroughputWindow& w : windows) {
        w.bits_per_s = static_cast<double>(w.accepted_bits) / w.length_s;
    }
    return windows;
}

std::vector<ComparisonResult> compare_antennas(const ScenarioConfig& config,
                                               const std::string& node_id,
                                               std::span<const ComparisonVariant> variants,
                                               std::uint64_t seed) {
    if (variants.empty()) {
        throw std::invalid_argument("at least one antenna variant required");
    }
    bool found = false;
    for (const NodeSpec& n : config.nodes) {
        if (n.id == node_id) {
            found = true;
        }
    }
    if (!found) {
        throw std::invalid_argument("comparison node '" + node_id + "' does not exist");
    }

    std::vector<ComparisonResult> results;
    results.reserve(variants.size());
    for (const ComparisonVariant& v : variants) {
        ScenarioConfig variant_cfg = config;
        for (NodeSpec& n : variant_cfg.nodes) {
            if (n.id == node_id) {
                n.antenna.pattern = v.pattern;
            }
        }
        ComparisonResult res;
        res.label = v.label;
        res.series = run(variant_cfg, seed);
        res.totals = res.series.totals;
        results.push_back(std::move(res));
    }
    std::stable_sort(results.begin(), results.end(),
                     [](const ComparisonResult& a, const ComparisonResult& b) {
                         return a.totals.bit_errors < b.totals.bit_errors;
                     });
    return results;
}

}  // namespace vanetsim
