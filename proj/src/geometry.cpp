#include "vanetsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "vanetsim/rng.hpp"

namespace vanetsim {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

double norm(const Vec3& a) {
    return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
}

double distance(const Vec3& a, const Vec3& b) {
    return norm(a - b);
}

double wrap_angle(double a) {
    double w = std::remainder(a, 2.0 * kPi);
    if (w >= kPi) {
        w -= 2.0 * kPi;
    }
    return w;
}

Trajectory Trajectory::make_static(const Vec3& position) {
    Trajectory t;
    t.m_kind = TrajectoryKind::fixed;
    t.m_start = position;
    return t;
}

Trajectory Trajectory::make_linear(const Vec3& start, const Vec3& velocity_mps) {
    Trajectory t;
    t.m_kind = TrajectoryKind::linear;
    t.m_start = start;
    t.m_velocity = velocity_mps;
    return t;
}

Trajectory Trajectory::make_waypoints(std::vector<TimedPoint> points) {
    if (points.empty()) {
        throw std::invalid_argument("waypoint list must not be empty");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].t_s > points[i - 1].t_s)) {
            throw std::invalid_argument("waypoint times must be strictly increasing");
        }
    }
    Trajectory t;
    t.m_kind = TrajectoryKind::waypoints;
    t.m_points = std::move(points);
    return t;
}

Trajectory Trajectory::make_random_waypoint(const RectBounds& bounds, double speed_mps,
                                            double pause_s, std::uint64_t seed,
                                            double horizon_s) {
    if (!(bounds.max_x > bounds.min_x) || !(bounds.max_y > bounds.min_y)) {
        throw std::invalid_argument("random waypoint bounds must span a nonzero area");
    }
    if (!(speed_mps > 0.0)) {
        throw std::invalid_argument("random waypoint speed must be positive");
    }
    if (pause_s < 0.0 || horizon_s < 0.0) {
        throw std::invalid_argument("random waypoint pause and horizon must be nonnegative");
    }

    std::mt19937_64 rng(seed);
    auto draw_point = [&] {
        double x = bounds.min_x + uniform01(rng) * (bounds.max_x - bounds.min_x);
        double y = bounds.min_y + uniform01(rng) * (bounds.max_y - bounds.min_y);
        return Vec3{x, y, 0.0};
    };

    std::vector<TimedPoint> pts;
    Vec3 cur = draw_point();
    double t = 0.0;
    pts.push_back({t, cur});
    while (t < horizon_s) {
        Vec3 dest = draw_point();
        double leg = distance(cur, dest);
        if (leg < 1e-6) {
            continue;
        }
        t += leg / speed_mps;
        pts.push_back({t, dest});
        if (pause_s > 0.0) {
            t += pause_s;
            pts.push_back({t, dest});
        }
        cur = dest;
    }

    Trajectory traj;
    traj.m_kind = TrajectoryKind::random_waypoint;
    traj.m_points = std::move(pts);
    return traj;
}

namespace {

// Index of the segment [points[i], points[i+1]) containing t, with t already
// inside the covered range.
std::size_t segment_index(const std::vector<TimedPoint>& pts, double t) {
    auto it = std::upper_bound(pts.begin(), pts.end(), t,
                               [](double v, const TimedPoint& p) { return v < p.t_s; });
    std::size_t idx = static_cast<std::size_t>(it - pts.begin());
    if (idx == 0) {
        return 0;
    }
    return std::min(idx - 1, pts.size() - 2);
}

Vec3 interpolate(const std::vector<TimedPoint>& pts, double t) {
    if (t <= pts.front().t_s) {
        return pts.front().position;
    }
    if (t >= pts.back().t_s) {
        return pts.back().position;
    }
    std::size_t i = segment_index(pts, t);
    const TimedPoint& a = pts[i];
    const TimedPoint& b = pts[i + 1];
    double u = (t - a.t_s) / (b.t_s - a.t_s);
    return a.position + (b.position - a.position) * u;
}

Orientation heading_from_velocity(const Vec3& v) {
    double horizontal = std::sqrt(v.x * v.x + v.y * v.y);
    if (horizontal == 0.0 && v.z == 0.0) {
        return {};
    }
    Orientation o;
    o.yaw = wrap_angle(std::atan2(v.y, v.x));
    o.pitch = std::atan2(v.z, horizontal);
    return o;
}

Orientation heading_on_points(const std::vector<TimedPoint>& pts, double t) {
    if (pts.size() < 2) {
        return {};
    }
    double tc = std::clamp(t, pts.front().t_s, pts.back().t_s);
    std::size_t i = segment_index(pts, tc);
    auto segment_direction = [&](std::size_t k) { return pts[k + 1].position - pts[k].position; };
    Vec3 d = segment_direction(i);
    if (norm(d) < 1e-12) {
        // Paused or clamped: fall back to the nearest moving segment,
        // preferring the one already travelled.
        for (std::size_t k = i; k-- > 0;) {
            Vec3 back = segment_direction(k);
            if (norm(back) >= 1e-12) {
                return heading_from_velocity(back);
            }
        }
        for (std::size_t k = i + 1; k + 1 < pts.size(); ++k) {
            Vec3 fwd = segment_direction(k);
            if (norm(fwd) >= 1e-12) {
                return heading_from_velocity(fwd);
            }
        }
        return {};
    }
    return heading_from_velocity(d);
}

}  // namespace

Vec3 position_at(const Trajectory& traj, double t_s) {
    double t = std::max(t_s, 0.0);
    switch (traj.m_kind) {
        case TrajectoryKind::fixed:
            return traj.m_start;
        case TrajectoryKind::linear:
            return traj.m_start + traj.m_velocity * t;
        case TrajectoryKind::waypoints:
        case TrajectoryKind::random_waypoint:
            return interpolate(traj.m_points, t);
    }
    return traj.m_start;
}

Orientation heading_at(const Trajectory& traj, double t_s) {
    double t = std::max(t_s, 0.0);
    switch (traj.m_kind) {
        case TrajectoryKind::fixed:
            return {};
        case TrajectoryKind::linear:
            return heading_from_velocity(traj.m_velocity);
        case TrajectoryKind::waypoints:
        case TrajectoryKind::random_waypoint:
            return heading_on_points(traj.m_points, t);
    }
    return {};
}

std::pair<double, double> azimuth_elevation(const Orientation& boresight,
                                            const Vec3& from, const Vec3& to) {
    Vec3 d = to - from;
    double len = norm(d);
    if (len == 0.0) {
        throw std::invalid_argument("zero-length direction");
    }
    Vec3 n = d * (1.0 / len);

    // Rotate into the boresight frame: undo yaw about z, then pitch about y.
    double cy = std::cos(boresight.yaw);
    double sy = std::sin(boresight.yaw);
    double hx = cy * n.x + sy * n.y;
    double hy = -sy * n.x + cy * n.y;
    double hz = n.z;

    double cp = std::cos(boresight.pitch);
    double sp = std::sin(boresight.pitch);
    double lx = cp * hx + sp * hz;
    double ly = hy;
    double lz = -sp * hx + cp * hz;

    double theta = wrap_angle(std::atan2(ly, lx));
    double phi = std::asin(std::clamp(lz, -1.0, 1.0));
    return {theta, phi};
}

}  // namespace vanetsim
