#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace vanetsim {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Vec3& a, double s);
double norm(const Vec3& a);
double distance(const Vec3& a, const Vec3& b);

// Wraps an angle into [-pi, pi).
double wrap_angle(double a);

// yaw about +z from the +x axis, pitch positive above the xy plane,
// roll about the facing axis. yaw in [-pi, pi), pitch in [-pi/2, pi/2].
struct Orientation {
    double yaw = 0.0;
    double pitch = 0.0;
    double roll = 0.0;
};

struct TimedPoint {
    double t_s = 0.0;
    Vec3 position;
};

struct RectBounds {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;
};

enum class TrajectoryKind { fixed, linear, waypoints, random_waypoint };

// Motion path of a node. Waypoint-style paths (including the precomputed
// random-waypoint expansion) interpolate linearly and clamp to the nearest
// endpoint outside their time range. Evaluation is read-only and safe to
// share across threads.
class Trajectory {
public:
    static Trajectory make_static(const Vec3& position);
    static Trajectory make_linear(const Vec3& start, const Vec3& velocity_mps);
    // Times must be strictly increasing and non-empty.
    static Trajectory make_waypoints(std::vector<TimedPoint> points);
    // Uniform random waypoints inside bounds, constant speed between them,
    // optional pause on arrival. The walk is expanded into a waypoint list
    // at construction covering at least [0, horizon_s]; the stream is seeded
    // independently of everything else so mobility never depends on traffic.
    static Trajectory make_random_waypoint(const RectBounds& bounds, double speed_mps,
                                           double pause_s, std::uint64_t seed,
                                           double horizon_s);

    TrajectoryKind kind() const { return m_kind; }
    const std::vector<TimedPoint>& points() const { return m_points; }

    friend Vec3 position_at(const Trajectory& traj, double t_s);
    friend Orientation heading_at(const Trajectory& traj, double t_s);

private:
    Trajectory() = default;
    TrajectoryKind m_kind = TrajectoryKind::fixed;
    Vec3 m_start;
    Vec3 m_velocity;
    std::vector<TimedPoint> m_points;
};

Vec3 position_at(const Trajectory& traj, double t_s);

// Orientation of travel: yaw from the instantaneous velocity, pitch from its
// vertical component, roll 0. Static nodes face yaw 0; paused waypoint nodes
// keep the heading of their last motion segment.
Orientation heading_at(const Trajectory& traj, double t_s);

// Decomposes the direction from -> to against a boresight orientation:
// theta is the signed azimuth in the boresight's local horizontal frame,
// in [-pi, pi); phi is the elevation off the boresight's local horizon,
// in [-pi/2, pi/2]. Roll does not enter: every supported pattern is
// symmetric about the boresight axis. Throws std::invalid_argument
// ("zero-length direction") when from == to.
std::pair<double, double> azimuth_elevation(const Orientation& boresight,
                                            const Vec3& from, const Vec3& to);

}  // namespace vanetsim
