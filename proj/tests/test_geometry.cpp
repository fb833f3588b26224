#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "vanetsim/geometry.hpp"

using namespace vanetsim;

TEST_SUITE("geometry") {

TEST_CASE("vector basics") {
    Vec3 a{3.0, 4.0, 0.0};
    CHECK(norm(a) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(distance({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}) == 0.0);
    Vec3 s = Vec3{1.0, 2.0, 3.0} + Vec3{4.0, 5.0, 6.0};
    CHECK(s.x == 5.0);
    CHECK(s.y == 7.0);
    CHECK(s.z == 9.0);
    Vec3 d = Vec3{4.0, 5.0, 6.0} - Vec3{1.0, 2.0, 3.0};
    CHECK(d.x == 3.0);
    Vec3 m = Vec3{1.0, -2.0, 0.5} * 2.0;
    CHECK(m.y == -4.0);
}

TEST_CASE("wrap_angle maps into [-pi, pi)") {
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(kPi) == -kPi);    // the closed end folds to the open end
    CHECK(wrap_angle(-kPi) == -kPi);
    CHECK(wrap_angle(3.0 * kPi) == doctest::Approx(-kPi).epsilon(1e-15));
    CHECK(wrap_angle(2.0 * kPi) == doctest::Approx(0.0));
    CHECK(wrap_angle(5.0) == doctest::Approx(5.0 - 2.0 * kPi).epsilon(1e-15));
    CHECK(wrap_angle(-5.0) == doctest::Approx(2.0 * kPi - 5.0).epsilon(1e-15));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        double a = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 100.0;
        double w = wrap_angle(a);
        CHECK(w >= -kPi);
        CHECK(w < kPi);
        CHECK(std::abs(std::remainder(w - a, 2.0 * kPi)) < 1e-9);
    }
}

TEST_CASE("static and linear trajectories") {
    Trajectory s = Trajectory::make_static({10.0, 20.0, 0.0});
    CHECK(position_at(s, 0.0).x == 10.0);
    CHECK(position_at(s, 500.0).y == 20.0);
    CHECK(heading_at(s, 3.0).yaw == 0.0);

    Trajectory l = Trajectory::make_linear({0.0, 0.0, 0.0}, {10.0, 0.0, 0.0});
    CHECK(position_at(l, 36.0).x == doctest::Approx(360.0));
    CHECK(position_at(l, -5.0).x == 0.0);  // time clamps at zero
    CHECK(heading_at(l, 1.0).yaw == 0.0);

    Trajectory up = Trajectory::make_linear({0.0, 0.0, 0.0}, {1.0, 0.0, 1.0});
    CHECK(heading_at(up, 0.0).pitch == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    Trajectory north = Trajectory::make_linear({0.0, 0.0, 0.0}, {0.0, 3.0, 0.0});
    CHECK(heading_at(north, 0.0).yaw == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("waypoint interpolation and clamping") {
    Trajectory w = Trajectory::make_waypoints({
        {0.0, {0.0, 0.0, 0.0}},
        {10.0, {100.0, 0.0, 0.0}},
        {20.0, {100.0, 50.0, 0.0}},
    });
    CHECK(position_at(w, 5.0).x == doctest::Approx(50.0));
    CHECK(position_at(w, 15.0).y == doctest::Approx(25.0));
    CHECK(position_at(w, 15.0).x == doctest::Approx(100.0));
    // Outside the covered range the path clamps to its endpoints.
    CHECK(position_at(w, -1.0).x == 0.0);
    CHECK(position_at(w, 99.0).y == 50.0);
    CHECK(heading_at(w, 5.0).yaw == doctest::Approx(0.0));
    CHECK(heading_at(w, 15.0).yaw == doctest::Approx(kPi / 2.0).epsilon(1e-12));

    CHECK_THROWS_AS(Trajectory::make_waypoints({}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::make_waypoints({{1.0, {}}, {1.0, {}}}), std::invalid_argument);
}

TEST_CASE("paused waypoint keeps the last moving heading") {
    Trajectory w = Trajectory::make_waypoints({
        {0.0, {0.0, 0.0, 0.0}},
        {10.0, {0.0, 100.0, 0.0}},
        {15.0, {0.0, 100.0, 0.0}},  // pause
        {25.0, {100.0, 100.0, 0.0}},
    });
    CHECK(heading_at(w, 12.0).yaw == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(heading_at(w, 20.0).yaw == doctest::Approx(0.0));
}

TEST_CASE("random waypoint walk is seeded and well formed") {
    RectBounds bounds{0.0, 0.0, 8000.0, 4000.0};
    Trajectory a = Trajectory::make_random_waypoint(bounds, 10.0, 0.0, 42, 600.0);
    Trajectory b = Trajectory::make_random_waypoint(bounds, 10.0, 0.0, 42, 600.0);
    Trajectory c = Trajectory::make_random_waypoint(bounds, 10.0, 0.0, 43, 600.0);

    REQUIRE(a.points().size() == b.points().size());
    for (std::size_t i = 0; i < a.points().size(); ++i) {
        CHECK(a.points()[i].t_s == b.points()[i].t_s);
        CHECK(a.points()[i].position.x == b.points()[i].position.x);
        CHECK(a.points()[i].position.y == b.points()[i].position.y);
    }
    CHECK(a.points()[1].position.x != c.points()[1].position.x);

    CHECK(a.points().back().t_s >= 600.0);
    for (const TimedPoint& p : a.points()) {
        CHECK(p.position.x >= 0.0);
        CHECK(p.position.x <= 8000.0);
        CHECK(p.position.y >= 0.0);
        CHECK(p.position.y <= 4000.0);
        CHECK(p.position.z == 0.0);
    }
    for (std::size_t i = 1; i < a.points().size(); ++i) {
        double leg = distance(a.points()[i].position, a.points()[i - 1].position);
        double dt = a.points()[i].t_s - a.points()[i - 1].t_s;
        CHECK(leg / dt == doctest::Approx(10.0).epsilon(1e-9));
    }
}

TEST_CASE("random waypoint pause duplicates arrival points") {
    RectBounds bounds{0.0, 0.0, 1000.0, 1000.0};
    Trajectory t = Trajectory::make_random_waypoint(bounds, 5.0, 2.0, 9, 100.0);
    const auto& pts = t.points();
    bool found_pause = false;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (distance(pts[i].position, pts[i - 1].position) == 0.0) {
            CHECK(pts[i].t_s - pts[i - 1].t_s == doctest::Approx(2.0));
            found_pause = true;
        }
    }
    CHECK(found_pause);
}

TEST_CASE("random waypoint rejects bad inputs") {
    RectBounds bounds{0.0, 0.0, 100.0, 100.0};
    CHECK_THROWS_AS(Trajectory::make_random_waypoint({0, 0, 0, 100}, 1.0, 0.0, 1, 10.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::make_random_waypoint(bounds, 0.0, 0.0, 1, 10.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Trajectory::make_random_waypoint(bounds, 1.0, -1.0, 1, 10.0),
                    std::invalid_argument);
}

TEST_CASE("azimuth_elevation in the identity frame") {
    Orientation level;  // yaw 0, pitch 0
    auto [th1, ph1] = azimuth_elevation(level, {0, 0, 0}, {10, 10, 0});
    CHECK(th1 == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    CHECK(ph1 == doctest::Approx(0.0));

    auto [th2, ph2] = azimuth_elevation(level, {0, 0, 0}, {0, 0, 5});
    CHECK(ph2 == doctest::Approx(kPi / 2.0).epsilon(1e-12));

    auto [th3, ph3] = azimuth_elevation(level, {0, 0, 0}, {1, 0, 1});
    CHECK(th3 == doctest::Approx(0.0));
    CHECK(ph3 == doctest::Approx(kPi / 4.0).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(azimuth_elevation(level, {1, 2, 3}, {1, 2, 3}),
                         "zero-length direction", std::invalid_argument);
}

TEST_CASE("azimuth_elevation follows the boresight") {
    Orientation east{kPi / 2.0, 0.0, 0.0};
    auto [th, ph] = azimuth_elevation(east, {0, 0, 0}, {0, 10, 0});
    CHECK(th == doctest::Approx(0.0));
    CHECK(ph == doctest::Approx(0.0));

    Orientation pitched{0.0, kPi / 4.0, 0.0};
    auto [th2, ph2] = azimuth_elevation(pitched, {0, 0, 0}, {1, 0, 1});
    CHECK(th2 == doctest::Approx(0.0));
    CHECK(ph2 == doctest::Approx(0.0));

    // Looking along the boresight axis is always (0, 0), any yaw/pitch.
    std::mt19937_64 rng(11);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 50; ++i) {
        double yaw = (u() - 0.5) * 2.0 * kPi;
        double pitch = (u() - 0.5) * kPi * 0.98;
        Vec3 dir{std::cos(pitch) * std::cos(yaw), std::cos(pitch) * std::sin(yaw),
                 std::sin(pitch)};
        auto [t, p] = azimuth_elevation({yaw, pitch, 0.0}, {0, 0, 0}, dir * 123.0);
        CHECK(std::abs(t) < 1e-9);
        CHECK(std::abs(p) < 1e-9);
    }
}

TEST_CASE("azimuth_elevation is invariant under a common z rotation") {
    std::mt19937_64 rng(23);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 100; ++i) {
        double yaw = (u() - 0.5) * 2.0 * kPi;
        double pitch = (u() - 0.5) * 1.5;
        Vec3 from{u() * 100.0, u() * 100.0, u() * 100.0};
        Vec3 to{u() * 100.0, u() * 100.0, u() * 100.0};
        if (distance(from, to) < 1e-6) {
            continue;
        }
        double delta = (u() - 0.5) * 2.0 * kPi;
        double cd = std::cos(delta);
        double sd = std::sin(delta);
        auto rot = [&](const Vec3& v) {
            return Vec3{cd * v.x - sd * v.y, sd * v.x + cd * v.y, v.z};
        };
        auto [t1, p1] = azimuth_elevation({yaw, pitch, 0.0}, from, to);
        auto [t2, p2] = azimuth_elevation({yaw + delta, pitch, 0.0}, rot(from), rot(to));
        CHECK(std::abs(wrap_angle(t1 - t2)) < 1e-9);
        CHECK(p1 == doctest::Approx(p2).epsilon(1e-9));
    }
}

}  // TEST_SUITE
