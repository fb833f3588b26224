#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "vanetsim/antenna.hpp"

using namespace vanetsim;

namespace {

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_SUITE("antenna") {

TEST_CASE("isotropic gain is direction independent") {
    Pattern iso = Pattern::isotropic();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        double theta = (unit(rng) - 0.5) * 2.0 * kPi;
        double phi = (unit(rng) - 0.5) * kPi;
        CHECK(gain(iso, theta, phi) == 1.0);
    }
}

TEST_CASE("directional lobe peak, half power, and floor") {
    Pattern p = Pattern::directional(100.0, 0.35, 0.01);
    CHECK(gain(p, 0.0, 0.0) == 100.0);
    // The 3 dB width is a full width: half power falls exactly at bw/2.
    CHECK(gain(p, 0.175, 0.0) == doctest::Approx(50.0).epsilon(1e-9));
    CHECK(gain(p, -0.175, 0.0) == doctest::Approx(50.0).epsilon(1e-9));
    CHECK(gain(p, 0.0, 0.175) == doctest::Approx(50.0).epsilon(1e-9));
    CHECK(gain(p, 0.0, -0.175) == doctest::Approx(50.0).epsilon(1e-9));
    // Azimuth and elevation offsets combine radially.
    double combo = gain(p, 0.175 / std::sqrt(2.0), 0.175 / std::sqrt(2.0));
    CHECK(combo == doctest::Approx(50.0).epsilon(1e-9));
    // Far off boresight the sidelobe floor takes over.
    CHECK(gain(p, 2.5, 0.0) == 0.01);
    CHECK(gain(p, kPi - 1e-6, 1.0) == 0.01);

    Pattern no_floor = Pattern::directional(100.0, 0.35, 0.0);
    CHECK(gain(no_floor, 3.0, 0.0) < 1e-80);
}

TEST_CASE("directional gain decreases monotonically off axis") {
    Pattern p = Pattern::directional(100.0, 0.35, 0.0);
    double prev = gain(p, 0.0, 0.0);
    for (double theta = 0.05; theta < 1.0; theta += 0.05) {
        double g = gain(p, theta, 0.0);
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("cone is azimuth uniform and elevation shaped") {
    Pattern c = Pattern::cone(10.0, 0.2, 0.6);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        double phi = (unit(rng) - 0.5) * kPi;
        double t1 = (unit(rng) - 0.5) * 2.0 * kPi;
        double t2 = (unit(rng) - 0.5) * 2.0 * kPi;
        CHECK(gain(c, t1, phi) == gain(c, t2, phi));
    }
    CHECK(gain(c, 1.0, 0.2) == 10.0);  // peak at the belt centre
    CHECK(gain(c, 0.0, 0.5) == doctest::Approx(5.0).epsilon(1e-9));   // center + width/2
    CHECK(gain(c, 0.0, -0.1) == doctest::Approx(5.0).epsilon(1e-9));  // center - width/2
    CHECK(gain(c, 0.0, -kPi / 2.0) < gain(c, 0.0, 0.0));
}

TEST_CASE("pattern factories validate their inputs") {
    CHECK_THROWS_AS(Pattern::directional(1.0, 0.35, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::directional(0.5, 0.35, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::directional(100.0, 0.0, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::directional(100.0, 0.35, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::cone(0.0, 0.0, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::cone(10.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("aperture gain matches the frozen oracle and round trips") {
    // 1 m^2 at 2.4 GHz.
    CHECK(gain_from_area(1.0, 2.4e9) == doctest::Approx(805.36164298313917).epsilon(1e-12));
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        double area = 0.001 + unit(rng) * 10.0;
        double freq = 1e8 + unit(rng) * 1e10;
        double g = gain_from_area(area, freq);
        CHECK(effective_area(g, freq) == doctest::Approx(area).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gain_from_area(0.0, 2.4e9), std::invalid_argument);
    CHECK_THROWS_AS(gain_from_area(1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(effective_area(0.0, 2.4e9), std::invalid_argument);
}

TEST_CASE("resolve_boresight fixed mode rides the heading") {
    PointingSpec fixed;
    fixed.mode = PointingMode::fixed_to_object;
    fixed.rotation_angle_rad = 0.7;
    Orientation heading{1.2, -0.3, 0.0};
    Orientation o = resolve_boresight(fixed, {0, 0, 0}, heading, std::nullopt);
    CHECK(o.yaw == 1.2);
    CHECK(o.pitch == -0.3);
    CHECK(o.roll == 0.7);
}

TEST_CASE("resolve_boresight locked mode aims at the target") {
    PointingSpec locked;
    locked.mode = PointingMode::locked_to_target;
    locked.target_node_id = "t";

    Orientation o = resolve_boresight(locked, {0, 0, 0}, {}, Vec3{0.0, 50.0, 0.0});
    CHECK(o.yaw == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(o.pitch == doctest::Approx(0.0));

    Orientation up = resolve_boresight(locked, {0, 0, 0}, {}, Vec3{10.0, 0.0, 10.0});
    CHECK(up.pitch == doctest::Approx(kPi / 4.0).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(resolve_boresight(locked, {1, 1, 1}, {}, Vec3{1.0, 1.0, 1.0}),
                         "degenerate pointing", std::invalid_argument);
    CHECK_THROWS_AS(resolve_boresight(locked, {0, 0, 0}, {}, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("rotation angle never changes the gain") {
    // Patterns are symmetric about the boresight axis, so rolling the antenna
    // must leave every link gain untouched.
    Pattern p = Pattern::directional(100.0, 0.35, 0.01);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        Vec3 node{unit(rng) * 1000.0, unit(rng) * 1000.0, unit(rng) * 100.0};
        Vec3 target{unit(rng) * 1000.0, unit(rng) * 1000.0, unit(rng) * 100.0};
        Vec3 other{unit(rng) * 1000.0, unit(rng) * 1000.0, unit(rng) * 100.0};
        if (distance(node, target) < 1e-6 || distance(node, other) < 1e-6) {
            continue;
        }
        PointingSpec a;
        a.mode = PointingMode::locked_to_target;
        a.target_node_id = "t";
        a.rotation_angle_rad = 0.0;
        PointingSpec b = a;
        b.rotation_angle_rad = (unit(rng) - 0.5) * 4.0 * kPi;

        Orientation oa = resolve_boresight(a, node, {}, target);
        Orientation ob = resolve_boresight(b, node, {}, target);
        auto [ta, pa] = azimuth_elevation(oa, node, other);
        auto [tb, pb] = azimuth_elevation(ob, node, other);
        CHECK(gain(p, ta, pa) == gain(p, tb, pb));
    }
}

TEST_CASE("mean spherical gain") {
    CHECK(mean_spherical_gain(Pattern::isotropic()) == doctest::Approx(1.0).epsilon(1e-3));
    // Frozen from an independent fine quadrature of the same integrand.
    CHECK(mean_spherical_gain(Pattern::directional(100.0, 0.35, 0.01)) ==
          doctest::Approx(1.1013651).epsilon(5e-4));
    CHECK(mean_spherical_gain(Pattern::cone(10.0, 0.0, 0.6)) ==
          doctest::Approx(3.0914056).epsilon(5e-4));
}

}  // TEST_SUITE
