#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "exhauster/envelope.hpp"
#include "exhauster/error.hpp"
#include "exhauster/reduction.hpp"
#include "oracle.hpp"

using namespace exh;

namespace {

ConvexBody poly(std::vector<Point2> pts, std::string label = {}) { return ConvexBody::polygon(pts, std::move(label)); }

Exhauster example2() {
    return Exhauster({poly({{0, 0}, {1, 1}, {-1, 1}}, "C0"), poly({{1, 2}}, "C1"), poly({{-2, 1}, {-2, 2}}, "C2"),
                      poly({{-1, -1}}, "C3"), poly({{-1, 1}, {-1, 2}}, "C4")});
}

Exhauster example4() {
    return Exhauster({poly({{-1, 0}, {0, 1}, {-1, 1}}, "C1"), poly({{-2, 0}, {0, -2}, {-2, -2}}, "C2"),
                      poly({{3, 0}, {0, -3}, {3, -3}}, "C3"), poly({{4, 0}, {0, 4}, {4, 4}}, "C4")});
}

}  // namespace

TEST_CASE("sinusoid_intersections") {
    SUBCASE("cos vs sin") {
        const auto r = sinusoid_intersections({1, 0, 0}, {0, 1, 0});
        REQUIRE(r.angles.size() == 2);
        CHECK(r.angles[0] == doctest::Approx(kPi / 4));
        CHECK(r.angles[1] == doctest::Approx(5 * kPi / 4));
    }
    SUBCASE("identical") {
        const auto r = sinusoid_intersections({1, 0, 0}, {1, 0, 0});
        CHECK(r.identical);
        CHECK(r.angles.empty());
    }
    SUBCASE("tangent disc curve against the origin") {
        const double t = 1.1;
        const auto r = sinusoid_intersections({0, 0, 0}, {std::cos(t), std::sin(t), 1.0});
        CHECK_FALSE(r.identical);
        REQUIRE(r.angles.size() == 1);
        CHECK(r.angles[0] == doctest::Approx(t + kPi));
    }
    SUBCASE("disjoint") {
        CHECK(sinusoid_intersections({0, 0, 1}, {0, 0, 0}).angles.empty());
        CHECK(sinusoid_intersections({1, 0, 3}, {0, 0, 0}).angles.empty());
    }
}

TEST_CASE("every intersection angle is a root") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 5000; ++trial) {
        const Sinusoid s1{u(rng), u(rng), u(rng) * 0.5};
        const Sinusoid s2{u(rng), u(rng), u(rng) * 0.5};
        for (double t : sinusoid_intersections(s1, s2).angles) CHECK(std::abs(s1(t) - s2(t)) < 1e-9);
    }
}

TEST_CASE("difference_max") {
    const auto a = difference_max({1, 0, 0}, {0, 0, 0}, Arc::full(0.0));
    CHECK(a.value == doctest::Approx(1.0));
    CHECK(a.theta == doctest::Approx(0.0));

    const auto b = difference_max({0, 0, 0}, {1, 0, 0}, Arc(0.0, kPi / 2));
    CHECK(b.value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(b.theta == doctest::Approx(kPi / 2));

    const auto c = difference_max({2, -1, 0.5}, {2, -1, 0.5}, Arc(1.0, 0.5));
    CHECK(c.value == 0.0);
    CHECK(c.theta == doctest::Approx(1.0));

    CHECK_THROWS_AS(difference_max({1, 0, 0}, {0, 0, 0}, Arc(1.0, 0.0)), ValidationError);
}

TEST_CASE("difference_max matches a 1e6-point grid scan") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-3, 3), ang(0, kTwoPi), len(0.01, kTwoPi);
    for (int trial = 0; trial < 20; ++trial) {
        const Sinusoid s1{u(rng), u(rng), u(rng)}, s2{u(rng), u(rng), u(rng)};
        const Arc arc(ang(rng), len(rng));
        double scan = -HUGE_VAL;
        constexpr int n = 1000000;
        for (int k = 0; k <= n; ++k) {
            const double t = arc.start() + arc.length() * k / n;
            scan = std::max(scan, s1(t) - s2(t));
        }
        CHECK(std::abs(difference_max(s1, s2, arc).value - scan) <= 1e-9);
    }
}

TEST_CASE("dominance_arcs") {
    // Vertex (-2,-2) against the -cos piece of Example 3's C0.
    const auto arcs = dominance_arcs(vertex_sinusoid({-2, -2}), {-1, 0, 0});
    REQUIRE(arcs.size() == 1);
    CHECK(arcs[0].end() == doctest::Approx(kPi - std::atan(0.5)).epsilon(1e-9));
    CHECK(arcs[0].start() == doctest::Approx(kTwoPi - std::atan(0.5)).epsilon(1e-9));

    const auto same = dominance_arcs({1, 2, 0}, {1, 2, 0});
    REQUIRE(same.size() == 1);
    CHECK(same[0].is_full());

    CHECK(dominance_arcs({0, 0, 1}, {0, 0, 0}).empty());
}

TEST_CASE("lower_envelope of a single curve is the curve") {
    const auto c = support_curve(poly({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
    const std::vector<SupportCurve> one{c};
    const auto env = lower_envelope(one);
    CHECK(env.size() == c.size());
    for (std::size_t k = 0; k < env.size(); ++k) CHECK(env.attaining(k) == std::vector<std::size_t>{0});
    for (double t = 0; t < kTwoPi; t += 0.1) CHECK(env(t) == c(t));
    CHECK_THROWS_AS(lower_envelope(std::vector<SupportCurve>{}), ValidationError);
}

TEST_CASE("Example 2 envelope at theta = 0 is attained by C2") {
    const auto ex = example2();
    const auto curves = support_curves(ex);
    const auto env = lower_envelope(curves);
    CHECK(env(0.0) == doctest::Approx(-2.0));
    const auto piece = env.curve().locate(0.0);
    CHECK(env.winner(piece) == 2);
}

TEST_CASE("Example 4 envelope: one owner per quarter, rotated") {
    const auto ex = example4();
    const auto env = lower_envelope(support_curves(ex));
    // Dense-grid oracle: owner on each open quarter.
    const auto grid = oracle::support_grid(ex, 100000);
    const std::size_t expected_owner[] = {1, 2, 3, 0};
    for (std::size_t k = 0; k < 100000; ++k) {
        const double theta = kTwoPi * k / 100000.0;
        const int q = static_cast<int>(theta / (kPi / 2));
        const double off = theta - q * kPi / 2;
        if (off < 1e-3 || off > kPi / 2 - 1e-3) continue;
        std::size_t arg = 0;
        for (std::size_t i = 1; i < 4; ++i) {
            if (grid[i][k] < grid[arg][k]) arg = i;
        }
        REQUIRE(arg == expected_owner[q]);
    }
    for (std::size_t q = 0; q < 4; ++q) {
        const auto arcs = env.contact_arcs(expected_owner[q]);
        REQUIRE(arcs.size() == 1);
        CHECK(arcs[0].length() == doctest::Approx(kPi / 2).epsilon(1e-9));
        CHECK(std::abs(std::remainder(arcs[0].start() - q * kPi / 2, kTwoPi)) <= 1e-9);
    }
}

TEST_CASE("lower_envelope equals the direct minimum for random families") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ang(0, kTwoPi);
    for (int trial = 0; trial < 30; ++trial) {
        const auto ex = oracle::random_exhauster(rng, 1, 8, 8);
        const auto curves = support_curves(ex);
        const auto env = lower_envelope(curves);
        double worst = 0.0;
        for (int s = 0; s < 100000 / 30; ++s) {
            const double t = ang(rng);
            double direct = HUGE_VAL;
            for (std::size_t i = 0; i < ex.size(); ++i) direct = std::min(direct, oracle::support(ex[i], t));
            worst = std::max(worst, std::abs(env(t) - direct));
            // The winner's own curve realizes the value.
            const auto k = env.curve().locate(t);
            CHECK(std::abs(curves[env.winner(k)](t) - env(t)) <= 1e-12);
        }
        CHECK(worst <= 1e-9);

        for (std::size_t k = 0; k < env.size(); ++k) {
            const double m = env.curve().pieces()[k].arc.midpoint();
            double direct = HUGE_VAL;
            for (std::size_t i = 0; i < ex.size(); ++i) direct = std::min(direct, oracle::support(ex[i], m));
            std::vector<std::size_t> att;
            for (std::size_t i = 0; i < ex.size(); ++i) {
                if (oracle::support(ex[i], m) <= direct + 1e-9) att.push_back(i);
            }
            CHECK(env.attaining(k) == att);
            CHECK(std::find(att.begin(), att.end(), env.winner(k)) != att.end());
        }
    }
}

TEST_CASE("lower_envelope is order invariant") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const auto ex = oracle::random_exhauster(rng, 2, 6, 8);
        auto curves = support_curves(ex);
        const auto env = lower_envelope(curves);
        std::shuffle(curves.begin(), curves.end(), rng);
        const auto shuffled = lower_envelope(curves);
        double worst = 0.0;
        for (int k = 0; k < 20000; ++k) {
            const double t = kTwoPi * k / 20000.0;
            worst = std::max(worst, std::abs(env(t) - shuffled(t)));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("tangent discs: envelope never below zero, one zero per disc") {
    std::vector<ConvexBody> discs;
    for (int k = 0; k < 16; ++k) {
        const double t = kTwoPi * k / 16;
        discs.push_back(ConvexBody::disc({std::cos(t), std::sin(t)}, 1.0));
    }
    const Exhauster ex(discs);
    const auto curves = support_curves(ex);
    const auto env = lower_envelope(curves);
    double lowest = HUGE_VAL;
    for (int k = 0; k < 100000; ++k) lowest = std::min(lowest, env(kTwoPi * k / 100000.0));
    CHECK(lowest >= -1e-12);
    for (int k = 0; k < 16; ++k) {
        const auto zeros = sinusoid_intersections(curves[k].pieces()[0].sinusoid, {0, 0, 0});
        REQUIRE(zeros.angles.size() == 1);
        CHECK(std::abs(env(zeros.angles[0])) <= 1e-12);
    }
}

TEST_CASE("superlevel_arcs and max_difference on piecewise curves") {
    const auto sq = support_curve(poly({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
    const auto disc = support_curve(ConvexBody::disc({0, 0}, 1.2));
    // disc - square >= 0 where cos/sin terms stay small: four arcs around the edge normals.
    const auto arcs = superlevel_arcs(disc, sq, 0.0);
    CHECK(arcs.size() == 4);
    const auto m = max_difference(sq, disc);
    CHECK(m.value == doctest::Approx(std::sqrt(2.0) - 1.2));
    CHECK(superlevel_arcs(sq, sq, 0.0).size() == 1);
    CHECK(superlevel_arcs(sq, sq, 0.0)[0].is_full());
}
