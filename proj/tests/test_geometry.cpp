#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "opsg/geometry.hpp"

using namespace opsg;

namespace {

// Independent sign oracle on integer-valued coordinates: the cross product
// fits __int128 exactly, so the sign is unconditionally correct.
int int_orientation_sign(const Point& a, const Point& b, const Point& c) {
    const auto ax = static_cast<long long>(a.x), ay = static_cast<long long>(a.y);
    const auto bx = static_cast<long long>(b.x), by = static_cast<long long>(b.y);
    const auto cx = static_cast<long long>(c.x), cy = static_cast<long long>(c.y);
    const __int128 det = static_cast<__int128>(ax - cx) * (by - cy) -
                         static_cast<__int128>(ay - cy) * (bx - cx);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

PointSet random_set(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (true) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
        try {
            return PointSet::create(pts);
        } catch (const InvalidPointSet&) {
        }
    }
}

} // namespace

TEST_CASE("orientation basic examples") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::CounterClockwise);
    CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == Orientation::Collinear);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orientation::Clockwise);
}

TEST_CASE("orientation sign matches integer oracle on adversarial triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> coord(-1000000, 1000000);
    for (int t = 0; t < 20000; ++t) {
        Point a{double(coord(rng)), double(coord(rng))};
        Point b{double(coord(rng)), double(coord(rng))};
        // Bias c toward the line ab to stress the exact fallback.
        Point c;
        if (t % 2 == 0) {
            c = {double(coord(rng)), double(coord(rng))};
        } else {
            const long long k = coord(rng) % 7;
            c = {a.x + k * (b.x - a.x), a.y + k * (b.y - a.y)};
        }
        const int want = int_orientation_sign(a, b, c);
        const double got = orient2d(a, b, c);
        CHECK((got > 0 ? 1 : got < 0 ? -1 : 0) == want);
    }
}

TEST_CASE("orientation exact on nearly-degenerate doubles") {
    const Point a{0.5, 0.5};
    const Point b{12.0, 12.0};
    Point c{24.0, 24.0};
    CHECK(orientation(a, b, c) == Orientation::Collinear);
    c.y = std::nextafter(24.0, 25.0);
    CHECK(orientation(a, b, c) == Orientation::CounterClockwise);
    c.y = std::nextafter(24.0, 23.0);
    CHECK(orientation(a, b, c) == Orientation::Clockwise);
}

TEST_CASE("ccw_angle quarter turns and degenerate rays") {
    CHECK(ccw_angle({1, 0}, {0, 0}, {0, 1}) == doctest::Approx(kPi / 2));
    CHECK(ccw_angle({0, 1}, {0, 0}, {1, 0}) == doctest::Approx(3 * kPi / 2));
    CHECK(ccw_angle({1, 0}, {0, 0}, {1, 0}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(ccw_angle({0, 0}, {0, 0}, {1, 1}), DegenerateAngle);
    CHECK_THROWS_AS(ccw_angle({1, 1}, {0, 0}, {0, 0}), DegenerateAngle);
}

TEST_CASE("ccw_angle and its reverse sum to 2pi off the line") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int t = 0; t < 5000; ++t) {
        Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        if (a == b || c == b) continue;
        if (orientation(a, b, c) == Orientation::Collinear) continue;
        CHECK(ccw_angle(a, b, c) + ccw_angle(c, b, a) == doctest::Approx(kTwoPi));
    }
}

TEST_CASE("point set validation") {
    CHECK_THROWS_AS(PointSet::create({{0, 0}, {1, 1}, {0, 0}}), InvalidPointSet);
    CHECK_THROWS_AS(PointSet::create({{0, 0}, {1, 1}, {2, 2}}), InvalidPointSet);
    CHECK_THROWS_AS(PointSet::create({{0, 0}, {1, std::nan("")}}), InvalidPointSet);
    CHECK(PointSet::create({{0, 0}}).size() == 1);
    CHECK(PointSet::create({{0, 0}, {1, 0}, {0.5, 3}}).size() == 3);
}

TEST_CASE("convex hull examples") {
    const PointSet s1 = PointSet::create({{0, 0}, {2, 0}, {1, 1}, {1, 0.2}});
    CHECK(convex_hull(s1) == std::vector<int>{0, 1, 2});

    const PointSet square = PointSet::create({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(convex_hull(square) == std::vector<int>{0, 1, 2, 3});

    std::vector<Point> pent;
    for (int i = 0; i < 5; ++i)
        pent.push_back({std::cos(kTwoPi * i / 5 + 0.3), std::sin(kTwoPi * i / 5 + 0.3)});
    const PointSet p = PointSet::create(pent);
    CHECK(convex_hull(p).size() == 5);

    CHECK(convex_hull(PointSet::create({{3, 1}})) == std::vector<int>{0});
    CHECK(convex_hull(PointSet::create({{3, 1}, {0, 0}})) == std::vector<int>{1, 0});
}

TEST_CASE("convex hull is counterclockwise and starts lexicographically") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        const PointSet s = random_set(25, seed);
        const std::vector<int> hull = convex_hull(s);
        const int h = static_cast<int>(hull.size());
        REQUIRE(h >= 3);
        for (int i = 0; i < h; ++i)
            CHECK(orientation(s[hull[i]], s[hull[(i + 1) % h]], s[hull[(i + 2) % h]]) ==
                  Orientation::CounterClockwise);
        for (int i = 1; i < h; ++i) CHECK(s[hull[0]] < s[hull[i]]);
        for (int v = 0; v < s.size(); ++v) {
            if (std::find(hull.begin(), hull.end(), v) != hull.end()) continue;
            CHECK(point_strictly_inside_hull(s, hull, s[v]));
        }
    }
}

TEST_CASE("diameter examples and hull membership") {
    const PointSet t = PointSet::create({{0, 0}, {3, 0}, {1, 1}});
    CHECK(diameter(t) == std::pair<int, int>{0, 1});

    const PointSet square = PointSet::create({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(diameter(square) == std::pair<int, int>{0, 2});

    for (unsigned seed = 1; seed <= 10; ++seed) {
        const PointSet s = random_set(30, seed);
        const auto [a, b] = diameter(s);
        const double best = squared_distance(s[a], s[b]);
        for (int i = 0; i < s.size(); ++i)
            for (int j = i + 1; j < s.size(); ++j)
                CHECK(squared_distance(s[i], s[j]) <= best);
        const std::vector<int> hull = convex_hull(s);
        CHECK(std::find(hull.begin(), hull.end(), a) != hull.end());
        CHECK(std::find(hull.begin(), hull.end(), b) != hull.end());
        CHECK(s[a] < s[b]);
    }
}

TEST_CASE("orthogonal slab membership") {
    CHECK(in_orthogonal_slab({0, 0}, {2, 0}, {1, 5}));
    CHECK_FALSE(in_orthogonal_slab({0, 0}, {2, 0}, {3, 1}));
    for (unsigned seed = 1; seed <= 10; ++seed) {
        const PointSet s = random_set(20, seed);
        const auto [a, b] = diameter(s);
        for (int v = 0; v < s.size(); ++v) {
            if (v == a || v == b) continue;
            CHECK(in_orthogonal_slab(s[a], s[b], s[v]));
        }
    }
}

TEST_CASE("observation: slab points see the segment at right angles or less") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    int checked = 0;
    while (checked < 100000) {
        Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
        if (p == q || r == p || r == q) continue;
        if (!in_orthogonal_slab(p, q, r)) continue;
        ++checked;
        CHECK(angle_between(q, p, r) <= kPi / 2 + kAngleEps);
        CHECK(angle_between(p, q, r) <= kPi / 2 + kAngleEps);
    }
}

TEST_CASE("observation: diameter endpoints subtend at least pi/3") {
    for (unsigned seed = 1; seed <= 40; ++seed) {
        const PointSet s = random_set(12, seed);
        const auto [a, b] = diameter(s);
        for (int v = 0; v < s.size(); ++v) {
            if (v == a || v == b) continue;
            const double at_r = angle_between(s[a], s[v], s[b]);
            const double at_a = angle_between(s[b], s[a], s[v]);
            const double at_b = angle_between(s[a], s[b], s[v]);
            CHECK(at_r >= kPi / 3 - kAngleEps);
            CHECK(std::min(at_a, at_b) <= kPi / 3 + kAngleEps);
        }
    }
}

TEST_CASE("cone membership with boundary inside") {
    const Point apex{0, 0}, r1{1, 0}, r2{0, 1};
    CHECK(in_cone(apex, r1, r2, {1, 1}));
    CHECK_FALSE(in_cone(apex, r1, r2, {-1, 0}));
    CHECK(in_cone(apex, r1, r2, {1, 0}));
    CHECK(in_cone(apex, r1, r2, {0, 1}));
    CHECK_FALSE(in_cone(apex, r1, r2, {1, -0.001}));
}

TEST_CASE("tangents from a point") {
    const PointSet square = PointSet::create({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto [left, right] = tangents_from_point({0, 5}, square);
    CHECK(square[left] == Point{1, 1});
    CHECK(square[right] == Point{0, 1});
    for (int j = 0; j < square.size(); ++j) {
        CHECK(orientation({0, 5}, square[left], square[j]) != Orientation::CounterClockwise);
        CHECK(orientation({0, 5}, square[right], square[j]) != Orientation::Clockwise);
    }

    const PointSet single = PointSet::create({{2, 2}});
    CHECK(tangents_from_point({0, 0}, single) == std::pair<int, int>{0, 0});

    const PointSet seg = PointSet::create({{1, 1}, {2, 3}});
    const auto [l2, r2] = tangents_from_point({0, 0}, seg);
    CHECK(((l2 == 0 && r2 == 1) || (l2 == 1 && r2 == 0)));

    CHECK_THROWS_AS(tangents_from_point({0.5, 0.5}, square), PointNotExterior);
    CHECK_THROWS_AS(tangents_from_point({1, 1}, square), PointNotExterior);
}

TEST_CASE("tangents match side conditions on random exterior queries") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 300; ++t) {
        const PointSet s = random_set(12, 100 + static_cast<unsigned>(t));
        Point p{u(rng) * 4 - 2, u(rng) * 4 - 2};
        const std::vector<int> hull = convex_hull(s);
        bool outside = false;
        for (size_t i = 0; i < hull.size() && !outside; ++i)
            outside = orientation(s[hull[i]], s[hull[(i + 1) % hull.size()]], p) ==
                      Orientation::Clockwise;
        if (!outside) continue;
        const auto [left, right] = tangents_from_point(p, s);
        for (int j = 0; j < s.size(); ++j) {
            CHECK(orientation(p, s[left], s[j]) != Orientation::CounterClockwise);
            CHECK(orientation(p, s[right], s[j]) != Orientation::Clockwise);
        }
    }
}

TEST_CASE("segment intersection") {
    CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 0}, {0, 1}));
    CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));
    CHECK(segments_intersect({0, 0}, {2, 0}, {0, 0}, {1, 0}));
    CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {1, 1}));
}
