#include "opsg/geometry.hpp"

#include <algorithm>
#include <random>

namespace opsg {

double ccw_angle(const Point& a, const Point& b, const Point& c) {
    if (a == b || c == b) throw DegenerateAngle("ccw_angle: ray endpoint equals apex");
    const double ta = std::atan2(a.y - b.y, a.x - b.x);
    const double tc = std::atan2(c.y - b.y, c.x - b.x);
    double t = tc - ta;
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t -= kTwoPi;
    return t;
}

double angle_between(const Point& a, const Point& b, const Point& c) {
    const double t = ccw_angle(a, b, c);
    return t > kPi ? kTwoPi - t : t;
}

namespace {

void check_finite_and_distinct(const std::vector<Point>& pts) {
    for (const Point& p : pts)
        if (!is_finite(p)) throw InvalidPointSet("non-finite coordinate");
    std::vector<Point> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) throw InvalidPointSet("duplicate point");
}

void check_no_collinear_exhaustive(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear)
                    throw InvalidPointSet("collinear triple");
}

void check_no_collinear_sampled(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 1000000; ++t) {
        const int i = pick(rng), j = pick(rng), k = pick(rng);
        if (i == j || j == k || i == k) continue;
        if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear)
            throw InvalidPointSet("collinear triple (spot check)");
    }
}

} // namespace

PointSet PointSet::create(std::vector<Point> pts) {
    if (pts.empty()) throw InvalidPointSet("empty point set");
    check_finite_and_distinct(pts);
    if (static_cast<int>(pts.size()) <= kExhaustiveValidationLimit)
        check_no_collinear_exhaustive(pts);
    else
        throw InvalidPointSet("set too large for exhaustive validation; use trusted()");
    return PointSet(std::move(pts));
}

PointSet PointSet::trusted(std::vector<Point> pts) {
    if (pts.empty()) throw InvalidPointSet("empty point set");
    check_finite_and_distinct(pts);
    if (static_cast<int>(pts.size()) > kExhaustiveValidationLimit)
        check_no_collinear_sampled(pts);
    else
        check_no_collinear_exhaustive(pts);
    return PointSet(std::move(pts));
}

std::vector<int> convex_hull_subset(const PointSet& s, const std::vector<int>& subset) {
    std::vector<int> idx = subset;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return s[a] < s[b] || (s[a] == s[b] && a < b); });
    const int m = static_cast<int>(idx.size());
    if (m <= 2) return idx;

    // Monotone chain; strict turns only (general position).
    std::vector<int> hull(2 * static_cast<size_t>(m));
    int k = 0;
    for (int i = 0; i < m; ++i) {
        while (k >= 2 && orientation(s[hull[k - 2]], s[hull[k - 1]], s[idx[i]]) !=
                             Orientation::CounterClockwise)
            --k;
        hull[k++] = idx[i];
    }
    const int lower = k + 1;
    for (int i = m - 2; i >= 0; --i) {
        while (k >= lower && orientation(s[hull[k - 2]], s[hull[k - 1]], s[idx[i]]) !=
                                 Orientation::CounterClockwise)
            --k;
        hull[k++] = idx[i];
    }
    hull.resize(static_cast<size_t>(k - 1));
    return hull;
}

std::vector<int> convex_hull(const PointSet& s) {
    std::vector<int> all(static_cast<size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) all[static_cast<size_t>(i)] = i;
    return convex_hull_subset(s, all);
}

std::pair<int, int> diameter_subset(const PointSet& s, const std::vector<int>& subset) {
    if (subset.size() < 2) throw DegenerateInput("diameter needs at least two points");
    int bi = -1, bj = -1;
    double best = -1.0;
    for (size_t a = 0; a < subset.size(); ++a) {
        for (size_t b = a + 1; b < subset.size(); ++b) {
            int i = subset[a], j = subset[b];
            if (i > j) std::swap(i, j);
            const double d = squared_distance(s[i], s[j]);
            if (d > best || (d == best && (i < bi || (i == bi && j < bj)))) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    const Point& p = s[bi];
    const Point& q = s[bj];
    if (q < p) std::swap(bi, bj);
    return {bi, bj};
}

std::pair<int, int> diameter(const PointSet& s) {
    std::vector<int> all(static_cast<size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) all[static_cast<size_t>(i)] = i;
    return diameter_subset(s, all);
}

bool in_orthogonal_slab(const Point& p, const Point& q, const Point& r) {
    const Point d = q - p;
    const double t = dot(r - p, d);
    return t > 0.0 && t < dot(d, d);
}

bool in_cone(const Point& apex, const Point& ray1_to, const Point& ray2_to, const Point& r) {
    const double width = ccw_angle(ray1_to, apex, ray2_to);
    const double t = ccw_angle(ray1_to, apex, r);
    return t <= width + kAngleEps || t >= kTwoPi - kAngleEps;
}

std::pair<int, int> tangents_from_point(const Point& p, const PointSet& s,
                                        const std::vector<int>& subset) {
    if (subset.empty()) throw DegenerateInput("tangents of empty set");
    for (int i : subset)
        if (s[i] == p) throw PointNotExterior("query point belongs to the set");
    if (subset.size() == 1) return {subset[0], subset[0]};

    const std::vector<int> hull = convex_hull_subset(s, subset);
    if (hull.size() == 2) {
        const Point& u = s[hull[0]];
        const Point& v = s[hull[1]];
        if (orientation(u, v, p) == Orientation::Collinear && dot(p - u, p - v) <= 0.0)
            throw PointNotExterior("point on the hull segment");
    } else {
        bool outside = false;
        for (size_t i = 0; i < hull.size(); ++i) {
            const Point& u = s[hull[i]];
            const Point& v = s[hull[(i + 1) % hull.size()]];
            if (orientation(u, v, p) == Orientation::Clockwise) {
                outside = true;
                break;
            }
        }
        if (!outside) throw PointNotExterior("point inside or on the hull");
    }

    int left = -1, right = -1;
    for (int i : subset) {
        bool left_ok = true, right_ok = true;
        for (int j : subset) {
            if (j == i) continue;
            const Orientation o = orientation(p, s[i], s[j]);
            if (o == Orientation::CounterClockwise) {
                left_ok = false;
            } else if (o == Orientation::Clockwise) {
                right_ok = false;
            } else if (squared_distance(p, s[j]) < squared_distance(p, s[i])) {
                // Collinear tie: the tangency goes to the nearer point.
                left_ok = false;
                right_ok = false;
            }
            if (!left_ok && !right_ok) break;
        }
        if (left_ok && left < 0) left = i;
        if (right_ok && right < 0) right = i;
    }
    if (left < 0 || right < 0)
        throw PointNotExterior("point inside or on the hull of the set");
    return {left, right};
}

std::pair<int, int> tangents_from_point(const Point& p, const PointSet& s) {
    std::vector<int> all(static_cast<size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) all[static_cast<size_t>(i)] = i;
    return tangents_from_point(p, s, all);
}

namespace {

bool on_segment_collinear(const Point& a, const Point& b, const Point& p) {
    // Assumes a,b,p collinear; true iff p within the closed segment box.
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const bool share_ac = a == c, share_ad = a == d, share_bc = b == c, share_bd = b == d;
    if (share_ac || share_ad || share_bc || share_bd) {
        // Sharing one endpoint: an extra intersection requires an overlap,
        // i.e. collinear segments extending over each other.
        const Point& shared = share_ac || share_ad ? a : b;
        const Point& a2 = share_ac || share_ad ? b : a;
        const Point& c2 = share_ac || share_bc ? d : c;
        if (orientation(shared, a2, c2) != Orientation::Collinear) return false;
        return dot(a2 - shared, c2 - shared) > 0.0;
    }
    const double o1 = orient2d(a, b, c);
    const double o2 = orient2d(a, b, d);
    const double o3 = orient2d(c, d, a);
    const double o4 = orient2d(c, d, b);
    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
        ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
        return true;
    if (o1 == 0 && on_segment_collinear(a, b, c)) return true;
    if (o2 == 0 && on_segment_collinear(a, b, d)) return true;
    if (o3 == 0 && on_segment_collinear(c, d, a)) return true;
    if (o4 == 0 && on_segment_collinear(c, d, b)) return true;
    return false;
}

bool point_in_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
    const Orientation abc = orientation(a, b, c);
    if (abc == Orientation::Collinear) return false;
    const Orientation o1 = orientation(a, b, p);
    const Orientation o2 = orientation(b, c, p);
    const Orientation o3 = orientation(c, a, p);
    return o1 == abc && o2 == abc && o3 == abc;
}

bool point_strictly_inside_hull(const PointSet& s, const std::vector<int>& hull,
                                const Point& p) {
    const int h = static_cast<int>(hull.size());
    if (h < 3) return false;
    for (int i = 0; i < h; ++i) {
        const Point& u = s[hull[static_cast<size_t>(i)]];
        const Point& v = s[hull[static_cast<size_t>((i + 1) % h)]];
        if (orientation(u, v, p) != Orientation::CounterClockwise) return false;
    }
    return true;
}

} // namespace opsg
