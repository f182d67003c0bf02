#ifndef OPSG_GEOMETRY_HPP
#define OPSG_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "opsg/errors.hpp"

namespace opsg {

// Absolute tolerance for all angle comparisons, in radians. Orientation
// decisions never use it; they are sign-exact.
inline constexpr double kAngleEps = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Lexicographic on (x, y); the tie-break order used everywhere.
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(double s, const Point& a) { return {s * a.x, s * a.y}; }

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double squared_distance(const Point& a, const Point& b) {
    const Point d = a - b;
    return dot(d, d);
}
inline double distance(const Point& a, const Point& b) {
    return std::sqrt(squared_distance(a, b));
}
inline bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

enum class Orientation { CounterClockwise, Clockwise, Collinear };

// Sign of the signed area of triangle (a,b,c). Adaptive: evaluates in plain
// doubles with a forward error bound and falls back to exact expansion
// arithmetic when the bound cannot certify the sign. The returned sign is
// always correct for finite double inputs.
double orient2d(const Point& a, const Point& b, const Point& c);

inline Orientation orientation(const Point& a, const Point& b, const Point& c) {
    const double s = orient2d(a, b, c);
    if (s > 0.0) return Orientation::CounterClockwise;
    if (s < 0.0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

// Counterclockwise rotation taking ray b->a onto ray b->c, in [0, 2*pi).
// Throws DegenerateAngle if a == b or c == b.
double ccw_angle(const Point& a, const Point& b, const Point& c);

// Unsigned angle between rays b->a and b->c, in [0, pi].
double angle_between(const Point& a, const Point& b, const Point& c);

// Immutable point set in general position (no duplicates, no collinear
// triples). Validation is exhaustive up to kExhaustiveValidationLimit points;
// larger sets must be built with trusted() and get randomized spot checks.
class PointSet {
public:
    static constexpr int kExhaustiveValidationLimit = 2000;

    // Validating factory. Throws InvalidPointSet.
    static PointSet create(std::vector<Point> pts);
    // Skips the exhaustive check; runs seeded random spot checks instead.
    static PointSet trusted(std::vector<Point> pts);

    int size() const { return static_cast<int>(points_.size()); }
    const Point& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
    const std::vector<Point>& points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    explicit PointSet(std::vector<Point> pts) : points_(std::move(pts)) {}
    std::vector<Point> points_;
};

// Indices of hull vertices in counterclockwise order, starting at the
// lexicographically smallest point. n=1 and n=2 return all indices.
std::vector<int> convex_hull(const PointSet& s);
// Hull of a subset of s (indices into s; result uses the same indexing).
std::vector<int> convex_hull_subset(const PointSet& s, const std::vector<int>& subset);

// Index pair at maximum distance. Ties go to the lexicographically smallest
// index pair; the returned pair is ordered so the first point has smaller x
// (smaller y when x ties).
std::pair<int, int> diameter(const PointSet& s);
std::pair<int, int> diameter_subset(const PointSet& s, const std::vector<int>& subset);

// True iff the projection of r onto line pq falls strictly between p and q.
bool in_orthogonal_slab(const Point& p, const Point& q, const Point& r);

// Closed cone swept counterclockwise from ray apex->ray1_to to ray
// apex->ray2_to; boundary counts as inside.
bool in_cone(const Point& apex, const Point& ray1_to, const Point& ray2_to, const Point& r);

// Tangency points from p to the hull of the subset. All subset points lie on
// or to the right of the oriented line p->left and on or to the left of
// p->right. Throws PointNotExterior when p is inside or on the hull.
std::pair<int, int> tangents_from_point(const Point& p, const PointSet& s,
                                        const std::vector<int>& subset);
std::pair<int, int> tangents_from_point(const Point& p, const PointSet& s);

// True iff segments (a,b) and (c,d) cross in a single point interior to both,
// or overlap/touch anywhere other than a shared endpoint.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// True iff p lies strictly inside triangle (a,b,c).
bool point_in_triangle(const Point& a, const Point& b, const Point& c, const Point& p);

// True iff p lies strictly inside the convex polygon given by hull indices.
bool point_strictly_inside_hull(const PointSet& s, const std::vector<int>& hull,
                                const Point& p);

} // namespace opsg

#endif
