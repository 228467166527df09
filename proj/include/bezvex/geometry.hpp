#pragma once

// Planar geometric primitives: the orientation predicate, signed area,
// polygon convexity, and 2D convex hulls. Everything is a value and every
// function is pure, so concurrent use needs no synchronization.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bezvex {

//! Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//! A 2D point in path coordinate units. Coordinates are always finite;
//! the constructor rejects NaN and infinity.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Point2() = default;
    Point2(double px, double py) : x(px), y(py) {
        if (!std::isfinite(px) || !std::isfinite(py)) throw Error("non-finite coordinate");
    }

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double squared_norm(Point2 p) { return dot(p, p); }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }

//! u*a + (1-u)*b. Weights the *first* argument by u; exact at u = 0 and u = 1.
inline Point2 lerp(double u, Point2 a, Point2 b) {
    return {u * a.x + (1.0 - u) * b.x, u * a.y + (1.0 - u) * b.y};
}

inline Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

//! Axis-aligned bounding box, empty until the first point is added.
struct BBox {
    double xmin = 1.0, ymin = 0.0;
    double xmax = -1.0, ymax = 0.0;

    bool empty() const { return xmin > xmax; }

    void add(Point2 p) {
        if (empty()) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
        } else {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }

    double diagonal() const {
        return empty() ? 0.0 : std::hypot(xmax - xmin, ymax - ymin);
    }
};

inline BBox bounding_box(std::span<const Point2> pts) {
    BBox box;
    for (Point2 p : pts) box.add(p);
    return box;
}

//! Tolerance policy shared by every predicate.
//!
//! eps_col thresholds the raw orientation determinant (area units), so it
//! should be scaled with the square of the data's extent; eps_join is the
//! distance below which two points count as coincident. The for_* factories
//! apply the default scaling (1e-12 * diag^2 and 1e-9 * diag).
struct Tolerances {
    double eps_col = 1e-12;
    double eps_join = 1e-9;
    int samples = 1024;

    Tolerances() = default;
    Tolerances(double col, double join, int samp = 1024)
        : eps_col(col), eps_join(join), samples(samp) {
        if (!(eps_col >= 0.0) || !(eps_join >= 0.0)) throw Error("tolerances must be non-negative");
        if (samples < 16) throw Error("tolerances need at least 16 samples");
    }

    static Tolerances for_diagonal(double diag) {
        if (!(diag >= 0.0)) throw Error("negative diagonal");
        return Tolerances(1e-12 * diag * diag, 1e-9 * diag);
    }

    static Tolerances for_points(std::span<const Point2> pts) {
        return for_diagonal(bounding_box(pts).diagonal());
    }
};

enum class OrientationSign : int {
    Clockwise = -1,
    Collinear = 0,
    CounterClockwise = 1,
};

inline int to_int(OrientationSign s) { return static_cast<int>(s); }
inline OrientationSign opposite(OrientationSign s) {
    return static_cast<OrientationSign>(-to_int(s));
}

//! Sign of the turn a->b->c: +1 left, -1 right, 0 collinear within eps_col.
inline OrientationSign orientation(Point2 a, Point2 b, Point2 c, double eps_col = 0.0) {
    const double det = cross(b - a, c - a);
    if (std::abs(det) <= eps_col) return OrientationSign::Collinear;
    return det > 0.0 ? OrientationSign::CounterClockwise : OrientationSign::Clockwise;
}

//! Shoelace signed area; positive iff the vertices run counter-clockwise.
inline double signed_area(std::span<const Point2> pts) {
    if (pts.size() < 3) throw Error("degenerate polygon");
    double twice = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        twice += cross(pts[i], pts[(i + 1) % pts.size()]);
    return 0.5 * twice;
}

//! True iff the closed polygon is convex. Collinear (zero-turn) vertices are
//! allowed; a completely flat polygon counts as convex (it bounds a segment).
//! Self-intersecting polygons whose turns all share a sign are rejected by
//! requiring the total turning to be one full revolution.
//!
//! Throws on fewer than 3 vertices or consecutive duplicates within eps_join.
inline bool is_convex_polygon(std::span<const Point2> pts, const Tolerances& tol) {
    const std::size_t n = pts.size();
    if (n < 3) throw Error("degenerate polygon");
    for (std::size_t i = 0; i < n; ++i)
        if (distance(pts[i], pts[(i + 1) % n]) <= tol.eps_join) throw Error("degenerate polygon");

    int turn_sign = 0;
    bool reversal = false;
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 d0 = pts[i] - pts[(i + n - 1) % n];
        const Point2 d1 = pts[(i + 1) % n] - pts[i];
        const double det = cross(d0, d1);
        if (std::abs(det) <= tol.eps_col) {
            if (dot(d0, d1) < 0.0) reversal = true;
        } else {
            const int s = det > 0.0 ? 1 : -1;
            if (turn_sign == 0)
                turn_sign = s;
            else if (s != turn_sign)
                return false;
        }
        turning += std::atan2(det, dot(d0, d1));
    }
    if (turn_sign == 0) return true;  // flat polygon
    if (reversal) return false;       // boundary doubles back on itself
    const long winding = std::lround(turning / (2.0 * std::numbers::pi));
    return winding == 1 || winding == -1;
}

//! Strict convex hull: vertices in CCW order starting from the
//! lexicographically smallest point, with indices into the input. Points
//! interior to a hull edge (collinear within eps_col) are not vertices.
struct ConvexHull {
    std::vector<Point2> vertices;
    std::vector<std::size_t> indices;
};

inline ConvexHull convex_hull(std::span<const Point2> pts, const Tolerances& tol) {
    if (pts.empty()) throw Error("convex hull of empty set");

    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
        return a < b;
    });
    // exact duplicates keep their lowest input index
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
                order.end());

    ConvexHull hull;
    if (order.size() == 1) {
        hull.vertices = {pts[order[0]]};
        hull.indices = {order[0]};
        return hull;
    }

    const auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
        return cross(pts[a] - pts[o], pts[b] - pts[o]);
    };
    std::vector<std::size_t> chain;
    chain.reserve(2 * order.size());
    const auto extend = [&](std::size_t i, std::size_t floor) {
        while (chain.size() > floor && turn(chain[chain.size() - 2], chain.back(), i) <= tol.eps_col)
            chain.pop_back();
        chain.push_back(i);
    };
    for (std::size_t i : order) extend(i, 1);                // lower chain
    const std::size_t lower_size = chain.size();
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it)
        extend(*it, lower_size);                             // upper chain
    chain.pop_back();  // closing vertex repeats the start

    for (std::size_t i : chain) {
        hull.vertices.push_back(pts[i]);
        hull.indices.push_back(i);
    }
    return hull;
}

}  // namespace bezvex
