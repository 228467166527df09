#pragma once

// Cubic (and general-degree) Bezier curves plus the interpolation frame used
// to reason about their convexity.
//
// Parameter convention: every interpolation step weights the LOWER-index
// point by u, i.e. q_i = u*p_i + (1-u)*p_{i+1}. Consequently u = 1 evaluates
// to the curve start p0 and u = 0 to the end p3 -- the reverse of the usual
// Bernstein parameterization. Substitute u -> 1-u to convert.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bezvex/geometry.hpp"

namespace bezvex {

//! One cubic segment, the four control points of a `curveto`.
struct CubicBezier {
    Point2 p0, p1, p2, p3;

    CubicBezier(Point2 a, Point2 b, Point2 c, Point2 d) : p0(a), p1(b), p2(c), p3(d) {
        if (p0 == p3 && p1 == p0 && p2 == p0) throw Error("degenerate point curve");
    }

    CubicBezier reversed() const { return {p3, p2, p1, p0}; }

    //! Control quadrilateral [p0, p1, p2, p3], closed implicitly.
    std::vector<Point2> control_quad() const { return {p0, p1, p2, p3}; }
};

//! The full interpolation ladder at one parameter value: q_i on the control
//! edges, r_i one level down, and the curve point s. The segment [r0, r1]
//! is tangent to the curve at s.
struct DeCasteljauFrame {
    double u = 0.0;
    Point2 q0, q1, q2;
    Point2 r0, r1;
    Point2 s;
};

inline DeCasteljauFrame frame_at(const CubicBezier& c, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw Error("parameter out of range");
    DeCasteljauFrame f;
    f.u = u;
    f.q0 = lerp(u, c.p0, c.p1);
    f.q1 = lerp(u, c.p1, c.p2);
    f.q2 = lerp(u, c.p2, c.p3);
    f.r0 = lerp(u, f.q0, f.q1);
    f.r1 = lerp(u, f.q1, f.q2);
    f.s = lerp(u, f.r0, f.r1);
    return f;
}

inline Point2 point_at(const CubicBezier& c, double u) { return frame_at(c, u).s; }

//! The tangent segment [r0, r1] at an interior parameter. The curve point
//! at u lies on it.
inline std::pair<Point2, Point2> tangent_segment(const CubicBezier& c, double u,
                                                 const Tolerances& tol) {
    if (!(u > 0.0 && u < 1.0)) throw Error("parameter out of range");
    const DeCasteljauFrame f = frame_at(c, u);
    if (distance(f.r0, f.r1) <= tol.eps_join) throw Error("degenerate tangent");
    return {f.r0, f.r1};
}

//! Convexity of the control quadrilateral. Equivalent to convexity of the
//! region bounded by the curve and the chord [p0, p3].
inline bool control_quad_convex(const CubicBezier& c, const Tolerances& tol) {
    const std::vector<Point2> quad = c.control_quad();
    return is_convex_polygon(quad, tol);
}

//! m points at the uniform parameter grid k/(m-1), k = 0..m-1. Note the
//! convention above: the list runs from p3 to p0.
inline std::vector<Point2> sample(const CubicBezier& c, int m) {
    if (m < 2) throw Error("need at least 2 samples");
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        out.push_back(point_at(c, static_cast<double>(k) / static_cast<double>(m - 1)));
    return out;
}

//! Slow direct check that the region bounded by the curve and [p0, p3] is
//! convex, via a dense boundary sampling. Exists to validate
//! control_quad_convex; not meant for production paths.
inline bool region_convexity_oracle(const CubicBezier& c, int m, const Tolerances& tol) {
    if (m < 64) throw Error("oracle needs at least 64 samples");
    const std::vector<Point2> samples = sample(c, m);
    std::vector<Point2> poly;  // the chord back from p0 to p3 closes the cycle
    poly.reserve(samples.size());
    for (Point2 p : samples)
        if (poly.empty() || distance(poly.back(), p) > tol.eps_join) poly.push_back(p);
    while (poly.size() > 1 && distance(poly.front(), poly.back()) <= tol.eps_join)
        poly.pop_back();
    return is_convex_polygon(poly, tol);
}

//! A Bezier curve of arbitrary degree (control count - 1).
struct BezierCurve {
    std::vector<Point2> control;

    explicit BezierCurve(std::vector<Point2> pts) : control(std::move(pts)) {
        if (control.size() < 2) throw Error("curve needs at least 2 control points");
    }

    std::size_t degree() const { return control.size() - 1; }
};

//! General-degree evaluation by repeated interpolation, with the same
//! convention as frame_at (u weights the lower-index point).
inline Point2 point_at_general(const BezierCurve& b, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw Error("parameter out of range");
    std::vector<Point2> level = b.control;
    while (level.size() > 1) {
        for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = lerp(u, level[i], level[i + 1]);
        level.pop_back();
    }
    return level.front();
}

}  // namespace bezvex
