#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gmac/scalar.hpp"

namespace gmac {

struct Point {
    double r1 = 0.0;
    double r2 = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.r1 == b.r1 && a.r2 == b.r2; }

/// Default absolute tolerance for vertex dedup and containment tests.
inline constexpr double kGeomTol = 1e-9;

/// Linear upper-bound constraint on the split rates (R12, R13, R21, R23):
/// coeff . (R12, R13, R21, R23) <= bound. Coefficients are nonnegative;
/// Theorem-1 shaped systems use {0,1} coefficients only.
struct SplitConstraint {
    std::array<double, 4> coeff{};
    Bits bound = 0.0;
};

/// System of upper bounds on the four split rates, with implicit
/// nonnegativity of every split. R1 = R12 + R13 and R2 = R21 + R23.
struct SplitRatePolytope {
    std::vector<SplitConstraint> constraints;

    SplitRatePolytope& add(std::array<double, 4> c, Bits b) {
        constraints.push_back({c, b});
        return *this;
    }

    /// Canonical six-bound Theorem-1 shape: single splits, the pair
    /// R13+R23, and the full sum.
    static SplitRatePolytope theorem1_shape(Bits b12, Bits b13, Bits b21, Bits b23,
                                            Bits b13_23, Bits b_sum) {
        SplitRatePolytope p;
        p.add({1, 0, 0, 0}, b12);
        p.add({0, 1, 0, 0}, b13);
        p.add({0, 0, 1, 0}, b21);
        p.add({0, 0, 0, 1}, b23);
        p.add({0, 1, 0, 1}, b13_23);
        p.add({1, 1, 1, 1}, b_sum);
        return p;
    }

    /// Degenerate encoding of a region already stated on total rates:
    /// R12 stands for R1, R23 for R2, and the remaining splits are pinned
    /// to zero so the projection is exact.
    static SplitRatePolytope total_rate_shape(Bits b_r1, Bits b_r2,
                                              const std::vector<Bits>& sum_bounds) {
        SplitRatePolytope p;
        p.add({1, 0, 0, 0}, b_r1);
        p.add({0, 0, 0, 1}, b_r2);
        for (Bits s : sum_bounds) p.add({1, 0, 0, 1}, s);
        p.add({0, 1, 0, 0}, 0.0);
        p.add({0, 0, 1, 0}, 0.0);
        return p;
    }
};

/// Convex, down-closed rate region stored as its Pareto (upper-right)
/// boundary: vertices sorted by increasing R1 with non-increasing R2,
/// starting at (0, R2max) and ending at (R1max, 0).
struct RateRegion2D {
    std::vector<Point> vertices;

    bool empty() const { return vertices.empty(); }
    double r1_max() const { return vertices.empty() ? 0.0 : vertices.back().r1; }
    double r2_max() const { return vertices.empty() ? 0.0 : vertices.front().r2; }

    /// Closed polygon boundary (origin + Pareto chain), counterclockwise.
    std::vector<Point> polygon() const {
        std::vector<Point> poly;
        if (vertices.empty()) return poly;
        if (vertices.size() == 1 && vertices[0].r1 == 0.0 && vertices[0].r2 == 0.0)
            return {Point{0.0, 0.0}};
        poly.push_back({0.0, 0.0});
        if (vertices.front().r1 > kGeomTol) poly.push_back({0.0, vertices.front().r2});
        for (const Point& v : vertices) poly.push_back(v);
        if (vertices.back().r2 > kGeomTol) poly.push_back({vertices.back().r1, 0.0});
        return poly;
    }
};

namespace detail {

inline double cross(const Point& o, const Point& a, const Point& b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

/// Monotone-chain convex hull, counterclockwise. Collinear points are
/// dropped with an absolute tolerance so that output is a deterministic
/// function of the input set (input is sorted first).
inline std::vector<Point> convex_hull(std::vector<Point> pts, double tol = kGeomTol) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [tol](const Point& a, const Point& b) {
                              return std::abs(a.r1 - b.r1) <= tol && std::abs(a.r2 - b.r2) <= tol;
                          }),
              pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Point> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= tol) --k;
        hull[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) { // upper chain
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= tol) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline double dist_point_segment(const Point& p, const Point& a, const Point& b) {
    const double dx = b.r1 - a.r1, dy = b.r2 - a.r2;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((p.r1 - a.r1) * dx + (p.r2 - a.r2) * dy) / len2, 0.0, 1.0);
    const double ex = a.r1 + t * dx - p.r1, ey = a.r2 + t * dy - p.r2;
    return std::hypot(ex, ey);
}

} // namespace detail

/// Builds the canonical Pareto polyline for the down-closure of the convex
/// hull of the given achievable points.
inline RateRegion2D region_from_points(std::vector<Point> pts, double tol = kGeomTol) {
    double r1m = 0.0, r2m = 0.0;
    for (Point& p : pts) {
        p.r1 = std::max(p.r1, 0.0);
        p.r2 = std::max(p.r2, 0.0);
        r1m = std::max(r1m, p.r1);
        r2m = std::max(r2m, p.r2);
    }
    RateRegion2D region;
    if (pts.empty() || (r1m <= tol && r2m <= tol)) {
        region.vertices = {Point{0.0, 0.0}};
        return region;
    }
    pts.push_back({0.0, 0.0});
    pts.push_back({0.0, r2m});
    pts.push_back({r1m, 0.0});
    std::vector<Point> hull = detail::convex_hull(std::move(pts), tol);
    // in ccw order the upper-right boundary runs from the max-R1 vertex to
    // the max-R2 vertex; reversing it yields the Pareto chain with both
    // axis intercepts included
    size_t start = 0, stop = 0;
    for (size_t i = 0; i < hull.size(); ++i) {
        const Point& h = hull[i];
        const Point& s = hull[start];
        const Point& e = hull[stop];
        if (h.r2 > s.r2 || (h.r2 == s.r2 && h.r1 < s.r1)) start = i;
        if (h.r1 > e.r1 || (h.r1 == e.r1 && h.r2 < e.r2)) stop = i;
    }
    for (size_t i = stop;; i = (i + 1) % hull.size()) {
        region.vertices.push_back(hull[i]);
        if (i == start) break;
    }
    std::reverse(region.vertices.begin(), region.vertices.end());
    return region;
}

/// Exact projection of a split-rate polytope onto the (R1, R2) plane by
/// Fourier--Motzkin elimination. R13 and R23 are first substituted out via
/// R1 = R12 + R13, R2 = R21 + R23; then R12 and R21 are eliminated, with
/// redundant rows pruned after each step.
inline RateRegion2D project_to_r1_r2(const SplitRatePolytope& p) {
    // feasibility: all coefficients are nonnegative, so a negative bound
    // admits no nonnegative solution at all
    for (const SplitConstraint& c : p.constraints)
        for (double a : c.coeff)
            if (a < 0.0) throw std::domain_error("project_to_r1_r2: negative coefficient");
    for (const SplitConstraint& c : p.constraints)
        if (c.bound < 0.0) {
            RateRegion2D r;
            r.vertices = {Point{0.0, 0.0}};
            return r;
        }

    // boundedness: every split must carry a positive coefficient somewhere
    std::array<double, 4> cap;
    for (int v = 0; v < 4; ++v) {
        cap[v] = kInf;
        for (const SplitConstraint& c : p.constraints)
            if (c.coeff[v] > 0.0) cap[v] = std::min(cap[v], c.bound / c.coeff[v]);
        if (std::isinf(cap[v])) throw std::domain_error("unbounded region");
    }

    // rows over (R12, R21, R1, R2): c0*R12 + c1*R21 + c2*R1 + c3*R2 <= b
    using Row = std::array<double, 5>;
    std::vector<Row> rows;
    for (const SplitConstraint& c : p.constraints)
        rows.push_back({c.coeff[0] - c.coeff[1], c.coeff[2] - c.coeff[3], c.coeff[1], c.coeff[3],
                        c.bound});
    rows.push_back({-1, 0, 0, 0, 0});  // R12 >= 0
    rows.push_back({1, 0, -1, 0, 0});  // R13 = R1 - R12 >= 0
    rows.push_back({0, -1, 0, 0, 0});  // R21 >= 0
    rows.push_back({0, 1, 0, -1, 0});  // R23 = R2 - R21 >= 0

    auto prune = [](std::vector<Row>& rs) {
        std::vector<Row> out;
        for (Row r : rs) {
            double scale = std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2]), std::abs(r[3])});
            if (scale <= 1e-14) {
                if (r[4] < -1e-12) out.push_back({0, 0, 0, 0, -1}); // infeasible marker
                continue;
            }
            for (double& x : r) x /= scale;
            bool dominated = false;
            for (Row& q : out) {
                if (std::abs(q[0] - r[0]) <= 1e-12 && std::abs(q[1] - r[1]) <= 1e-12 &&
                    std::abs(q[2] - r[2]) <= 1e-12 && std::abs(q[3] - r[3]) <= 1e-12) {
                    q[4] = std::min(q[4], r[4]);
                    dominated = true;
                    break;
                }
            }
            if (!dominated) out.push_back(r);
        }
        rs = std::move(out);
    };

    auto eliminate = [&prune](std::vector<Row>& rs, int var) {
        std::vector<Row> zero, pos, neg;
        for (const Row& r : rs) {
            if (r[var] > 1e-14) pos.push_back(r);
            else if (r[var] < -1e-14) neg.push_back(r);
            else zero.push_back(r);
        }
        for (const Row& u : pos)
            for (const Row& l : neg) {
                Row r;
                for (int i = 0; i < 5; ++i) r[i] = u[i] * (-l[var]) + l[i] * u[var];
                r[var] = 0.0;
                zero.push_back(r);
            }
        prune(zero);
        rs = std::move(zero);
    };

    prune(rows);
    eliminate(rows, 0); // R12
    eliminate(rows, 1); // R21

    // remaining rows are half-planes over (R1, R2); clip a bounding box
    const double m1 = cap[0] + cap[1], m2 = cap[2] + cap[3];
    std::vector<Point> poly = {{0, 0}, {m1, 0}, {m1, m2}, {0, m2}};
    for (const Row& r : rows) {
        const double a = r[2], b = r[3], rhs = r[4];
        if (std::abs(a) <= 1e-14 && std::abs(b) <= 1e-14) {
            if (rhs < -1e-12) poly.clear(); // infeasible
            continue;
        }
        std::vector<Point> next;
        const size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& cur = poly[i];
            const Point& nxt = poly[(i + 1) % n];
            const double dc = a * cur.r1 + b * cur.r2 - rhs;
            const double dn = a * nxt.r1 + b * nxt.r2 - rhs;
            if (dc <= 1e-12) next.push_back(cur);
            if ((dc < -1e-12 && dn > 1e-12) || (dc > 1e-12 && dn < -1e-12)) {
                const double t = dc / (dc - dn);
                next.push_back({cur.r1 + t * (nxt.r1 - cur.r1), cur.r2 + t * (nxt.r2 - cur.r2)});
            }
        }
        poly = std::move(next);
        if (poly.empty()) break;
    }
    return region_from_points(std::move(poly));
}

/// Convex hull of the union of regions, re-expressed as a Pareto boundary.
inline RateRegion2D convex_union(const std::vector<RateRegion2D>& regions) {
    if (regions.empty()) throw std::invalid_argument("convex_union: empty input");
    std::vector<Point> pts;
    for (const RateRegion2D& r : regions)
        for (const Point& v : r.vertices) pts.push_back(v);
    return region_from_points(std::move(pts));
}

/// Signed check: p inside the (down-closed convex) region within tol.
inline bool region_contains_point(const RateRegion2D& region, const Point& p, double tol = kGeomTol) {
    if (p.r1 < -tol || p.r2 < -tol) return false;
    if (region.vertices.empty()) return p.r1 <= tol && p.r2 <= tol;
    if (p.r1 > region.r1_max() + tol) return false;
    if (p.r2 > region.r2_max() + tol) return false;
    const std::vector<Point>& v = region.vertices;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        // outward normal of the Pareto edge; offsets are in bits, so the
        // tolerance is applied to the normalized distance
        const double a = v[i].r2 - v[i + 1].r2;
        const double b = v[i + 1].r1 - v[i].r1;
        const double norm = std::hypot(a, b);
        if (norm <= 0.0) continue;
        const double excess = a * (p.r1 - v[i].r1) + b * (p.r2 - v[i].r2);
        if (excess > tol * norm) return false;
    }
    return true;
}

inline bool region_contains(const RateRegion2D& outer, const RateRegion2D& inner,
                            double tol = kGeomTol) {
    for (const Point& v : inner.vertices)
        if (!region_contains_point(outer, v, tol)) return false;
    return true;
}

/// Distance from a point to the region (0 if inside).
inline double region_distance(const RateRegion2D& region, const Point& p) {
    if (region_contains_point(region, p, 0.0)) return 0.0;
    std::vector<Point> poly = region.polygon();
    if (poly.size() == 1) return std::hypot(p.r1 - poly[0].r1, p.r2 - poly[0].r2);
    double best = kInf;
    for (size_t i = 0; i < poly.size(); ++i)
        best = std::min(best, detail::dist_point_segment(p, poly[i], poly[(i + 1) % poly.size()]));
    return best;
}

/// Hausdorff distance between two convex regions; the suprema are attained
/// at polygon vertices.
inline double hausdorff(const RateRegion2D& a, const RateRegion2D& b) {
    double d = 0.0;
    for (const Point& v : a.polygon()) d = std::max(d, region_distance(b, v));
    for (const Point& v : b.polygon()) d = std::max(d, region_distance(a, v));
    return d;
}

/// Fast Pareto corner points of the canonical six-bound Theorem-1 shape.
/// The exact projection of that system is
///   R1 <= b12 + min(b13, b13_23),  R2 <= b21 + min(b23, b13_23),
///   R1 + R2 <= min(b_sum, b12 + b21 + b13_23),
/// intersected with the box implied by the single bounds; used in sweep
/// hot loops and cross-checked against project_to_r1_r2 in the tests.
inline void theorem1_pareto_points(Bits b12, Bits b13, Bits b21, Bits b23, Bits b13_23, Bits b_sum,
                                   std::array<Point, 5>& out, int& count) {
    const double X = b12 + std::min(b13, b13_23);
    const double Y = b21 + std::min(b23, b13_23);
    const double T = std::min(b_sum, b12 + b21 + b13_23);
    const double x_top = std::clamp(T - Y, 0.0, X); // widest R1 at R2 = Ymax
    const double y_cap = std::min(Y, T);
    const double x_cap = std::min(X, T);
    const double y_right = std::clamp(T - X, 0.0, Y);
    count = 0;
    out[count++] = {0.0, y_cap};
    out[count++] = {std::min(x_top, x_cap), y_cap};
    out[count++] = {x_cap, std::min(y_right, y_cap)};
    out[count++] = {x_cap, 0.0};
}

} // namespace gmac
