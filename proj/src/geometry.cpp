#include "wdc2d/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace wdc {

UnitVector UnitVector::of(double vx, double vy)
{
    const double n = std::sqrt(vx * vx + vy * vy);
    if (n == 0.0) throw std::invalid_argument("UnitVector::of: zero vector");
    return {vx / n, vy / n};
}

SegmentProjection point_segment_distance(const Point2& p, const Segment& s)
{
    const Point2 d = s.b - s.a;
    const double len2 = d.norm2();
    if (len2 == 0.0) return {distance(p, s.a), s.a};
    double t = (p - s.a).dot(d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 nearest = s.a + t * d;
    return {distance(p, nearest), nearest};
}

SegmentProjection point_arc_distance(const Point2& p, const ArcPiece& arc)
{
    const Point2 r = p - arc.center;
    const double rn = r.norm();
    if (rn > 0.0) {
        double phi = std::atan2(r.y, r.x);
        // lift phi into [ang_lo, ang_lo + 2*pi)
        const double two_pi = 2.0 * M_PI;
        double lifted = phi;
        while (lifted < arc.ang_lo) lifted += two_pi;
        while (lifted >= arc.ang_lo + two_pi) lifted -= two_pi;
        if (lifted <= arc.ang_hi) {
            const Point2 nearest = arc.at(lifted);
            return {std::abs(rn - arc.radius), nearest};
        }
    }
    const Point2 a = arc.at(arc.ang_lo);
    const Point2 b = arc.at(arc.ang_hi);
    const double da = distance(p, a);
    const double db = distance(p, b);
    // p at the centre sees the whole arc at equal distance; the midpoint is
    // the deterministic representative
    if (rn == 0.0) return {arc.radius, arc.at(0.5 * (arc.ang_lo + arc.ang_hi))};
    return da <= db ? SegmentProjection{da, a} : SegmentProjection{db, b};
}

SubdiffHull SubdiffHull::of(std::vector<Point2> cloud, double dedup_eps)
{
    if (cloud.empty()) return SubdiffHull();
    std::sort(cloud.begin(), cloud.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::vector<Point2> pts;
    for (const auto& p : cloud) {
        if (pts.empty() || distance(pts.back(), p) > dedup_eps) pts.push_back(p);
    }
    if (pts.size() == 1) return SubdiffHull({pts[0]});

    auto build = [](const std::vector<Point2>& src, std::vector<Point2>& out, bool lower) {
        for (std::size_t idx = 0; idx < src.size(); ++idx) {
            const Point2& p = lower ? src[idx] : src[src.size() - 1 - idx];
            while (out.size() >= 2) {
                const Point2& q = out[out.size() - 1];
                const Point2& r = out[out.size() - 2];
                if ((q - r).cross(p - r) <= 0.0) out.pop_back();
                else break;
            }
            out.push_back(p);
        }
    };
    std::vector<Point2> lower, upper;
    build(pts, lower, true);
    build(pts, upper, false);
    lower.pop_back();
    upper.pop_back();
    std::vector<Point2> hull = lower;
    hull.insert(hull.end(), upper.begin(), upper.end());
    if (hull.size() < 2) {
        // fully collinear cloud degenerates to its extreme points
        hull = {pts.front(), pts.back()};
        if (distance(hull[0], hull[1]) <= dedup_eps) hull.pop_back();
    }
    return SubdiffHull(std::move(hull));
}

double point_hull_distance(const SubdiffHull& hull, const Point2& q)
{
    const auto& v = hull.vertices();
    if (v.empty()) throw std::invalid_argument("point_hull_distance: empty hull");
    if (v.size() == 1) return distance(q, v[0]);
    if (v.size() == 2) return point_segment_distance(q, {v[0], v[1]}).dist;
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        if ((b - a).cross(q - a) < 0.0) inside = false;
        best = std::min(best, point_segment_distance(q, {a, b}).dist);
    }
    return inside ? 0.0 : best;
}

double distance_origin_to_hull(const SubdiffHull& hull)
{
    return point_hull_distance(hull, Point2{0.0, 0.0});
}

SubdiffHull scaled_hull(const SubdiffHull& hull, double alpha)
{
    std::vector<Point2> v = hull.vertices();
    for (auto& p : v) p = p * alpha;
    if (alpha < 0.0) std::reverse(v.begin(), v.end());
    return SubdiffHull(std::move(v));
}

namespace {

/// Clip segment ab to the closed disc B(c, R); empty when it misses the disc.
std::optional<Segment> clip_to_disc(const Point2& a, const Point2& b, const Point2& c, double R)
{
    const Point2 d = b - a;
    const Point2 m = a - c;
    const double A = d.norm2();
    if (A == 0.0) {
        if (m.norm() <= R) return Segment{a, a};
        return std::nullopt;
    }
    const double B = 2.0 * m.dot(d);
    const double C = m.norm2() - R * R;
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) return std::nullopt;
    const double sq = std::sqrt(disc);
    double t0 = (-B - sq) / (2.0 * A);
    double t1 = (-B + sq) / (2.0 * A);
    t0 = std::max(t0, 0.0);
    t1 = std::min(t1, 1.0);
    if (t0 > t1) return std::nullopt;
    return Segment{a + t0 * d, a + t1 * d};
}

} // namespace

void CompactSetModel::ensure_flat() const
{
    if (!dirty_) return;
    flat_ = segments_;
    for (const auto& g : graphs_) {
        const Rot2 rot = Rot2::from_angle(g.theta);
        std::vector<Rational> us;
        us.push_back(g.u_lo);
        for (const auto& u : g.profile.merged_knots())
            if (u > g.u_lo && u < g.u_hi) us.push_back(u);
        us.push_back(g.u_hi);
        std::vector<Point2> pts;
        pts.reserve(us.size());
        for (const auto& u : us) {
            const double ud = to_double(u);
            const double vd = to_double(g.profile.eval(u));
            pts.push_back(g.anchor + rot.apply({ud, vd}));
        }
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (g.clip_radius > 0.0) {
                auto clipped = clip_to_disc(pts[i], pts[i + 1], g.anchor, g.clip_radius);
                if (clipped) flat_.push_back(*clipped);
            } else {
                flat_.push_back({pts[i], pts[i + 1]});
            }
        }
    }
    dirty_ = false;
}

const std::vector<Segment>& CompactSetModel::flattened_segments() const
{
    ensure_flat();
    return flat_;
}

double CompactSetModel::distance(const Point2& z) const
{
    if (empty()) throw std::invalid_argument("CompactSetModel::distance: empty model");
    if (interior_ && interior_(z)) return 0.0;
    ensure_flat();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : points_) best = std::min(best, (z - p).norm());
    for (const auto& s : flat_) best = std::min(best, point_segment_distance(z, s).dist);
    for (const auto& a : arcs_) best = std::min(best, point_arc_distance(z, a).dist);
    return best;
}

bool CompactSetModel::contains(const Point2& z, double tol) const
{
    if (tol < 0.0) tol = 1e-9 * (1.0 + z.norm());
    if (interior_ && interior_(z)) return true;
    return distance(z) <= tol;
}

CompactSetModel::Projection CompactSetModel::metric_projection(const Point2& z, double tau) const
{
    if (empty()) throw std::invalid_argument("metric_projection: empty model");
    if (tau < 0.0) tau = 1e-9 * (1.0 + z.norm());
    if (interior_ && interior_(z)) return {0.0, {z}};
    ensure_flat();

    std::vector<SegmentProjection> cands;
    cands.reserve(points_.size() + flat_.size() + arcs_.size());
    for (const auto& p : points_) cands.push_back({(z - p).norm(), p});
    for (const auto& s : flat_) cands.push_back(point_segment_distance(z, s));
    for (const auto& a : arcs_) cands.push_back(point_arc_distance(z, a));

    double d = std::numeric_limits<double>::infinity();
    for (const auto& c : cands) d = std::min(d, c.dist);

    std::vector<Point2> nearest;
    for (const auto& c : cands) {
        if (c.dist > d + tau) continue;
        bool dup = false;
        for (const auto& q : nearest)
            if ((q - c.nearest).norm() <= tau) { dup = true; break; }
        if (!dup) nearest.push_back(c.nearest);
    }
    return {d, std::move(nearest)};
}

std::vector<Point2> CompactSetModel::boundary_samples(double spacing) const
{
    if (spacing <= 0.0) throw std::invalid_argument("boundary_samples: spacing must be positive");
    ensure_flat();
    std::vector<Point2> out = points_;
    for (const auto& s : flat_) {
        const double len = (s.a - s.b).norm();
        const int n = std::max(1, static_cast<int>(std::ceil(len / spacing)));
        for (int i = 0; i <= n; ++i) out.push_back(s.a + (static_cast<double>(i) / n) * (s.b - s.a));
    }
    for (const auto& a : arcs_) {
        const double len = a.radius * a.span();
        const int n = std::max(1, static_cast<int>(std::ceil(len / spacing)));
        for (int i = 0; i <= n; ++i)
            out.push_back(a.at(a.ang_lo + a.span() * static_cast<double>(i) / n));
    }
    return out;
}

double CompactSetModel::max_norm() const
{
    ensure_flat();
    double best = 0.0;
    for (const auto& p : points_) best = std::max(best, p.norm());
    for (const auto& s : flat_) best = std::max({best, s.a.norm(), s.b.norm()});
    for (const auto& a : arcs_) best = std::max(best, a.center.norm() + a.radius);
    return best;
}

HausdorffResult hausdorff_distance(const CompactSetModel& k1, const CompactSetModel& k2,
                                   double resolution)
{
    if (resolution <= 0.0) throw std::invalid_argument("hausdorff_distance: resolution must be positive");
    const auto s1 = k1.boundary_samples(resolution);
    const auto s2 = k2.boundary_samples(resolution);
    double sup = 0.0;
    for (const auto& p : s1) sup = std::max(sup, k2.distance(p));
    for (const auto& p : s2) sup = std::max(sup, k1.distance(p));
    return {sup, resolution};
}

double graph_distance(const TotalPL& f, const Point2& p)
{
    const auto knots = f.merged_knots();
    std::vector<Point2> pts;
    pts.reserve(knots.size());
    for (const auto& u : knots)
        pts.push_back({to_double(u), to_double(f.eval(u))});

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        best = std::min(best, point_segment_distance(p, {pts[i], pts[i + 1]}).dist);

    // end rays
    auto ray_dist = [&](const Point2& origin, const Point2& dir) {
        const double t = std::max(0.0, (p - origin).dot(dir) / dir.norm2());
        return distance(p, origin + t * dir);
    };
    const double sl = to_double(f.g.slope_left() - f.h.slope_left());
    const double sr = to_double(f.g.slope_right() - f.h.slope_right());
    best = std::min(best, ray_dist(pts.front(), Point2{-1.0, -sl}));
    best = std::min(best, ray_dist(pts.back(), Point2{1.0, sr}));
    return best;
}

} // namespace wdc
