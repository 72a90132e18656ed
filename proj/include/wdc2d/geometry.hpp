#ifndef WDC2D_GEOMETRY_HPP
#define WDC2D_GEOMETRY_HPP

#include "wdc2d/dc1.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

namespace wdc {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double x_, double y_) : x(x_), y(y_) {}

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    Point2 operator/(double s) const { return {x / s, y / s}; }

    double dot(const Point2& o) const { return x * o.x + y * o.y; }
    double cross(const Point2& o) const { return x * o.y - y * o.x; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Point2 operator*(double s, const Point2& p) { return p * s; }
inline double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

/// Direction on the unit circle; the factory normalizes and rejects zero input.
struct UnitVector {
    double x = 1.0;
    double y = 0.0;

    static UnitVector of(double vx, double vy);
    static UnitVector from_angle(double phi) { return {std::cos(phi), std::sin(phi)}; }
    Point2 point() const { return {x, y}; }
    UnitVector negated() const { return {-x, -y}; }
};

/// Cached rotation; keeps de-rotation bit-deterministic across calls.
struct Rot2 {
    double c = 1.0;
    double s = 0.0;

    static Rot2 from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
    Point2 apply(const Point2& p) const { return {c * p.x - s * p.y, s * p.x + c * p.y}; }
    Point2 unapply(const Point2& p) const { return {c * p.x + s * p.y, -s * p.x + c * p.y}; }
};

struct Segment {
    Point2 a;
    Point2 b;
};

/// Closest point on a segment; ties toward the segment start.
struct SegmentProjection {
    double dist;
    Point2 nearest;
};
SegmentProjection point_segment_distance(const Point2& p, const Segment& s);

/// Circular arc, counterclockwise from ang_lo to ang_hi (radians,
/// ang_hi > ang_lo, span <= 2*pi).
struct ArcPiece {
    Point2 center;
    double radius = 0.0;
    double ang_lo = 0.0;
    double ang_hi = 0.0;

    Point2 at(double phi) const
    {
        return {center.x + radius * std::cos(phi), center.y + radius * std::sin(phi)};
    }
    double span() const { return ang_hi - ang_lo; }
};
SegmentProjection point_arc_distance(const Point2& p, const ArcPiece& arc);

/// Rotated PL graph { anchor + R_theta(u, profile(u)) : u in [u_lo, u_hi] },
/// optionally clipped to the disc B(anchor, clip_radius). Flattened to a
/// polyline before distance queries.
struct PLGraphPiece {
    double theta = 0.0;
    DCFun1 profile;
    Rational u_lo;
    Rational u_hi;
    Point2 anchor;
    double clip_radius = 0.0;   // <= 0 disables clipping
};

/// Convex polygon (possibly a point or a segment) in counterclockwise order.
class SubdiffHull {
public:
    SubdiffHull() = default;
    explicit SubdiffHull(std::vector<Point2> ccw_vertices) : vertices_(std::move(ccw_vertices)) {}

    /// Convex hull of a point cloud; duplicates within dedup_eps collapse,
    /// collinear interior points are dropped.
    static SubdiffHull of(std::vector<Point2> cloud, double dedup_eps = 1e-12);

    const std::vector<Point2>& vertices() const& { return vertices_; }
    std::vector<Point2> vertices() && { return std::move(vertices_); }   // rvalue-safe
    bool empty() const { return vertices_.empty(); }
    std::size_t size() const { return vertices_.size(); }

private:
    std::vector<Point2> vertices_;
};

double distance_origin_to_hull(const SubdiffHull& hull);
double point_hull_distance(const SubdiffHull& hull, const Point2& q);
SubdiffHull scaled_hull(const SubdiffHull& hull, double alpha);

/// Compact planar set: points, segments, arcs and clipped rotated PL graphs,
/// plus an optional filled-interior predicate for two-dimensional sets whose
/// listed primitives form the boundary.
class CompactSetModel {
public:
    void add_point(const Point2& p) { points_.push_back(p); dirty_ = true; }
    void add_segment(const Point2& a, const Point2& b)
    {
        segments_.push_back({a, b});
        dirty_ = true;
    }
    void add_arc(const ArcPiece& arc) { arcs_.push_back(arc); dirty_ = true; }
    void add_graph(PLGraphPiece piece) { graphs_.push_back(std::move(piece)); dirty_ = true; }
    void set_interior(std::function<bool(const Point2&)> pred) { interior_ = std::move(pred); }

    bool empty() const
    {
        return points_.empty() && segments_.empty() && arcs_.empty() && graphs_.empty();
    }
    bool has_interior() const { return static_cast<bool>(interior_); }

    const std::vector<Point2>& points() const { return points_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<ArcPiece>& arcs() const { return arcs_; }
    const std::vector<PLGraphPiece>& graphs() const { return graphs_; }
    /// Explicit segments plus flattened graph polylines.
    const std::vector<Segment>& flattened_segments() const;

    /// Distance only; 0 inside a filled region.
    double distance(const Point2& z) const;
    /// Membership with the default scale-aware tolerance.
    bool contains(const Point2& z, double tol = -1.0) const;

    struct Projection {
        double dist = 0.0;
        std::vector<Point2> points;
    };
    /// All nearest points within dist + tau, deduplicated at spacing tau.
    /// tau < 0 selects the default 1e-9 * (1 + |z|). Throws on empty models.
    Projection metric_projection(const Point2& z, double tau = -1.0) const;

    /// Arc-length samples of every primitive at spacing <= delta; isolated
    /// points are always included.
    std::vector<Point2> boundary_samples(double spacing) const;

    double max_norm() const;   // radius of the smallest origin-centred ball cover

private:
    std::vector<Point2> points_;
    std::vector<Segment> segments_;
    std::vector<ArcPiece> arcs_;
    std::vector<PLGraphPiece> graphs_;
    std::function<bool(const Point2&)> interior_;

    mutable bool dirty_ = true;
    mutable std::vector<Segment> flat_;
    void ensure_flat() const;
};

struct HausdorffResult {
    double distance = 0.0;
    double error_bound = 0.0;
};

/// Two-sided sup-inf distance over boundary discretizations of spacing
/// <= resolution; the reported bound covers the sampling error.
HausdorffResult hausdorff_distance(const CompactSetModel& k1, const CompactSetModel& k2,
                                   double resolution);

/// Distance from a point to the graph of a total PL function (polyline with
/// two unbounded end rays).
double graph_distance(const TotalPL& f, const Point2& p);

} // namespace wdc

#endif
