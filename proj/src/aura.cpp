#include "wdc2d/aura.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wdc {

DegenerateExtension::DegenerateExtension(const DCFun1& upper_profile,
                                         const DCFun1& lower_profile, double rho, Rational L)
    : rho_(rho)
{
    if (!(rho > 0.0)) throw std::invalid_argument("DegenerateExtension: rho must be positive");
    const Rational rrho = rational_from_double(rho);
    const DCFun1 f = upper_profile.restricted(Rational(0), rrho);
    const DCFun1 g = lower_profile.restricted(Rational(0), rrho);
    const Rational actual = std::max(lipschitz_constant(f), lipschitz_constant(g));
    L_ = (L < 0) ? actual : L;
    if (L_ < actual)
        throw std::invalid_argument("DegenerateExtension: L below the profile Lipschitz constant");
    upper_ = extend_clamped(f, ExtendMode::upper_sector, L_);
    lower_ = extend_clamped(g, ExtendMode::lower_sector, L_);
    flat_upper_ = flatten(upper_);
    flat_lower_ = flatten(lower_);
}

DegenerateExtension DegenerateExtension::from_sector(const DegenerateClosedSector& s)
{
    return DegenerateExtension(s.upper, s.lower, s.radius);
}

DegenerateExtension::FlatGraph DegenerateExtension::flatten(const TotalPL& f)
{
    FlatGraph out;
    for (const auto& u : f.merged_knots())
        out.pts.push_back({to_double(u), to_double(f.eval(u))});
    out.slope_left = to_double(f.g.slope_left() - f.h.slope_left());
    out.slope_right = to_double(f.g.slope_right() - f.h.slope_right());
    return out;
}

double DegenerateExtension::FlatGraph::dist(const Point2& y) const
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        best = std::min(best, point_segment_distance(y, {pts[i], pts[i + 1]}).dist);
    auto ray = [&](const Point2& origin, const Point2& dir) {
        const double t = std::max(0.0, (y - origin).dot(dir) / dir.norm2());
        return (y - (origin + t * dir)).norm();
    };
    best = std::min(best, ray(pts.front(), {-1.0, -slope_left}));
    best = std::min(best, ray(pts.back(), {1.0, slope_right}));
    return best;
}

double DegenerateExtension::upper_graph_distance(const Point2& y) const
{
    return flat_upper_.dist(y);
}

double DegenerateExtension::lower_graph_distance(const Point2& y) const
{
    return flat_lower_.dist(y);
}

Region region_classify(const Point2& y, const DegenerateExtension& ext)
{
    const Rational u = rational_from_double(y.x);
    const Rational v = rational_from_double(y.y);
    if (u >= 0) {
        const Rational fv = ext.upper().eval(u);
        const Rational gv = ext.lower().eval(u);
        if (gv <= v && v <= fv) return Region::core;
        return v > fv ? Region::above : Region::below;
    }
    const Rational& L = ext.lipschitz();
    if (L == 0) return Region::behind;      // both boundary lines collapse
    if (v > -u / (2 * L)) return Region::above;
    if (v < u / (2 * L)) return Region::below;
    return Region::behind;
}

double extension_distance(const Point2& y, const DegenerateExtension& ext)
{
    switch (region_classify(y, ext)) {
    case Region::core: return 0.0;
    case Region::above: return ext.upper_graph_distance(y);
    case Region::below: return ext.lower_graph_distance(y);
    case Region::behind: return y.norm();
    }
    return 0.0;
}

CompactSetModel graph_model(const TotalPL& f, double u_lo, double u_hi)
{
    if (!(u_lo < u_hi)) throw std::invalid_argument("graph_model: need u_lo < u_hi");
    std::vector<Rational> us{rational_from_double(u_lo)};
    for (const auto& u : f.merged_knots())
        if (u > us.front() && u < rational_from_double(u_hi)) us.push_back(u);
    us.push_back(rational_from_double(u_hi));
    CompactSetModel out;
    Point2 prev;
    for (std::size_t i = 0; i < us.size(); ++i) {
        const Point2 p{to_double(us[i]), to_double(f.eval(us[i]))};
        if (i > 0) out.add_segment(prev, p);
        prev = p;
    }
    return out;
}

CompactSetModel extension_region_model(const DegenerateExtension& ext, double extent)
{
    if (!(extent > 0.0)) throw std::invalid_argument("extension_region_model: bad extent");
    const Rational re = rational_from_double(extent);
    CompactSetModel out;
    auto add_graph = [&](const TotalPL& f) {
        std::vector<Rational> us{Rational(0)};
        for (const auto& u : f.merged_knots())
            if (u > 0 && u < re) us.push_back(u);
        us.push_back(re);
        Point2 prev;
        for (std::size_t i = 0; i < us.size(); ++i) {
            const Point2 p{to_double(us[i]), to_double(f.eval(us[i]))};
            if (i > 0) out.add_segment(prev, p);
            prev = p;
        }
        return prev;   // right end point
    };
    const Point2 top = add_graph(ext.upper());
    const Point2 bottom = add_graph(ext.lower());
    if ((top - bottom).norm() > 0.0) out.add_segment(bottom, top);

    const TotalPL upper = ext.upper();
    const TotalPL lower = ext.lower();
    const double ext_hi = extent;
    out.set_interior([upper, lower, ext_hi](const Point2& p) {
        if (p.x < 0.0 || p.x > ext_hi) return false;
        return lower.eval_d(p.x) <= p.y && p.y <= upper.eval_d(p.x);
    });
    return out;
}

AuraEvaluator::AuraEvaluator(const LocalModel& m) : model_(m)
{
    const auto violations = validate_model(m);
    if (!violations.empty())
        throw std::invalid_argument("AuraEvaluator: invalid model: " + violations.front());
    if (m.kind == LocalModel::Case::degenerate) {
        degenerate_.emplace(DegenerateExtension::from_sector(*m.closed_sector));
    } else if (m.kind == LocalModel::Case::complement) {
        for (const auto& s : m.sectors) {
            const Rational r = rational_from_double(s.radius);
            const DCFun1 restricted = s.profile.restricted(-r, r);
            wall_extensions_.push_back(
                extend_clamped(restricted, ExtendMode::constant_both,
                               lipschitz_constant(restricted)));
        }
    }
}

double AuraEvaluator::operator()(const Point2& y) const
{
    const Point2 rel = y - model_.center;
    if (rel.norm() >= model_.rho / 3.0)
        throw std::invalid_argument("AuraEvaluator: query outside the validity disc U(center, rho/3)");
    switch (model_.kind) {
    case LocalModel::Case::isolated:
        return rel.norm();
    case LocalModel::Case::degenerate: {
        const Point2 local = model_.closed_sector->rotation().unapply(rel);
        return extension_distance(local, *degenerate_);
    }
    case LocalModel::Case::complement: {
        for (std::size_t i = 0; i < model_.sectors.size(); ++i) {
            if (!sector_contains(model_.sectors[i], rel)) continue;
            const Point2 local = model_.sectors[i].rotation().unapply(rel);
            return graph_distance(wall_extensions_[i], local);
        }
        return 0.0;
    }
    }
    return 0.0;
}

double aura_distance(const LocalModel& m, const Point2& y)
{
    return AuraEvaluator(m)(y);
}

std::vector<double> default_eps_candidates()
{
    std::vector<double> out;
    for (int k = 1; k <= 16; ++k) out.push_back(std::ldexp(1.0, -k));
    return out;
}

namespace {

struct BBox {
    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
};

BBox bounding_box(const std::vector<Point2>& pts)
{
    BBox b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (const auto& p : pts) {
        b.xlo = std::min(b.xlo, p.x);
        b.xhi = std::max(b.xhi, p.x);
        b.ylo = std::min(b.ylo, p.y);
        b.yhi = std::max(b.yhi, p.y);
    }
    return b;
}

std::vector<Point2> band_sample_points(const CompactSetModel& set, double eps,
                                       const CertificateParams& params)
{
    std::vector<Point2> band;
    const auto coarse = set.boundary_samples(std::max(eps / 4.0, 1e-4));
    const BBox box = bounding_box(coarse);
    const double diam = std::hypot(box.xhi - box.xlo, box.yhi - box.ylo) + 1.0;

    // boundary-normal offsets: probe off the boundary, then step along the
    // gradient ray at prescribed band depths
    const double spacing = std::max(diam / 512.0, eps / 8.0);
    const auto anchors = set.boundary_samples(spacing);
    const double t0 = eps / 8.0;
    const double depths[] = {eps / 8.0, eps / 4.0, eps / 2.0, 3.0 * eps / 4.0};
    for (const auto& s : anchors) {
        for (int dir = 0; dir < 8; ++dir) {
            const double phi = 2.0 * M_PI * dir / 8.0;
            const Point2 probe = s + t0 * Point2{std::cos(phi), std::sin(phi)};
            const double d = set.distance(probe);
            if (!(d > 0.0 && d < eps)) continue;
            const auto proj = set.metric_projection(probe);
            if (proj.points.empty()) continue;
            const Point2 normal = (probe - proj.points.front()) / proj.dist;
            for (const double t : depths) {
                const Point2 q = proj.points.front() + t * normal;
                const double dq = set.distance(q);
                if (dq > 0.0 && dq < eps) band.push_back(q);
            }
        }
    }

    // uniform rejection sampling from the inflated bounding box
    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> ux(box.xlo - eps, box.xhi + eps);
    std::uniform_real_distribution<double> uy(box.ylo - eps, box.yhi + eps);
    int kept = 0;
    for (long attempt = 0; attempt < 200L * params.band_samples && kept < params.band_samples;
         ++attempt) {
        const Point2 q{ux(rng), uy(rng)};
        const double d = set.distance(q);
        if (d > 0.0 && d < eps) { band.push_back(q); ++kept; }
    }

    // exact midpoints of point primitives witness equidistance ridges
    const auto& pts = set.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Point2 mid = (pts[i] + pts[j]) / 2.0;
            const double d = set.distance(mid);
            if (d > 0.0 && d < eps) band.push_back(mid);
        }
    }
    return band;
}

} // namespace

std::optional<RegularityCertificate> weak_regularity_certificate(
    const CompactSetModel& set, const std::vector<double>& eps_candidates,
    const CertificateParams& params)
{
    if (set.empty()) throw std::invalid_argument("weak_regularity_certificate: empty set");
    for (std::size_t i = 0; i + 1 < eps_candidates.size(); ++i)
        if (eps_candidates[i] <= eps_candidates[i + 1])
            throw std::invalid_argument("weak_regularity_certificate: candidates must descend");

    for (const double eps : eps_candidates) {
        if (!(eps > 0.0)) throw std::invalid_argument("weak_regularity_certificate: eps <= 0");
        const auto samples = band_sample_points(set, eps, params);
        RegularityCertificate cert;
        cert.epsilon = eps;
        cert.min_hull_distance = std::numeric_limits<double>::infinity();
        bool ok = true;
        for (const auto& z : samples) {
            const double hd = distance_origin_to_hull(distance_subdifferential(z, set));
            cert.band.emplace_back(z, hd);
            if (hd < cert.min_hull_distance) {
                cert.min_hull_distance = hd;
                cert.worst_point = z;
            }
            if (hd < eps) { ok = false; break; }
        }
        if (ok && !samples.empty()) return cert;
        if (ok && samples.empty()) {
            // nothing to check in this band; the candidate holds vacuously
            cert.min_hull_distance = 1.0;
            return cert;
        }
    }
    return std::nullopt;
}

std::string certificate_report(const std::optional<RegularityCertificate>& cert)
{
    std::ostringstream os;
    os << "wdc2d-certificate v1\n";
    if (!cert) {
        os << "status absent\n";
        return os.str();
    }
    os << "status accepted\n";
    os << "epsilon " << cert->epsilon << "\n";
    os << "band_samples " << cert->band.size() << "\n";
    os << "min_hull_distance " << cert->min_hull_distance << "\n";
    os << "worst_point " << cert->worst_point.x << " " << cert->worst_point.y << "\n";
    return os.str();
}

GraphLemmaReport verify_graph_lemma(const TotalPL& f, int trials, unsigned long long seed)
{
    if (trials < 1) throw std::invalid_argument("verify_graph_lemma: trials must be >= 1");
    const double L = to_double(f.lipschitz_constant());
    const double scale = std::sqrt(L * L + 1.0);

    // clamp extent: power of two beyond any projection of a query in B(0,10)
    double extent = 32.0;
    const double f0 = std::abs(to_double(f.eval(Rational(0))));
    while (extent < 2.0 * (10.0 + f0) + 4.0) extent *= 2.0;
    const CompactSetModel model = graph_model(f, -extent, extent);

    GraphLemmaReport rep;
    rep.min_scaled_vertical = std::numeric_limits<double>::infinity();
    rep.max_band_excess = -std::numeric_limits<double>::infinity();
    rep.max_depth_excess = -std::numeric_limits<double>::infinity();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-10.0, 10.0);
    while (rep.trials < trials) {
        const Point2 z{uni(rng), uni(rng)};
        if (z.norm() > 10.0) continue;
        const double fz = f.eval_d(z.x);
        if (std::abs(fz - z.y) < 1e-3) continue;   // too close to the graph
        const double side = (fz > z.y) ? 1.0 : -1.0;
        ++rep.trials;

        const auto proj = model.metric_projection(z);
        const double r = proj.dist;
        const double band = L * r / scale;
        const double depth = r / scale;
        bool bad = false;
        for (const auto& p : proj.points) {
            const double u = p.x - z.x;
            const double v = p.y - z.y;
            const double band_excess = std::abs(u) - band;
            const double depth_excess = depth - side * v;
            rep.max_band_excess = std::max(rep.max_band_excess, band_excess);
            rep.max_depth_excess = std::max(rep.max_depth_excess, depth_excess);
            if (band_excess > 1e-9 || depth_excess > 1e-9) bad = true;
        }
        const auto hull = distance_subdifferential(z, model);
        for (const auto& xi : hull.vertices()) {
            const double scaled = std::abs(xi.y) * scale;
            if (scaled < rep.min_scaled_vertical) {
                rep.min_scaled_vertical = scaled;
                rep.worst_point = z;
            }
            if (scaled < 1.0 - 1e-7) bad = true;
        }
        if (bad) ++rep.violations;
    }
    return rep;
}

} // namespace wdc
