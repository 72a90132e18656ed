#include "wdc2d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wdc::oracle {

DenseSample densify(const CompactSetModel& model, double delta)
{
    if (delta <= 0.0) throw std::invalid_argument("densify: delta must be positive");
    if (model.empty()) throw std::invalid_argument("densify: empty model");
    DenseSample out;
    out.spacing = delta;
    out.points = model.points();

    for (const auto& s : model.segments()) {
        const double len = (s.b - s.a).norm();
        const int n = std::max(1, static_cast<int>(std::ceil(len / delta)));
        for (int i = 0; i <= n; ++i)
            out.points.push_back(s.a + (static_cast<double>(i) / n) * (s.b - s.a));
    }
    for (const auto& a : model.arcs()) {
        const double len = a.radius * a.span();
        const int n = std::max(1, static_cast<int>(std::ceil(len / delta)));
        for (int i = 0; i <= n; ++i)
            out.points.push_back(a.at(a.ang_lo + a.span() * static_cast<double>(i) / n));
    }
    for (const auto& g : model.graphs()) {
        // parameter sweep: arc length between u and u' is at most
        // |u - u'| * sqrt(1 + L^2)
        const double L = to_double(
            lipschitz_constant(g.profile, g.u_lo, g.u_hi));
        const double du = delta / std::sqrt(1.0 + L * L);
        const double lo = to_double(g.u_lo);
        const double hi = to_double(g.u_hi);
        const Rot2 rot = Rot2::from_angle(g.theta);
        const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / du)));
        for (int i = 0; i <= n; ++i) {
            const double u = lo + (hi - lo) * static_cast<double>(i) / n;
            const Point2 local{u, g.profile.eval_d(u)};
            const Point2 p = g.anchor + rot.apply(local);
            if (g.clip_radius > 0.0 && (p - g.anchor).norm() > g.clip_radius) continue;
            out.points.push_back(p);
        }
    }
    return out;
}

double brute_distance(const Point2& y, const DenseSample& s)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : s.points) best = std::min(best, (y - p).norm());
    return best;
}

std::vector<Point2> brute_projections(const Point2& y, const DenseSample& s, double tol)
{
    const double d = brute_distance(y, s);
    std::vector<Point2> out;
    for (const auto& p : s.points)
        if ((y - p).norm() <= d + tol) out.push_back(p);
    return out;
}

double brute_graph_distance(const std::function<double(double)>& value, double u_lo, double u_hi,
                            double slope_bound, const Point2& y, double coarse_step,
                            double final_step)
{
    const double stretch = std::sqrt(1.0 + slope_bound * slope_bound);
    struct Window { double lo, hi; };
    std::vector<Window> windows{{u_lo, u_hi}};
    double step = coarse_step;
    double best = std::numeric_limits<double>::infinity();

    while (true) {
        best = std::numeric_limits<double>::infinity();
        std::vector<std::pair<double, double>> samples;   // (u, dist)
        for (const auto& w : windows) {
            const int n = std::max(1, static_cast<int>(std::ceil((w.hi - w.lo) / step)));
            for (int i = 0; i <= n; ++i) {
                const double u = w.lo + (w.hi - w.lo) * static_cast<double>(i) / n;
                const double d = (y - Point2{u, value(u)}).norm();
                samples.emplace_back(u, d);
                best = std::min(best, d);
            }
        }
        if (step <= final_step) return best;
        // keep every sample that could still bracket the true minimum
        const double keep = best + 2.0 * step * stretch;
        std::vector<Window> next;
        for (const auto& [u, d] : samples) {
            if (d > keep) continue;
            const double lo = std::max(u_lo, u - step);
            const double hi = std::min(u_hi, u + step);
            if (!next.empty() && lo <= next.back().hi) next.back().hi = std::max(next.back().hi, hi);
            else next.push_back({lo, hi});
        }
        windows = std::move(next);
        step /= 16.0;
    }
}

double brute_region_distance(const Point2& y, const std::function<bool(const Point2&)>& member,
                             const DenseSample& boundary)
{
    if (member(y)) return 0.0;
    return brute_distance(y, boundary);
}

} // namespace wdc::oracle
