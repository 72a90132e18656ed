#include "wdc2d/clarke.hpp"

#include <cmath>
#include <stdexcept>

namespace wdc {

namespace {

constexpr double kGoldenAngle = 2.399963229728653;

/// Deterministic quasi-uniform samples of the open disc U(c, r).
Point2 disc_sample(const Point2& c, double r, int i, int n)
{
    const double rho = r * std::sqrt((i + 0.5) / n);
    const double phi = kGoldenAngle * i;
    return {c.x + rho * std::cos(phi), c.y + rho * std::sin(phi)};
}

} // namespace

SubdiffHull distance_subdifferential(const Point2& z, const CompactSetModel& set, double tau)
{
    const auto proj = set.metric_projection(z, tau);
    const double guard = 1e-12 * (1.0 + z.norm());
    if (proj.dist <= guard || (set.has_interior() && set.contains(z, 0.0)))
        throw std::invalid_argument("distance_subdifferential: query point lies on the set");
    std::vector<Point2> dirs;
    dirs.reserve(proj.points.size());
    for (const auto& p : proj.points) {
        const Point2 d = z - p;
        dirs.push_back(d / d.norm());   // near-minimal ties normalize individually
    }
    return SubdiffHull::of(std::move(dirs));
}

SubdiffHull sampled_clarke(const LipschitzEvaluator2& f, const Point2& x, double h,
                           int samples, double kink_filter)
{
    if (h <= 0.0) throw std::invalid_argument("sampled_clarke: h must be positive");
    if (samples < 8) throw std::invalid_argument("sampled_clarke: need at least 8 samples");
    const double step = h / 100.0;
    const double threshold = f.lipschitz * kink_filter;

    std::vector<Point2> grads, all_grads;
    for (int i = 0; i < samples; ++i) {
        const Point2 y = disc_sample(x, h, i, samples);
        const double fy = f(y);
        const double fxp = f({y.x + step, y.y});
        const double fxm = f({y.x - step, y.y});
        const double fyp = f({y.x, y.y + step});
        const double fym = f({y.x, y.y - step});
        const Point2 grad{(fxp - fxm) / (2.0 * step), (fyp - fym) / (2.0 * step)};
        all_grads.push_back(grad);
        const double dx = std::abs((fxp - fy) / step - (fy - fxm) / step);
        const double dy = std::abs((fyp - fy) / step - (fy - fym) / step);
        if (dx > threshold || dy > threshold) continue;   // straddles a kink
        grads.push_back(grad);
    }
    if (grads.empty()) grads = std::move(all_grads);
    return SubdiffHull::of(std::move(grads), 1e-12);
}

double directional_upper_derivative(const LipschitzEvaluator2& f, const Point2& x,
                                    const UnitVector& v, const QuotientGrid& grid)
{
    double best = -std::numeric_limits<double>::infinity();
    auto probe = [&](const Point2& y, double r) {
        const double fy = f(y);
        double t = r;
        for (int k = 0; k < grid.steps; ++k) {
            const double q = (f(y + t * v.point()) - fy) / t;
            best = std::max(best, q);
            t *= 0.5;
        }
    };
    double r = grid.radius;
    for (int lvl = 0; lvl < grid.levels; ++lvl) {
        probe(x, r);
        for (int j = 0; j < grid.directions; ++j) {
            const double phi = 2.0 * M_PI * j / grid.directions;
            probe(x + r * Point2{std::cos(phi), std::sin(phi)}, r);
        }
        r *= 0.5;
    }
    return best;
}

std::optional<DirectionalProbe> find_decrease_direction(
    const LipschitzEvaluator2& f, const Point2& x, double epsilon,
    const std::vector<UnitVector>& net, const std::vector<double>& rho_candidates,
    const QuotientSampling& sampling)
{
    if (epsilon <= 0.0) throw std::invalid_argument("find_decrease_direction: epsilon must be positive");

    for (const auto& v : net) {
        for (const double rho : rho_candidates) {
            bool ok = true;
            double worst = -std::numeric_limits<double>::infinity();
            long checks = 0;
            for (int ri = 0; ri < sampling.radii && ok; ++ri) {
                // geometric radii rho, rho/2, ..., plus the center once
                const double r = rho * std::pow(0.5, ri);
                const int ny = (ri == 0) ? sampling.points_per_radius + 1
                                         : sampling.points_per_radius;
                for (int j = 0; j < ny && ok; ++j) {
                    Point2 y;
                    if (ri == 0 && j == sampling.points_per_radius) y = x;
                    else {
                        const double phi = 2.0 * M_PI * j / sampling.points_per_radius;
                        y = x + 0.999 * r * Point2{std::cos(phi), std::sin(phi)};
                    }
                    const double fy = f(y);
                    for (int ai = 0; ai < sampling.radii && ok; ++ai) {
                        const double alpha = rho * std::pow(0.5, ai) * 0.999;
                        const double q = (f(y + alpha * v.point()) - fy) / alpha;
                        worst = std::max(worst, q);
                        ++checks;
                        if (q > -epsilon) ok = false;
                    }
                }
            }
            if (ok) return DirectionalProbe{v, rho, worst, checks};
        }
    }
    return std::nullopt;
}

} // namespace wdc
