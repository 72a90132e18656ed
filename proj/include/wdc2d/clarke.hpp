#ifndef WDC2D_CLARKE_HPP
#define WDC2D_CLARKE_HPP

#include "wdc2d/geometry.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace wdc {

/// Locally Lipschitz scalar field with a declared constant and domain disc.
struct LipschitzEvaluator2 {
    std::function<double(const Point2&)> eval;
    double lipschitz = 1.0;
    Point2 domain_center{0.0, 0.0};
    double domain_radius = 1.0;

    double operator()(const Point2& p) const { return eval(p); }
};

/// Subdifferential of the distance function off the set: convex hull of the
/// normalized directions from the metric projections to the query point,
///   hull { (z - p) / d(z) : p nearest to z }.
/// Rejects queries on the set itself.
SubdiffHull distance_subdifferential(const Point2& z, const CompactSetModel& set,
                                     double tau = -1.0);

/// Hull of central finite-difference gradients at quasi-uniform samples of
/// U(x, h) with step h/100; samples whose one-sided differences disagree by
/// more than lipschitz * kink_filter are skipped as non-differentiable. If
/// everything is filtered the unfiltered gradients are used.
SubdiffHull sampled_clarke(const LipschitzEvaluator2& f, const Point2& x, double h,
                           int samples, double kink_filter = 1e-3);

/// Nested difference-quotient grid for upper directional derivatives:
/// base points y on shrinking circles around x, step sizes shrinking with
/// the circle radius.
struct QuotientGrid {
    double radius = 1e-2;    // largest |y - x|
    int levels = 8;          // radius halves per level
    int directions = 16;     // y-directions per circle
    int steps = 6;           // t values per base point, geometric in (0, r]
};

/// Increasing-refinement estimate of the generalized directional derivative:
/// max of (f(y + t v) - f(y)) / t over the grid.
double directional_upper_derivative(const LipschitzEvaluator2& f, const Point2& x,
                                    const UnitVector& v, const QuotientGrid& grid = {});

/// A certified uniform-descent direction: every sampled difference quotient
/// in U(x, radius) drops at rate at least epsilon.
struct DirectionalProbe {
    UnitVector direction;
    double radius = 0.0;
    double worst_quotient = 0.0;
    long checks = 0;
};

struct QuotientSampling {
    int radii = 32;             // geometric radii in (0, rho]
    int points_per_radius = 64; // y samples per circle
};

/// First (direction, radius) pair in net x rho_candidates order whose
/// sampled quotients all satisfy (f(y + a v) - f(y)) / a <= -epsilon.
std::optional<DirectionalProbe> find_decrease_direction(
    const LipschitzEvaluator2& f, const Point2& x, double epsilon,
    const std::vector<UnitVector>& net, const std::vector<double>& rho_candidates,
    const QuotientSampling& sampling = {});

} // namespace wdc

#endif
