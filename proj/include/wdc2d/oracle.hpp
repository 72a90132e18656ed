#ifndef WDC2D_ORACLE_HPP
#define WDC2D_ORACLE_HPP

#include "wdc2d/geometry.hpp"

#include <functional>
#include <vector>

namespace wdc::oracle {

/// Point cloud covering a set: every set point lies within `spacing` of a
/// sample. Produced by pure enumeration, never by projection formulas.
struct DenseSample {
    std::vector<Point2> points;
    double spacing = 0.0;
};

/// Arc-length sampling of every primitive at spacing <= delta. Graph pieces
/// are sampled directly from their profile (parameter sweep + rotation), not
/// through the model's flattened polylines.
DenseSample densify(const CompactSetModel& model, double delta);

/// min |y - p| over the samples; within `spacing` of the true distance.
double brute_distance(const Point2& y, const DenseSample& s);

/// All samples within `tol` of the minimum (brute metric projection).
std::vector<Point2> brute_projections(const Point2& y, const DenseSample& s, double tol);

/// Distance to the graph of a scalar function by staged parameter sweeps:
/// a coarse pass over [u_lo, u_hi] followed by window refinements around
/// every near-minimal sample. `slope_bound` bounds |d graph point / du|.
/// Accuracy ~ final_step * sqrt(1 + slope_bound^2).
double brute_graph_distance(const std::function<double(double)>& value, double u_lo, double u_hi,
                            double slope_bound, const Point2& y, double coarse_step,
                            double final_step);

/// Distance to a filled region given an independent membership predicate and
/// boundary samples: 0 inside, sample minimum outside.
double brute_region_distance(const Point2& y, const std::function<bool(const Point2&)>& member,
                             const DenseSample& boundary);

} // namespace wdc::oracle

#endif
