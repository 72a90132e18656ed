#ifndef WDC2D_SPACE_X_HPP
#define WDC2D_SPACE_X_HPP

#include "wdc2d/geometry.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wdc {

/// Element of the test-function space: 1-Lipschitz on B(0,4) with values in
/// [0,4] and at least 1 outside U(0,3). Membership is checked by sampling,
/// never assumed.
struct XFunction {
    enum class Origin { distance_restriction, user };

    std::function<double(const Point2&)> eval;
    Origin origin = Origin::user;

    double operator()(const Point2& p) const { return eval(p); }
};

/// Restriction of the distance function of K to B(0,4), capped at 4 so the
/// range constraint holds for every K inside the unit ball. Rejects sets
/// reaching outside B(0,1).
XFunction distance_restriction(const CompactSetModel& K);

/// Range / sampled-Lipschitz / outer-bound violations on a grid x grid
/// lattice over B(0,4); empty result means the checks pass. grid >= 16.
std::vector<std::string> x_validate(const XFunction& f, int grid);

struct SphereNet {
    Rational eps;
    std::vector<UnitVector> directions;
};

/// Uniformly spaced directions with chordal covering radius < eps;
/// size max(4, ceil(pi / asin(eps/2))).
SphereNet sphere_net(const Rational& eps);

/// Truncation of the quantified weak-regularity formula: every rational
/// ranges over dyadics of depth m, spatial grids have spacing 2^-m times
/// their scale, step sizes are geometric.
struct TruncationDepth {
    int m = 4;
};

/// Verdict of the truncated four-quantifier sweep. The semantics are
/// explicitly relative to the truncation: `holds` is evidence at this depth,
/// not a membership decision.
struct FormulaCheck {
    enum class Verdict { holds, fails, inconclusive };

    struct Witness {
        Rational p, q;
        Point2 x;
    };

    Verdict verdict = Verdict::inconclusive;
    Rational eps;                                       // accepted (holds)
    std::optional<Witness> witness;                     // first failure
    std::vector<std::pair<Rational, Witness>> failures; // one per tried eps
    std::vector<Rational> tried;
};

/// Sweeps eps = 1/2, 1/4, ..., 2^-m (descending, skipping candidates whose
/// dyadic pair set below eps is empty) over the formula
///   for all p < q < eps there is rho such that every grid x in U(0,4) with
///   f(x) in (p,q) admits a net direction nu with
///   f(y + a nu) - f(y) <= -eps * a for all grid y in U(x, rho), a < rho.
FormulaCheck check_regularity_formula(const XFunction& f, const TruncationDepth& depth = {});

std::string formula_report(const FormulaCheck& check);

/// f = g - h within 1e-9 on an n x n lattice over B(0,4), with g and h
/// passing seeded midpoint-convexity sampling.
bool dc_witness_validate(const XFunction& f, const std::function<double(const Point2&)>& g,
                         const std::function<double(const Point2&)>& h, int grid_n,
                         unsigned long long seed = 7ULL);

/// Image of the model under x -> x / r. Graph pieces are flattened to their
/// polylines first (general real factors leave the rational profile space).
CompactSetModel rescale(const CompactSetModel& K, double r);

/// CSV-sampled function, header "x,y,value"; complete rectangular grids are
/// interpolated bilinearly, scattered data falls back to nearest neighbour.
XFunction load_xfunction_csv(std::istream& in);

} // namespace wdc

#endif
