#ifndef WDC2D_DC1_HPP
#define WDC2D_DC1_HPP

#include "wdc2d/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wdc {

/// Convex piecewise-linear function on a closed interval with rational knots.
/// Convexity is the exact invariant: slopes between consecutive knots are
/// nondecreasing under rational comparison.
class ConvexPL {
public:
    ConvexPL() = default;
    ConvexPL(std::vector<Rational> knots, std::vector<Rational> values);

    static ConvexPL constant(const Rational& lo, const Rational& hi, const Rational& c);
    static ConvexPL linear(const Rational& lo, const Rational& hi,
                           const Rational& slope, const Rational& value_at_lo);

    const std::vector<Rational>& knots() const { return knots_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& domain_lo() const { return knots_.front(); }
    const Rational& domain_hi() const { return knots_.back(); }
    bool same_domain(const ConvexPL& other) const;

    Rational eval(const Rational& u) const;          // throws outside the domain
    double eval_d(double u) const;                   // clamped double path

    Rational slope(std::size_t piece) const;         // piece i joins knot i to i+1
    std::size_t piece_count() const { return knots_.size() - 1; }

    /// Exact convexity check (slope monotonicity); true for every valid instance.
    bool is_convex() const;

    ConvexPL restricted(const Rational& lo, const Rational& hi) const;

    friend ConvexPL operator+(const ConvexPL& a, const ConvexPL& b);
    ConvexPL scaled(const Rational& a) const;        // requires a >= 0

private:
    std::vector<Rational> knots_;
    std::vector<Rational> values_;
    mutable std::vector<double> knots_d_;            // cached for eval_d
    mutable std::vector<double> values_d_;
    void ensure_double_cache() const;
};

/// Pointwise max of two convex PL functions on a shared domain; crossing
/// points become knots so the result is again exactly piecewise linear.
ConvexPL max_convex(const ConvexPL& a, const ConvexPL& b);

/// A DC function f = g - h carried with its convex witnesses.
struct DCFun1 {
    ConvexPL g;
    ConvexPL h;

    DCFun1() = default;
    DCFun1(ConvexPL g_, ConvexPL h_);

    static DCFun1 from_convex(ConvexPL g_);          // h = 0 on the same domain
    /// Builds a DC witness for an arbitrary PL function by splitting slope
    /// jumps into the convex (upward) and concave (downward) parts.
    static DCFun1 from_pl(const std::vector<Rational>& knots,
                          const std::vector<Rational>& values);

    const Rational& domain_lo() const { return g.domain_lo(); }
    const Rational& domain_hi() const { return g.domain_hi(); }

    Rational eval(const Rational& u) const { return g.eval(u) - h.eval(u); }
    double eval_d(double u) const { return g.eval_d(u) - h.eval_d(u); }

    /// Knots of g and h merged; f is linear between consecutive entries.
    std::vector<Rational> merged_knots() const;

    DCFun1 restricted(const Rational& lo, const Rational& hi) const;
};

DCFun1 dc_scale_add(const Rational& a, const DCFun1& f1,
                    const Rational& b, const DCFun1& f2);
DCFun1 dc_scale(const Rational& a, const DCFun1& f);
DCFun1 dc_abs(const DCFun1& f);
DCFun1 dc_max(const DCFun1& f1, const DCFun1& f2);
DCFun1 dc_min(const DCFun1& f1, const DCFun1& f2);

/// Exact best Lipschitz constant of f over [a,b] (max |slope| over pieces
/// meeting the interval).
Rational lipschitz_constant(const DCFun1& f, const Rational& a, const Rational& b);
Rational lipschitz_constant(const DCFun1& f);

enum class RadialSide { right_increasing, left_decreasing };

/// Decides strict monotonicity of R(u) = sqrt(u^2 + f(u)^2) on [0, hi] or
/// [lo, 0]. On each linear piece f = a*u + b the derivative of R^2 is the
/// linear function 2(1+a^2)u + 2ab; the decision reduces to exact sign
/// checks at piece endpoints. A piece on which R^2 is constant fails; a zero
/// of the derivative at an isolated endpoint is allowed.
bool radial_monotonicity(const DCFun1& f, RadialSide side);

/// Convex piecewise-linear function on all of R: finitely many knots plus
/// two end slopes. Convexity: slope_left <= piece slopes <= slope_right,
/// all nondecreasing.
class TotalConvexPL {
public:
    TotalConvexPL() = default;
    TotalConvexPL(std::vector<Rational> knots, std::vector<Rational> values,
                  Rational slope_left, Rational slope_right);

    static TotalConvexPL constant(const Rational& c);

    const std::vector<Rational>& knots() const { return knots_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& slope_left() const { return slope_left_; }
    const Rational& slope_right() const { return slope_right_; }

    Rational eval(const Rational& u) const;
    double eval_d(double u) const;
    bool is_convex() const;

private:
    std::vector<Rational> knots_;
    std::vector<Rational> values_;
    Rational slope_left_{0};
    Rational slope_right_{0};
    mutable std::vector<double> knots_d_, values_d_;
    mutable double sl_d_ = 0.0, sr_d_ = 0.0;
    void ensure_double_cache() const;
};

/// A DC function on all of R with finite Lipschitz constant, f = g - h.
struct TotalPL {
    TotalConvexPL g;
    TotalConvexPL h;

    Rational eval(const Rational& u) const { return g.eval(u) - h.eval(u); }
    double eval_d(double u) const { return g.eval_d(u) - h.eval_d(u); }

    /// Canonical DC witness for a PL function given by knots, values and the
    /// two unbounded end slopes: upward slope jumps go to g, downward to h.
    static TotalPL from_pl(const std::vector<Rational>& knots,
                           const std::vector<Rational>& values,
                           const Rational& slope_left, const Rational& slope_right);

    /// All slopes (left end, interior pieces, right end) of g - h.
    std::vector<Rational> slopes() const;
    Rational lipschitz_constant() const;

    /// Knot/value pairs of g and h merged (the kinks of f).
    std::vector<Rational> merged_knots() const;
};

enum class ExtendMode { constant_both, upper_sector, lower_sector };

/// Clamped total extensions used when turning a local sector profile into a
/// graph over all of R.
///   constant_both : f(lo) for u < lo, f(hi) for u > hi        (L-Lipschitz)
///   upper_sector  : 2L*u  for u < 0,  f(hi) for u > hi        (2L-Lipschitz)
///   lower_sector  : -2L*u for u < 0,  f(hi) for u > hi        (2L-Lipschitz)
/// Sector modes require domain_lo == 0 and f(0) == 0.
/// Throws if L < lipschitz_constant(f).
TotalPL extend_clamped(const DCFun1& f, ExtendMode mode, const Rational& L);

/// Plain-text profile tables: "dcfun1" header, then the two convex witness
/// blocks, knots as rationals "p/q".
std::string serialize_profile(const DCFun1& f);
DCFun1 parse_profile(std::istream& in);
DCFun1 parse_profile(const std::string& text);

} // namespace wdc

#endif
