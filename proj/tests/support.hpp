#ifndef WDC2D_TESTS_SUPPORT_HPP
#define WDC2D_TESTS_SUPPORT_HPP

#include "wdc2d/dc1.hpp"
#include "wdc2d/geometry.hpp"
#include "wdc2d/sectors.hpp"

#include <random>
#include <vector>

namespace wdc::testsupport {

using Rng = std::mt19937_64;

inline Rational dyadic(Rng& rng, int denom_pow, int lo_num, int hi_num)
{
    std::uniform_int_distribution<int> num(lo_num, hi_num);
    return Rational(num(rng), 1 << denom_pow);
}

/// Strictly increasing dyadic knot vector spanning [lo, hi].
inline std::vector<Rational> random_knots(Rng& rng, const Rational& lo, const Rational& hi,
                                          int max_interior)
{
    std::uniform_int_distribution<int> cnt(0, max_interior);
    const int k = cnt(rng);
    std::vector<Rational> knots{lo};
    std::uniform_int_distribution<int> num(1, 63);
    std::vector<int> cuts;
    for (int i = 0; i < k; ++i) cuts.push_back(num(rng));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (int c : cuts) knots.push_back(lo + (hi - lo) * Rational(c, 64));
    knots.push_back(hi);
    return knots;
}

/// Random convex PL via nondecreasing dyadic slopes.
inline ConvexPL random_convex(Rng& rng, const Rational& lo, const Rational& hi,
                              int max_interior = 4)
{
    const auto knots = random_knots(rng, lo, hi, max_interior);
    std::uniform_int_distribution<int> jump(0, 48);
    std::uniform_int_distribution<int> start(-64, 64);
    Rational slope(start(rng), 16);
    std::vector<Rational> values{dyadic(rng, 4, -32, 32)};
    for (std::size_t i = 1; i < knots.size(); ++i) {
        values.push_back(values.back() + slope * (knots[i] - knots[i - 1]));
        slope += Rational(jump(rng), 16);
    }
    return ConvexPL(knots, values);
}

inline DCFun1 random_dcfun(Rng& rng, const Rational& lo, const Rational& hi)
{
    return DCFun1(random_convex(rng, lo, hi), random_convex(rng, lo, hi));
}

/// Random total PL function with exact Lipschitz constant L (values scaled so
/// the steepest slope hits L).
inline TotalPL random_total_pl(Rng& rng, const Rational& L, int max_interior = 6)
{
    const auto knots = random_knots(rng, Rational(-3), Rational(3), max_interior);
    std::uniform_int_distribution<int> s(-32, 32);
    std::vector<Rational> slopes;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) slopes.emplace_back(s(rng), 32);
    Rational sl(s(rng), 32), sr(s(rng), 32);
    Rational steep = std::max(rat_abs(sl), rat_abs(sr));
    for (const auto& sp : slopes) steep = std::max(steep, rat_abs(sp));
    if (steep == 0) { sl = Rational(1); steep = Rational(1); }
    const Rational factor = L / steep;
    sl *= factor;
    sr *= factor;
    std::vector<Rational> values{dyadic(rng, 3, -16, 16)};
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        values.push_back(values.back() + slopes[i] * factor * (knots[i + 1] - knots[i]));
    return TotalPL::from_pl(knots, values, sl, sr);
}

/// Random degenerate-sector profile pair on [0, omega]: upper nonnegative
/// nondecreasing, lower nonpositive nonincreasing, both flat on the first
/// piece. Radial monotonicity holds by construction for any slope size.
inline std::pair<DCFun1, DCFun1> random_degenerate_profiles(Rng& rng, const Rational& omega,
                                                            const Rational& L)
{
    auto make = [&](int sign) {
        const auto knots = random_knots(rng, Rational(0), omega, 3);
        std::uniform_int_distribution<int> s(0, 32);
        Rational slope(0);
        std::vector<Rational> values{Rational(0)};
        for (std::size_t i = 1; i < knots.size(); ++i) {
            values.push_back(values.back() + Rational(sign) * slope * (knots[i] - knots[i - 1]));
            slope = std::min(L, slope + Rational(s(rng), 32) * L);
        }
        return DCFun1::from_pl(knots, values);
    };
    DCFun1 upper = make(+1);
    DCFun1 lower = make(-1);
    return {std::move(upper), std::move(lower)};
}

inline DegenerateClosedSector random_degenerate_sector(Rng& rng, double rho)
{
    std::uniform_int_distribution<int> lnum(2, 24);
    const Rational L(lnum(rng), 8);
    const Rational omega = rational_from_double(rho) * 2;
    auto [upper, lower] = random_degenerate_profiles(rng, omega, L);
    DegenerateClosedSector s;
    s.radius = rho;
    s.omega = omega;
    s.upper = std::move(upper);
    s.lower = std::move(lower);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    s.theta = ang(rng);
    return s;
}

inline Point2 random_point_in_disc(Rng& rng, const Point2& c, double r)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        const Point2 p{u(rng), u(rng)};
        if (p.norm2() <= 1.0) return c + r * p;
    }
}

/// Test-local pointwise PL evaluation, independent of the ConvexPL code path.
inline Rational pl_interpolate(const std::vector<Rational>& knots,
                               const std::vector<Rational>& values, const Rational& u)
{
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (u >= knots[i] && u <= knots[i + 1]) {
            const Rational t = (u - knots[i]) / (knots[i + 1] - knots[i]);
            return values[i] + t * (values[i + 1] - values[i]);
        }
    }
    throw std::out_of_range("pl_interpolate: outside knots");
}

} // namespace wdc::testsupport

#endif
