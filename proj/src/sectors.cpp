#include "wdc2d/sectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wdc {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

bool domain_covers(const DCFun1& f, const Rational& lo, const Rational& hi)
{
    return f.domain_lo() <= lo && f.domain_hi() >= hi;
}

/// First-piece slope of f to the right of 0 (exact).
Rational right_slope_at_zero(const DCFun1& f)
{
    Rational next = f.domain_hi();
    for (const auto& u : f.merged_knots())
        if (u > 0 && u < next) next = u;
    return (f.eval(next) - f.eval(Rational(0))) / next;
}

/// u >= 0 with |(u, f(u))| = target, assuming R is strictly increasing there.
double crossing_radius_right(const DCFun1& f, double target)
{
    auto R = [&](double u) { return std::hypot(u, f.eval_d(u)); };
    double lo = 0.0, hi = target;
    if (R(hi) < target) hi = std::min(to_double(f.domain_hi()), target * (1.0 + 1e-9));
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (R(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// u <= 0 with |(u, f(u))| = target (R strictly decreasing on the left side).
double crossing_radius_left(const DCFun1& f, double target)
{
    auto R = [&](double u) { return std::hypot(u, f.eval_d(u)); };
    double lo = -target, hi = 0.0;
    if (R(lo) < target) lo = std::max(to_double(f.domain_lo()), -target * (1.0 + 1e-9));
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (R(mid) < target ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Lifted boundary angles of the graph of the sector profile between the two
/// crossings with the circle of the given radius; returns {min, max} of the
/// continuous lift (angles are monotone along straight pieces, so vertex
/// angles are enough).
std::pair<double, double> lifted_angle_range(const BasicOpenSector& s, double radius)
{
    const double up = crossing_radius_right(s.profile, radius);
    const double um = crossing_radius_left(s.profile, radius);
    std::vector<double> us{up};
    for (const auto& u : s.profile.merged_knots()) {
        const double ud = to_double(u);
        if (ud < up && ud > um) us.push_back(ud);
    }
    us.push_back(um);
    std::sort(us.rbegin(), us.rend());   // sweep right branch to left branch

    double prev = std::atan2(s.profile.eval_d(us.front()), us.front());
    double lo = prev, hi = prev;
    for (std::size_t i = 1; i < us.size(); ++i) {
        double a = std::atan2(s.profile.eval_d(us[i]), us[i]);
        while (a < prev - M_PI) a += kTwoPi;
        while (a > prev + M_PI) a -= kTwoPi;
        prev = a;
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    return {lo + s.theta, hi + s.theta};
}

} // namespace

std::vector<std::string> validate_sector(const BasicOpenSector& s)
{
    std::vector<std::string> v;
    if (!(s.radius > 0.0)) v.push_back("radius must be positive");
    if (s.omega <= 0) v.push_back("omega must be positive");
    if (!(rational_from_double(s.radius) < s.omega)) v.push_back("radius must be below omega");
    if (!domain_covers(s.profile, -s.omega, s.omega)) {
        v.push_back("profile domain must cover [-omega, omega]");
        return v;
    }
    const DCFun1 f = s.profile.restricted(-s.omega, s.omega);
    if (f.eval(Rational(0)) != 0) v.push_back("f(0) != 0");
    if (!radial_monotonicity(f, RadialSide::right_increasing))
        v.push_back("radial profile not strictly increasing on [0, omega)");
    if (!radial_monotonicity(f, RadialSide::left_decreasing))
        v.push_back("radial profile not strictly decreasing on (-omega, 0]");
    return v;
}

std::vector<std::string> validate_sector(const DegenerateClosedSector& s)
{
    std::vector<std::string> v;
    if (!(s.radius > 0.0)) v.push_back("radius must be positive");
    if (s.omega <= 0) v.push_back("omega must be positive");
    if (!(rational_from_double(s.radius) < s.omega)) v.push_back("radius must be below omega");
    if (!domain_covers(s.upper, Rational(0), s.omega) ||
        !domain_covers(s.lower, Rational(0), s.omega)) {
        v.push_back("profile domains must cover [0, omega]");
        return v;
    }
    const DCFun1 f = s.upper.restricted(Rational(0), s.omega);
    const DCFun1 g = s.lower.restricted(Rational(0), s.omega);
    if (f.eval(Rational(0)) != 0) v.push_back("f(0) != 0");
    if (g.eval(Rational(0)) != 0) v.push_back("g(0) != 0");
    if (right_slope_at_zero(f) != 0) v.push_back("f'_+(0) != 0");
    if (right_slope_at_zero(g) != 0) v.push_back("g'_+(0) != 0");
    {
        auto knots = f.merged_knots();
        for (const auto& u : g.merged_knots()) knots.push_back(u);
        std::sort(knots.begin(), knots.end());
        knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
        for (const auto& u : knots)
            if (g.eval(u) > f.eval(u)) { v.push_back("g > f somewhere on [0, omega)"); break; }
    }
    if (!radial_monotonicity(f, RadialSide::right_increasing))
        v.push_back("upper radial profile not strictly increasing on [0, omega)");
    if (!radial_monotonicity(g, RadialSide::right_increasing))
        v.push_back("lower radial profile not strictly increasing on [0, omega)");
    return v;
}

std::vector<std::string> validate_model(const LocalModel& m)
{
    std::vector<std::string> v;
    if (!(m.rho > 0.0)) v.push_back("rho must be positive");
    switch (m.kind) {
    case LocalModel::Case::isolated:
        break;
    case LocalModel::Case::degenerate: {
        if (!m.closed_sector) { v.push_back("degenerate case needs a closed sector"); break; }
        if (std::abs(m.closed_sector->radius - m.rho) > 1e-12 * (1.0 + m.rho))
            v.push_back("closed sector radius must equal rho");
        for (auto& msg : validate_sector(*m.closed_sector)) v.push_back(msg);
        break;
    }
    case LocalModel::Case::complement: {
        if (m.sectors.empty()) { v.push_back("complement case needs at least one sector"); break; }
        for (std::size_t i = 0; i < m.sectors.size(); ++i) {
            if (std::abs(m.sectors[i].radius - m.rho) > 1e-12 * (1.0 + m.rho))
                v.push_back("sector " + std::to_string(i) + ": radius must equal rho");
            for (auto& msg : validate_sector(m.sectors[i]))
                v.push_back("sector " + std::to_string(i) + ": " + msg);
        }
        if (v.empty() && !disjointness_check(m.sectors))
            v.push_back("sectors are not pairwise disjoint");
        break;
    }
    }
    return v;
}

bool sector_contains(const BasicOpenSector& s, const Point2& p)
{
    if (p.norm2() >= s.radius * s.radius) return false;
    const Point2 local = s.rotation().unapply(p);
    const double om = to_double(s.omega);
    if (!(local.x > -om && local.x < om)) return false;
    return local.y > s.profile.eval_d(local.x);
}

bool sector_contains(const DegenerateClosedSector& s, const Point2& p)
{
    if (p.norm2() >= s.radius * s.radius) return false;
    const Point2 local = s.rotation().unapply(p);
    const double om = to_double(s.omega);
    if (!(local.x >= 0.0 && local.x < om)) return false;
    return s.lower.eval_d(local.x) <= local.y && local.y <= s.upper.eval_d(local.x);
}

bool disjointness_check(const std::vector<BasicOpenSector>& sectors)
{
    if (sectors.size() < 2) return true;

    // certified branch: conservative angular supports as circular intervals
    double rmax = 0.0;
    for (const auto& s : sectors) rmax = std::max(rmax, s.radius);
    std::vector<std::pair<double, double>> supports;
    bool certified = true;
    for (const auto& s : sectors) {
        auto [lo, hi] = lifted_angle_range(s, s.radius * (1.0 - 1e-12));
        if (hi - lo >= kTwoPi) { certified = false; break; }
        supports.emplace_back(lo, hi);
    }
    if (certified) {
        bool overlap = false;
        for (std::size_t i = 0; i < supports.size() && !overlap; ++i) {
            for (std::size_t j = i + 1; j < supports.size() && !overlap; ++j) {
                // compare on the circle: shift j's interval by multiples of 2*pi
                for (int k = -2; k <= 2 && !overlap; ++k) {
                    const double lo = supports[j].first + k * kTwoPi;
                    const double hi = supports[j].second + k * kTwoPi;
                    if (lo < supports[i].second + 1e-9 && hi > supports[i].first - 1e-9)
                        overlap = true;
                }
            }
        }
        if (!overlap) return true;
    }

    // sampled decision on a radial-angular grid of spacing 1e-3 * rmax
    const double dr = 1e-3 * rmax;
    for (double r = dr; r < rmax; r += dr) {
        const int na = std::max(8, static_cast<int>(std::ceil(kTwoPi * r / dr)));
        for (int a = 0; a < na; ++a) {
            const double phi = kTwoPi * a / na;
            const Point2 p{r * std::cos(phi), r * std::sin(phi)};
            int hits = 0;
            for (const auto& s : sectors)
                if (sector_contains(s, p) && ++hits > 1) return false;
        }
    }
    return true;
}

namespace {

/// Subtract open arcs from the full circle; returns the kept closed arcs.
/// Input arcs are (lo, hi) lifted with hi > lo, span < 2*pi.
std::vector<std::pair<double, double>> circle_minus(std::vector<std::pair<double, double>> cut)
{
    // normalize into subintervals of [0, 2*pi), splitting arcs that wrap
    std::vector<std::pair<double, double>> flat;
    for (const auto& c : cut) {
        const double span = std::min(c.second - c.first, kTwoPi);
        double lo = std::fmod(c.first, kTwoPi);
        if (lo < 0.0) lo += kTwoPi;
        const double hi = lo + span;
        if (hi <= kTwoPi) {
            flat.emplace_back(lo, hi);
        } else {
            flat.emplace_back(lo, kTwoPi);
            flat.emplace_back(0.0, hi - kTwoPi);
        }
    }
    if (flat.empty()) return {{0.0, kTwoPi}};
    std::sort(flat.begin(), flat.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& c : flat) {
        if (!merged.empty() && c.first <= merged.back().second + 1e-15)
            merged.back().second = std::max(merged.back().second, c.second);
        else
            merged.push_back(c);
    }
    std::vector<std::pair<double, double>> kept;
    if (merged.front().first > 1e-12) kept.emplace_back(0.0, merged.front().first);
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i + 1].first - merged[i].second > 1e-12)
            kept.emplace_back(merged[i].second, merged[i + 1].first);
    if (kTwoPi - merged.back().second > 1e-12)
        kept.emplace_back(merged.back().second, kTwoPi);
    // join the two pieces that meet at angle 0
    if (kept.size() >= 2 && kept.front().first <= 1e-12 && kept.back().second >= kTwoPi - 1e-12) {
        kept.front().first = kept.back().first - kTwoPi;
        kept.pop_back();
    }
    return kept;
}

} // namespace

CompactSetModel build_local_set(const LocalModel& m, double shrink)
{
    if (!(shrink > 0.0 && shrink < 1.0))
        throw std::invalid_argument("build_local_set: shrink must lie in (0,1)");
    const auto violations = validate_model(m);
    if (!violations.empty())
        throw std::invalid_argument("build_local_set: invalid model: " + violations.front());

    const double clip = m.rho * (1.0 - shrink);
    CompactSetModel out;

    switch (m.kind) {
    case LocalModel::Case::isolated:
        out.add_point(m.center);
        return out;

    case LocalModel::Case::degenerate: {
        const DegenerateClosedSector s = *m.closed_sector;
        const double uf = crossing_radius_right(s.upper, clip);
        const double ug = crossing_radius_right(s.lower, clip);

        bool same = true;
        {
            auto knots = s.upper.merged_knots();
            for (const auto& u : s.lower.merged_knots()) knots.push_back(u);
            for (const auto& u : knots) {
                if (u < 0 || u > s.omega) continue;
                if (s.upper.eval(u) != s.lower.eval(u)) { same = false; break; }
            }
        }
        PLGraphPiece top;
        top.theta = s.theta;
        top.profile = s.upper;
        top.u_lo = Rational(0);
        top.u_hi = rational_from_double(uf);
        top.anchor = m.center;
        out.add_graph(top);
        if (!same) {
            PLGraphPiece bottom = top;
            bottom.profile = s.lower;
            bottom.u_hi = rational_from_double(ug);
            out.add_graph(bottom);
            const double phi_f = std::atan2(s.upper.eval_d(uf), uf);
            const double phi_g = std::atan2(s.lower.eval_d(ug), ug);
            if (phi_f - phi_g > 1e-12)
                out.add_arc({m.center, clip, s.theta + phi_g, s.theta + phi_f});
        }
        const Point2 center = m.center;
        out.set_interior([s, center, clip](const Point2& p) {
            if ((p - center).norm() > clip) return false;
            const Point2 local = s.rotation().unapply(p - center);
            if (local.x < 0.0) return false;
            return s.lower.eval_d(local.x) <= local.y && local.y <= s.upper.eval_d(local.x);
        });
        return out;
    }

    case LocalModel::Case::complement: {
        std::vector<std::pair<double, double>> covered;
        for (const auto& s : m.sectors) {
            const double up = crossing_radius_right(s.profile, clip);
            const double um = crossing_radius_left(s.profile, clip);
            PLGraphPiece wall;
            wall.theta = s.theta;
            wall.profile = s.profile;
            wall.u_lo = rational_from_double(um);
            wall.u_hi = rational_from_double(up);
            wall.anchor = m.center;
            out.add_graph(wall);
            // the sector covers the rim arc from the right crossing
            // counterclockwise (through its top) to the left crossing
            double a_hi = std::atan2(s.profile.eval_d(up), up);
            double a_lo = std::atan2(s.profile.eval_d(um), um);
            while (a_lo <= a_hi) a_lo += kTwoPi;
            covered.emplace_back(s.theta + a_hi, s.theta + a_lo);
        }
        for (const auto& [a, b] : circle_minus(std::move(covered)))
            out.add_arc({m.center, clip, a, b});

        const Point2 center = m.center;
        const std::vector<BasicOpenSector> sectors = m.sectors;
        out.set_interior([sectors, center, clip](const Point2& p) {
            if ((p - center).norm() > clip) return false;
            for (const auto& s : sectors)
                if (sector_contains(s, p - center)) return false;
            return true;
        });
        return out;
    }
    }
    throw std::logic_error("build_local_set: unreachable");
}

} // namespace wdc
