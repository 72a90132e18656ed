#include "wdc2d/dc1.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace wdc {

namespace {

std::vector<Rational> merge_sorted(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    std::vector<Rational> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

ConvexPL::ConvexPL(std::vector<Rational> knots, std::vector<Rational> values)
    : knots_(std::move(knots)), values_(std::move(values))
{
    if (knots_.size() < 2 || knots_.size() != values_.size())
        throw std::invalid_argument("ConvexPL: need matching knot/value lists with >= 2 knots");
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
        if (!(knots_[i] < knots_[i + 1]))
            throw std::invalid_argument("ConvexPL: knots must be strictly increasing");
    if (!is_convex())
        throw std::invalid_argument("ConvexPL: slopes are not nondecreasing");
}

ConvexPL ConvexPL::constant(const Rational& lo, const Rational& hi, const Rational& c)
{
    return ConvexPL({lo, hi}, {c, c});
}

ConvexPL ConvexPL::linear(const Rational& lo, const Rational& hi,
                          const Rational& slope, const Rational& value_at_lo)
{
    return ConvexPL({lo, hi}, {value_at_lo, value_at_lo + slope * (hi - lo)});
}

bool ConvexPL::same_domain(const ConvexPL& other) const
{
    return domain_lo() == other.domain_lo() && domain_hi() == other.domain_hi();
}

Rational ConvexPL::slope(std::size_t piece) const
{
    return (values_[piece + 1] - values_[piece]) / (knots_[piece + 1] - knots_[piece]);
}

bool ConvexPL::is_convex() const
{
    for (std::size_t i = 0; i + 1 < piece_count(); ++i)
        if (slope(i) > slope(i + 1)) return false;
    return true;
}

Rational ConvexPL::eval(const Rational& u) const
{
    if (u < domain_lo() || u > domain_hi())
        throw std::out_of_range("ConvexPL::eval: argument outside the domain");
    auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
    std::size_t i = (it == knots_.end()) ? knots_.size() - 2 : (it - knots_.begin()) - 1;
    const Rational t = u - knots_[i];
    if (t == 0) return values_[i];
    return values_[i] + slope(i) * t;
}

void ConvexPL::ensure_double_cache() const
{
    if (knots_d_.size() == knots_.size()) return;
    knots_d_.resize(knots_.size());
    values_d_.resize(values_.size());
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        knots_d_[i] = to_double(knots_[i]);
        values_d_[i] = to_double(values_[i]);
    }
}

double ConvexPL::eval_d(double u) const
{
    ensure_double_cache();
    if (u <= knots_d_.front()) return values_d_.front();
    if (u >= knots_d_.back()) return values_d_.back();
    auto it = std::upper_bound(knots_d_.begin(), knots_d_.end(), u);
    std::size_t i = (it - knots_d_.begin()) - 1;
    const double du = knots_d_[i + 1] - knots_d_[i];
    const double t = (u - knots_d_[i]) / du;
    return values_d_[i] + t * (values_d_[i + 1] - values_d_[i]);
}

ConvexPL ConvexPL::restricted(const Rational& lo, const Rational& hi) const
{
    if (lo < domain_lo() || hi > domain_hi() || !(lo < hi))
        throw std::invalid_argument("ConvexPL::restricted: bad subinterval");
    std::vector<Rational> k, v;
    k.push_back(lo);
    v.push_back(eval(lo));
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (knots_[i] > lo && knots_[i] < hi) {
            k.push_back(knots_[i]);
            v.push_back(values_[i]);
        }
    }
    k.push_back(hi);
    v.push_back(eval(hi));
    return ConvexPL(std::move(k), std::move(v));
}

ConvexPL operator+(const ConvexPL& a, const ConvexPL& b)
{
    if (!a.same_domain(b)) throw std::invalid_argument("ConvexPL +: domains differ");
    auto knots = merge_sorted(a.knots(), b.knots());
    std::vector<Rational> values;
    values.reserve(knots.size());
    for (const auto& u : knots) values.push_back(a.eval(u) + b.eval(u));
    return ConvexPL(std::move(knots), std::move(values));
}

ConvexPL ConvexPL::scaled(const Rational& a) const
{
    if (a < 0) throw std::invalid_argument("ConvexPL::scaled: negative factor breaks convexity");
    std::vector<Rational> v = values_;
    for (auto& x : v) x *= a;
    return ConvexPL(knots_, std::move(v));
}

ConvexPL max_convex(const ConvexPL& a, const ConvexPL& b)
{
    if (!a.same_domain(b)) throw std::invalid_argument("max_convex: domains differ");
    auto base = merge_sorted(a.knots(), b.knots());
    // insert exact crossing points: between consecutive merged knots both
    // functions are linear, so a sign change of the difference pins a knot
    std::vector<Rational> knots;
    knots.reserve(base.size() * 2);
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (i > 0) {
            const Rational da = a.eval(base[i - 1]) - b.eval(base[i - 1]);
            const Rational db = a.eval(base[i]) - b.eval(base[i]);
            if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
                const Rational t = da / (da - db);
                knots.push_back(base[i - 1] + t * (base[i] - base[i - 1]));
            }
        }
        knots.push_back(base[i]);
    }
    std::vector<Rational> values;
    values.reserve(knots.size());
    for (const auto& u : knots) values.push_back(std::max(a.eval(u), b.eval(u)));
    return ConvexPL(std::move(knots), std::move(values));
}

DCFun1::DCFun1(ConvexPL g_, ConvexPL h_) : g(std::move(g_)), h(std::move(h_))
{
    if (!g.same_domain(h)) throw std::invalid_argument("DCFun1: witnesses must share a domain");
}

DCFun1 DCFun1::from_convex(ConvexPL g_)
{
    ConvexPL zero = ConvexPL::constant(g_.domain_lo(), g_.domain_hi(), 0);
    return DCFun1(std::move(g_), std::move(zero));
}

DCFun1 DCFun1::from_pl(const std::vector<Rational>& knots, const std::vector<Rational>& values)
{
    if (knots.size() < 2 || knots.size() != values.size())
        throw std::invalid_argument("DCFun1::from_pl: bad knot/value lists");
    const std::size_t n = knots.size();
    std::vector<Rational> slopes(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(knots[i] < knots[i + 1]))
            throw std::invalid_argument("DCFun1::from_pl: knots must be strictly increasing");
        slopes[i] = (values[i + 1] - values[i]) / (knots[i + 1] - knots[i]);
    }
    // split slope jumps: upward kinks into g, downward into h; the affine
    // base line rides along in g
    std::vector<Rational> gv(n), hv(n);
    Rational gs = slopes[0];   // current slope of g
    Rational hs = 0;           // current slope of h
    gv[0] = values[0];
    hv[0] = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const Rational du = knots[i] - knots[i - 1];
        gv[i] = gv[i - 1] + gs * du;
        hv[i] = hv[i - 1] + hs * du;
        if (i < n - 1) {
            const Rational jump = slopes[i] - slopes[i - 1];
            if (jump >= 0) gs += jump;
            else hs -= jump;
        }
    }
    return DCFun1(ConvexPL(knots, std::move(gv)), ConvexPL(knots, std::move(hv)));
}

std::vector<Rational> DCFun1::merged_knots() const
{
    return merge_sorted(g.knots(), h.knots());
}

DCFun1 DCFun1::restricted(const Rational& lo, const Rational& hi) const
{
    return DCFun1(g.restricted(lo, hi), h.restricted(lo, hi));
}

DCFun1 dc_scale(const Rational& a, const DCFun1& f)
{
    if (a >= 0) return DCFun1(f.g.scaled(a), f.h.scaled(a));
    return DCFun1(f.h.scaled(-a), f.g.scaled(-a));
}

DCFun1 dc_scale_add(const Rational& a, const DCFun1& f1, const Rational& b, const DCFun1& f2)
{
    const DCFun1 s1 = dc_scale(a, f1);
    const DCFun1 s2 = dc_scale(b, f2);
    return DCFun1(s1.g + s2.g, s1.h + s2.h);
}

DCFun1 dc_max(const DCFun1& f1, const DCFun1& f2)
{
    // max(g1-h1, g2-h2) = max(g1+h2, g2+h1) - (h1+h2)
    return DCFun1(max_convex(f1.g + f2.h, f2.g + f1.h), f1.h + f2.h);
}

DCFun1 dc_min(const DCFun1& f1, const DCFun1& f2)
{
    // min(f1,f2) = (g1+g2) - max(h1+g2, h2+g1)
    return DCFun1(f1.g + f2.g, max_convex(f1.h + f2.g, f2.h + f1.g));
}

DCFun1 dc_abs(const DCFun1& f)
{
    // |g-h| = 2 max(g,h) - (g+h)
    return DCFun1(max_convex(f.g, f.h).scaled(2), f.g + f.h);
}

Rational lipschitz_constant(const DCFun1& f, const Rational& a, const Rational& b)
{
    if (a < f.domain_lo() || b > f.domain_hi() || !(a < b))
        throw std::invalid_argument("lipschitz_constant: [a,b] must be a subinterval of the domain");
    const auto knots = f.merged_knots();
    Rational best = 0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (knots[i + 1] <= a || knots[i] >= b) continue;   // piece misses [a,b]
        const Rational s =
            (f.eval(knots[i + 1]) - f.eval(knots[i])) / (knots[i + 1] - knots[i]);
        best = std::max(best, rat_abs(s));
    }
    return best;
}

Rational lipschitz_constant(const DCFun1& f)
{
    return lipschitz_constant(f, f.domain_lo(), f.domain_hi());
}

bool radial_monotonicity(const DCFun1& f, RadialSide side)
{
    const auto all = f.merged_knots();
    const Rational zero(0);
    std::vector<Rational> knots;
    if (side == RadialSide::right_increasing) {
        if (f.domain_hi() <= 0) return true;   // empty side
        knots.push_back(std::max(zero, f.domain_lo()));
        for (const auto& u : all)
            if (u > knots.front() && u <= f.domain_hi()) knots.push_back(u);
    } else {
        if (f.domain_lo() >= 0) return true;
        knots.push_back(f.domain_lo());
        for (const auto& u : all)
            if (u > f.domain_lo() && u <= std::min(zero, f.domain_hi())) knots.push_back(u);
        if (knots.back() != std::min(zero, f.domain_hi()))
            knots.push_back(std::min(zero, f.domain_hi()));
    }
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const Rational u0 = knots[i];
        const Rational u1 = knots[i + 1];
        const Rational v0 = f.eval(u0);
        const Rational v1 = f.eval(u1);
        const Rational a = (v1 - v0) / (u1 - u0);
        const Rational b = v0 - a * u0;
        // (R^2)'(u)/2 = (1+a^2) u + a b, linear in u
        const Rational d0 = (1 + a * a) * u0 + a * b;
        const Rational d1 = (1 + a * a) * u1 + a * b;
        if (side == RadialSide::right_increasing) {
            if (d0 < 0 || d1 < 0) return false;
            if (d0 == 0 && d1 == 0) return false;   // constant piece
        } else {
            if (d0 > 0 || d1 > 0) return false;
            if (d0 == 0 && d1 == 0) return false;
        }
    }
    return true;
}

TotalConvexPL::TotalConvexPL(std::vector<Rational> knots, std::vector<Rational> values,
                             Rational slope_left, Rational slope_right)
    : knots_(std::move(knots)), values_(std::move(values)),
      slope_left_(std::move(slope_left)), slope_right_(std::move(slope_right))
{
    if (knots_.empty() || knots_.size() != values_.size())
        throw std::invalid_argument("TotalConvexPL: need matching nonempty knot/value lists");
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
        if (!(knots_[i] < knots_[i + 1]))
            throw std::invalid_argument("TotalConvexPL: knots must be strictly increasing");
    if (!is_convex())
        throw std::invalid_argument("TotalConvexPL: slopes are not nondecreasing");
}

TotalConvexPL TotalConvexPL::constant(const Rational& c)
{
    return TotalConvexPL({Rational(0)}, {c}, Rational(0), Rational(0));
}

bool TotalConvexPL::is_convex() const
{
    Rational prev = slope_left_;
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        const Rational s = (values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]);
        if (s < prev) return false;
        prev = s;
    }
    return prev <= slope_right_;
}

Rational TotalConvexPL::eval(const Rational& u) const
{
    if (u <= knots_.front()) return values_.front() + slope_left_ * (u - knots_.front());
    if (u >= knots_.back()) return values_.back() + slope_right_ * (u - knots_.back());
    auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
    std::size_t i = (it - knots_.begin()) - 1;
    const Rational s = (values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]);
    return values_[i] + s * (u - knots_[i]);
}

void TotalConvexPL::ensure_double_cache() const
{
    if (knots_d_.size() == knots_.size()) return;
    knots_d_.resize(knots_.size());
    values_d_.resize(values_.size());
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        knots_d_[i] = to_double(knots_[i]);
        values_d_[i] = to_double(values_[i]);
    }
    sl_d_ = to_double(slope_left_);
    sr_d_ = to_double(slope_right_);
}

double TotalConvexPL::eval_d(double u) const
{
    ensure_double_cache();
    if (u <= knots_d_.front()) return values_d_.front() + sl_d_ * (u - knots_d_.front());
    if (u >= knots_d_.back()) return values_d_.back() + sr_d_ * (u - knots_d_.back());
    auto it = std::upper_bound(knots_d_.begin(), knots_d_.end(), u);
    std::size_t i = (it - knots_d_.begin()) - 1;
    const double t = (u - knots_d_[i]) / (knots_d_[i + 1] - knots_d_[i]);
    return values_d_[i] + t * (values_d_[i + 1] - values_d_[i]);
}

TotalPL TotalPL::from_pl(const std::vector<Rational>& knots, const std::vector<Rational>& values,
                         const Rational& slope_left, const Rational& slope_right)
{
    if (knots.empty() || knots.size() != values.size())
        throw std::invalid_argument("TotalPL::from_pl: bad knot/value lists");
    const std::size_t n = knots.size();
    std::vector<Rational> slopes;
    slopes.push_back(slope_left);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(knots[i] < knots[i + 1]))
            throw std::invalid_argument("TotalPL::from_pl: knots must be strictly increasing");
        slopes.push_back((values[i + 1] - values[i]) / (knots[i + 1] - knots[i]));
    }
    slopes.push_back(slope_right);

    // canonical witness: g takes the affine base plus all upward slope jumps,
    // h collects the downward jumps; the jump at knot k is slopes[k+1]-slopes[k]
    std::vector<Rational> gk, gv, hk, hv;
    Rational gs = slope_left;
    Rational hs = 0;
    Rational gval = values[0], hval = 0;
    gk.push_back(knots[0]); gv.push_back(gval);
    hk.push_back(knots[0]); hv.push_back(hval);
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            const Rational du = knots[k] - knots[k - 1];
            gval += gs * du;
            hval += hs * du;
        }
        const Rational jump = slopes[k + 1] - slopes[k];
        if (jump > 0) {
            if (k > 0) { gk.push_back(knots[k]); gv.push_back(gval); }
            gs += jump;
        } else if (jump < 0) {
            if (k > 0) { hk.push_back(knots[k]); hv.push_back(hval); }
            hs -= jump;
        }
    }
    TotalPL out;
    out.g = TotalConvexPL(std::move(gk), std::move(gv), slope_left, gs);
    out.h = TotalConvexPL(std::move(hk), std::move(hv), Rational(0), hs);
    assert(out.eval(knots[0]) == values[0]);
    return out;
}

std::vector<Rational> TotalPL::merged_knots() const
{
    return merge_sorted(g.knots(), h.knots());
}

std::vector<Rational> TotalPL::slopes() const
{
    const auto knots = merged_knots();
    std::vector<Rational> out;
    out.push_back(g.slope_left() - h.slope_left());
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        out.push_back((eval(knots[i + 1]) - eval(knots[i])) / (knots[i + 1] - knots[i]));
    out.push_back(g.slope_right() - h.slope_right());
    return out;
}

Rational TotalPL::lipschitz_constant() const
{
    Rational best = 0;
    for (const auto& s : slopes()) best = std::max(best, rat_abs(s));
    return best;
}

TotalPL extend_clamped(const DCFun1& f, ExtendMode mode, const Rational& L)
{
    const Rational lip = lipschitz_constant(f);
    if (L < lip)
        throw std::invalid_argument("extend_clamped: declared constant below the actual Lipschitz constant");

    const Rational lo = f.domain_lo();
    const Rational hi = f.domain_hi();
    std::vector<Rational> knots, values;
    for (const auto& u : f.merged_knots()) {
        knots.push_back(u);
        values.push_back(f.eval(u));
    }

    switch (mode) {
    case ExtendMode::constant_both:
        return TotalPL::from_pl(knots, values, Rational(0), Rational(0));
    case ExtendMode::upper_sector:
    case ExtendMode::lower_sector: {
        if (lo != 0)
            throw std::invalid_argument("extend_clamped: sector modes need domain [0, rho]");
        if (f.eval(Rational(0)) != 0)
            throw std::invalid_argument("extend_clamped: sector modes need f(0) = 0");
        const Rational s = (mode == ExtendMode::upper_sector) ? Rational(2 * L) : Rational(-2 * L);
        return TotalPL::from_pl(knots, values, s, Rational(0));
    }
    }
    throw std::logic_error("extend_clamped: unreachable");
}

namespace {

void write_convex(std::ostream& os, const ConvexPL& c)
{
    os << "convexpl " << c.knots().size() << "\n";
    for (std::size_t i = 0; i < c.knots().size(); ++i)
        os << format_rational(c.knots()[i]) << " " << format_rational(c.values()[i]) << "\n";
}

ConvexPL read_convex(std::istream& in)
{
    std::string tag;
    std::size_t n = 0;
    if (!(in >> tag >> n) || tag != "convexpl")
        throw std::invalid_argument("parse_profile: expected 'convexpl <n>'");
    std::vector<Rational> k(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string ks, vs;
        if (!(in >> ks >> vs)) throw std::invalid_argument("parse_profile: truncated knot table");
        k[i] = parse_rational(ks);
        v[i] = parse_rational(vs);
    }
    return ConvexPL(std::move(k), std::move(v));
}

} // namespace

std::string serialize_profile(const DCFun1& f)
{
    std::ostringstream os;
    os << "dcfun1\n";
    write_convex(os, f.g);
    write_convex(os, f.h);
    return os.str();
}

DCFun1 parse_profile(std::istream& in)
{
    std::string tag;
    if (!(in >> tag) || tag != "dcfun1")
        throw std::invalid_argument("parse_profile: expected 'dcfun1'");
    ConvexPL g = read_convex(in);
    ConvexPL h = read_convex(in);
    return DCFun1(std::move(g), std::move(h));
}

DCFun1 parse_profile(const std::string& text)
{
    std::istringstream is(text);
    return parse_profile(is);
}

} // namespace wdc
