#include "wdc2d/space_x.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wdc {

XFunction distance_restriction(const CompactSetModel& K)
{
    if (K.empty()) throw std::invalid_argument("distance_restriction: empty set");
    if (K.max_norm() > 1.0 + 1e-12)
        throw std::invalid_argument("distance_restriction: set must lie inside B(0,1)");
    auto model = std::make_shared<CompactSetModel>(K);
    XFunction f;
    f.origin = XFunction::Origin::distance_restriction;
    f.eval = [model](const Point2& p) { return std::min(model->distance(p), 4.0); };
    return f;
}

std::vector<std::string> x_validate(const XFunction& f, int grid)
{
    if (grid < 16) throw std::invalid_argument("x_validate: grid must be >= 16");
    std::vector<std::string> violations;
    const double h = 8.0 / grid;
    const double tol = 1e-9;

    bool range_bad = false, lip_bad = false, outer_bad = false;
    std::vector<std::vector<double>> vals(grid + 1, std::vector<double>(grid + 1,
                                          std::numeric_limits<double>::quiet_NaN()));
    for (int i = 0; i <= grid && !(range_bad && lip_bad && outer_bad); ++i) {
        for (int j = 0; j <= grid; ++j) {
            const Point2 p{-4.0 + i * h, -4.0 + j * h};
            if (p.norm() > 4.0) continue;
            const double v = f(p);
            vals[i][j] = v;
            if (!range_bad && (v < -tol || v > 4.0 + tol)) {
                violations.push_back("range: f outside [0,4] at (" + std::to_string(p.x) + "," +
                                     std::to_string(p.y) + ")");
                range_bad = true;
            }
            if (!outer_bad && p.norm() >= 3.0 && v < 1.0 - tol) {
                violations.push_back("outer bound: f < 1 on B(0,4) minus U(0,3) at (" +
                                     std::to_string(p.x) + "," + std::to_string(p.y) + ")");
                outer_bad = true;
            }
            if (!lip_bad) {
                if (i > 0 && !std::isnan(vals[i - 1][j]) &&
                    std::abs(v - vals[i - 1][j]) > h * (1.0 + tol) + tol)
                    lip_bad = true;
                if (j > 0 && !std::isnan(vals[i][j - 1]) &&
                    std::abs(v - vals[i][j - 1]) > h * (1.0 + tol) + tol)
                    lip_bad = true;
                if (lip_bad) violations.push_back("lipschitz: sampled quotient above 1");
            }
        }
    }
    return violations;
}

SphereNet sphere_net(const Rational& eps)
{
    if (!(eps > 0) || !(eps < 2)) throw std::invalid_argument("sphere_net: need 0 < eps < 2");
    const double e = to_double(eps);
    int n = 4;
    if (e / 2.0 < 1.0)
        n = std::max(4, static_cast<int>(std::ceil(M_PI / std::asin(e / 2.0))));
    SphereNet net;
    net.eps = eps;
    net.directions.reserve(n);
    for (int k = 0; k < n; ++k)
        net.directions.push_back(UnitVector::from_angle(2.0 * M_PI * k / n));
    return net;
}

namespace {

struct XGrid {
    std::vector<Point2> pts;
    std::vector<double> vals;
};

XGrid eval_x_grid(const XFunction& f, int m)
{
    const double h = std::ldexp(1.0, -m);
    const int n = 4 << m;   // 4 / h
    XGrid g;
    for (int i = -n; i <= n; ++i) {
        for (int j = -n; j <= n; ++j) {
            const Point2 p{i * h, j * h};
            if (p.norm2() >= 16.0) continue;
            g.pts.push_back(p);
            g.vals.push_back(f(p));
        }
    }
    return g;
}

/// Offsets of the y-grid for radius rho: spacing rho * 2^-m inside U(0, rho).
std::vector<Point2> y_offsets(double rho, int m)
{
    const int n = 1 << m;
    const double h = rho / n;
    std::vector<Point2> out;
    for (int i = -n + 1; i <= n - 1; ++i)
        for (int j = -n + 1; j <= n - 1; ++j)
            if (i * i + j * j < n * n) out.push_back({i * h, j * h});
    return out;
}

} // namespace

FormulaCheck check_regularity_formula(const XFunction& f, const TruncationDepth& depth)
{
    const int m = depth.m;
    if (m < 1) throw std::invalid_argument("check_regularity_formula: depth must be >= 1");
    FormulaCheck out;

    const XGrid grid = eval_x_grid(f, m);
    const int denom = 1 << m;

    std::vector<double> alphas;   // filled per rho below

    for (int k = 1; k <= m; ++k) {
        const Rational eps(1, 1 << k);
        const int top = (1 << (m - k)) - 1;   // largest numerator with q < eps
        if (top < 2) continue;                // no pair p < q < eps at this depth
        out.tried.push_back(eps);
        const double eps_d = to_double(eps);
        const SphereNet net = sphere_net(eps);

        bool eps_ok = true;
        std::optional<FormulaCheck::Witness> eps_witness;

        for (int a = 1; a <= top && eps_ok; ++a) {
            for (int b = a + 1; b <= top && eps_ok; ++b) {
                const double p = static_cast<double>(a) / denom;
                const double q = static_cast<double>(b) / denom;
                // band of this pair
                std::vector<std::size_t> band;
                for (std::size_t idx = 0; idx < grid.pts.size(); ++idx)
                    if (grid.vals[idx] > p && grid.vals[idx] < q) band.push_back(idx);
                if (band.empty()) continue;   // first disjunct holds everywhere

                bool pair_ok = false;
                std::optional<Point2> first_fail;
                for (int jr = 1; jr < denom && !pair_ok; ++jr) {
                    const double rho = static_cast<double>(jr) / denom;
                    const auto offs = y_offsets(rho, m);
                    alphas.clear();
                    for (int t = 1; t <= m; ++t) alphas.push_back(rho * std::ldexp(1.0, -t));

                    bool all_x_ok = true;
                    for (const std::size_t idx : band) {
                        const Point2& x = grid.pts[idx];
                        std::vector<double> fy(offs.size());
                        for (std::size_t yi = 0; yi < offs.size(); ++yi)
                            fy[yi] = f(x + offs[yi]);
                        bool found_nu = false;
                        for (const auto& nu : net.directions) {
                            bool nu_ok = true;
                            for (std::size_t yi = 0; yi < offs.size() && nu_ok; ++yi) {
                                const Point2 y = x + offs[yi];
                                for (const double alpha : alphas) {
                                    if (f(y + alpha * nu.point()) - fy[yi] > -eps_d * alpha) {
                                        nu_ok = false;
                                        break;
                                    }
                                }
                            }
                            if (nu_ok) { found_nu = true; break; }
                        }
                        if (!found_nu) {
                            all_x_ok = false;
                            if (jr == 1 && !first_fail) first_fail = x;
                            break;
                        }
                    }
                    if (all_x_ok) pair_ok = true;
                }
                if (!pair_ok) {
                    eps_ok = false;
                    FormulaCheck::Witness w;
                    w.p = Rational(a, denom);
                    w.q = Rational(b, denom);
                    w.x = first_fail.value_or(grid.pts[band.front()]);
                    eps_witness = w;
                }
            }
        }
        if (eps_ok) {
            out.verdict = FormulaCheck::Verdict::holds;
            out.eps = eps;
            return out;
        }
        out.failures.emplace_back(eps, *eps_witness);
        if (!out.witness) out.witness = eps_witness;
    }

    out.verdict = out.tried.empty() ? FormulaCheck::Verdict::inconclusive
                                    : FormulaCheck::Verdict::fails;
    return out;
}

std::string formula_report(const FormulaCheck& check)
{
    std::ostringstream os;
    os << "wdc2d-formula v1\n";
    switch (check.verdict) {
    case FormulaCheck::Verdict::holds:
        os << "verdict holds_at_depth\n";
        os << "epsilon " << format_rational(check.eps) << "\n";
        break;
    case FormulaCheck::Verdict::fails:
        os << "verdict fails_at_depth\n";
        for (const auto& [eps, w] : check.failures) {
            os << "epsilon " << format_rational(eps)
               << " witness p=" << format_rational(w.p) << " q=" << format_rational(w.q)
               << " x=(" << w.x.x << "," << w.x.y << ")\n";
        }
        break;
    case FormulaCheck::Verdict::inconclusive:
        os << "verdict inconclusive\n";
        break;
    }
    os << "tried";
    for (const auto& e : check.tried) os << " " << format_rational(e);
    os << "\n";
    return os.str();
}

bool dc_witness_validate(const XFunction& f, const std::function<double(const Point2&)>& g,
                         const std::function<double(const Point2&)>& h, int grid_n,
                         unsigned long long seed)
{
    if (grid_n < 2) throw std::invalid_argument("dc_witness_validate: grid too small");
    const double step = 8.0 / grid_n;
    std::vector<Point2> lattice;
    for (int i = 0; i <= grid_n; ++i) {
        for (int j = 0; j <= grid_n; ++j) {
            const Point2 p{-4.0 + i * step, -4.0 + j * step};
            if (p.norm() <= 4.0) lattice.push_back(p);
        }
    }
    for (const auto& p : lattice)
        if (std::abs(f(p) - (g(p) - h(p))) > 1e-9) return false;

    // midpoint convexity of both witnesses on seeded pairs
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, lattice.size() - 1);
    for (int t = 0; t < 500; ++t) {
        const Point2 a = lattice[pick(rng)];
        const Point2 b = lattice[pick(rng)];
        const Point2 mid = (a + b) / 2.0;
        if (g(mid) > 0.5 * (g(a) + g(b)) + 1e-9) return false;
        if (h(mid) > 0.5 * (h(a) + h(b)) + 1e-9) return false;
    }
    return true;
}

CompactSetModel rescale(const CompactSetModel& K, double r)
{
    if (!(r > 0.0)) throw std::invalid_argument("rescale: factor must be positive");
    CompactSetModel out;
    for (const auto& p : K.points()) out.add_point(p / r);
    for (const auto& s : K.flattened_segments()) out.add_segment(s.a / r, s.b / r);
    for (const auto& a : K.arcs())
        out.add_arc({a.center / r, a.radius / r, a.ang_lo, a.ang_hi});
    if (K.has_interior()) {
        auto inner = std::make_shared<CompactSetModel>(K);
        out.set_interior([inner, r](const Point2& p) { return inner->contains(p * r, 0.0); });
    }
    return out;
}

XFunction load_xfunction_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("load_xfunction_csv: empty input");
    // tolerate whitespace around the header
    std::string header = line;
    header.erase(std::remove_if(header.begin(), header.end(), ::isspace), header.end());
    if (header != "x,y,value")
        throw std::invalid_argument("load_xfunction_csv: expected header 'x,y,value'");

    std::vector<Point2> pts;
    std::vector<double> vals;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream is(line);
        double x, y, v;
        if (!(is >> x >> y >> v))
            throw std::invalid_argument("load_xfunction_csv: malformed row '" + line + "'");
        pts.push_back({x, y});
        vals.push_back(v);
    }
    if (pts.empty()) throw std::invalid_argument("load_xfunction_csv: no samples");

    // detect a complete rectangular grid for bilinear interpolation
    std::vector<double> xs, ys;
    for (const auto& p : pts) { xs.push_back(p.x); ys.push_back(p.y); }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    XFunction f;
    f.origin = XFunction::Origin::user;
    if (xs.size() * ys.size() == pts.size() && xs.size() >= 2 && ys.size() >= 2) {
        auto grid = std::make_shared<std::map<std::pair<double, double>, double>>();
        for (std::size_t i = 0; i < pts.size(); ++i)
            (*grid)[{pts[i].x, pts[i].y}] = vals[i];
        auto sx = std::make_shared<std::vector<double>>(xs);
        auto sy = std::make_shared<std::vector<double>>(ys);
        f.eval = [grid, sx, sy](const Point2& p) {
            auto locate = [](const std::vector<double>& v, double t) {
                auto it = std::upper_bound(v.begin(), v.end(), t);
                std::size_t i = (it == v.begin()) ? 0 : (it - v.begin()) - 1;
                return std::min(i, v.size() - 2);
            };
            const std::size_t i = locate(*sx, p.x);
            const std::size_t j = locate(*sy, p.y);
            const double x0 = (*sx)[i], x1 = (*sx)[i + 1];
            const double y0 = (*sy)[j], y1 = (*sy)[j + 1];
            const double tx = std::clamp((p.x - x0) / (x1 - x0), 0.0, 1.0);
            const double ty = std::clamp((p.y - y0) / (y1 - y0), 0.0, 1.0);
            const double v00 = grid->at({x0, y0}), v10 = grid->at({x1, y0});
            const double v01 = grid->at({x0, y1}), v11 = grid->at({x1, y1});
            return (1 - tx) * ((1 - ty) * v00 + ty * v01) + tx * ((1 - ty) * v10 + ty * v11);
        };
    } else {
        auto sp = std::make_shared<std::vector<Point2>>(std::move(pts));
        auto sv = std::make_shared<std::vector<double>>(std::move(vals));
        f.eval = [sp, sv](const Point2& p) {
            double best = std::numeric_limits<double>::infinity();
            double val = 0.0;
            for (std::size_t i = 0; i < sp->size(); ++i) {
                const double d = ((*sp)[i] - p).norm2();
                if (d < best) { best = d; val = (*sv)[i]; }
            }
            return val;
        };
    }
    return f;
}

} // namespace wdc
