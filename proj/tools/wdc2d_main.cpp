// Command-line front end: export distance / subdifferential fields from model
// files, run weak-regularity certification, emit plot data.
//
// Exit codes: 0 certified / success, 1 counterexample found, 2 inconclusive,
//             3 malformed configuration, 4 invalid model.

#include "wdc2d/aura.hpp"
#include "wdc2d/clarke.hpp"
#include "wdc2d/model_io.hpp"
#include "wdc2d/space_x.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace wdc;

struct Options {
    std::string model_path;
    int grid = 64;
    double lo = -1.0, hi = 1.0;
    int depth = 4;
    std::vector<double> eps_list;
    int band_samples = 512;
    unsigned long long seed = 1;
    std::string out_path;
    std::string svg_path;
};

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double field_hull_distance(const CompactSetModel& set, const Point2& p, double d)
{
    if (d <= 1e-9 * (1.0 + p.norm())) return 0.0;
    return distance_origin_to_hull(distance_subdifferential(p, set));
}

void write_svg(const std::string& path, const CompactSetModel& set, double eps,
               const Options& opt)
{
    std::ofstream svg(path);
    if (!svg) throw std::runtime_error("cannot open svg output '" + path + "'");
    const double lo = opt.lo, hi = opt.hi;
    const double span = hi - lo;
    const int px = 640;
    auto X = [&](double x) { return (x - lo) / span * px; };
    auto Y = [&](double y) { return (hi - y) / span * px; };

    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << px << "' height='" << px
        << "' viewBox='0 0 " << px << " " << px << "'>\n";
    svg << "<rect width='" << px << "' height='" << px << "' fill='white'/>\n";

    // band heat shading: green (hull far from 0) to red (hull near 0)
    const int cells = 160;
    const double step = span / cells;
    for (int i = 0; i < cells; ++i) {
        for (int j = 0; j < cells; ++j) {
            const Point2 p{lo + (i + 0.5) * step, lo + (j + 0.5) * step};
            const double d = set.distance(p);
            if (!(d > 0.0 && d < eps)) continue;
            const double hd = field_hull_distance(set, p, d);
            const int hue = static_cast<int>(120.0 * std::min(1.0, hd));
            svg << "<rect x='" << X(p.x) - px / (2.0 * cells) << "' y='"
                << Y(p.y) - px / (2.0 * cells) << "' width='" << double(px) / cells
                << "' height='" << double(px) / cells << "' fill='hsl(" << hue
                << ",90%,55%)' fill-opacity='0.5'/>\n";
        }
    }

    // set boundary
    for (const auto& s : set.flattened_segments())
        svg << "<line x1='" << X(s.a.x) << "' y1='" << Y(s.a.y) << "' x2='" << X(s.b.x)
            << "' y2='" << Y(s.b.y) << "' stroke='black' stroke-width='1.5'/>\n";
    for (const auto& a : set.arcs()) {
        const int steps = std::max(8, static_cast<int>(a.span() * 64));
        std::ostringstream d;
        for (int k = 0; k <= steps; ++k) {
            const Point2 p = a.at(a.ang_lo + a.span() * k / steps);
            d << (k == 0 ? "M" : "L") << X(p.x) << " " << Y(p.y) << " ";
        }
        svg << "<path d='" << d.str() << "' fill='none' stroke='black' stroke-width='1.5'/>\n";
    }
    for (const auto& p : set.points())
        svg << "<circle cx='" << X(p.x) << "' cy='" << Y(p.y)
            << "' r='2.5' fill='black'/>\n";
    svg << "</svg>\n";
}

int cmd_field(const Options& opt)
{
    ModelFile mf;
    try {
        mf = load_model_path(opt.model_path);
    } catch (const std::runtime_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 4;
    }
    CompactSetModel set;
    try {
        set = realize_model(mf);
    } catch (const std::exception& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 4;
    }

    std::ostringstream csv;
    csv << "# wdc2d field v1 seed=" << opt.seed << " grid=" << opt.grid << " lo=" << fmt(opt.lo)
        << " hi=" << fmt(opt.hi) << "\n";
    csv << "x,y,d,hull_dist\n";
    for (int j = 0; j < opt.grid; ++j) {
        for (int i = 0; i < opt.grid; ++i) {
            const double x = (opt.grid == 1) ? opt.lo
                                             : opt.lo + (opt.hi - opt.lo) * i / (opt.grid - 1);
            const double y = (opt.grid == 1) ? opt.lo
                                             : opt.lo + (opt.hi - opt.lo) * j / (opt.grid - 1);
            const Point2 p{x, y};
            const double d = set.distance(p);
            const double hd = field_hull_distance(set, p, d);
            csv << fmt(x) << "," << fmt(y) << "," << fmt(d) << "," << fmt(hd) << "\n";
        }
    }
    if (opt.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(opt.out_path);
        if (!out) { std::cerr << "config error: cannot open output\n"; return 3; }
        out << csv.str();
    }
    if (!opt.svg_path.empty()) write_svg(opt.svg_path, set, 0.25, opt);
    return 0;
}

int cmd_certify(const Options& opt)
{
    ModelFile mf;
    try {
        mf = load_model_path(opt.model_path);
    } catch (const std::runtime_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 4;
    }
    CompactSetModel set;
    try {
        set = realize_model(mf);
        if (set.empty()) throw std::invalid_argument("empty set");
    } catch (const std::exception& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 4;
    }

    std::vector<double> eps = opt.eps_list.empty() ? default_eps_candidates() : opt.eps_list;
    CertificateParams params;
    params.band_samples = opt.band_samples;
    params.seed = opt.seed;
    const auto cert = weak_regularity_certificate(set, eps, params);

    // scale into the unit ball for the function-space membership sweep
    const double mn = set.max_norm();
    const double scale = (mn > 1.0) ? mn * (1.0 + 1e-9) : 1.0;
    const CompactSetModel unit = (scale == 1.0) ? set : rescale(set, scale);
    const auto formula = check_regularity_formula(distance_restriction(unit), {opt.depth});

    std::ostringstream rep;
    rep << "wdc2d certify v1 seed=" << opt.seed << " depth=" << opt.depth
        << " scale=" << fmt(scale) << "\n";
    rep << certificate_report(cert);
    rep << formula_report(formula);

    int code = 2;
    if (cert && formula.verdict == FormulaCheck::Verdict::holds) code = 0;
    else if (!cert && formula.verdict == FormulaCheck::Verdict::fails) code = 1;
    rep << "exit " << code << "\n";

    if (opt.out_path.empty()) {
        std::cout << rep.str();
    } else {
        std::ofstream out(opt.out_path);
        if (!out) { std::cerr << "config error: cannot open output\n"; return 3; }
        out << rep.str();
        std::cout << rep.str();
    }
    if (!opt.svg_path.empty())
        write_svg(opt.svg_path, set, cert ? cert->epsilon : eps.front(), opt);
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"planar DC set toolkit"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--model", opt.model_path, "model file path")->required();
        cmd->add_option("--seed", opt.seed, "random seed recorded in outputs");
        cmd->add_option("--out", opt.out_path, "output path (default stdout)");
        cmd->add_option("--svg", opt.svg_path, "also write an SVG rendering");
    };

    CLI::App* field = app.add_subcommand("field", "export a distance / hull-distance grid as CSV");
    add_common(field);
    field->add_option("--grid", opt.grid, "grid resolution per axis")->check(CLI::Range(16, 4096));
    field->add_option("--lo", opt.lo, "lower grid bound (both axes)");
    field->add_option("--hi", opt.hi, "upper grid bound (both axes)");

    CLI::App* certify =
        app.add_subcommand("certify", "weak-regularity certificate + formula sweep");
    add_common(certify);
    certify->add_option("--depth", opt.depth, "dyadic truncation depth")->check(CLI::Range(1, 8));
    certify->add_option("--eps-list", opt.eps_list, "certificate candidates, descending");
    certify->add_option("--band-samples", opt.band_samples, "uniform band samples per candidate");
    certify->add_option("--grid", opt.grid, "svg shading resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (field->parsed()) return cmd_field(opt);
        if (certify->parsed()) return cmd_certify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
