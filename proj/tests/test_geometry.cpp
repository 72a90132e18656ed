#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wdc2d/geometry.hpp"
#include "wdc2d/oracle.hpp"

using namespace wdc;
using namespace wdc::testsupport;

namespace {

CompactSetModel abs_graph_segments(double extent = 2.0)
{
    CompactSetModel m;
    m.add_segment({-extent, extent}, {0.0, 0.0});
    m.add_segment({0.0, 0.0}, {extent, extent});
    return m;
}

} // namespace

TEST_CASE("point-segment distance")
{
    auto r = point_segment_distance({0, 1}, {{-1, 0}, {1, 0}});
    CHECK(r.dist == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.nearest.x == doctest::Approx(0.0));
    CHECK(r.nearest.y == doctest::Approx(0.0));

    r = point_segment_distance({2, 0}, {{-1, 0}, {1, 0}});
    CHECK(r.dist == doctest::Approx(1.0));
    CHECK(r.nearest.x == doctest::Approx(1.0));

    r = point_segment_distance({3, 4}, {{0, 0}, {0, 0}});
    CHECK(r.dist == doctest::Approx(5.0));
    CHECK(r.nearest.x == 0.0);
}

TEST_CASE("point-arc distance")
{
    const ArcPiece upper{{0, 0}, 1.0, 0.0, M_PI};
    CHECK(point_arc_distance({0, 2}, upper).dist == doctest::Approx(1.0));
    CHECK(point_arc_distance({0, 0.5}, upper).dist == doctest::Approx(0.5));
    // below the arc: endpoints win
    const auto r = point_arc_distance({0, -1}, upper);
    CHECK(r.dist == doctest::Approx(std::sqrt(2.0)));
    // centre query returns the radius deterministically
    CHECK(point_arc_distance({0, 0}, upper).dist == doctest::Approx(1.0));
}

TEST_CASE("metric projection on the absolute-value graph")
{
    // oracle first: dense sampling pins d = sqrt(2)/2 with projections
    // (1/2, 1/2) and (-1/2, 1/2)
    const CompactSetModel m = abs_graph_segments();
    const auto dense = oracle::densify(m, 1e-5);
    const double brute = oracle::brute_distance({0, 1}, dense);
    CHECK(brute == doctest::Approx(std::sqrt(0.5)).epsilon(1e-4));

    const auto proj = m.metric_projection({0, 1});
    CHECK(proj.dist == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    REQUIRE(proj.points.size() == 2);
    for (const auto& p : proj.points) {
        CHECK(std::abs(p.x) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p.y == doctest::Approx(0.5).epsilon(1e-12));
    }

    // a point of the set projects to itself
    const auto self = m.metric_projection({1, 1});
    CHECK(self.dist == doctest::Approx(0.0).epsilon(1e-15));

    const CompactSetModel single = [] {
        CompactSetModel s;
        s.add_point({0, 0});
        return s;
    }();
    const auto p0 = single.metric_projection({0, 1});
    CHECK(p0.dist == doctest::Approx(1.0));
    REQUIRE(p0.points.size() == 1);

    CHECK_THROWS_AS(CompactSetModel{}.metric_projection({0, 0}), std::invalid_argument);
}

TEST_CASE("metric projection properties on random graph models")
{
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const TotalPL f = random_total_pl(rng, Rational(2));
        CompactSetModel m;
        PLGraphPiece piece;
        piece.profile = DCFun1(ConvexPL::constant(Rational(-3), Rational(3), Rational(0)),
                               ConvexPL::constant(Rational(-3), Rational(3), Rational(0)));
        // use the graph through its segment polyline (knot-exact)
        {
            std::vector<Rational> us{Rational(-3)};
            for (const auto& u : f.merged_knots())
                if (u > Rational(-3) && u < Rational(3)) us.push_back(u);
            us.push_back(Rational(3));
            for (std::size_t i = 0; i + 1 < us.size(); ++i)
                m.add_segment({to_double(us[i]), to_double(f.eval(us[i]))},
                              {to_double(us[i + 1]), to_double(f.eval(us[i + 1]))});
        }
        const auto dense = oracle::densify(m, 2e-4);
        for (int q = 0; q < 10; ++q) {
            const Point2 z = random_point_in_disc(rng, {0, 0}, 4.0);
            const auto proj = m.metric_projection(z);
            const double brute = oracle::brute_distance(z, dense);
            // brute overestimates by at most the sample spacing
            REQUIRE(proj.dist <= brute + 1e-12);
            REQUIRE(brute <= proj.dist + 2e-4);
            for (const auto& p : proj.points) {
                REQUIRE(m.distance(p) <= 1e-9);                       // lies on the set
                REQUIRE(std::abs((z - p).norm() - proj.dist) <= 1e-9); // attains the minimum
            }
        }
    }
}

TEST_CASE("distance function is 1-Lipschitz on sampled pairs")
{
    Rng rng(555);
    const CompactSetModel m = abs_graph_segments();
    for (int i = 0; i < 500; ++i) {
        const Point2 a = random_point_in_disc(rng, {0, 0}, 3.0);
        const Point2 b = random_point_in_disc(rng, {0, 0}, 3.0);
        REQUIRE(std::abs(m.distance(a) - m.distance(b)) <= (a - b).norm() + 1e-12);
    }
}

TEST_CASE("hull distance from the origin")
{
    CHECK(distance_origin_to_hull(SubdiffHull::of({{1, 0}, {0, 1}})) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(distance_origin_to_hull(SubdiffHull::of({{3, 4}})) == doctest::Approx(5.0));
    CHECK(distance_origin_to_hull(
              SubdiffHull::of({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})) == 0.0);
    // two opposite unit vectors contain the origin
    CHECK(distance_origin_to_hull(SubdiffHull::of({{-1, 0}, {1, 0}})) == doctest::Approx(0.0));
}

TEST_CASE("convex hull construction stays convex and deduplicated")
{
    Rng rng(808);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Point2> cloud;
        const int n = 3 + static_cast<int>(rng() % 30);
        for (int i = 0; i < n; ++i) cloud.push_back({u(rng), u(rng)});
        const auto hull = SubdiffHull::of(cloud);
        const auto& v = hull.vertices();
        REQUIRE(!v.empty());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                REQUIRE((v[i] - v[j]).norm() > 1e-12);
        if (v.size() >= 3) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                const Point2& a = v[i];
                const Point2& b = v[(i + 1) % v.size()];
                const Point2& c = v[(i + 2) % v.size()];
                REQUIRE((b - a).cross(c - b) > 0.0);   // strictly counterclockwise
            }
        }
        // every cloud point lies inside
        for (const auto& p : cloud) REQUIRE(point_hull_distance(hull, p) <= 1e-9);
    }
}

TEST_CASE("hausdorff distance basics")
{
    CompactSetModel a, b;
    a.add_point({0, 0});
    b.add_point({3, 4});
    CHECK(hausdorff_distance(a, b, 1e-3).distance == doctest::Approx(5.0));
    CHECK(hausdorff_distance(a, a, 1e-3).distance == doctest::Approx(0.0));

    CompactSetModel seg, ends;
    seg.add_segment({-1, 0}, {1, 0});
    ends.add_point({-1, 0});
    ends.add_point({1, 0});
    // oracle: the sup is attained at the midpoint of the segment
    const auto h = hausdorff_distance(seg, ends, 1e-4);
    CHECK(h.distance == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(h.error_bound == doctest::Approx(1e-4));
}

TEST_CASE("hausdorff distance is symmetric and nearly triangular")
{
    Rng rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        CompactSetModel k[3];
        for (auto& m : k) {
            const int n = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < n; ++i) m.add_point(random_point_in_disc(rng, {0, 0}, 1.0));
        }
        const double res = 1e-3;
        const double d01 = hausdorff_distance(k[0], k[1], res).distance;
        const double d10 = hausdorff_distance(k[1], k[0], res).distance;
        const double d12 = hausdorff_distance(k[1], k[2], res).distance;
        const double d02 = hausdorff_distance(k[0], k[2], res).distance;
        REQUIRE(d01 == doctest::Approx(d10).epsilon(1e-12));
        REQUIRE(d02 <= d01 + d12 + 3 * res);
    }
}

TEST_CASE("graph pieces flatten, clip and project consistently")
{
    // |u| profile rotated by 90 degrees and clipped to the unit disc
    DCFun1 absu = DCFun1::from_pl({Rational(-2), Rational(0), Rational(2)},
                                  {Rational(2), Rational(0), Rational(2)});
    PLGraphPiece piece;
    piece.theta = M_PI / 2.0;
    piece.profile = absu;
    piece.u_lo = Rational(-2);
    piece.u_hi = Rational(2);
    piece.anchor = {0, 0};
    piece.clip_radius = 1.0;
    CompactSetModel m;
    m.add_graph(piece);

    // the rotated graph of |u| points left: (u,|u|) -> (-|u|, u)
    const auto proj = m.metric_projection({-2, 0});
    const double expected = std::sqrt(2.0) - 0.5 * std::sqrt(2.0);   // to the clipped corner
    CHECK(m.distance({0, 0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(proj.dist <= 2.0);
    CHECK(expected > 0.0);
    // everything stays inside the clip disc
    for (const auto& s : m.flattened_segments()) {
        REQUIRE(s.a.norm() <= 1.0 + 1e-9);
        REQUIRE(s.b.norm() <= 1.0 + 1e-9);
    }
}

TEST_CASE("oracle densify covers segments and graphs")
{
    CompactSetModel seg;
    seg.add_segment({0, 0}, {1, 0});
    const auto d = oracle::densify(seg, 0.1);
    CHECK(d.points.size() >= 11);

    CompactSetModel pt;
    pt.add_point({2, 3});
    const auto dp = oracle::densify(pt, 0.1);
    REQUIRE(dp.points.size() == 1);
    CHECK(dp.points[0].x == 2.0);

    // graph of |u| on [-1,1]: max gap audit
    DCFun1 absu = DCFun1::from_pl({Rational(-1), Rational(0), Rational(1)},
                                  {Rational(1), Rational(0), Rational(1)});
    PLGraphPiece piece;
    piece.profile = absu;
    piece.u_lo = Rational(-1);
    piece.u_hi = Rational(1);
    CompactSetModel g;
    g.add_graph(piece);
    const auto dg = oracle::densify(g, 0.01);
    double max_gap = 0.0;
    for (std::size_t i = 0; i + 1 < dg.points.size(); ++i) {
        const double gap = (dg.points[i + 1] - dg.points[i]).norm();
        if (gap < 0.05) max_gap = std::max(max_gap, gap);   // within one branch
    }
    CHECK(max_gap <= 0.0101);
}

TEST_CASE("oracle and implementation agree on random point sets")
{
    Rng rng(9001);
    CompactSetModel m;
    for (int i = 0; i < 12; ++i) m.add_point(random_point_in_disc(rng, {0, 0}, 1.0));
    const auto dense = oracle::densify(m, 1e-5);
    for (int q = 0; q < 1000; ++q) {
        const Point2 z = random_point_in_disc(rng, {0, 0}, 2.0);
        const double a = m.distance(z);
        const double b = oracle::brute_distance(z, dense);
        REQUIRE(a <= b + 1e-12);
        REQUIRE(b <= a + 1e-5);
    }
}

TEST_CASE("staged brute graph distance refines to tight accuracy")
{
    // graph of |u|: distance from (0,1) is sqrt(2)/2
    auto absval = [](double u) { return std::abs(u); };
    const double d = oracle::brute_graph_distance(absval, -2.0, 2.0, 1.0, {0, 1}, 0.05, 1e-7);
    CHECK(d == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
}
