#ifndef WDC2D_SECTORS_HPP
#define WDC2D_SECTORS_HPP

#include "wdc2d/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wdc {

/// Open region above a radially monotone PL graph inside a disc, rotated by
/// theta around the origin:
///   rot { (u,v) : |(u,v)| < radius, u in (-omega, omega), v > profile(u) }.
/// The profile satisfies profile(0) = 0 and R(u) = |(u, profile(u))| is
/// strictly increasing on [0, omega) and strictly decreasing on (-omega, 0].
struct BasicOpenSector {
    double theta = 0.0;
    double radius = 0.0;
    Rational omega;
    DCFun1 profile;

    Rot2 rotation() const { return Rot2::from_angle(theta); }
};

/// Closed sliver between two graphs over [0, omega), rotated by theta:
///   rot { (u,v) : u in [0, omega), lower(u) <= v <= upper(u) } with
///   |(u,v)| < radius. Both profiles vanish at 0 with zero right slope and
/// have strictly increasing radial parametrizations.
struct DegenerateClosedSector {
    double theta = 0.0;
    double radius = 0.0;
    Rational omega;
    DCFun1 upper;
    DCFun1 lower;

    Rot2 rotation() const { return Rot2::from_angle(theta); }
};

/// Local description of a closed planar set near a boundary point: the set
/// is a single point, one degenerate closed sector, or the complement of
/// pairwise disjoint open sectors inside the ball of radius rho.
struct LocalModel {
    enum class Case { isolated, degenerate, complement };

    Point2 center;
    double rho = 1.0;
    Case kind = Case::isolated;
    std::optional<DegenerateClosedSector> closed_sector;   // kind == degenerate
    std::vector<BasicOpenSector> sectors;                  // kind == complement
};

/// Named invariant violations; empty result means the object is valid.
std::vector<std::string> validate_sector(const BasicOpenSector& s);
std::vector<std::string> validate_sector(const DegenerateClosedSector& s);
std::vector<std::string> validate_model(const LocalModel& m);

/// Membership in the sector's own frame (apex at the origin).
bool sector_contains(const BasicOpenSector& s, const Point2& p);
bool sector_contains(const DegenerateClosedSector& s, const Point2& p);

/// True when no sampled point of a radial-angular grid (spacing
/// 1e-3 * max radius) lies in two sectors; certified exact when the
/// conservative angular supports are pairwise disjoint.
bool disjointness_check(const std::vector<BasicOpenSector>& sectors);

/// The compact set described by the model, clipped to the closed ball of
/// radius rho * (1 - shrink) so that it stays strictly inside U(center, rho).
/// Boundary primitives come from the sector profiles and the rim arcs; the
/// interior predicate matches sector_contains.
CompactSetModel build_local_set(const LocalModel& m, double shrink = 1e-3);

} // namespace wdc

#endif
