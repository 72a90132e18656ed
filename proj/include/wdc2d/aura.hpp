#ifndef WDC2D_AURA_HPP
#define WDC2D_AURA_HPP

#include "wdc2d/clarke.hpp"
#include "wdc2d/sectors.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wdc {

/// Degenerate sector data extended to all of R: the upper profile continues
/// as 2L*u for u < 0 and stays at f(rho) beyond rho, the lower one as -2L*u
/// and g(rho). Both extensions are 2L-Lipschitz.
class DegenerateExtension {
public:
    /// Profiles are restricted to [0, rho] before extension; L must dominate
    /// both Lipschitz constants (pass L < 0 to use the exact maximum).
    DegenerateExtension(const DCFun1& upper_profile, const DCFun1& lower_profile,
                        double rho, Rational L = Rational(-1));
    static DegenerateExtension from_sector(const DegenerateClosedSector& s);

    const TotalPL& upper() const { return upper_; }
    const TotalPL& lower() const { return lower_; }
    const Rational& lipschitz() const { return L_; }
    double rho() const { return rho_; }

    double upper_graph_distance(const Point2& y) const;
    double lower_graph_distance(const Point2& y) const;

private:
    TotalPL upper_;
    TotalPL lower_;
    Rational L_;
    double rho_ = 0.0;

    struct FlatGraph {
        std::vector<Point2> pts;
        double slope_left = 0.0;
        double slope_right = 0.0;
        double dist(const Point2& y) const;
    };
    FlatGraph flat_upper_, flat_lower_;
    static FlatGraph flatten(const TotalPL& f);
};

/// The plane split by the extended graphs: the region between them (core),
/// above the upper graph (above), below the lower one (below), and the left
/// cone where the apex is nearest (behind). Overlaps resolve to the lowest
/// index; the indices are stable across runs (exact rational predicates).
enum class Region : int { core = 0, above = 1, below = 2, behind = 3 };

Region region_classify(const Point2& y, const DegenerateExtension& ext);

/// Piecewise distance to the extended core region:
///   core -> 0, above -> dist to upper graph, below -> dist to lower graph,
///   behind -> |y|.
/// Equals dist(y, core region) everywhere.
double extension_distance(const Point2& y, const DegenerateExtension& ext);

/// The core region clipped at u <= extent, as a set model with boundary
/// graphs, the right cap and an exact interior test. Used to cross-check
/// extension_distance and the subdifferential bounds against set queries.
CompactSetModel extension_region_model(const DegenerateExtension& ext, double extent);

/// The graph of a total PL function restricted to [u_lo, u_hi] as a segment
/// model (knot-exact polyline).
CompactSetModel graph_model(const TotalPL& f, double u_lo, double u_hi);

/// Local distance evaluator for a validated model, valid on the open disc
/// U(center, rho/3):
///   isolated    -> |y - center|
///   degenerate  -> extension_distance in the sector frame
///   complement  -> distance to the clamped wall graph of the sector that
///                  contains y, 0 outside all sectors.
class AuraEvaluator {
public:
    explicit AuraEvaluator(const LocalModel& m);

    double operator()(const Point2& y) const;   // throws outside U(center, rho/3)
    const LocalModel& model() const { return model_; }

private:
    LocalModel model_;
    std::optional<DegenerateExtension> degenerate_;
    std::vector<TotalPL> wall_extensions_;      // complement case, per sector
};

double aura_distance(const LocalModel& m, const Point2& y);

/// Sampled weak-regularity evidence: every band sample has distance value in
/// (0, epsilon) and subdifferential hull at distance >= epsilon from the
/// origin.
struct RegularityCertificate {
    double epsilon = 0.0;
    std::vector<std::pair<Point2, double>> band;   // (sample, hull distance)
    double min_hull_distance = 0.0;
    Point2 worst_point;
};

struct CertificateParams {
    int band_samples = 512;        // target uniform rejection samples
    unsigned long long seed = 20240901ULL;
};

/// Tries the candidates in the given (descending) order; a candidate is
/// accepted when every sampled band point keeps its hull at distance
/// >= epsilon from the origin. Band samples merge boundary-normal offsets,
/// uniform rejection samples and exact midpoints of point primitives.
std::optional<RegularityCertificate> weak_regularity_certificate(
    const CompactSetModel& set, const std::vector<double>& eps_candidates,
    const CertificateParams& params = {});

std::vector<double> default_eps_candidates();   // 1/2, 1/4, ..., 2^-16

std::string certificate_report(const std::optional<RegularityCertificate>& cert);

/// Randomized verification that distance subdifferentials of PL graphs keep
/// their vertical component away from zero, and that metric projections stay
/// inside the expected horizontal band and below the expected depth.
struct GraphLemmaReport {
    long trials = 0;
    long violations = 0;
    double min_scaled_vertical = 0.0;   // min |xi_2| * sqrt(L^2+1), want >= 1
    double max_band_excess = 0.0;       // max(|u| - L r / sqrt(1+L^2)), want <= 0
    double max_depth_excess = 0.0;      // max(r / sqrt(1+L^2) - s*v), want <= 0
    Point2 worst_point;
};

GraphLemmaReport verify_graph_lemma(const TotalPL& f, int trials, unsigned long long seed);

} // namespace wdc

#endif
