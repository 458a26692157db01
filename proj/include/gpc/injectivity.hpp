#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gpc/diagram.hpp"

namespace gpc {

inline constexpr int kMaxMixedMomentOrder = 32;

/// values[j] = Σ b^{m1_j} d^{m2_j} over the diagram.
struct MomentTable {
    std::vector<std::pair<int, int>> orders;
    std::vector<double> values;
};

/// Σ b^{m1} d^{m2}, compensated. Throws OrderTooLarge if m1 or m2 exceeds `max_order`.
double moment_sum(const PersistenceDiagram& d, int m1, int m2, int max_order = kMaxMixedMomentOrder);

/// Orders enumerated by total order m1 + m2 = 0..max_total, then by ascending m1.
/// Any enumeration that lists (i, j) before (m1, m2) whenever i <= m1 and j <= m2 has
/// the property that a shared affine change of coordinates preserves the first
/// differing pair; this one does.
std::vector<std::pair<int, int>> moment_orders(int max_total);

MomentTable moment_table(const PersistenceDiagram& d, int max_total);

/// Maps both diagrams by the same affine x -> (x - lo)/(hi - lo) so every coordinate
/// of either lands in [0, 1]. Returns the scale hi - lo (1 when both are empty).
double rescale_jointly(const PersistenceDiagram& c, const PersistenceDiagram& d, PersistenceDiagram& c_out,
                       PersistenceDiagram& d_out);

/// First (m1, m2) with m1 + m2 <= max_total whose moments differ in rescaled space
/// (relative 1e-9, absolute floor 1e-12), or nullopt when all agree.
std::optional<std::pair<int, int>> moments_equal(const PersistenceDiagram& c, const PersistenceDiagram& d,
                                                 int max_total);

enum class Axis { Birth, Death };

/// n-th moment of the unweighted surface's marginal along one axis:
/// Σ_points E[(a + σZ)^n] with a the point's birth or death.
double surface_moment_from_projection(const PersistenceDiagram& d, double sigma, Axis axis, int n);

/// ∫∫ x^{m1} y^{m2} ρ_D(x, y) dx dy for the unweighted surface.
double surface_moment(const PersistenceDiagram& d, double sigma, int m1, int m2);

struct ProbeResult {
    enum class Verdict { Identical, Distinguished, Inconclusive };
    Verdict verdict;
    int m1 = 0;  ///< first differing order when Distinguished
    int m2 = 0;
    int max_order = 0;
};

/// Compares unweighted surface moments (rescaled jointly, bandwidth scaled with
/// them) up to total order `max_total`.
ProbeResult injectivity_probe(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma,
                              int max_total);

enum class TailSide { PlusInfinity, MinusInfinity };

struct TailScan {
    enum class Status { Found, ExtremesCoincide, Saturated };
    Status status;
    double t = 0.0;
    TailSide side = TailSide::PlusInfinity;
    /// true when the curve of the first argument is the larger one at t.
    bool first_dominates = false;
};

inline constexpr int kTailScanSteps = 100;

/// Scans outward in steps of σ from the larger d_max (or the smaller b_min when the
/// deaths agree) for a t where the curve of the diagram owning that extreme exceeds
/// the other by a relative margin of 1e-12. Both diagrams must be nonempty.
TailScan tail_dominance_witness(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma);

}  // namespace gpc
