#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gpc/curves.hpp"
#include "gpc/diagram.hpp"
#include "gpc/wasserstein.hpp"
#include "gpc/weights.hpp"

namespace gpc {

enum class Theorem {
    UnweightedA,       ///< ‖G_C - G_D‖₁ <= A·W₁
    GeneralWeightsB,   ///< <= B·W₁ + M_γ‖G_D′‖₁
    LipschitzJ,        ///< <= J·W₁ for K-Lipschitz cross weights
    LifespanG,         ///< <= G·W₁ with κ = d - b
    NormalizedLifespanP,  ///< <= P·W₁ with κ = (d - b)/L, both total lifespans >= 1
};

Theorem parse_theorem(std::string_view token);  // A|B|J|G|P
std::string_view theorem_token(Theorem t);

/// Matching-dependent quantities shared by the weighted bounds.
struct PartitionQuantities {
    double m_c = 0.0;            ///< max |κ_C| over C
    double m_d = 0.0;            ///< max |κ_D| over D
    double m_e = 0.0;            ///< max |κ_E| over diagonal-matched points (0 if none)
    double delta_e = 0.0;        ///< min lifespan over E (+inf if none)
    double m_gamma = 0.0;        ///< max |κ_C(p) - κ_D(γ(p))| over matched pairs (0 if none)
    double g_dprime_norm = 0.0;  ///< ‖G_D′‖₁, unweighted, closed form
};

PartitionQuantities partition_quantities(const PersistenceDiagram& c, const PersistenceDiagram& d,
                                         const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m,
                                         double sigma);

/// A = max{2, 2(1 + σ/(√π δ_{C,D}))}.
double constant_unweighted(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma);

struct GeneralConstants {
    double b;
    double additive;  ///< M_γ·‖G_D′‖₁
};

/// B = max{2M_C, 2M_E(1 + σ/(√π δ_E))}, with 1/δ_E = 0 when E is empty.
GeneralConstants constants_general(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma,
                                   const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m);

/// J = max{2M_C, 2M_E(1 + σ/(√π δ_E)), K‖G_D′‖₁}.
double constant_lipschitz(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma, double k,
                          const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m);

/// G = max{2M_C, ‖G_D′‖₁, 2(M_E + σ/√π), 2 + 2σ/√π}; both weights must be RawLifespan.
double constant_lifespan(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma,
                         const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m);

/// P = max{2, 2(M_E + σ/√π), 2 + 2σ/√π, 4 + 4σ/(√π δ_D)}; both weights NormalizedLife and
/// both total lifespans >= 1, otherwise HypothesisViolated / WeightKindMismatch.
double constant_normalized(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma,
                           const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m);

struct StabilityReport {
    Theorem theorem;
    double constant = 0.0;
    double additive_term = 0.0;
    double w1 = 0.0;
    double l1_dist = 0.0;
    double bound_value = 0.0;
    bool holds = false;
    double slack = 0.0;
    PartitionQuantities quantities;
    std::string inputs_digest;
};

struct VerifyOptions {
    /// K for LipschitzJ; falls back to cross_lipschitz_bound when absent.
    std::optional<double> lipschitz;
    QuadratureSpec quadrature;
};

/// l1 <= bound + 1e-6·bound + 1e-9.
bool within_bound(double l1_dist, double bound_value);

/// Computes W₁ with its optimal matching, the theorem's constant, the quadrature
/// L1 distance between the two weighted curves, and the verdict.
StabilityReport verify(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma, Theorem theorem,
                       const WeightSpec& spec_c, const WeightSpec& spec_d, const VerifyOptions& options = {});

/// Natural weight for each theorem: A, B, J → none; G → lifespan; P → normlife.
WeightKind default_weight_for(Theorem t);

std::string report_csv_header();
std::string report_csv_row(const StabilityReport& r);
std::string report_text(const StabilityReport& r);

}  // namespace gpc
