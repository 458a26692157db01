#pragma once

#include <string>
#include <vector>

#include "gpc/diagram.hpp"
#include "gpc/quadrature.hpp"
#include "gpc/weights.hpp"

namespace gpc {

/// A diagram, its resolved weights and an isotropic bandwidth σ (Σ = σ²I).
class GpcModel {
public:
    GpcModel(PersistenceDiagram diagram, const WeightSpec& spec, double sigma);
    /// Throws InvalidArgument if the weights are not aligned with the diagram.
    GpcModel(PersistenceDiagram diagram, ResolvedWeights weights, double sigma);

    const PersistenceDiagram& diagram() const noexcept { return diagram_; }
    const ResolvedWeights& weights() const noexcept { return weights_; }
    double sigma() const noexcept { return sigma_; }

    /// Quadrature support [b_min - padding·σ, d_max + padding·σ]; empty diagrams give [0, 0].
    Interval support(double padding) const;

private:
    PersistenceDiagram diagram_;
    ResolvedWeights weights_;
    double sigma_;
};

struct CurveSamples {
    std::vector<double> t_values;
    std::vector<double> values;
    double sigma;
    std::string weight_kind;
};

/// ρ(x, y) = Σ κ_i · exp(-((x-b_i)² + (y-d_i)²)/(2σ²)) / (2πσ²).
double surface_eval(const GpcModel& m, double x, double y);

/// G(t) = Σ κ_i Φ((t-b_i)/σ) Φ((d_i-t)/σ).
double gpc_eval(const GpcModel& m, double t);

/// n >= 2 uniformly spaced samples on [t_min, t_max], endpoints included.
CurveSamples gpc_sample(const GpcModel& m, double t_min, double t_max, int n);

struct NormResult {
    double value;
    /// Set for mixed-sign weights, where the per-point sum only bounds ‖G‖₁ from above.
    bool is_upper_bound;
};

/// Σ |κ_i| [ℓ_i Φ(ℓ_i/(√2σ)) + √2σ φ(ℓ_i/(√2σ))] with ℓ_i = d_i - b_i.
NormResult l1_norm_closed(const GpcModel& m);

/// ∫ |G| by adaptive quadrature over the padded support.
double l1_norm_quadrature(const GpcModel& m, const QuadratureSpec& spec = {});

/// ∫ |G_1 - G_2| over the union of the padded supports. Throws SigmaMismatch.
double l1_distance(const GpcModel& m1, const GpcModel& m2, const QuadratureSpec& spec = {});

/// ‖G‖₁ of the unweighted curve on `d` in closed form.
double unweighted_l1_norm(const PersistenceDiagram& d, double sigma);

/// `# sigma=… weight=… diagram=fnv1a64:…` comment, `t,value` header, one row per sample.
std::string curve_samples_csv(const CurveSamples& s, const PersistenceDiagram& d);

/// Fixed 10-significant-digit rendering used by every emitted file.
std::string format_number(double v);

}  // namespace gpc
