#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpc/diagram.hpp"

namespace gpc {

enum class WeightKind {
    Unweighted,          ///< κ ≡ 1 (Gaussian Betti curve)
    Life,                ///< (d-b)/L_D
    Midlife,             ///< (b+d)/m_sum; nonzero on the diagonal
    LifeEntropy,         ///< -p log p with p = (d-b)/L_D, 0 log 0 := 0
    MultiplicativeLife,  ///< d/b, births must be positive; nonzero on the diagonal
    NormalizedLife,      ///< (d-b)/L_D, the normalized-lifespan stability preset
    RawLifespan,         ///< d-b, the unnormalized lifespan stability preset
    Custom,
};

/// A user weighting function. Identity of the object (not of its code) is what
/// makes two Custom specs "the same function" for Lipschitz purposes.
struct CustomWeight {
    std::function<double(double, double)> fn;
    std::optional<double> lipschitz;  ///< K under the L∞ metric, when known
    std::string name = "custom";
};

class WeightSpec {
public:
    WeightSpec() = default;
    explicit WeightSpec(WeightKind kind);

    /// Validates κ(b, b) == 0 on a probe grid; throws InvalidWeight otherwise.
    static WeightSpec custom(std::shared_ptr<const CustomWeight> weight);

    WeightKind kind() const noexcept { return kind_; }
    const std::shared_ptr<const CustomWeight>& custom_weight() const noexcept { return custom_; }

private:
    WeightKind kind_ = WeightKind::Unweighted;
    std::shared_ptr<const CustomWeight> custom_;
};

/// Per-point weights aligned with a diagram's canonical order.
struct ResolvedWeights {
    WeightSpec spec;
    std::vector<double> values;
    double max_abs = 0.0;     ///< M_D
    double normalizer = 1.0;  ///< L_D, m_sum, or 1
    bool non_vanishing_on_diagonal = false;

    bool all_nonnegative() const;
};

ResolvedWeights resolve(const PersistenceDiagram& d, const WeightSpec& spec);

/// K with |κ_C(x) - κ_D(y)| <= K‖x - y‖∞ when it is known statically, else nullopt.
std::optional<double> cross_lipschitz_bound(const ResolvedWeights& c, const ResolvedWeights& d);

/// CLI tokens: none|life|midlife|entropy|mullife|normlife|lifespan.
WeightKind parse_weight_kind(std::string_view token);
std::string_view weight_token(WeightKind kind);

}  // namespace gpc
