#include "gpc/weights.hpp"

#include <algorithm>
#include <cmath>

#include "gpc/errors.hpp"

namespace gpc {

WeightSpec::WeightSpec(WeightKind kind) : kind_(kind) {
    if (kind == WeightKind::Custom) {
        throw InvalidWeight("custom weights must be built with WeightSpec::custom");
    }
}

WeightSpec WeightSpec::custom(std::shared_ptr<const CustomWeight> weight) {
    if (!weight || !weight->fn) throw InvalidWeight("custom weight requires a function");
    if (weight->lipschitz && !(*weight->lipschitz >= 0.0)) {
        throw InvalidWeight("custom Lipschitz constant must be nonnegative");
    }
    for (int i = -40; i <= 40; ++i) {
        const double b = 0.25 * i;
        const double v = weight->fn(b, b);
        if (!(std::abs(v) <= 1e-12)) {
            throw InvalidWeight("custom weight '" + weight->name + "' does not vanish on the diagonal at b = " +
                                std::to_string(b));
        }
    }
    WeightSpec spec;
    spec.kind_ = WeightKind::Custom;
    spec.custom_ = std::move(weight);
    return spec;
}

bool ResolvedWeights::all_nonnegative() const {
    return std::all_of(values.begin(), values.end(), [](double v) { return v >= 0.0; });
}

ResolvedWeights resolve(const PersistenceDiagram& d, const WeightSpec& spec) {
    ResolvedWeights out;
    out.spec = spec;
    out.values.reserve(d.size());
    const double total = total_lifespan(d);

    switch (spec.kind()) {
        case WeightKind::Unweighted:
            out.values.assign(d.size(), 1.0);
            break;
        case WeightKind::Life:
        case WeightKind::NormalizedLife:
            if (!d.empty() && !(total > 0.0)) throw DegenerateNormalizer("total lifespan is zero");
            out.normalizer = d.empty() ? 1.0 : total;
            for (const auto& p : d) out.values.push_back(p.lifespan() / total);
            break;
        case WeightKind::LifeEntropy:
            if (!d.empty() && !(total > 0.0)) throw DegenerateNormalizer("total lifespan is zero");
            out.normalizer = d.empty() ? 1.0 : total;
            for (const auto& p : d) {
                const double q = p.lifespan() / total;
                out.values.push_back(q > 0.0 ? -q * std::log(q) : 0.0);
            }
            break;
        case WeightKind::Midlife: {
            double m_sum = 0.0;
            for (const auto& p : d) m_sum += p.birth() + p.death();
            if (!d.empty() && m_sum == 0.0) throw DegenerateNormalizer("midlife normalizer m_sum is zero");
            out.normalizer = d.empty() ? 1.0 : m_sum;
            for (const auto& p : d) out.values.push_back((p.birth() + p.death()) / m_sum);
            out.non_vanishing_on_diagonal = true;
            break;
        }
        case WeightKind::MultiplicativeLife:
            for (const auto& p : d) {
                if (!(p.birth() > 0.0)) {
                    throw DegenerateNormalizer("multiplicative life weight needs strictly positive births");
                }
                out.values.push_back(p.death() / p.birth());
            }
            out.non_vanishing_on_diagonal = true;
            break;
        case WeightKind::RawLifespan:
            for (const auto& p : d) out.values.push_back(p.lifespan());
            break;
        case WeightKind::Custom:
            for (const auto& p : d) out.values.push_back(spec.custom_weight()->fn(p.birth(), p.death()));
            break;
    }
    for (const double v : out.values) {
        if (!std::isfinite(v)) throw InvalidWeight("weight evaluated to a non-finite value");
        out.max_abs = std::max(out.max_abs, std::abs(v));
    }
    return out;
}

std::optional<double> cross_lipschitz_bound(const ResolvedWeights& c, const ResolvedWeights& d) {
    const WeightKind kind = c.spec.kind();
    if (kind != d.spec.kind()) return std::nullopt;
    switch (kind) {
        case WeightKind::Unweighted:
            return 0.0;
        case WeightKind::RawLifespan:
            return 2.0;
        case WeightKind::Life:
        case WeightKind::NormalizedLife:
            if (c.normalizer != d.normalizer) return std::nullopt;
            return 2.0 / c.normalizer;
        case WeightKind::Custom:
            if (c.spec.custom_weight() != d.spec.custom_weight()) return std::nullopt;
            return c.spec.custom_weight()->lipschitz;
        default:
            return std::nullopt;
    }
}

WeightKind parse_weight_kind(std::string_view token) {
    if (token == "none") return WeightKind::Unweighted;
    if (token == "life") return WeightKind::Life;
    if (token == "midlife") return WeightKind::Midlife;
    if (token == "entropy") return WeightKind::LifeEntropy;
    if (token == "mullife") return WeightKind::MultiplicativeLife;
    if (token == "normlife") return WeightKind::NormalizedLife;
    if (token == "lifespan") return WeightKind::RawLifespan;
    throw InvalidArgument("unknown weight token '" + std::string(token) + "'");
}

std::string_view weight_token(WeightKind kind) {
    switch (kind) {
        case WeightKind::Unweighted: return "none";
        case WeightKind::Life: return "life";
        case WeightKind::Midlife: return "midlife";
        case WeightKind::LifeEntropy: return "entropy";
        case WeightKind::MultiplicativeLife: return "mullife";
        case WeightKind::NormalizedLife: return "normlife";
        case WeightKind::RawLifespan: return "lifespan";
        case WeightKind::Custom: return "custom";
    }
    return "unknown";
}

}  // namespace gpc
