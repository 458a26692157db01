#include "gpc/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpc/errors.hpp"
#include "gpc/gaussian.hpp"

namespace gpc {

Theorem parse_theorem(std::string_view token) {
    if (token == "A") return Theorem::UnweightedA;
    if (token == "B") return Theorem::GeneralWeightsB;
    if (token == "J") return Theorem::LipschitzJ;
    if (token == "G") return Theorem::LifespanG;
    if (token == "P") return Theorem::NormalizedLifespanP;
    throw InvalidArgument("unknown theorem token '" + std::string(token) + "' (expected A|B|J|G|P)");
}

std::string_view theorem_token(Theorem t) {
    switch (t) {
        case Theorem::UnweightedA: return "A";
        case Theorem::GeneralWeightsB: return "B";
        case Theorem::LipschitzJ: return "J";
        case Theorem::LifespanG: return "G";
        case Theorem::NormalizedLifespanP: return "P";
    }
    return "?";
}

WeightKind default_weight_for(Theorem t) {
    switch (t) {
        case Theorem::LifespanG: return WeightKind::RawLifespan;
        case Theorem::NormalizedLifespanP: return WeightKind::NormalizedLife;
        default: return WeightKind::Unweighted;
    }
}

PartitionQuantities partition_quantities(const PersistenceDiagram& c, const PersistenceDiagram& d,
                                         const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m,
                                         double sigma) {
    if (wc.values.size() != c.size() || wd.values.size() != d.size()) {
        throw InvalidArgument("weights are not aligned with the diagrams");
    }
    const MatchPartition parts = partition(c, d, m);
    PartitionQuantities q;
    q.m_c = wc.max_abs;
    q.m_d = wd.max_abs;
    q.delta_e = std::numeric_limits<double>::infinity();
    for (const auto i : m.c_to_diagonal) {
        q.m_e = std::max(q.m_e, std::abs(wc.values[i]));
        q.delta_e = std::min(q.delta_e, c[i].lifespan());
    }
    for (const auto j : m.d_to_diagonal) {
        q.m_e = std::max(q.m_e, std::abs(wd.values[j]));
        q.delta_e = std::min(q.delta_e, d[j].lifespan());
    }
    for (const auto& [i, j] : m.pairs) {
        q.m_gamma = std::max(q.m_gamma, std::abs(wc.values[i] - wd.values[j]));
    }
    q.g_dprime_norm = unweighted_l1_norm(PersistenceDiagram(parts.d_prime), sigma);
    return q;
}

double constant_unweighted(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma) {
    if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
    return std::max(2.0, 2.0 * (1.0 + sigma / (kSqrtPi * joint_min_lifespan(c, d))));
}

namespace {

double diagonal_term(const PartitionQuantities& q, double sigma) {
    return 2.0 * q.m_e * (1.0 + sigma / kSqrtPi * inverse_min_lifespan(q.delta_e));
}

void require_kind(const ResolvedWeights& w, WeightKind kind, std::string_view theorem) {
    if (w.spec.kind() != kind) {
        throw WeightKindMismatch("theorem " + std::string(theorem) + " needs '" + std::string(weight_token(kind)) +
                                 "' weights, got '" + std::string(weight_token(w.spec.kind())) + "'");
    }
}

}  // namespace

GeneralConstants constants_general(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma,
                                   const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m) {
    const auto q = partition_quantities(c, d, wc, wd, m, sigma);
    return {std::max(2.0 * q.m_c, diagonal_term(q, sigma)), q.m_gamma * q.g_dprime_norm};
}

double constant_lipschitz(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma, double k,
                          const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m) {
    if (!(k >= 0.0)) throw InvalidArgument("Lipschitz constant must be nonnegative");
    const auto q = partition_quantities(c, d, wc, wd, m, sigma);
    return std::max({2.0 * q.m_c, diagonal_term(q, sigma), k * q.g_dprime_norm});
}

double constant_lifespan(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma,
                         const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m) {
    require_kind(wc, WeightKind::RawLifespan, "G");
    require_kind(wd, WeightKind::RawLifespan, "G");
    const auto q = partition_quantities(c, d, wc, wd, m, sigma);
    const double s = sigma / kSqrtPi;
    return std::max({2.0 * q.m_c, q.g_dprime_norm, 2.0 * (q.m_e + s), 2.0 + 2.0 * s});
}

double constant_normalized(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma,
                           const ResolvedWeights& wc, const ResolvedWeights& wd, const Matching& m) {
    require_kind(wc, WeightKind::NormalizedLife, "P");
    require_kind(wd, WeightKind::NormalizedLife, "P");
    if (total_lifespan(c) < 1.0 || total_lifespan(d) < 1.0) {
        throw HypothesisViolated("theorem P needs both total lifespans to be at least 1");
    }
    const auto q = partition_quantities(c, d, wc, wd, m, sigma);
    const double s = sigma / kSqrtPi;
    return std::max({2.0, 2.0 * (q.m_e + s), 2.0 + 2.0 * s, 4.0 + 4.0 * s * inverse_min_lifespan(min_lifespan(d))});
}

bool within_bound(double l1_dist, double bound_value) {
    return l1_dist <= bound_value + 1e-6 * bound_value + 1e-9;
}

StabilityReport verify(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma, Theorem theorem,
                       const WeightSpec& spec_c, const WeightSpec& spec_d, const VerifyOptions& options) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sigma must be positive and finite");
    const ResolvedWeights wc = resolve(c, spec_c);
    const ResolvedWeights wd = resolve(d, spec_d);
    const auto [w1, matching] = wasserstein1(c, d);

    StabilityReport r;
    r.theorem = theorem;
    r.w1 = w1;
    r.quantities = partition_quantities(c, d, wc, wd, matching, sigma);
    switch (theorem) {
        case Theorem::UnweightedA:
            require_kind(wc, WeightKind::Unweighted, "A");
            require_kind(wd, WeightKind::Unweighted, "A");
            r.constant = constant_unweighted(c, d, sigma);
            break;
        case Theorem::GeneralWeightsB: {
            const auto g = constants_general(c, d, sigma, wc, wd, matching);
            r.constant = g.b;
            r.additive_term = g.additive;
            break;
        }
        case Theorem::LipschitzJ: {
            const auto k = options.lipschitz ? options.lipschitz : cross_lipschitz_bound(wc, wd);
            if (!k) throw HypothesisViolated("theorem J needs a known cross-Lipschitz constant K");
            r.constant = constant_lipschitz(c, d, sigma, *k, wc, wd, matching);
            break;
        }
        case Theorem::LifespanG:
            r.constant = constant_lifespan(c, d, sigma, wc, wd, matching);
            break;
        case Theorem::NormalizedLifespanP:
            r.constant = constant_normalized(c, d, sigma, wc, wd, matching);
            break;
    }
    r.bound_value = r.constant * r.w1 + r.additive_term;
    r.l1_dist = l1_distance(GpcModel(c, wc, sigma), GpcModel(d, wd, sigma), options.quadrature);
    r.slack = r.bound_value - r.l1_dist;
    r.holds = within_bound(r.l1_dist, r.bound_value);
    r.inputs_digest = "sigma=" + format_number(sigma) + ";weight_c=" + std::string(weight_token(spec_c.kind())) +
                      ";weight_d=" + std::string(weight_token(spec_d.kind())) + ";tiebreak=row-major-first-min";
    return r;
}

std::string report_csv_header() {
    return "theorem,constant,additive_term,w1,l1_dist,bound_value,slack,holds,inputs";
}

std::string report_csv_row(const StabilityReport& r) {
    return std::string(theorem_token(r.theorem)) + "," + format_number(r.constant) + "," +
           format_number(r.additive_term) + "," + format_number(r.w1) + "," + format_number(r.l1_dist) + "," +
           format_number(r.bound_value) + "," + format_number(r.slack) + "," + (r.holds ? "true" : "false") + "," +
           r.inputs_digest;
}

std::string report_text(const StabilityReport& r) {
    std::string out;
    out += "theorem       " + std::string(theorem_token(r.theorem)) + "\n";
    out += "constant      " + format_number(r.constant) + "\n";
    out += "additive_term " + format_number(r.additive_term) + "\n";
    out += "w1            " + format_number(r.w1) + "\n";
    out += "l1_dist       " + format_number(r.l1_dist) + "\n";
    out += "bound_value   " + format_number(r.bound_value) + "\n";
    out += "slack         " + format_number(r.slack) + "\n";
    out += "holds         " + std::string(r.holds ? "true" : "false") + "\n";
    out += "inputs        " + r.inputs_digest + "\n";
    return out;
}

}  // namespace gpc
