#include "gpc/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "gpc/errors.hpp"
#include "gpc/gaussian.hpp"

namespace gpc {

namespace {

void require_positive_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sigma must be positive and finite");
}

std::vector<double> breakpoints_of(const PersistenceDiagram& d) {
    std::vector<double> cuts;
    cuts.reserve(2 * d.size());
    for (const auto& p : d) {
        cuts.push_back(p.birth());
        cuts.push_back(p.death());
    }
    return cuts;
}

}  // namespace

GpcModel::GpcModel(PersistenceDiagram diagram, const WeightSpec& spec, double sigma)
    : diagram_(std::move(diagram)), weights_(resolve(diagram_, spec)), sigma_(sigma) {
    require_positive_sigma(sigma);
}

GpcModel::GpcModel(PersistenceDiagram diagram, ResolvedWeights weights, double sigma)
    : diagram_(std::move(diagram)), weights_(std::move(weights)), sigma_(sigma) {
    require_positive_sigma(sigma);
    if (weights_.values.size() != diagram_.size()) {
        throw InvalidArgument("weights are not aligned with the diagram");
    }
}

Interval GpcModel::support(double padding) const {
    if (diagram_.empty()) return {0.0, 0.0};
    return {diagram_.min_birth() - padding * sigma_, diagram_.max_death() + padding * sigma_};
}

double surface_eval(const GpcModel& m, double x, double y) {
    const double s2 = m.sigma() * m.sigma();
    const double norm = 1.0 / (2.0 * std::numbers::pi * s2);
    double sum = 0.0;
    const auto& w = m.weights().values;
    for (std::size_t i = 0; i < m.diagram().size(); ++i) {
        const auto& p = m.diagram()[i];
        const double dx = x - p.birth();
        const double dy = y - p.death();
        sum += w[i] * norm * std::exp(-(dx * dx + dy * dy) / (2.0 * s2));
    }
    return sum;
}

double gpc_eval(const GpcModel& m, double t) {
    const double s = m.sigma();
    const auto& w = m.weights().values;
    double sum = 0.0;
    for (std::size_t i = 0; i < m.diagram().size(); ++i) {
        const auto& p = m.diagram()[i];
        sum += w[i] * std_normal_cdf((t - p.birth()) / s) * std_normal_cdf((p.death() - t) / s);
    }
    return sum;
}

CurveSamples gpc_sample(const GpcModel& m, double t_min, double t_max, int n) {
    if (!(t_min < t_max)) throw InvalidArgument("sample range needs t_min < t_max");
    if (n < 2) throw InvalidArgument("at least two samples are required");
    CurveSamples out{{}, {}, m.sigma(), std::string(weight_token(m.weights().spec.kind()))};
    out.t_values.reserve(n);
    out.values.reserve(n);
    const double step = (t_max - t_min) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double t = (i == n - 1) ? t_max : t_min + i * step;
        out.t_values.push_back(t);
        out.values.push_back(gpc_eval(m, t));
    }
    return out;
}

NormResult l1_norm_closed(const GpcModel& m) {
    const double s = m.sigma();
    const auto& w = m.weights().values;
    CompensatedSum sum;
    for (std::size_t i = 0; i < m.diagram().size(); ++i) {
        const double life = m.diagram()[i].lifespan();
        const double z = life / (kSqrt2 * s);
        sum.add(std::abs(w[i]) * (life * std_normal_cdf(z) + kSqrt2 * s * std_normal_pdf(z)));
    }
    return {sum.value(), !m.weights().all_nonnegative()};
}

double unweighted_l1_norm(const PersistenceDiagram& d, double sigma) {
    return l1_norm_closed(GpcModel(d, WeightSpec(WeightKind::Unweighted), sigma)).value;
}

double l1_norm_quadrature(const GpcModel& m, const QuadratureSpec& spec) {
    if (m.diagram().empty()) return 0.0;
    const auto cuts = breakpoints_of(m.diagram());
    return integrate_l1([&m](double t) { return gpc_eval(m, t); }, m.support(spec.support_padding), spec, cuts);
}

double l1_distance(const GpcModel& m1, const GpcModel& m2, const QuadratureSpec& spec) {
    if (m1.sigma() != m2.sigma()) throw SigmaMismatch("curves must share one bandwidth");
    if (m1.diagram().empty() && m2.diagram().empty()) return 0.0;
    Interval support;
    if (m1.diagram().empty()) {
        support = m2.support(spec.support_padding);
    } else if (m2.diagram().empty()) {
        support = m1.support(spec.support_padding);
    } else {
        const auto a = m1.support(spec.support_padding);
        const auto b = m2.support(spec.support_padding);
        support = {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }
    auto cuts = breakpoints_of(m1.diagram());
    const auto more = breakpoints_of(m2.diagram());
    cuts.insert(cuts.end(), more.begin(), more.end());
    return integrate_l1([&](double t) { return gpc_eval(m1, t) - gpc_eval(m2, t); }, support, spec, cuts);
}

std::string format_number(double v) {
    if (v == 0.0) return "0";  // folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string curve_samples_csv(const CurveSamples& s, const PersistenceDiagram& d) {
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(diagram_hash(d)));
    std::string out = "# sigma=" + format_number(s.sigma) + " weight=" + s.weight_kind + " diagram=fnv1a64:" + hash +
                      "\nt,value\n";
    for (std::size_t i = 0; i < s.t_values.size(); ++i) {
        out += format_number(s.t_values[i]) + "," + format_number(s.values[i]) + "\n";
    }
    return out;
}

}  // namespace gpc
