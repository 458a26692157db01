#include "gpc/injectivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gpc/curves.hpp"
#include "gpc/errors.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/quadrature.hpp"

namespace gpc {

namespace {

void check_order(int m, int max_order) {
    if (m < 0) throw InvalidArgument("moment order must be nonnegative");
    if (m > max_order) {
        throw OrderTooLarge("moment order " + std::to_string(m) + " exceeds cap " + std::to_string(max_order));
    }
}

bool moments_agree(double a, double b) {
    return std::abs(a - b) <= std::max(1e-12, 1e-9 * std::max(std::abs(a), std::abs(b)));
}

}  // namespace

double moment_sum(const PersistenceDiagram& d, int m1, int m2, int max_order) {
    check_order(m1, max_order);
    check_order(m2, max_order);
    CompensatedSum sum;
    for (const auto& p : d) sum.add(std::pow(p.birth(), m1) * std::pow(p.death(), m2));
    return sum.value();
}

std::vector<std::pair<int, int>> moment_orders(int max_total) {
    check_order(max_total, kMaxMixedMomentOrder);
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s <= max_total; ++s) {
        for (int m1 = 0; m1 <= s; ++m1) out.emplace_back(m1, s - m1);
    }
    return out;
}

MomentTable moment_table(const PersistenceDiagram& d, int max_total) {
    MomentTable t;
    t.orders = moment_orders(max_total);
    t.values.reserve(t.orders.size());
    for (const auto& [m1, m2] : t.orders) t.values.push_back(moment_sum(d, m1, m2));
    return t;
}

double rescale_jointly(const PersistenceDiagram& c, const PersistenceDiagram& d, PersistenceDiagram& c_out,
                       PersistenceDiagram& d_out) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto* diagram : {&c, &d}) {
        for (const auto& p : *diagram) {
            lo = std::min(lo, p.birth());
            hi = std::max(hi, p.death());
        }
    }
    if (c.empty() && d.empty()) {
        c_out = c;
        d_out = d;
        return 1.0;
    }
    const double scale = hi - lo;
    const auto map = [lo, scale](const PersistenceDiagram& in) {
        std::vector<DiagramPoint> pts;
        pts.reserve(in.size());
        for (const auto& p : in) pts.emplace_back((p.birth() - lo) / scale, (p.death() - lo) / scale);
        return PersistenceDiagram(std::move(pts));
    };
    c_out = map(c);
    d_out = map(d);
    return scale;
}

std::optional<std::pair<int, int>> moments_equal(const PersistenceDiagram& c, const PersistenceDiagram& d,
                                                 int max_total) {
    const auto orders = moment_orders(max_total);
    PersistenceDiagram cs, ds;
    rescale_jointly(c, d, cs, ds);
    for (const auto& [m1, m2] : orders) {
        if (!moments_agree(moment_sum(cs, m1, m2), moment_sum(ds, m1, m2))) return std::pair{m1, m2};
    }
    return std::nullopt;
}

double surface_moment_from_projection(const PersistenceDiagram& d, double sigma, Axis axis, int n) {
    if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
    CompensatedSum sum;
    for (const auto& p : d) {
        sum.add(normal_raw_moment(n, axis == Axis::Birth ? p.birth() : p.death(), sigma));
    }
    return sum.value();
}

double surface_moment(const PersistenceDiagram& d, double sigma, int m1, int m2) {
    if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
    CompensatedSum sum;
    for (const auto& p : d) {
        sum.add(normal_raw_moment(m1, p.birth(), sigma) * normal_raw_moment(m2, p.death(), sigma));
    }
    return sum.value();
}

ProbeResult injectivity_probe(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma,
                              int max_total) {
    if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
    const auto orders = moment_orders(max_total);
    if (c == d) return {ProbeResult::Verdict::Identical, 0, 0, max_total};
    PersistenceDiagram cs, ds;
    const double scale = rescale_jointly(c, d, cs, ds);
    const double scaled_sigma = sigma / scale;
    for (const auto& [m1, m2] : orders) {
        if (!moments_agree(surface_moment(cs, scaled_sigma, m1, m2), surface_moment(ds, scaled_sigma, m1, m2))) {
            return {ProbeResult::Verdict::Distinguished, m1, m2, max_total};
        }
    }
    return {ProbeResult::Verdict::Inconclusive, 0, 0, max_total};
}

TailScan tail_dominance_witness(const PersistenceDiagram& c, const PersistenceDiagram& d, double sigma) {
    if (c.empty() || d.empty()) throw InvalidArgument("tail dominance needs two nonempty diagrams");
    if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
    const GpcModel gc(c, WeightSpec(WeightKind::Unweighted), sigma);
    const GpcModel gd(d, WeightSpec(WeightKind::Unweighted), sigma);

    TailScan out{TailScan::Status::ExtremesCoincide};
    double start = 0.0;
    double direction = 1.0;
    if (c.max_death() != d.max_death()) {
        out.side = TailSide::PlusInfinity;
        out.first_dominates = c.max_death() > d.max_death();
        start = std::max(c.max_death(), d.max_death());
    } else if (c.min_birth() != d.min_birth()) {
        out.side = TailSide::MinusInfinity;
        out.first_dominates = c.min_birth() < d.min_birth();
        start = std::min(c.min_birth(), d.min_birth());
        direction = -1.0;
    } else {
        return out;
    }

    const GpcModel& larger = out.first_dominates ? gc : gd;
    const GpcModel& smaller = out.first_dominates ? gd : gc;
    for (int k = 0; k <= kTailScanSteps; ++k) {
        const double t = start + direction * k * sigma;
        const double hi = gpc_eval(larger, t);
        const double lo = gpc_eval(smaller, t);
        if (hi <= 0.0) break;  // both curves underflowed
        if (hi - lo >= 1e-12 * hi) {
            out.status = TailScan::Status::Found;
            out.t = t;
            return out;
        }
    }
    out.status = TailScan::Status::Saturated;
    return out;
}

}  // namespace gpc
