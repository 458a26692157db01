#include "gpc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gpc/errors.hpp"

namespace gpc {

void QuadratureSpec::validate() const {
    if (!(relative_tolerance > 0.0)) throw InvalidArgument("quadrature relative tolerance must be positive");
    if (!(support_padding >= 6.0)) throw InvalidArgument("quadrature support padding must be at least 6");
    if (!(absolute_floor >= 0.0)) throw InvalidArgument("quadrature absolute floor must be nonnegative");
    if (max_panels < 1) throw InvalidArgument("quadrature panel budget must be positive");
}

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        correction_ += (sum_ - t) + x;
    } else {
        correction_ += (x - t) + sum_;
    }
    sum_ = t;
}

namespace {

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
};

bool less_error(const Panel& a, const Panel& b) { return a.error < b.error; }

Panel evaluate_panel(const std::function<double(double)>& f, double lo, double hi) {
    using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double err = 0.0;
    // max_depth 0: a single Kronrod evaluation with its |K - G| error estimate
    const double v = Rule::integrate([&](double x) { return f(mid + half * x); }, -1.0, 1.0, 0, 0.0, &err);
    return {lo, hi, half * v, half * err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, Interval support,
                           const QuadratureSpec& spec, std::span<const double> breakpoints) {
    spec.validate();
    if (!(support.lo < support.hi)) {
        if (support.lo == support.hi) return {0.0, 0.0, 0};
        throw InvalidArgument("quadrature support must satisfy lo <= hi");
    }

    std::vector<double> cuts{support.lo};
    std::vector<double> inner;
    for (const double b : breakpoints) {
        if (b > support.lo && b < support.hi) inner.push_back(b);
    }
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    cuts.insert(cuts.end(), inner.begin(), inner.end());
    cuts.push_back(support.hi);

    std::vector<Panel> heap;
    heap.reserve(cuts.size() + 64);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) heap.push_back(evaluate_panel(f, cuts[i], cuts[i + 1]));
    std::make_heap(heap.begin(), heap.end(), less_error);

    const auto totals = [&heap] {
        CompensatedSum value;
        CompensatedSum error;
        for (const auto& p : heap) {
            value.add(p.value);
            error.add(p.error);
        }
        return std::pair{value.value(), error.value()};
    };

    auto [value, error] = totals();
    while (error > std::max(spec.relative_tolerance * std::abs(value), spec.absolute_floor)) {
        if (static_cast<int>(heap.size()) >= spec.max_panels) {
            throw NonConvergence("quadrature budget of " + std::to_string(spec.max_panels) +
                                 " panels exhausted (error estimate " + std::to_string(error) + ")");
        }
        std::pop_heap(heap.begin(), heap.end(), less_error);
        const Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Panel left = evaluate_panel(f, worst.lo, mid);
        const Panel right = evaluate_panel(f, mid, worst.hi);
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), less_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), less_error);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        if (heap.size() % 256 == 0) std::tie(value, error) = totals();
    }
    std::tie(value, error) = totals();
    return {value, error, static_cast<int>(heap.size())};
}

double integrate_l1(const std::function<double(double)>& f, Interval support, const QuadratureSpec& spec,
                    std::span<const double> breakpoints) {
    return integrate([&f](double t) { return std::abs(f(t)); }, support, spec, breakpoints).value;
}

}  // namespace gpc
