#include "gpc/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpc/errors.hpp"
#include "gpc/quadrature.hpp"

namespace gpc {

double linf_distance(const DiagramPoint& p, const DiagramPoint& q) {
    return std::max(std::abs(p.birth() - q.birth()), std::abs(p.death() - q.death()));
}

double matching_cost(const PersistenceDiagram& c, const PersistenceDiagram& d, const Matching& m) {
    CompensatedSum sum;
    for (const auto& [i, j] : m.pairs) sum.add(linf_distance(c[i], d[j]));
    for (const auto i : m.c_to_diagonal) sum.add(0.5 * c[i].lifespan());
    for (const auto j : m.d_to_diagonal) sum.add(0.5 * d[j].lifespan());
    return sum.value();
}

namespace {

// Minimum-cost perfect assignment on a square matrix (rows -> columns), potentials
// formulation. Returns the column assigned to every row.
std::vector<std::size_t> solve_assignment(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    const double inf = std::numeric_limits<double>::infinity();
    // 1-based with a virtual column 0
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n);
    for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace

WassersteinResult wasserstein1(const PersistenceDiagram& c, const PersistenceDiagram& d) {
    const std::size_t n = c.size();
    const std::size_t m = d.size();
    const std::size_t size = n + m;
    // rows: C points, then diagonal slots for D; columns: D points, then diagonal slots for C
    std::vector<std::vector<double>> cost(size, std::vector<double>(size, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) cost[i][j] = linf_distance(c[i], d[j]);
        for (std::size_t k = m; k < size; ++k) cost[i][k] = 0.5 * c[i].lifespan();
    }
    for (std::size_t r = n; r < size; ++r) {
        for (std::size_t j = 0; j < m; ++j) cost[r][j] = 0.5 * d[j].lifespan();
    }

    WassersteinResult result{0.0, {}};
    if (size == 0) return result;
    const auto assignment = solve_assignment(cost);
    std::vector<char> d_matched(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (assignment[i] < m) {
            result.matching.pairs.emplace_back(i, assignment[i]);
            d_matched[assignment[i]] = 1;
        } else {
            result.matching.c_to_diagonal.push_back(i);
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (!d_matched[j]) result.matching.d_to_diagonal.push_back(j);
    }
    result.matching.cost = matching_cost(c, d, result.matching);
    result.cost = result.matching.cost;
    return result;
}

namespace {

void enumerate(const PersistenceDiagram& c, const PersistenceDiagram& d, std::size_t i, std::vector<char>& used,
               double partial, double& best) {
    if (partial >= best) return;
    if (i == c.size()) {
        double total = partial;
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (!used[j]) total += 0.5 * d[j].lifespan();
        }
        best = std::min(best, total);
        return;
    }
    enumerate(c, d, i + 1, used, partial + 0.5 * c[i].lifespan(), best);
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        enumerate(c, d, i + 1, used, partial + linf_distance(c[i], d[j]), best);
        used[j] = 0;
    }
}

}  // namespace

double wasserstein1_bruteforce(const PersistenceDiagram& c, const PersistenceDiagram& d) {
    if (c.size() + d.size() > kBruteForceCap) {
        throw TooLarge("brute-force W1 is limited to |C| + |D| <= 8");
    }
    std::vector<char> used(d.size(), 0);
    double best = std::numeric_limits<double>::infinity();
    enumerate(c, d, 0, used, 0.0, best);
    return best;
}

MatchPartition partition(const PersistenceDiagram& c, const PersistenceDiagram& d, const Matching& m) {
    std::vector<int> c_seen(c.size(), 0), d_seen(d.size(), 0);
    const auto mark = [](std::vector<int>& seen, std::size_t idx) {
        if (idx >= seen.size()) throw InvalidMatching("matching index out of range");
        ++seen[idx];
    };
    for (const auto& [i, j] : m.pairs) {
        mark(c_seen, i);
        mark(d_seen, j);
    }
    for (const auto i : m.c_to_diagonal) mark(c_seen, i);
    for (const auto j : m.d_to_diagonal) mark(d_seen, j);
    const auto exactly_once = [](const std::vector<int>& s) {
        return std::all_of(s.begin(), s.end(), [](int k) { return k == 1; });
    };
    if (!exactly_once(c_seen) || !exactly_once(d_seen)) {
        throw InvalidMatching("every point must appear exactly once in a matching");
    }

    MatchPartition out;
    for (const auto& [i, j] : m.pairs) {
        out.c_prime.push_back(c[i]);
        out.d_prime.push_back(d[j]);
        out.c_prime_index.push_back(i);
        out.d_prime_index.push_back(j);
    }
    std::vector<DiagramPoint> e;
    for (const auto i : m.c_to_diagonal) e.push_back(c[i]);
    for (const auto j : m.d_to_diagonal) e.push_back(d[j]);
    out.e = PersistenceDiagram(std::move(e));
    return out;
}

}  // namespace gpc
