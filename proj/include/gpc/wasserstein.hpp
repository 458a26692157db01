#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gpc/diagram.hpp"

namespace gpc {

/// A bijection C ∪ Δ → D ∪ Δ restricted to off-diagonal points. Indices refer to
/// the canonical point order of each diagram.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> c_to_diagonal;
    std::vector<std::size_t> d_to_diagonal;
    double cost = 0.0;
};

struct WassersteinResult {
    double cost;
    Matching matching;
};

/// ‖p - q‖∞.
double linf_distance(const DiagramPoint& p, const DiagramPoint& q);

/// Sum of pair L∞ costs plus (d-b)/2 for every diagonal-matched point.
double matching_cost(const PersistenceDiagram& c, const PersistenceDiagram& d, const Matching& m);

/// Exact W₁ under the L∞ ground metric. Builds the (n+m)×(n+m) diagonal-augmented
/// cost matrix and solves it with the O(N³) shortest-augmenting-path Hungarian
/// method. Rows are processed in index order and the first minimal column wins, so
/// equal-cost optima are resolved the same way on every run.
WassersteinResult wasserstein1(const PersistenceDiagram& c, const PersistenceDiagram& d);

inline constexpr std::size_t kBruteForceCap = 8;

/// Exhaustive minimum over every matching; |C| + |D| <= 8, otherwise TooLarge.
double wasserstein1_bruteforce(const PersistenceDiagram& c, const PersistenceDiagram& d);

/// C′ (matched points of C), D′ (their images, aligned), and E (every diagonal-matched
/// point of C and D) for one matching.
struct MatchPartition {
    std::vector<DiagramPoint> c_prime;
    std::vector<DiagramPoint> d_prime;
    std::vector<std::size_t> c_prime_index;
    std::vector<std::size_t> d_prime_index;
    PersistenceDiagram e;
};

/// Throws InvalidMatching unless every index of C and D is used exactly once.
MatchPartition partition(const PersistenceDiagram& c, const PersistenceDiagram& d, const Matching& m);

}  // namespace gpc
