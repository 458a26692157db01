#include <doctest.h>

#include <cmath>

#include "gpc/errors.hpp"
#include "gpc/wasserstein.hpp"
#include "support/generators.hpp"

using doctest::Approx;
using gpc::PersistenceDiagram;

TEST_CASE("W1 examples") {
    const auto c = PersistenceDiagram::from_pairs({{0, 1}, {0.5, 2}, {3, 3.1}});
    const auto self = gpc::wasserstein1(c, c);
    CHECK(self.cost == 0.0);
    CHECK(self.matching.pairs.size() == 3);
    for (const auto& [i, j] : self.matching.pairs) CHECK(i == j);

    const auto one = PersistenceDiagram::from_pairs({{0, 1}});
    const auto to_diag = gpc::wasserstein1(one, PersistenceDiagram());
    CHECK(to_diag.cost == 0.5);
    CHECK(to_diag.matching.c_to_diagonal == std::vector<std::size_t>{0});

    CHECK(gpc::wasserstein1(one, PersistenceDiagram::from_pairs({{0.1, 1.2}})).cost == Approx(0.2).epsilon(1e-15));
    CHECK(gpc::wasserstein1(PersistenceDiagram(), PersistenceDiagram()).cost == 0.0);

    const auto extra = PersistenceDiagram::from_pairs({{0, 2}, {5, 5.1}});
    CHECK(gpc::wasserstein1_bruteforce(PersistenceDiagram::from_pairs({{0, 2}}), extra) ==
          Approx(0.05).epsilon(1e-12));
    CHECK(gpc::wasserstein1_bruteforce(PersistenceDiagram(), PersistenceDiagram()) == 0.0);
    const auto r = gpc::wasserstein1(PersistenceDiagram::from_pairs({{0, 2}}), extra);
    CHECK(r.cost == Approx(0.05).epsilon(1e-12));
    CHECK(r.matching.d_to_diagonal == std::vector<std::size_t>{1});

    gpc::testing::Rng rng(1);
    const auto big = gpc::testing::random_diagram(rng, 5, 0, 1);
    CHECK_THROWS_AS(gpc::wasserstein1_bruteforce(big, big), gpc::TooLarge);
}

TEST_CASE("assignment solver matches brute force") {
    gpc::testing::Rng rng(101);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = gpc::testing::uniform_int(rng, 0, 4);
        const int m = gpc::testing::uniform_int(rng, 0, 4);
        const auto c = gpc::testing::random_diagram(rng, n, 0, 3, 0.01, 2);
        const auto d = gpc::testing::random_diagram(rng, m, 0, 3, 0.01, 2);
        const auto r = gpc::wasserstein1(c, d);
        CHECK(r.cost == Approx(gpc::wasserstein1_bruteforce(c, d)).epsilon(1e-12));
        CHECK(gpc::matching_cost(c, d, r.matching) == Approx(r.cost).epsilon(1e-12));
        // The reported matching is a valid bijection.
        CHECK_NOTHROW(gpc::partition(c, d, r.matching));
    }
}

TEST_CASE("metric properties") {
    gpc::testing::Rng rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = gpc::testing::random_diagram(rng, gpc::testing::uniform_int(rng, 0, 6), 0, 5);
        const auto b = gpc::testing::random_diagram(rng, gpc::testing::uniform_int(rng, 0, 6), 0, 5);
        const auto c = gpc::testing::random_diagram(rng, gpc::testing::uniform_int(rng, 0, 6), 0, 5);
        const double ab = gpc::wasserstein1(a, b).cost;
        CHECK(ab == Approx(gpc::wasserstein1(b, a).cost).epsilon(1e-12));
        CHECK(ab <= gpc::wasserstein1(a, c).cost + gpc::wasserstein1(c, b).cost + 1e-12);
        CHECK(gpc::wasserstein1(a, a).cost == 0.0);
        // Every lifespan changes by at most twice the transport cost.
        CHECK(std::abs(gpc::total_lifespan(a) - gpc::total_lifespan(b)) <= 2 * ab + 1e-12);
    }
}

TEST_CASE("deterministic tie-breaking") {
    const auto c = PersistenceDiagram::from_pairs({{0, 1}, {0, 1}});
    const auto d = PersistenceDiagram::from_pairs({{0, 1.5}, {0, 1.5}});
    const auto first = gpc::wasserstein1(c, d);
    for (int i = 0; i < 10; ++i) {
        const auto again = gpc::wasserstein1(c, d);
        CHECK(again.matching.pairs == first.matching.pairs);
        CHECK(again.cost == first.cost);
    }
}

TEST_CASE("partition") {
    const auto c = PersistenceDiagram::from_pairs({{0, 1}, {2, 4}});
    const auto self = gpc::partition(c, c, gpc::wasserstein1(c, c).matching);
    CHECK(self.c_prime.size() == 2);
    CHECK(self.d_prime == self.c_prime);
    CHECK(self.e.empty());

    const auto one = PersistenceDiagram::from_pairs({{0, 1}});
    const auto forced = gpc::partition(one, PersistenceDiagram(), gpc::wasserstein1(one, PersistenceDiagram()).matching);
    CHECK(forced.c_prime.empty());
    CHECK(forced.e == one);

    gpc::Matching bad;
    bad.pairs = {{0, 0}, {0, 1}};
    CHECK_THROWS_AS(gpc::partition(c, c, bad), gpc::InvalidMatching);
    gpc::Matching missing;
    missing.pairs = {{0, 0}};
    CHECK_THROWS_AS(gpc::partition(c, c, missing), gpc::InvalidMatching);
    gpc::Matching out_of_range;
    out_of_range.pairs = {{0, 0}, {1, 5}};
    CHECK_THROWS_AS(gpc::partition(c, c, out_of_range), gpc::InvalidMatching);
}
