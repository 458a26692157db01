#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "gpc/diagram.hpp"
#include "gpc/errors.hpp"
#include "support/generators.hpp"

using gpc::PersistenceDiagram;

TEST_CASE("points must lie strictly above the diagonal") {
    CHECK_NOTHROW(gpc::DiagramPoint(0.0, 1.0));
    CHECK_THROWS_AS(gpc::DiagramPoint(1.0, 1.0), gpc::InvalidArgument);
    CHECK_THROWS_AS(gpc::DiagramPoint(2.0, 1.0), gpc::InvalidArgument);
    CHECK_THROWS_AS(gpc::DiagramPoint(0.0, std::numeric_limits<double>::infinity()), gpc::InvalidArgument);
    CHECK_THROWS_AS(gpc::DiagramPoint(std::nan(""), 1.0), gpc::InvalidArgument);
}

TEST_CASE("canonical order makes multiset equality list equality") {
    const auto a = PersistenceDiagram::from_pairs({{0.5, 2.0}, {0.0, 1.0}, {0.0, 0.5}});
    const auto b = PersistenceDiagram::from_pairs({{0.0, 0.5}, {0.5, 2.0}, {0.0, 1.0}});
    CHECK(a == b);
    CHECK(a[0].death() == 0.5);
    CHECK(a.min_birth() == 0.0);
    CHECK(a.max_death() == 2.0);
    CHECK(a != PersistenceDiagram::from_pairs({{0.0, 0.5}, {0.5, 2.0}}));
    CHECK(a.merged_with(PersistenceDiagram()).size() == 3);
    CHECK_THROWS_AS(PersistenceDiagram().min_birth(), gpc::InvalidArgument);
}

TEST_CASE("lifespan statistics") {
    const PersistenceDiagram empty;
    CHECK(gpc::total_lifespan(empty) == 0.0);
    CHECK(gpc::total_lifespan(PersistenceDiagram::from_pairs({{0, 1}, {0.5, 2}})) == 2.5);
    CHECK(gpc::total_lifespan(PersistenceDiagram::from_pairs({{1, 2}, {1, 2}})) == 2.0);

    CHECK(gpc::min_lifespan(empty) == std::numeric_limits<double>::infinity());
    CHECK(gpc::inverse_min_lifespan(gpc::min_lifespan(empty)) == 0.0);
    CHECK(gpc::min_lifespan(PersistenceDiagram::from_pairs({{0, 1}, {0.5, 2}})) == 1.0);
    CHECK(gpc::min_lifespan(PersistenceDiagram::from_pairs({{3, 3.25}})) == 0.25);

    CHECK(gpc::joint_min_lifespan(empty, empty) == 1.0);
    CHECK(gpc::joint_min_lifespan(PersistenceDiagram::from_pairs({{0, 0.5}}),
                                  PersistenceDiagram::from_pairs({{0, 3}})) == 0.5);
    CHECK(gpc::joint_min_lifespan(PersistenceDiagram::from_pairs({{0, 2}}),
                                  PersistenceDiagram::from_pairs({{1, 4}})) == 1.0);
}

TEST_CASE("csv parsing") {
    CHECK(gpc::parse_diagram("0.0,1.0\n0.5,2.0") == PersistenceDiagram::from_pairs({{0, 1}, {0.5, 2}}));
    CHECK(gpc::parse_diagram("").empty());
    CHECK(gpc::parse_diagram("birth,death\r\n# comment\r\n\r\n 1 , +2 \r\n") ==
          PersistenceDiagram::from_pairs({{1, 2}}));
    CHECK(gpc::parse_diagram("-1e-3,4E2\n") == PersistenceDiagram::from_pairs({{-1e-3, 400}}));

    SUBCASE("diagonal point") {
        try {
            gpc::parse_diagram("1.0,1.0");
            FAIL("expected InvalidPoint");
        } catch (const gpc::InvalidPoint& e) {
            CHECK(e.line() == 1);
        }
    }
    SUBCASE("line numbers count comments and blanks") {
        try {
            gpc::parse_diagram("# c\n0,1\n\n2,1\n");
            FAIL("expected InvalidPoint");
        } catch (const gpc::InvalidPoint& e) {
            CHECK(e.line() == 4);
        }
    }
    SUBCASE("malformed rows") {
        CHECK_THROWS_AS(gpc::parse_diagram("0,1,2"), gpc::ParseError);
        CHECK_THROWS_AS(gpc::parse_diagram("0"), gpc::ParseError);
        CHECK_THROWS_AS(gpc::parse_diagram("a,b"), gpc::ParseError);
        CHECK_THROWS_AS(gpc::parse_diagram("0,1x"), gpc::ParseError);
        CHECK_THROWS_AS(gpc::parse_diagram("0,1\nbirth,death"), gpc::ParseError);
        CHECK_THROWS_AS(gpc::parse_diagram("0,inf"), gpc::DataError);
        CHECK_THROWS_AS(gpc::parse_diagram("0,1e400"), gpc::DataError);
    }
    CHECK_THROWS_AS(gpc::load_diagram_file("/nonexistent/diagram.csv"), gpc::DataError);
}

TEST_CASE("serialization round-trips exactly") {
    gpc::testing::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = gpc::testing::random_diagram(rng, gpc::testing::uniform_int(rng, 0, 12), -50, 50);
        const auto text = gpc::serialize_diagram(d);
        CHECK(gpc::parse_diagram(text) == d);
        CHECK(gpc::diagram_hash(gpc::parse_diagram(text)) == gpc::diagram_hash(d));
    }
    CHECK(gpc::diagram_hash(PersistenceDiagram::from_pairs({{0, 1}})) !=
          gpc::diagram_hash(PersistenceDiagram::from_pairs({{0, 1.0000000001}})));
}
