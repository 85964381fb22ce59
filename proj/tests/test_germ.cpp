#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stratindex/germ.hpp"

using namespace stratindex;

namespace {

StratifiedGermModel valid_two_strata(std::int64_t n01) {
    StratifiedGermModel g;
    g.poset = StratumPoset::from_covers({{"V0", 0}, {"V1", 1}}, {{"V0", "V1"}});
    g.nij = IncidenceTable::identity(g.poset);
    g.nij.set(0, 1, n01);
    return g;
}

}  // namespace

TEST_CASE("germ_k_lines builds the k-lines model") {
    const auto g = germ_k_lines(4);
    CHECK(g.poset.size() == 2);
    CHECK(g.nij.at(0, 1) == 3);
    CHECK(g.nij.at(0, 0) == 1);
    CHECK(g.label == "k4-lines");
    CHECK(validate_germ(g).ok());

    CHECK(germ_k_lines(1).nij.at(0, 1) == 0);  // a single line is smooth
    CHECK_THROWS_AS(germ_k_lines(0), DomainError);
}

TEST_CASE("validate_germ accepts a well-formed model") {
    CHECK(validate_germ(valid_two_strata(5)).ok());
}

TEST_CASE("validate_germ reports table defects") {
    SUBCASE("missing diagonal entry") {
        auto g = valid_two_strata(5);
        g.nij = IncidenceTable();
        g.nij.set(1, 1, 1);
        g.nij.set(0, 1, 5);
        const auto report = validate_germ(g);
        REQUIRE(report.issues.size() == 1);
        CHECK(report.issues[0] == "missing diagonal entry n(V0, V0)");
    }
    SUBCASE("wrong diagonal value") {
        auto g = valid_two_strata(5);
        g.nij.set(0, 0, 2);
        const auto report = validate_germ(g);
        REQUIRE(report.issues.size() == 1);
        CHECK(report.issues[0].find("expected 1") != std::string::npos);
    }
    SUBCASE("missing off-diagonal entry") {
        auto g = valid_two_strata(5);
        g.nij = IncidenceTable::identity(g.poset);
        const auto report = validate_germ(g);
        REQUIRE(report.issues.size() == 1);
        CHECK(report.issues[0] == "missing incidence entry n(V0, V1)");
    }
    SUBCASE("entry on an incomparable pair") {
        StratifiedGermModel g;
        g.poset = StratumPoset::from_covers({{"V0", 0}, {"a", 1}, {"b", 1}},
                                            {{"V0", "a"}, {"V0", "b"}});
        g.nij = IncidenceTable::identity(g.poset);
        g.nij.set(0, 1, 1);
        g.nij.set(0, 2, 1);
        g.nij.set(1, 2, 9);
        const auto report = validate_germ(g);
        REQUIRE(report.issues.size() == 1);
        CHECK(report.issues[0].find("incomparable") != std::string::npos);
    }
    SUBCASE("poset issues propagate") {
        StratifiedGermModel g;
        g.poset = StratumPoset::from_covers({{"V0", 3}, {"V1", 1}}, {{"V0", "V1"}});
        g.nij = IncidenceTable::identity(g.poset);
        g.nij.set(0, 1, 0);
        CHECK_FALSE(validate_germ(g).ok());
    }
}

TEST_CASE("validate_index_vector enforces coverage and the point convention") {
    const auto g = valid_two_strata(3);

    IndexVector good;
    good.kind = IndexKind::RadialIndex;
    good.values = {{"V0", 1}, {"V1", 7}};
    CHECK(validate_index_vector(g.poset, good).ok());

    SUBCASE("missing stratum") {
        IndexVector v;
        v.values = {{"V0", 1}};
        CHECK_FALSE(validate_index_vector(g.poset, v).ok());
    }
    SUBCASE("unknown stratum") {
        IndexVector v = good;
        v.values["V9"] = 0;
        CHECK_FALSE(validate_index_vector(g.poset, v).ok());
    }
    SUBCASE("minimal stratum must carry value 1, for either kind") {
        IndexVector v = good;
        v.values["V0"] = 2;
        CHECK_FALSE(validate_index_vector(g.poset, v).ok());
        v.kind = IndexKind::EulerObstruction;
        CHECK_FALSE(validate_index_vector(g.poset, v).ok());
    }
}
