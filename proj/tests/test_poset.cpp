#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "generators.hpp"
#include "stratindex/poset.hpp"

using namespace stratindex;

namespace {

StratumPoset chain3() {
    return StratumPoset::from_covers({{"V0", 0}, {"V1", 1}, {"V2", 2}},
                                     {{"V0", "V1"}, {"V1", "V2"}});
}

// Dense product of two tables read as upper-triangular matrices in the given
// linear extension; entries absent from the tables count as zero.
std::map<std::pair<std::size_t, std::size_t>, std::int64_t> multiply(
    const StratumPoset& poset, const IncidenceTable& a, const IncidenceTable& b) {
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> out;
    for (std::size_t i = 0; i < poset.size(); ++i)
        for (std::size_t k = 0; k < poset.size(); ++k) {
            std::int64_t acc = 0;
            for (std::size_t j = 0; j < poset.size(); ++j)
                if (a.has(i, j) && b.has(j, k)) acc += a.at(i, j) * b.at(j, k);
            if (acc != 0) out[{i, k}] = acc;
        }
    return out;
}

}  // namespace

TEST_CASE("from_covers closes transitively and rejects bad input") {
    const auto p = chain3();
    CHECK(p.less(0, 2));  // not given explicitly
    CHECK(p.leq(1, 1));
    CHECK_FALSE(p.less(2, 0));
    CHECK(p.validate().empty());

    SUBCASE("cycles are structural errors") {
        CHECK_THROWS_AS(StratumPoset::from_covers({{"a", 0}, {"b", 1}},
                                                  {{"a", "b"}, {"b", "a"}}),
                        StructuralError);
        CHECK_THROWS_AS(StratumPoset::from_covers({{"a", 0}}, {{"a", "a"}}),
                        StructuralError);
    }
    SUBCASE("unknown and duplicate ids are structural errors") {
        CHECK_THROWS_AS(StratumPoset::from_covers({{"a", 0}}, {{"a", "zz"}}),
                        StructuralError);
        CHECK_THROWS_AS(StratumPoset::from_covers({{"a", 0}, {"a", 1}}, {}),
                        StructuralError);
    }
    SUBCASE("unknown stratum lookups are domain errors") {
        CHECK_THROWS_AS(chain3().index_of("nope"), DomainError);
    }
}

TEST_CASE("validate reports dimension and minimum violations without throwing") {
    // Dimension must strictly increase along the order.
    const auto bad_dim = StratumPoset::from_covers({{"a", 2}, {"b", 1}}, {{"a", "b"}});
    const auto issues = bad_dim.validate();
    REQUIRE(issues.size() == 2);  // dim violation + minimal stratum not 0-dim
    CHECK(issues[0].find("dimension") != std::string::npos);

    // Two minimal strata.
    const auto two_min =
        StratumPoset::from_covers({{"a", 0}, {"b", 0}, {"c", 1}}, {{"a", "c"}, {"b", "c"}});
    CHECK(two_min.validate().size() >= 1);
}

TEST_CASE("linear extension is a topological order") {
    testgen::Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const auto p = testgen::random_poset(rng, 8, false);
        const auto order = p.linear_extension();
        REQUIRE(order.size() == p.size());
        std::vector<std::size_t> position(p.size());
        for (std::size_t pos = 0; pos < order.size(); ++pos) position[order[pos]] = pos;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                if (p.less(i, j)) CHECK(position[i] < position[j]);
    }
}

TEST_CASE("inverse on a two-element chain is -n") {
    auto p = StratumPoset::from_covers({{"V0", 0}, {"V1", 1}}, {{"V0", "V1"}});
    auto n = IncidenceTable::identity(p);
    n.set(0, 1, 3);
    const auto m = invert_incidence(p, n);
    CHECK(m.at(0, 1) == -3);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 1) == 1);
}

TEST_CASE("inverse on the three-chain is m02 = n01*n12 - n02") {
    auto p = chain3();
    auto n = IncidenceTable::identity(p);
    n.set(0, 1, 2);
    n.set(1, 2, 3);
    n.set(0, 2, 7);
    const auto m = invert_incidence(p, n);
    CHECK(m.at(0, 1) == -2);
    CHECK(m.at(1, 2) == -3);
    CHECK(m.at(0, 2) == 2 * 3 - 7);

    SUBCASE("chain sum agrees entry by entry") {
        CHECK(chain_sum_inverse(p, n, 0, 2) == -1);
        CHECK(chain_sum_inverse(p, n, 0, 1) == -2);
        CHECK(chain_sum_inverse(p, n, 0, 0) == 1);  // empty chain
    }
    SUBCASE("incomparable or reversed pairs are rejected") {
        CHECK_THROWS_AS(chain_sum_inverse(p, n, 2, 0), DomainError);
    }
}

TEST_CASE("identity table inverts to itself") {
    // On an antichain the diagonal is the whole table.
    const auto p = StratumPoset::from_covers({{"a", 1}, {"b", 1}, {"c", 2}}, {});
    const auto id = IncidenceTable::identity(p);
    CHECK(invert_incidence(p, id) == id);

    // On a chain the comparable pairs must be present, even when zero; the
    // all-zero table is then its own inverse.
    const auto chain = chain3();
    auto zeros = IncidenceTable::identity(chain);
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = 0; j < chain.size(); ++j)
            if (chain.less(i, j)) zeros.set(i, j, 0);
    CHECK(invert_incidence(chain, zeros) == zeros);

    // Identity alone is incomplete there and is rejected.
    CHECK_THROWS_AS(invert_incidence(chain, IncidenceTable::identity(chain)),
                    DomainError);
}

TEST_CASE("tables violating the shape contract are rejected") {
    auto p = chain3();
    SUBCASE("missing diagonal") {
        IncidenceTable n;
        n.set(0, 1, 1);
        CHECK_THROWS_AS(invert_incidence(p, n), DomainError);
    }
    SUBCASE("non-unit diagonal") {
        auto n = IncidenceTable::identity(p);
        n.set(1, 1, 2);
        CHECK_THROWS_AS(invert_incidence(p, n), DomainError);
    }
    SUBCASE("entry on an incomparable pair") {
        const auto wide = StratumPoset::from_covers(
            {{"V0", 0}, {"a", 1}, {"b", 1}}, {{"V0", "a"}, {"V0", "b"}});
        auto n = IncidenceTable::identity(wide);
        n.set(1, 2, 4);  // a and b are incomparable
        CHECK_THROWS_AS(invert_incidence(wide, n), DomainError);
    }
}

TEST_CASE("chain sum equals full inversion on random posets") {
    testgen::Rng rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = testgen::random_poset(rng, 8, false);
        const auto n = testgen::random_incidence(rng, p);
        const auto m = invert_incidence(p, n);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                if (p.leq(i, j)) CHECK(m.at(i, j) == chain_sum_inverse(p, n, i, j));
    }
}

TEST_CASE("n times its inverse is the identity matrix") {
    testgen::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = testgen::random_poset(rng, 8, false);
        const auto n = testgen::random_incidence(rng, p);
        const auto m = invert_incidence(p, n);
        const auto product = multiply(p, n, m);
        for (const auto& [key, value] : product) CHECK((key.first == key.second));
        for (std::size_t i = 0; i < p.size(); ++i) {
            REQUIRE(product.count({i, i}) == 1);
            CHECK(product.at({i, i}) == 1);
        }
    }
}

TEST_CASE("inversion is an involution") {
    testgen::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = testgen::random_poset(rng, 8, false);
        const auto n = testgen::random_incidence(rng, p);
        CHECK(invert_incidence(p, invert_incidence(p, n)) == n);
    }
}

TEST_CASE("overflow in inversion fails loudly") {
    auto p = chain3();
    auto n = IncidenceTable::identity(p);
    const std::int64_t big = std::int64_t{1} << 40;
    n.set(0, 1, big);
    n.set(1, 2, big);
    n.set(0, 2, 0);
    CHECK_THROWS_AS(invert_incidence(p, n), stratindex::OverflowError);
    CHECK_THROWS_AS(chain_sum_inverse(p, n, 0, 2), stratindex::OverflowError);
}
