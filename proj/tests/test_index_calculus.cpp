#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "generators.hpp"
#include "stratindex/checked.hpp"
#include "stratindex/index_calculus.hpp"
#include "stratindex/milnor.hpp"

using namespace stratindex;

namespace {

StratifiedGermModel two_strata_germ(int top_dim, std::int64_t n01) {
    StratifiedGermModel g;
    g.poset = StratumPoset::from_covers({{"V0", 0}, {"V1", top_dim}}, {{"V0", "V1"}});
    g.nij = IncidenceTable::identity(g.poset);
    g.nij.set(0, 1, n01);
    return g;
}

}  // namespace

TEST_CASE("aggregate_radial_index is 1 plus the local contributions") {
    CHECK(aggregate_radial_index({}) == 1);

    const std::vector<LocalSingularPointDatum> three{{1, 1}, {1, 1}, {1, 1}};
    CHECK(aggregate_radial_index(three) == 4);

    // Radialising Re(dl) on four lines leaves one zero of real index -1 per
    // line; the complex conversion lands on the k-lines value k - 1 = 3.
    const std::vector<LocalSingularPointDatum> four{{1, -1}, {1, -1}, {1, -1}, {1, -1}};
    const std::int64_t real = aggregate_radial_index(four);
    CHECK(real == -3);
    CHECK(complex_from_real_index(1, real) == 3);

    IndexVector eu_dl;
    eu_dl.kind = IndexKind::EulerObstruction;
    eu_dl.values = {{"V0", 1}, {"V1", 0}};
    CHECK(radial_index_via_theorem4(germ_k_lines(4), eu_dl).values.at("V1") == 3);

    SUBCASE("points on the origin stratum are rejected") {
        const std::vector<LocalSingularPointDatum> bad{{0, 1}};
        CHECK_THROWS_AS(aggregate_radial_index(bad), DomainError);
    }
}

TEST_CASE("scalar index formulas") {
    SUBCASE("complex index from a real one flips with the parity of n") {
        CHECK(complex_from_real_index(0, 7) == 7);
        CHECK(complex_from_real_index(1, 5) == -5);
        CHECK(complex_from_real_index(2, 5) == 5);
        CHECK(complex_from_real_index(3, 1) == -1);
        CHECK_THROWS_AS(complex_from_real_index(-1, 0), DomainError);
    }
    SUBCASE("real index of df from the negative fibre") {
        CHECK(real_index_of_df(0) == 1);   // x^2 on the line: empty negative fibre
        CHECK(real_index_of_df(2) == -1);  // -x^2: two preimages
        CHECK(real_index_of_df(1) == 0);   // x: regular point
    }
    SUBCASE("complex index of df from the fibre") {
        CHECK(complex_index_of_df(1, 4) == 3);   // x^4 on the line: 4 points
        CHECK(complex_index_of_df(2, -3) == 4);  // mu = 4 plane germ
        CHECK(complex_index_of_df(3, 9) == 8);   // mu = 8 in three variables
        CHECK(complex_index_of_df(0, 0) == 1);   // point germ convention
    }
    SUBCASE("gap between index and obstruction") {
        CHECK(index_obstruction_gap(1, 4) == 3);  // four lines in the plane
        CHECK(index_obstruction_gap(1, 1) == 0);  // smooth line
        CHECK(index_obstruction_gap(2, 1) == 0);  // one-point-glued disc slice
        CHECK(index_obstruction_gap(2, 0) == 1);  // twice-glued disc slice
        CHECK_THROWS_AS(index_obstruction_gap(0, 1), DomainError);
    }
    SUBCASE("Eu(df) from the two fibres") {
        CHECK(eu_of_df(1, 4, 8) == 4);  // quadratic on four lines
        CHECK(eu_of_df(1, 4, 4) == 0);  // f = l itself
        CHECK(eu_of_df(2, 1, 1) == 0);
        CHECK_THROWS_AS(eu_of_df(0, 0, 0), DomainError);
    }
    SUBCASE("fibre chi and the index of df invert each other") {
        for (int n = 1; n <= 5; ++n)
            for (std::int64_t mu = 0; mu <= 10; ++mu)
                CHECK(complex_index_of_df(n, chi_hypersurface_fibre(n, mu)) == mu);
    }
    SUBCASE("resolution obstruction") {
        CHECK(resolution_obstruction({2, 0}, 5) == 4);
        CHECK(resolution_obstruction({1, 3}, 2) == 0);
        CHECK(resolution_obstruction({3, 1}, 9) == 9);  // chi(D) = 1 changes nothing
        CHECK_THROWS_AS(resolution_obstruction({0, 1}, 1), DomainError);
    }
}

TEST_CASE("theorem-4 transform on the k-lines germs") {
    for (int k = 2; k <= 6; ++k) {
        const auto g = germ_k_lines(k);
        IndexVector eu;
        eu.kind = IndexKind::EulerObstruction;
        eu.values = {{"V0", 1}, {"V1", 0}};
        const auto ind = radial_index_via_theorem4(g, eu);
        CHECK(ind.values.at("V0") == 1);
        CHECK(ind.values.at("V1") == k - 1);

        const auto back = euler_obstruction_via_corollary(g, ind);
        CHECK(back.values == eu.values);
    }
}

TEST_CASE("transform round trip on random germs") {
    testgen::Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = testgen::random_germ(rng, 8, true);
        const auto eu =
            testgen::random_index_vector(rng, g.poset, IndexKind::EulerObstruction);
        const auto ind = radial_index_via_theorem4(g, eu);
        const auto back = euler_obstruction_via_corollary(g, ind);
        CHECK(back.values == eu.values);
        CHECK(back.kind == IndexKind::EulerObstruction);
    }
}

TEST_CASE("transform degenerations") {
    SUBCASE("a single-stratum germ transforms identically") {
        StratifiedGermModel g;
        g.poset = StratumPoset::from_covers({{"V0", 0}}, {});
        g.nij = IncidenceTable::identity(g.poset);
        IndexVector v;
        v.kind = IndexKind::EulerObstruction;
        v.values = {{"V0", 1}};
        CHECK(radial_index_via_theorem4(g, v).values == v.values);
        v.kind = IndexKind::RadialIndex;
        CHECK(euler_obstruction_via_corollary(g, v).values == v.values);
    }
    SUBCASE("on two strata the gap comes out of the stored table") {
        // With n(V0, V1) built from chi(M_l) by the sign convention, the
        // difference ind - Eu on the top closure is exactly the gap formula.
        for (int n = 1; n <= 4; ++n)
            for (std::int64_t chi_l = -3; chi_l <= 5; ++chi_l) {
                auto g = two_strata_germ(n, sign_pow(n - 1) * (chi_l - 1));
                IndexVector eu;
                eu.kind = IndexKind::EulerObstruction;
                eu.values = {{"V0", 1}, {"V1", -2}};
                const auto ind = radial_index_via_theorem4(g, eu);
                CHECK(ind.values.at("V1") - eu.values.at("V1") ==
                      index_obstruction_gap(n, chi_l));
            }
    }
}

TEST_CASE("transform input contracts") {
    const auto g = germ_k_lines(3);
    IndexVector eu;
    eu.kind = IndexKind::EulerObstruction;
    eu.values = {{"V0", 1}, {"V1", 0}};

    SUBCASE("kind mismatch") {
        IndexVector wrong = eu;
        wrong.kind = IndexKind::RadialIndex;
        CHECK_THROWS_AS(radial_index_via_theorem4(g, wrong), DomainError);
    }
    SUBCASE("missing stratum value") {
        IndexVector partial;
        partial.kind = IndexKind::EulerObstruction;
        partial.values = {{"V0", 1}};
        CHECK_THROWS_AS(radial_index_via_theorem4(g, partial), DomainError);
    }
    SUBCASE("corollary needs a unique top stratum") {
        StratifiedGermModel wide;
        wide.poset = StratumPoset::from_covers({{"V0", 0}, {"a", 1}, {"b", 1}},
                                               {{"V0", "a"}, {"V0", "b"}});
        wide.nij = IncidenceTable::identity(wide.poset);
        wide.nij.set(0, 1, 2);
        wide.nij.set(0, 2, 2);
        IndexVector ind;
        ind.kind = IndexKind::RadialIndex;
        ind.values = {{"V0", 1}, {"a", 0}, {"b", 0}};
        CHECK_THROWS_AS(euler_obstruction_via_corollary(wide, ind), StructuralError);
    }
    SUBCASE("overflow is detected") {
        auto g2 = two_strata_germ(1, std::int64_t{1} << 62);
        IndexVector big;
        big.kind = IndexKind::EulerObstruction;
        big.values = {{"V0", 4}, {"V1", 4}};
        CHECK_THROWS_AS(radial_index_via_theorem4(g2, big), stratindex::OverflowError);
    }
}

TEST_CASE("full expansion of Eu(df) on a hand-solved two-stratum germ") {
    // dim X = 2, n(V0, V1) = 5, chi(M_{f|X}) = -3.  Expanding by hand:
    // slice chibar = (-1)^(2-1) * 5 = -5, inner = (chi_X - 1) + (chi_0 - 1)(-5),
    // total = (-1)^(dim-1) * inner.
    const auto g = two_strata_germ(2, 5);

    std::map<std::string, std::int64_t> chi{{"V0", 1}, {"V1", -3}};
    CHECK(eu_df_full_expansion(g, chi) == 4);

    chi["V0"] = 0;  // empty fibre over the point stratum
    CHECK(eu_df_full_expansion(g, chi) == -1);

    SUBCASE("both variants agree with the inversion route") {
        for (const std::int64_t chi0 : {1, 0, 7, -2}) {
            chi["V0"] = chi0;
            const auto ind = ind_vector_of_df(g, chi);
            const auto eu = euler_obstruction_via_corollary(g, ind);
            CHECK(eu_df_full_expansion(g, chi) == eu.values.at("V1"));
        }
    }
}

TEST_CASE("full expansion agrees with the inversion route on random germs") {
    testgen::Rng rng(77007);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = testgen::random_germ(rng, 7, true);
        std::map<std::string, std::int64_t> chi;
        for (const auto& s : g.poset.strata()) chi[s.id] = rng.between(-6, 6);

        const std::size_t top = g.poset.maximal_elements().at(0);
        const auto via_inversion =
            euler_obstruction_via_corollary(g, ind_vector_of_df(g, chi));
        CHECK(eu_df_full_expansion(g, chi) ==
              via_inversion.values.at(g.poset.stratum(top).id));
    }
}

TEST_CASE("full expansion on the degenerate four-lines surface") {
    StratifiedGermModel g;
    g.poset = StratumPoset::from_covers(
        {{"V0", 0}, {"A1", 1}, {"B1", 1}, {"V2", 2}},
        {{"V0", "A1"}, {"V0", "B1"}, {"A1", "V2"}, {"B1", "V2"}});
    g.nij = IncidenceTable::identity(g.poset);
    g.nij.set(g.poset.index_of("V0"), g.poset.index_of("A1"), 0);
    g.nij.set(g.poset.index_of("V0"), g.poset.index_of("B1"), 0);
    g.nij.set(g.poset.index_of("A1"), g.poset.index_of("V2"), 3);
    g.nij.set(g.poset.index_of("B1"), g.poset.index_of("V2"), 1);
    g.nij.set(g.poset.index_of("V0"), g.poset.index_of("V2"), 1);

    // f = l: fibres have chi 0 on the surface, 1 on each line closure,
    // 0 over the origin.
    const std::map<std::string, std::int64_t> chi{
        {"V0", 0}, {"A1", 1}, {"B1", 1}, {"V2", 0}};
    CHECK(eu_df_full_expansion(g, chi) == 0);

    IndexVector eu_dl;
    eu_dl.kind = IndexKind::EulerObstruction;
    eu_dl.values = {{"V0", 1}, {"A1", 0}, {"B1", 0}, {"V2", 0}};
    const auto ind = radial_index_via_theorem4(g, eu_dl);
    CHECK(ind.values.at("V2") == 1);  // = -(chi(M_l) - 1) with chi(M_l) = 0
    CHECK(euler_obstruction_via_corollary(g, ind).values == eu_dl.values);
}
