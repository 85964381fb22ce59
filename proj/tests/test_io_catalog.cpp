#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>

#include "stratindex/catalog.hpp"
#include "stratindex/index_calculus.hpp"
#include "stratindex/io.hpp"

using namespace stratindex;
using nlohmann::json;

namespace {

std::filesystem::path data_file(const char* name) {
    return std::filesystem::path(STRATINDEX_DATA_DIR) / name;
}

}  // namespace

TEST_CASE("germ documents") {
    const auto doc = json::parse(R"({
        "label": "pair",
        "strata": [{"id": "V0", "dim": 0}, {"id": "V1", "dim": 1}],
        "covers": [["V0", "V1"]],
        "nij": [["V0", "V1", 3]]
    })");
    const auto g = parse_germ_document(doc);
    CHECK(g.model.label == "pair");
    CHECK(g.complex_context);  // default
    CHECK(g.model.poset.size() == 2);

    // Diagonal entries are filled in on load.
    CHECK(g.model.nij.at(0, 0) == 1);
    CHECK(g.model.nij.at(1, 1) == 1);
    CHECK(g.model.nij.at(0, 1) == 3);
    CHECK(validate_germ(g.model).issues.empty());

    SUBCASE("round trip through json") {
        const auto again = parse_germ_document(germ_document_to_json(g));
        CHECK(germ_document_to_json(again) == germ_document_to_json(g));
    }
    SUBCASE("rejects") {
        auto bad = doc;
        bad["nij"].push_back({"V0", "W9", 1});
        CHECK_THROWS_AS(parse_germ_document(bad), DomainError);

        auto noStrata = doc;
        noStrata.erase("strata");
        CHECK_THROWS_AS(parse_germ_document(noStrata), DomainError);

        auto badCover = doc;
        badCover["covers"].push_back({"V1", "V1"});
        CHECK_THROWS_AS(parse_germ_document(badCover), StructuralError);

        CHECK_THROWS_AS(load_germ_document(data_file("missing.germ")), DomainError);
    }
}

TEST_CASE("germ files in data/") {
    const auto k4 = load_germ_document(data_file("k4.germ"));
    CHECK(k4.model.label == "k4-lines");
    CHECK(validate_germ(k4.model).issues.empty());

    IndexVector eu;
    eu.kind = IndexKind::EulerObstruction;
    eu.values = {{"V0", 1}, {"V1", 0}};
    const auto ind = radial_index_via_theorem4(k4.model, eu);
    CHECK(format_index_vector(k4.model.poset, ind) == "(1, 3)");

    const auto four = load_germ_document(data_file("four-lines.germ"));
    CHECK(four.model.label == "four-lines-surface");
    CHECK(four.model.poset.size() == 3);
    CHECK(validate_germ(four.model).issues.empty());

    const auto smooth = load_germ_document(data_file("smooth-line.germ"));
    CHECK(validate_germ(smooth.model).issues.empty());
}

TEST_CASE("complex documents") {
    const auto circle = load_complex_document(data_file("circle.cplx"));
    CHECK(circle.label == "circle");
    CHECK(euler_characteristic(circle.complex) == 0);
    REQUIRE(circle.heights.has_value());
    CHECK(circle.heights->height.at(1) == make_rational(1, 2));
    CHECK(pl_radial_index(circle.complex, 0, *circle.heights) == 1);
    CHECK(pl_radial_index(circle.complex, 1, *circle.heights) == 0);
    CHECK(pl_radial_index(circle.complex, 2, *circle.heights) == -1);

    const auto octa = load_complex_document(data_file("octahedron.cplx"));
    CHECK(octa.complex == fixtures::sphere());
    CHECK_FALSE(octa.heights.has_value());

    const auto torus = load_complex_document(data_file("torus.cplx"));
    CHECK(torus.complex == fixtures::torus());

    SUBCASE("round trip") {
        const auto again = parse_complex_document(complex_document_to_json(circle));
        CHECK(again.complex == circle.complex);
        REQUIRE(again.heights.has_value());
        CHECK(again.heights->height == circle.heights->height);
    }
    SUBCASE("rejects") {
        auto doc = complex_document_to_json(circle);
        doc["heights"]["1"] = "1/0";
        CHECK_THROWS_AS(parse_complex_document(doc), DomainError);

        doc["heights"]["1"] = 2;  // ties with vertex 2
        CHECK_THROWS_AS(parse_complex_document(doc), DomainError);

        doc["heights"] = {{"7", 0}};  // not a vertex
        CHECK_THROWS_AS(parse_complex_document(doc), DomainError);
    }
}

TEST_CASE("small text helpers") {
    CHECK(parse_int_list("1,0,-3") == std::vector<std::int64_t>{1, 0, -3});
    CHECK(parse_int_list(" 4 , 5 ") == std::vector<std::int64_t>{4, 5});
    CHECK_THROWS_AS(parse_int_list("1,,2"), DomainError);
    CHECK_THROWS_AS(parse_int_list("1,x"), DomainError);
    CHECK_THROWS_AS(parse_int_list(""), DomainError);
}

TEST_CASE("builtin catalog") {
    const auto& entries = builtin_catalog();
    CHECK(entries.size() >= 20);

    std::set<std::string> labels;
    for (const auto& e : entries) labels.insert(e.label);
    CHECK(labels.size() == entries.size());  // labels are unique

    CHECK(catalog_entry("quadric").kind == CatalogEntry::Kind::Polynomial);
    CHECK(catalog_entry("k4-lines").kind == CatalogEntry::Kind::Germ);
    CHECK(catalog_entry("torus").kind == CatalogEntry::Kind::Complex);
    CHECK_THROWS_AS(catalog_entry("no-such-entry"), DomainError);

    SUBCASE("every entry verifies") {
        for (const auto& v : verify_catalog()) {
            INFO(v.label);
            CHECK(v.failures.empty());
        }
    }
    SUBCASE("verification really checks something") {
        auto forged = catalog_entry("k4-lines");
        forged.expected[0].value += 1;
        CHECK_FALSE(verify_entry(forged).empty());
    }
}
