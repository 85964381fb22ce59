#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stratindex/germ.hpp"
#include "stratindex/milnor.hpp"
#include "stratindex/plmorse.hpp"

namespace stratindex {

// A frozen number together with a note naming the oracle it came from.
struct ExpectedValue {
    std::string name;
    std::int64_t value = 0;
    std::string note;
};

// Milnor data of one function germ on a catalog germ: chi of the Milnor
// fibre of f restricted to each stratum closure, chi of the generic linear
// fibre on the top closure, and the expected Eu(df) there.
struct GermFunctionData {
    std::string name;
    std::map<std::string, std::int64_t> chi_on_closures;
    std::int64_t chi_generic_linear = 1;
    std::int64_t expected_eu_df = 0;
    std::string note;
};

struct CatalogEntry {
    enum class Kind { Germ, Polynomial, Complex };

    Kind kind = Kind::Germ;
    std::string label;
    std::string notes;

    // Kind::Germ
    std::optional<StratifiedGermModel> germ;
    std::vector<GermFunctionData> functions;

    // Kind::Polynomial
    std::string polynomial;
    std::optional<QuasihomogeneousData> quasihomogeneous;
    bool expect_non_isolated = false;

    // Kind::Complex
    std::optional<SimplicialComplex> complex;

    std::vector<ExpectedValue> expected;
};

const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry& catalog_entry(std::string_view label);  // DomainError if unknown

// Recomputes everything an entry claims; returns failure descriptions
// (empty = verified).  For germs this crosses three independent routes to
// Eu(df); for polynomials the Jacobian colength against the weight formula;
// for complexes chi against Poincaré–Hopf sums at three seeds.
std::vector<std::string> verify_entry(const CatalogEntry& entry);

struct CatalogVerification {
    std::string label;
    std::vector<std::string> failures;
};

std::vector<CatalogVerification> verify_catalog();

}  // namespace stratindex
