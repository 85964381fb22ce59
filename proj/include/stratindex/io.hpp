#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "stratindex/germ.hpp"
#include "stratindex/plmorse.hpp"

namespace stratindex {

// On-disk form of a stratified germ (.germ): label, strata with dimensions,
// covering relations, incidence entries by stratum id, and a flag telling
// whether dimensions are complex (the default) or real.  Missing diagonal
// entries n(i, i) = 1 are filled in on load.
struct GermDocument {
    StratifiedGermModel model;
    bool complex_context = true;
};

GermDocument parse_germ_document(const nlohmann::json& doc);
GermDocument load_germ_document(const std::filesystem::path& path);
nlohmann::json germ_document_to_json(const GermDocument& doc);

// On-disk form of a simplicial complex (.cplx): label, maximal simplices,
// optional heights (integers or "p/q" strings).  Ties in heights are
// rejected, never perturbed.
struct ComplexDocument {
    std::string label;
    SimplicialComplex complex;
    std::optional<HeightAssignment> heights;
    std::string notes;
};

ComplexDocument parse_complex_document(const nlohmann::json& doc);
ComplexDocument load_complex_document(const std::filesystem::path& path);
nlohmann::json complex_document_to_json(const ComplexDocument& doc);

// Comma-separated 64-bit integers ("1,0,-3").
std::vector<std::int64_t> parse_int_list(const std::string& text);

// An index vector in stratum declaration order, as "(1, 3)".
std::string format_index_vector(const StratumPoset& poset, const IndexVector& v);

}  // namespace stratindex
