#include "stratindex/io.hpp"

#include <charconv>
#include <fstream>

namespace stratindex {

using nlohmann::json;

namespace {

[[noreturn]] void bad_document(const std::string& what) {
    throw DomainError("bad document: " + what);
}

const json& field(const json& doc, const char* name) {
    const auto it = doc.find(name);
    if (it == doc.end()) bad_document(std::string("missing field '") + name + "'");
    return *it;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path.string() + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DomainError("cannot parse '" + path.string() + "': " + e.what());
    }
    return doc;
}

Rational height_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    bad_document("heights must be integers or 'p/q' strings");
}

}  // namespace

GermDocument parse_germ_document(const json& doc) {
    if (!doc.is_object()) bad_document("germ document must be a JSON object");
    GermDocument out;
    out.model.label = doc.value("label", "");
    out.model.notes = doc.value("notes", "");
    out.complex_context = doc.value("complex", true);

    std::vector<Stratum> strata;
    for (const json& s : field(doc, "strata")) {
        if (!s.is_object() || !s.contains("id") || !s.contains("dim"))
            bad_document("each stratum needs an 'id' and a 'dim'");
        strata.push_back({s["id"].get<std::string>(), s["dim"].get<int>()});
    }

    std::vector<std::pair<std::string, std::string>> covers;
    for (const json& c : field(doc, "covers")) {
        if (!c.is_array() || c.size() != 2)
            bad_document("each cover must be a pair [below, above]");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    out.model.poset = StratumPoset::from_covers(std::move(strata), covers);

    out.model.nij = IncidenceTable::identity(out.model.poset);
    if (doc.contains("nij")) {
        for (const json& e : doc["nij"]) {
            if (!e.is_array() || e.size() != 3)
                bad_document("each incidence entry must be [below, above, value]");
            const std::size_t i = out.model.poset.index_of(e[0].get<std::string>());
            const std::size_t j = out.model.poset.index_of(e[1].get<std::string>());
            out.model.nij.set(i, j, e[2].get<std::int64_t>());
        }
    }
    return out;
}

GermDocument load_germ_document(const std::filesystem::path& path) {
    return parse_germ_document(load_json(path));
}

json germ_document_to_json(const GermDocument& doc) {
    json out;
    out["label"] = doc.model.label;
    out["complex"] = doc.complex_context;
    out["strata"] = json::array();
    for (const Stratum& s : doc.model.poset.strata())
        out["strata"].push_back({{"id", s.id}, {"dim", s.dim}});
    out["covers"] = json::array();
    const auto& poset = doc.model.poset;
    for (std::size_t i = 0; i < poset.size(); ++i)
        for (std::size_t j = 0; j < poset.size(); ++j) {
            if (!poset.less(i, j)) continue;
            // Emit only covering pairs: nothing strictly between i and j.
            bool covering = true;
            for (std::size_t k = 0; k < poset.size() && covering; ++k)
                if (poset.less(i, k) && poset.less(k, j)) covering = false;
            if (covering)
                out["covers"].push_back({poset.stratum(i).id, poset.stratum(j).id});
        }
    out["nij"] = json::array();
    for (const auto& [key, value] : doc.model.nij.entries()) {
        if (key.first == key.second) continue;  // diagonal is implied
        out["nij"].push_back(
            {poset.stratum(key.first).id, poset.stratum(key.second).id, value});
    }
    if (!doc.model.notes.empty()) out["notes"] = doc.model.notes;
    return out;
}

ComplexDocument parse_complex_document(const json& doc) {
    if (!doc.is_object()) bad_document("complex document must be a JSON object");
    ComplexDocument out;
    out.label = doc.value("label", "");
    out.notes = doc.value("notes", "");

    std::vector<Simplex> maximal;
    for (const json& s : field(doc, "maximal")) {
        if (!s.is_array()) bad_document("each simplex must be an array of vertex ids");
        Simplex simplex;
        for (const json& v : s) simplex.push_back(v.get<VertexId>());
        maximal.push_back(std::move(simplex));
    }
    out.complex = SimplicialComplex::from_maximal(maximal);

    if (doc.contains("heights")) {
        HeightAssignment h;
        std::set<Rational> seen;
        for (const auto& [key, value] : doc["heights"].items()) {
            VertexId v = 0;
            const auto [ptr, ec] =
                std::from_chars(key.data(), key.data() + key.size(), v);
            if (ec != std::errc() || ptr != key.data() + key.size())
                bad_document("height key '" + key + "' is not a vertex id");
            if (!out.complex.contains({v}))
                bad_document("height key '" + key + "' is not a vertex of the complex");
            const Rational r = height_from_json(value);
            if (!seen.insert(r).second)
                bad_document("height " + to_string(r) + " occurs twice; ties are "
                             "rejected, not perturbed");
            h.height[v] = r;
        }
        out.heights = std::move(h);
    }
    return out;
}

ComplexDocument load_complex_document(const std::filesystem::path& path) {
    return parse_complex_document(load_json(path));
}

json complex_document_to_json(const ComplexDocument& doc) {
    json out;
    out["label"] = doc.label;
    out["maximal"] = json::array();
    // Maximal = not a proper face of anything else present.
    for (const Simplex& s : doc.complex.simplices()) {
        bool maximal = true;
        for (const Simplex& t : doc.complex.simplices()) {
            if (t.size() <= s.size() || t == s) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out["maximal"].push_back(s);
    }
    if (doc.heights) {
        json h = json::object();
        for (const auto& [v, r] : doc.heights->height)
            h[std::to_string(v)] = to_string(r);
        out["heights"] = std::move(h);
    }
    if (!doc.notes.empty()) out["notes"] = doc.notes;
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        // Tolerate surrounding blanks, nothing else.
        std::size_t lo = pos, hi = comma;
        while (lo < hi && text[lo] == ' ') ++lo;
        while (hi > lo && text[hi - 1] == ' ') --hi;
        std::int64_t value = 0;
        const char* begin = text.data() + lo;
        const char* end = text.data() + hi;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end || begin == end)
            throw DomainError("not an integer list: '" + text + "'");
        out.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

std::string format_index_vector(const StratumPoset& poset, const IndexVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < poset.size(); ++i) {
        const auto it = v.values.find(poset.stratum(i).id);
        out += (i ? ", " : "");
        out += it == v.values.end() ? "?" : std::to_string(it->second);
    }
    return out + ")";
}

}  // namespace stratindex
