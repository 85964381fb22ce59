#include "stratindex/plmorse.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "stratindex/checked.hpp"

namespace stratindex {

namespace {

std::string simplex_to_string(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

Simplex normalized(Simplex s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw DomainError("simplex " + simplex_to_string(s) + " repeats a vertex");
    return s;
}

// Heights must cover every vertex and be injective; ties are rejected, never
// perturbed.
void check_heights(const SimplicialComplex& K, const HeightAssignment& h) {
    std::set<Rational> seen;
    for (VertexId v : K.vertices()) {
        const auto it = h.height.find(v);
        if (it == h.height.end())
            throw DomainError("no height for vertex " + std::to_string(v));
        if (!seen.insert(it->second).second)
            throw DomainError("height " + to_string(it->second) +
                              " occurs twice; heights must be injective");
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal) {
    std::vector<Simplex> all;
    for (const Simplex& raw : maximal) {
        const Simplex s = normalized(raw);
        if (s.empty()) continue;
        // Enumerate the nonempty subsets of s.
        const std::size_t k = s.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            Simplex face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) face.push_back(s[b]);
            all.push_back(std::move(face));
        }
    }
    return from_simplices(all);
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
    SimplicialComplex K;
    for (const Simplex& raw : simplices) {
        const Simplex s = normalized(raw);
        if (!s.empty()) K.simplices_.insert(s);
    }
    return K;
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::set<VertexId> vs;
    for (const Simplex& s : simplices_) vs.insert(s.begin(), s.end());
    return {vs.begin(), vs.end()};
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return simplices_.count(normalized(s)) != 0;
}

std::vector<std::string> SimplicialComplex::validate() const {
    std::vector<std::string> issues;
    for (const Simplex& s : simplices_) {
        if (s.size() < 2) continue;
        // Facet closure implies full closure by induction on dimension.
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex facet;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) facet.push_back(s[i]);
            if (!simplices_.count(facet))
                issues.push_back("missing face " + simplex_to_string(facet) + " of " +
                                 simplex_to_string(s));
        }
    }
    return issues;
}

std::int64_t euler_characteristic(const SimplicialComplex& K) {
    const auto issues = K.validate();
    if (!issues.empty()) throw StructuralError(issues.front());
    std::int64_t chi = 0;
    for (const Simplex& s : K.simplices())
        chi = checked_add(chi, sign_pow(static_cast<long long>(s.size()) - 1));
    return chi;
}

SimplicialComplex link(const SimplicialComplex& K, VertexId v) {
    if (!K.contains({v}))
        throw DomainError("vertex " + std::to_string(v) + " is not in the complex");
    std::vector<Simplex> faces;
    for (const Simplex& s : K.simplices()) {
        if (!std::binary_search(s.begin(), s.end(), v) || s.size() == 1) continue;
        Simplex t;
        for (VertexId w : s)
            if (w != v) t.push_back(w);
        faces.push_back(std::move(t));
    }
    return SimplicialComplex::from_simplices(faces);
}

SimplicialComplex lower_link(const SimplicialComplex& K, VertexId v,
                             const HeightAssignment& h) {
    check_heights(K, h);
    const SimplicialComplex lk = link(K, v);
    const Rational& hv = h.height.at(v);
    std::vector<Simplex> faces;
    for (const Simplex& s : lk.simplices()) {
        const bool lower = std::all_of(s.begin(), s.end(), [&](VertexId w) {
            return h.height.at(w) < hv;
        });
        if (lower) faces.push_back(s);
    }
    return SimplicialComplex::from_simplices(faces);
}

std::int64_t pl_radial_index(const SimplicialComplex& K, VertexId v,
                             const HeightAssignment& h) {
    return checked_sub(1, euler_characteristic(lower_link(K, v, h)));
}

PoincareHopfReport poincare_hopf_check(const SimplicialComplex& K,
                                       const HeightAssignment& h) {
    check_heights(K, h);
    PoincareHopfReport report;
    report.chi = euler_characteristic(K);
    for (VertexId v : K.vertices())
        report.index_sum = checked_add(report.index_sum, pl_radial_index(K, v, h));
    report.equal = report.index_sum == report.chi;
    return report;
}

SuspensionReport suspension_check(std::int64_t chi_link) {
    SuspensionReport report;
    report.index_bottom = 1;  // empty lower link
    report.index_top = checked_sub(1, chi_link);
    report.index_sum = checked_add(report.index_bottom, report.index_top);
    report.chi_suspension = checked_sub(2, chi_link);
    report.equal = report.index_sum == report.chi_suspension;
    return report;
}

SimplicialComplex cone(const SimplicialComplex& K, VertexId apex) {
    if (K.contains({apex}))
        throw DomainError("cone apex " + std::to_string(apex) + " already a vertex");
    std::vector<Simplex> faces{{apex}};
    for (const Simplex& s : K.simplices()) {
        faces.push_back(s);
        Simplex t = s;
        t.push_back(apex);
        std::sort(t.begin(), t.end());
        faces.push_back(std::move(t));
    }
    return SimplicialComplex::from_simplices(faces);
}

SimplicialComplex suspension(const SimplicialComplex& K, VertexId bottom, VertexId top) {
    if (bottom == top) throw DomainError("suspension points must differ");
    const SimplicialComplex a = cone(K, bottom);
    const SimplicialComplex b = cone(K, top);
    std::vector<Simplex> faces(a.simplices().begin(), a.simplices().end());
    faces.insert(faces.end(), b.simplices().begin(), b.simplices().end());
    return SimplicialComplex::from_simplices(faces);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& K) {
    std::vector<Simplex> cells(K.simplices().begin(), K.simplices().end());
    std::map<Simplex, VertexId> id;
    for (std::size_t i = 0; i < cells.size(); ++i)
        id[cells[i]] = static_cast<VertexId>(i);

    std::vector<Simplex> chains;
    // Descending chains of proper faces starting at each cell.
    auto extend = [&](auto&& self, const Simplex& bottom, Simplex& chain) -> void {
        chains.push_back(chain);
        const std::size_t k = bottom.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
            Simplex face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) face.push_back(bottom[b]);
            chain.push_back(id.at(face));
            self(self, face, chain);
            chain.pop_back();
        }
    };
    for (const Simplex& cell : cells) {
        Simplex chain{id.at(cell)};
        extend(extend, cell, chain);
    }
    return SimplicialComplex::from_simplices(chains);
}

HeightAssignment generate_heights(const SimplicialComplex& K, std::uint64_t seed) {
    const std::vector<VertexId> vs = K.vertices();
    std::vector<std::size_t> value(vs.size());
    for (std::size_t i = 0; i < value.size(); ++i) value[i] = i;

    // Hand-rolled Fisher–Yates: std::shuffle is not stable across standard
    // library implementations, and reproducibility matters more than bias here.
    std::mt19937_64 rng(seed);
    for (std::size_t i = value.size(); i > 1; --i)
        std::swap(value[i - 1], value[rng() % i]);

    HeightAssignment h;
    for (std::size_t i = 0; i < vs.size(); ++i)
        h.height[vs[i]] = Rational(static_cast<long>(value[i]));
    return h;
}

namespace fixtures {

SimplicialComplex circle() {
    return SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}});
}

SimplicialComplex sphere() {
    // Octahedron: poles 0 and 5 over the square 1-2-3-4.
    return SimplicialComplex::from_maximal({{0, 1, 2},
                                            {0, 2, 3},
                                            {0, 3, 4},
                                            {0, 4, 1},
                                            {5, 1, 2},
                                            {5, 2, 3},
                                            {5, 3, 4},
                                            {5, 4, 1}});
}

SimplicialComplex torus() {
    // Classical 7-vertex triangulation: faces (i, i+1, i+3) and (i, i+2, i+3)
    // modulo 7, giving 7 vertices, 21 edges, 14 triangles.
    std::vector<Simplex> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_maximal(faces);
}

SimplicialComplex wedge_of_circles() {
    return SimplicialComplex::from_maximal(
        {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

}  // namespace fixtures

}  // namespace stratindex
