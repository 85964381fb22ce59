#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "stratindex/rational.hpp"

namespace stratindex {

using VertexId = int;
using Simplex = std::vector<VertexId>;  // sorted, distinct vertices

/**
 * A finite abstract simplicial complex.  from_maximal closes the given
 * simplices under taking faces; from_simplices stores them as-is so that the
 * face-closure diagnostics stay reachable.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);
    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

    bool empty() const { return simplices_.empty(); }
    std::size_t simplex_count() const { return simplices_.size(); }
    const std::set<Simplex>& simplices() const { return simplices_; }
    std::vector<VertexId> vertices() const;
    bool contains(const Simplex& s) const;

    // Face-closure violations ("missing face {..} of {..}"); empty when the
    // simplex set really is a complex.
    std::vector<std::string> validate() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::set<Simplex> simplices_;
};

// Injective heights on the vertices, the PL stand-in for a generic function.
struct HeightAssignment {
    std::map<VertexId, Rational> height;
};

// Alternating count sum (-1)^dim over all simplices.  StructuralError if the
// face closure is broken.
std::int64_t euler_characteristic(const SimplicialComplex& K);

// Link of a vertex: { s \ {v} : v in s, s != {v} }.
SimplicialComplex link(const SimplicialComplex& K, VertexId v);

// Sub-link spanned by the vertices strictly lower than v.
SimplicialComplex lower_link(const SimplicialComplex& K, VertexId v,
                             const HeightAssignment& h);

// PL radial index of the height differential at v: 1 - chi(lower link).
std::int64_t pl_radial_index(const SimplicialComplex& K, VertexId v,
                             const HeightAssignment& h);

struct PoincareHopfReport {
    std::int64_t index_sum = 0;
    std::int64_t chi = 0;
    bool equal = false;
};

// Sums the PL radial indices over the vertices and compares with chi(K).
PoincareHopfReport poincare_hopf_check(const SimplicialComplex& K,
                                       const HeightAssignment& h);

struct SuspensionReport {
    std::int64_t index_bottom = 0;  // suspension point below everything
    std::int64_t index_top = 0;     // suspension point above everything
    std::int64_t index_sum = 0;
    std::int64_t chi_suspension = 0;
    bool equal = false;
};

// For a height with the two suspension points extreme, their indices are
// 1 - chi(Y) at the top and 1 at the bottom (empty lower link), summing to
// 2 - chi(Y) = chi of the suspension.
SuspensionReport suspension_check(std::int64_t chi_link);

// Cone and suspension with fresh apex vertices (DomainError on collisions).
SimplicialComplex cone(const SimplicialComplex& K, VertexId apex);
SimplicialComplex suspension(const SimplicialComplex& K, VertexId bottom, VertexId top);

// Flag complex of the face poset: one vertex per simplex, one simplex per
// chain under strict inclusion.  Vertex ids follow the simplex enumeration.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& K);

// Deterministic injective heights: the values 0..n-1 assigned to the sorted
// vertex list after a seeded Fisher–Yates shuffle.  Identical output for
// identical (complex, seed) on every platform.
HeightAssignment generate_heights(const SimplicialComplex& K, std::uint64_t seed);

namespace fixtures {

SimplicialComplex circle();            // boundary of a triangle
SimplicialComplex sphere();            // boundary of an octahedron
SimplicialComplex torus();             // 7-vertex triangulation
SimplicialComplex wedge_of_circles();  // two triangle boundaries sharing a vertex

}  // namespace fixtures

}  // namespace stratindex
