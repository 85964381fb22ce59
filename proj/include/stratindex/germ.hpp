#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "stratindex/poset.hpp"

namespace stratindex {

// A stratified germ reduced to the combinatorics the index formulas need:
// the stratum poset and the incidence numbers n(i, j) attached to comparable
// pairs (n(i, j) is the signed reduced Euler characteristic of the generic
// linear Milnor fibre on the normal slice of V_j transverse to V_i).
struct StratifiedGermModel {
    StratumPoset poset;
    IncidenceTable nij;
    std::string label;
    std::string notes;
};

enum class IndexKind { RadialIndex, EulerObstruction };

// A value per stratum closure: either radial indices ind(V_i closure) or
// Euler obstructions Eu(V_i closure) of one fixed 1-form.
struct IndexVector {
    IndexKind kind = IndexKind::RadialIndex;
    std::map<std::string, std::int64_t> values;
};

enum class FibreKind { ComplexFibre, RealPositive, RealNegative, GenericLinear };

// Euler characteristic of a Milnor fibre, tagged with which fibre it is and
// the dimension of the germ it lives on.
struct MilnorData {
    std::int64_t chi = 0;
    FibreKind fibre_kind = FibreKind::ComplexFibre;
    int ambient_dim = 0;

    std::int64_t reduced() const { return chi - 1; }
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

// Full structural check of a germ model: poset invariants, unit diagonal,
// incidence entries present exactly on the comparable pairs.  Reports all
// violations, never throws.
ValidationReport validate_germ(const StratifiedGermModel& model);

// Checks an index vector against a poset: one value per stratum, no strays,
// and the geometric normalisation (value 1 on the minimal stratum — a point,
// where both the radial index and the obstruction of any 1-form are 1).
ValidationReport validate_index_vector(const StratumPoset& poset, const IndexVector& v);

// The union of k distinct complex lines through the origin in the plane:
// strata {0} < (lines minus 0), n(V0, V1) = k - 1 since a generic linear form
// has k-point Milnor fibre on it.  k >= 1.
StratifiedGermModel germ_k_lines(int k);

}  // namespace stratindex
