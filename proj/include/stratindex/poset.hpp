#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stratindex/errors.hpp"

namespace stratindex {

// One stratum of a stratified germ: an id used in documents and reports, and
// its (complex) dimension.
struct Stratum {
    std::string id;
    int dim = 0;
};

/**
 * Finite poset of strata, ordered by "is contained in the closure of".
 *
 * Built from an arbitrary relation (typically just the covering pairs): the
 * factory transitively closes the input and rejects cycles, so callers never
 * see a non-transitive or non-antisymmetric order.  Dimension plausibility is
 * *not* enforced here — validate() reports violations without aborting, so a
 * questionable document can still be loaded and diagnosed.
 */
class StratumPoset {
public:
    StratumPoset() = default;

    // `covers` lists pairs (a, b) meaning a < b.  Throws StructuralError on
    // duplicate ids, unknown ids, or cycles (including a < a).
    static StratumPoset from_covers(
        std::vector<Stratum> strata,
        const std::vector<std::pair<std::string, std::string>>& covers);

    std::size_t size() const { return strata_.size(); }
    const std::vector<Stratum>& strata() const { return strata_; }
    const Stratum& stratum(std::size_t i) const;
    bool contains(std::string_view id) const;
    std::size_t index_of(std::string_view id) const;  // DomainError if unknown

    bool less(std::size_t i, std::size_t j) const;  // strict
    bool leq(std::size_t i, std::size_t j) const;

    // Indices in a topological order (every relation points forward).
    // Deterministic: among available strata the lowest declaration index wins.
    std::vector<std::size_t> linear_extension() const;

    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;

    // Invariant check, reporting rather than throwing: strictly increasing
    // dimension along the order, a unique minimal stratum, of dimension 0.
    std::vector<std::string> validate() const;

private:
    void check_range(std::size_t i) const;

    std::vector<Stratum> strata_;
    std::vector<std::vector<bool>> less_;  // strict order, transitively closed
};

/**
 * Sparse integer table indexed by comparable pairs of strata, n(i, j) for
 * i <= j.  Used both for incidence data and for its Möbius-style inverse.
 */
class IncidenceTable {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    // Table with n(i, i) = 1 for each stratum and nothing else.
    static IncidenceTable identity(const StratumPoset& poset);

    void set(std::size_t i, std::size_t j, std::int64_t value);
    bool has(std::size_t i, std::size_t j) const;
    std::int64_t at(std::size_t i, std::size_t j) const;  // DomainError if absent
    const std::map<Key, std::int64_t>& entries() const { return entries_; }
    bool operator==(const IncidenceTable& other) const = default;

private:
    std::map<Key, std::int64_t> entries_;
};

using InverseTable = IncidenceTable;

/**
 * Solves sum_{i <= j <= k} n(i, j) m(j, k) = delta_{ik} for m over the whole
 * poset.  Requires n to be unit-diagonal with entries only on comparable
 * pairs (DomainError otherwise); all arithmetic is overflow-checked.
 */
InverseTable invert_incidence(const StratumPoset& poset, const IncidenceTable& n);

/**
 * Independent evaluation of one inverse entry as a signed sum over strictly
 * increasing chains i = k0 < k1 < ... < kr = j of (-1)^r prod_t n(k_t, k_{t+1}).
 * Returns 1 for i == j (the empty chain).  DomainError if i is not below j.
 */
std::int64_t chain_sum_inverse(const StratumPoset& poset, const IncidenceTable& n,
                               std::size_t i, std::size_t j);

}  // namespace stratindex
