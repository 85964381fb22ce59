#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "stratindex/germ.hpp"

namespace stratindex {

// One zero of a radialised perturbation away from the origin: the dimension
// of the stratum it lies on and its local index there.
struct LocalSingularPointDatum {
    int stratum_dim = 0;
    std::int64_t local_index = 0;
};

// Radial index from perturbation data: 1 (the radial zero at the origin)
// plus the sum of the listed local indices.  Points must sit on strata of
// dimension >= 1 — the origin itself is never listed.
std::int64_t aggregate_radial_index(std::span<const LocalSingularPointDatum> points);

// ind_complex = (-1)^n ind_real(Re omega) on an n-dimensional complex germ.
std::int64_t complex_from_real_index(int n, std::int64_t real_index);

// Real radial index of df at an isolated point: 1 - chi(M_f^-), the negative
// Milnor fibre f^{-1}(-delta).
std::int64_t real_index_of_df(std::int64_t chi_negative_fibre);

// Complex radial index of df on an n-dimensional germ: (-1)^{n-1}(chi(M_f) - 1).
std::int64_t complex_index_of_df(int n, std::int64_t chi_fibre);

// ind - Eu for any 1-form with an isolated zero on an n-dimensional germ:
// (-1)^{n-1}(chi(M_l) - 1), with M_l the generic linear Milnor fibre.  The
// gap depends only on the germ, not on the form.
std::int64_t index_obstruction_gap(int n, std::int64_t chi_generic_linear);

// Eu(df) = (-1)^n (chi(M_l) - chi(M_f)) on an n-dimensional germ, n >= 1.
std::int64_t eu_of_df(int n, std::int64_t chi_generic_linear, std::int64_t chi_fibre);

// Exceptional divisor data of a resolution pi: dimension n of the germ and
// chi of the divisor D over the origin.
struct ResolutionDatum {
    int dim = 0;
    std::int64_t chi_exceptional = 0;
};

// Obstruction Obst_pi(omega) = ind + (-1)^n (chi(D) - 1): the obstruction to
// extending omega without zeros over a resolution differs from the radial
// index by a number depending only on the resolution.
std::int64_t resolution_obstruction(const ResolutionDatum& datum, std::int64_t ind);

// ind(V_j closure) = sum_{i <= j} n(i, j) Eu(V_i closure), the forward
// incidence transform of an obstruction vector.  All arithmetic checked.
IndexVector radial_index_via_theorem4(const StratifiedGermModel& germ,
                                      const IndexVector& eu);

// Eu(V_j closure) = sum_{i <= j} m(i, j) ind(V_i closure) with m the Möbius
// inverse of the incidence table.  Requires a unique maximal stratum
// (StructuralError otherwise).
IndexVector euler_obstruction_via_corollary(const StratifiedGermModel& germ,
                                            const IndexVector& ind);

// Radial indices of df on every stratum closure from the Euler
// characteristics chi(M_{f | V_i closure}), via complex_index_of_df.
IndexVector ind_vector_of_df(const StratifiedGermModel& germ,
                             const std::map<std::string, std::int64_t>& chi_on_closures);

// Eu(df) on the top stratum closure, expanded directly over chains:
//   (-1)^{dim X - 1} ( chibar(M_{f|X}) +
//       sum_{i < q} chibar(M_{f|V_i closure}) *
//           sum_{chains i = k0 < ... < kr = q} prod_t chibar(M_{l|N(k_t, k_{t+1})}) )
// where chibar(M_l|N(a, b)) is recovered from the stored incidence numbers as
// (-1)^{dim N - 1} n(a, b).  Implemented independently of the Möbius route so
// the two can be checked against each other.
std::int64_t eu_df_full_expansion(const StratifiedGermModel& germ,
                                  const std::map<std::string, std::int64_t>& chi_on_closures);

}  // namespace stratindex
