#include "stratindex/index_calculus.hpp"

#include "stratindex/checked.hpp"

namespace stratindex {

namespace {

// Looks up chi for every stratum closure, by id; DomainError on gaps.
std::int64_t chi_for(const StratumPoset& poset,
                     const std::map<std::string, std::int64_t>& chi, std::size_t i) {
    auto it = chi.find(poset.stratum(i).id);
    if (it == chi.end())
        throw DomainError("no fibre Euler characteristic supplied for stratum '" +
                          poset.stratum(i).id + "'");
    return it->second;
}

std::size_t unique_top(const StratumPoset& poset) {
    const auto maxima = poset.maximal_elements();
    if (maxima.size() != 1)
        throw StructuralError("germ needs a unique maximal stratum, found " +
                              std::to_string(maxima.size()));
    return maxima[0];
}

std::map<std::string, std::int64_t> require_vector(const StratumPoset& poset,
                                                   const IndexVector& v,
                                                   IndexKind expected,
                                                   const char* what) {
    if (v.kind != expected)
        throw DomainError(std::string("expected ") + what + " values");
    for (const auto& s : poset.strata())
        if (!v.values.count(s.id))
            throw DomainError(std::string(what) + " vector has no value for stratum '" +
                              s.id + "'");
    return v.values;
}

}  // namespace

std::int64_t aggregate_radial_index(std::span<const LocalSingularPointDatum> points) {
    std::int64_t total = 1;
    for (const auto& p : points) {
        if (p.stratum_dim < 1)
            throw DomainError(
                "perturbation data lists a point on a stratum of dimension < 1");
        total = checked_add(total, p.local_index);
    }
    return total;
}

std::int64_t complex_from_real_index(int n, std::int64_t real_index) {
    if (n < 0) throw DomainError("negative germ dimension");
    return checked_mul(sign_pow(n), real_index);
}

std::int64_t real_index_of_df(std::int64_t chi_negative_fibre) {
    return checked_neg(checked_sub(chi_negative_fibre, 1));
}

std::int64_t complex_index_of_df(int n, std::int64_t chi_fibre) {
    return checked_mul(sign_pow(n - 1), checked_sub(chi_fibre, 1));
}

std::int64_t index_obstruction_gap(int n, std::int64_t chi_generic_linear) {
    if (n < 1) throw DomainError("the gap formula needs dimension >= 1");
    return checked_mul(sign_pow(n - 1), checked_sub(chi_generic_linear, 1));
}

std::int64_t eu_of_df(int n, std::int64_t chi_generic_linear, std::int64_t chi_fibre) {
    if (n < 1) throw DomainError("Eu(df) via fibres needs dimension >= 1");
    return checked_mul(sign_pow(n), checked_sub(chi_generic_linear, chi_fibre));
}

std::int64_t resolution_obstruction(const ResolutionDatum& datum, std::int64_t ind) {
    if (datum.dim < 1) throw DomainError("resolution data needs dimension >= 1");
    return checked_add(
        ind, checked_mul(sign_pow(datum.dim), checked_sub(datum.chi_exceptional, 1)));
}

IndexVector radial_index_via_theorem4(const StratifiedGermModel& germ,
                                      const IndexVector& eu) {
    const auto& poset = germ.poset;
    const auto values = require_vector(poset, eu, IndexKind::EulerObstruction,
                                       "Euler obstruction");
    IndexVector out;
    out.kind = IndexKind::RadialIndex;
    for (std::size_t j = 0; j < poset.size(); ++j) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < poset.size(); ++i)
            if (poset.leq(i, j))
                acc = checked_add(acc, checked_mul(germ.nij.at(i, j),
                                                   values.at(poset.stratum(i).id)));
        out.values[poset.stratum(j).id] = acc;
    }
    return out;
}

IndexVector euler_obstruction_via_corollary(const StratifiedGermModel& germ,
                                            const IndexVector& ind) {
    const auto& poset = germ.poset;
    unique_top(poset);  // the corollary is about the germ's top closure
    const auto values = require_vector(poset, ind, IndexKind::RadialIndex,
                                       "radial index");
    const InverseTable m = invert_incidence(poset, germ.nij);
    IndexVector out;
    out.kind = IndexKind::EulerObstruction;
    for (std::size_t j = 0; j < poset.size(); ++j) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < poset.size(); ++i)
            if (poset.leq(i, j))
                acc = checked_add(acc, checked_mul(m.at(i, j),
                                                   values.at(poset.stratum(i).id)));
        out.values[poset.stratum(j).id] = acc;
    }
    return out;
}

IndexVector ind_vector_of_df(const StratifiedGermModel& germ,
                             const std::map<std::string, std::int64_t>& chi_on_closures) {
    IndexVector out;
    out.kind = IndexKind::RadialIndex;
    for (const auto& s : germ.poset.strata())
        out.values[s.id] = complex_index_of_df(
            s.dim, chi_for(germ.poset, chi_on_closures, germ.poset.index_of(s.id)));
    return out;
}

std::int64_t eu_df_full_expansion(const StratifiedGermModel& germ,
                                  const std::map<std::string, std::int64_t>& chi_on_closures) {
    const auto& poset = germ.poset;
    const std::size_t q = unique_top(poset);

    // chibar of the generic linear fibre on the normal slice N(a, b),
    // recovered from n(a, b) = (-1)^{dim N - 1} chibar.
    auto slice_chibar = [&](std::size_t a, std::size_t b) {
        const int d = poset.stratum(b).dim - poset.stratum(a).dim;
        return checked_mul(sign_pow(d - 1), germ.nij.at(a, b));
    };

    // Sum over strictly increasing chains i = k0 < ... < kr = q of the
    // product of slice chibars along the chain.
    auto chain_sum = [&](std::size_t i) {
        std::int64_t total = 0;
        auto extend = [&](auto&& self, std::size_t cur, std::int64_t product) -> void {
            for (std::size_t next = 0; next < poset.size(); ++next) {
                if (!poset.less(cur, next) || !poset.leq(next, q)) continue;
                const std::int64_t p = checked_mul(product, slice_chibar(cur, next));
                if (next == q)
                    total = checked_add(total, p);
                else
                    self(self, next, p);
            }
        };
        extend(extend, i, 1);
        return total;
    };

    std::int64_t inner = checked_sub(chi_for(poset, chi_on_closures, q), 1);
    for (std::size_t i = 0; i < poset.size(); ++i) {
        if (i == q) continue;
        const std::int64_t chibar_i = checked_sub(chi_for(poset, chi_on_closures, i), 1);
        inner = checked_add(inner, checked_mul(chibar_i, chain_sum(i)));
    }
    return checked_mul(sign_pow(poset.stratum(q).dim - 1), inner);
}

}  // namespace stratindex
