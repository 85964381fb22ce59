#include "stratindex/poset.hpp"

#include <algorithm>

#include "stratindex/checked.hpp"

namespace stratindex {

StratumPoset StratumPoset::from_covers(
    std::vector<Stratum> strata,
    const std::vector<std::pair<std::string, std::string>>& covers) {
    StratumPoset p;
    p.strata_ = std::move(strata);

    std::map<std::string, std::size_t, std::less<>> ids;
    for (std::size_t i = 0; i < p.strata_.size(); ++i) {
        auto [it, fresh] = ids.emplace(p.strata_[i].id, i);
        if (!fresh)
            throw StructuralError("duplicate stratum id '" + p.strata_[i].id + "'");
    }

    const std::size_t n = p.strata_.size();
    p.less_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : covers) {
        auto ia = ids.find(a);
        auto ib = ids.find(b);
        if (ia == ids.end())
            throw StructuralError("order relation names unknown stratum '" + a + "'");
        if (ib == ids.end())
            throw StructuralError("order relation names unknown stratum '" + b + "'");
        if (ia->second == ib->second)
            throw StructuralError("stratum '" + a + "' listed below itself");
        p.less_[ia->second][ib->second] = true;
    }

    // Warshall closure; a cycle shows up as i < i afterwards.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.less_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.less_[k][j]) p.less_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (p.less_[i][i])
            throw StructuralError("closure order contains a cycle through '" +
                                  p.strata_[i].id + "'");
    return p;
}

const Stratum& StratumPoset::stratum(std::size_t i) const {
    check_range(i);
    return strata_[i];
}

bool StratumPoset::contains(std::string_view id) const {
    return std::any_of(strata_.begin(), strata_.end(),
                       [&](const Stratum& s) { return s.id == id; });
}

std::size_t StratumPoset::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < strata_.size(); ++i)
        if (strata_[i].id == id) return i;
    throw DomainError("unknown stratum id '" + std::string(id) + "'");
}

bool StratumPoset::less(std::size_t i, std::size_t j) const {
    check_range(i);
    check_range(j);
    return less_[i][j];
}

bool StratumPoset::leq(std::size_t i, std::size_t j) const {
    return i == j ? (check_range(i), true) : less(i, j);
}

std::vector<std::size_t> StratumPoset::linear_extension() const {
    const std::size_t n = size();
    std::vector<std::size_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (less_[i][j]) ++below[j];

    std::vector<std::size_t> order;
    std::vector<bool> used(n, false);
    order.reserve(n);
    while (order.size() < n) {
        // Construction guarantees acyclicity, so a source always exists.
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || below[i] != 0) continue;
            used[i] = true;
            order.push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (less_[i][j]) --below[j];
            break;
        }
    }
    return order;
}

std::vector<std::size_t> StratumPoset::minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < size() && minimal; ++j)
            if (less_[j][i]) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> StratumPoset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < size() && maximal; ++j)
            if (less_[i][j]) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

std::vector<std::string> StratumPoset::validate() const {
    std::vector<std::string> issues;
    if (strata_.empty()) {
        issues.push_back("poset has no strata");
        return issues;
    }
    for (const Stratum& s : strata_)
        if (s.dim < 0)
            issues.push_back("stratum '" + s.id + "' has negative dimension");
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (less_[i][j] && strata_[i].dim >= strata_[j].dim)
                issues.push_back("dimension does not increase along '" + strata_[i].id +
                                 "' < '" + strata_[j].id + "'");
    auto minima = minimal_elements();
    if (minima.size() != 1) {
        std::string msg = "expected a unique minimal stratum, found";
        for (std::size_t i : minima) msg += " '" + strata_[i].id + "'";
        issues.push_back(msg);
    } else if (strata_[minima[0]].dim != 0) {
        issues.push_back("minimal stratum '" + strata_[minima[0]].id +
                         "' has dimension " + std::to_string(strata_[minima[0]].dim) +
                         ", expected 0");
    }
    return issues;
}

void StratumPoset::check_range(std::size_t i) const {
    if (i >= strata_.size()) throw DomainError("stratum index out of range");
}

IncidenceTable IncidenceTable::identity(const StratumPoset& poset) {
    IncidenceTable t;
    for (std::size_t i = 0; i < poset.size(); ++i) t.set(i, i, 1);
    return t;
}

void IncidenceTable::set(std::size_t i, std::size_t j, std::int64_t value) {
    entries_[{i, j}] = value;
}

bool IncidenceTable::has(std::size_t i, std::size_t j) const {
    return entries_.count({i, j}) != 0;
}

std::int64_t IncidenceTable::at(std::size_t i, std::size_t j) const {
    auto it = entries_.find({i, j});
    if (it == entries_.end())
        throw DomainError("incidence table has no entry (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
    return it->second;
}

namespace {

void check_table_shape(const StratumPoset& poset, const IncidenceTable& n) {
    for (const auto& [key, value] : n.entries()) {
        if (key.first >= poset.size() || key.second >= poset.size())
            throw DomainError("incidence entry indexes a stratum outside the poset");
        if (!poset.leq(key.first, key.second))
            throw DomainError("incidence entry on incomparable pair ('" +
                              poset.stratum(key.first).id + "', '" +
                              poset.stratum(key.second).id + "')");
        if (key.first == key.second && value != 1)
            throw DomainError("incidence table is not unit-diagonal at '" +
                              poset.stratum(key.first).id + "'");
    }
    for (std::size_t i = 0; i < poset.size(); ++i)
        if (!n.has(i, i))
            throw DomainError("incidence table missing diagonal entry at '" +
                              poset.stratum(i).id + "'");
}

}  // namespace

InverseTable invert_incidence(const StratumPoset& poset, const IncidenceTable& n) {
    check_table_shape(poset, n);
    const auto order = poset.linear_extension();
    InverseTable m;
    for (std::size_t kpos = 0; kpos < order.size(); ++kpos) {
        const std::size_t k = order[kpos];
        m.set(k, k, 1);
        // Work downwards: m(i, k) needs m(j, k) for every j strictly above i.
        for (std::size_t ipos = kpos; ipos-- > 0;) {
            const std::size_t i = order[ipos];
            if (!poset.less(i, k)) continue;
            std::int64_t acc = 0;
            for (std::size_t jpos = ipos + 1; jpos <= kpos; ++jpos) {
                const std::size_t j = order[jpos];
                if (poset.less(i, j) && poset.leq(j, k))
                    acc = checked_add(acc, checked_mul(n.at(i, j), m.at(j, k)));
            }
            m.set(i, k, checked_neg(acc));
        }
    }
    return m;
}

std::int64_t chain_sum_inverse(const StratumPoset& poset, const IncidenceTable& n,
                               std::size_t i, std::size_t j) {
    check_table_shape(poset, n);
    if (!poset.leq(i, j))
        throw DomainError("'" + poset.stratum(i).id + "' is not below '" +
                          poset.stratum(j).id + "'");
    if (i == j) return 1;

    std::int64_t total = 0;
    // Depth-first over strictly increasing chains from i to j; `edges` gives
    // the sign (-1)^r of a completed chain.
    auto extend = [&](auto&& self, std::size_t cur, std::int64_t product,
                      int edges) -> void {
        for (std::size_t next = 0; next < poset.size(); ++next) {
            if (!poset.less(cur, next) || !poset.leq(next, j)) continue;
            const std::int64_t p = checked_mul(product, n.at(cur, next));
            if (next == j)
                total = checked_add(total, (edges + 1) % 2 != 0 ? checked_neg(p) : p);
            else
                self(self, next, p, edges + 1);
        }
    };
    extend(extend, i, 1, 0);
    return total;
}

}  // namespace stratindex
