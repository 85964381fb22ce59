#include "stratindex/germ.hpp"

namespace stratindex {

ValidationReport validate_germ(const StratifiedGermModel& model) {
    ValidationReport report;
    report.issues = model.poset.validate();
    const auto& poset = model.poset;

    for (std::size_t i = 0; i < poset.size(); ++i) {
        if (!model.nij.has(i, i))
            report.issues.push_back("missing diagonal entry n(" + poset.stratum(i).id +
                                    ", " + poset.stratum(i).id + ")");
        else if (model.nij.at(i, i) != 1)
            report.issues.push_back("diagonal entry n(" + poset.stratum(i).id + ", " +
                                    poset.stratum(i).id + ") = " +
                                    std::to_string(model.nij.at(i, i)) + ", expected 1");
    }

    for (std::size_t i = 0; i < poset.size(); ++i)
        for (std::size_t j = 0; j < poset.size(); ++j) {
            if (i == j) continue;
            const bool comparable = poset.less(i, j);
            const bool present = model.nij.has(i, j);
            if (comparable && !present)
                report.issues.push_back("missing incidence entry n(" +
                                        poset.stratum(i).id + ", " +
                                        poset.stratum(j).id + ")");
            if (!comparable && present)
                report.issues.push_back("incidence entry n(" + poset.stratum(i).id +
                                        ", " + poset.stratum(j).id +
                                        ") on an incomparable pair");
        }

    for (const auto& [key, value] : model.nij.entries())
        if (key.first >= poset.size() || key.second >= poset.size()) {
            report.issues.push_back("incidence entry indexes a stratum outside the poset");
            break;
        }

    return report;
}

ValidationReport validate_index_vector(const StratumPoset& poset, const IndexVector& v) {
    ValidationReport report;
    for (const auto& s : poset.strata())
        if (!v.values.count(s.id))
            report.issues.push_back("index vector has no value for stratum '" + s.id + "'");
    for (const auto& [id, value] : v.values)
        if (!poset.contains(id))
            report.issues.push_back("index vector names unknown stratum '" + id + "'");

    const auto minima = poset.minimal_elements();
    if (minima.size() == 1) {
        const std::string& id = poset.stratum(minima[0]).id;
        auto it = v.values.find(id);
        if (it != v.values.end() && it->second != 1)
            report.issues.push_back("value at the minimal stratum '" + id + "' is " +
                                    std::to_string(it->second) +
                                    "; on a point every index is 1");
    }
    return report;
}

StratifiedGermModel germ_k_lines(int k) {
    if (k < 1) throw DomainError("germ_k_lines requires k >= 1");
    StratifiedGermModel g;
    g.poset = StratumPoset::from_covers({{"V0", 0}, {"V1", 1}}, {{"V0", "V1"}});
    g.nij = IncidenceTable::identity(g.poset);
    g.nij.set(0, 1, k - 1);
    g.label = "k" + std::to_string(k) + "-lines";
    g.notes = "Union of " + std::to_string(k) +
              " distinct complex lines through the origin in the plane. A generic "
              "linear form meets it in " + std::to_string(k) +
              " points, so n(V0, V1) = " + std::to_string(k - 1) + ".";
    return g;
}

}  // namespace stratindex
