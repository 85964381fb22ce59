#include "stratindex/catalog.hpp"

#include "stratindex/index_calculus.hpp"

namespace stratindex {

namespace {

StratifiedGermModel make_germ(std::string label, std::vector<Stratum> strata,
                              std::vector<std::pair<std::string, std::string>> covers,
                              std::vector<std::tuple<std::string, std::string, std::int64_t>> nij,
                              std::string notes) {
    StratifiedGermModel g;
    g.poset = StratumPoset::from_covers(std::move(strata), covers);
    g.nij = IncidenceTable::identity(g.poset);
    for (const auto& [a, b, value] : nij)
        g.nij.set(g.poset.index_of(a), g.poset.index_of(b), value);
    g.label = std::move(label);
    g.notes = std::move(notes);
    return g;
}

CatalogEntry k_lines_entry(int k) {
    CatalogEntry e;
    e.kind = CatalogEntry::Kind::Germ;
    e.germ = germ_k_lines(k);
    e.label = e.germ->label;
    e.notes = e.germ->notes;
    const std::string ks = std::to_string(k);
    e.expected = {
        {"ind_dl_top", k - 1,
         "hand count: a generic linear form has a " + ks + "-point fibre on " + ks +
             " lines, ind = reduced chi = " + std::to_string(k - 1)},
        {"eu_dl_top", 0,
         "the obstruction of a generic linear differential vanishes on every "
         "positive-dimensional germ"},
        {"m_min_top", -(k - 1), "two-element chain: the inverse entry is -n(V0, V1)"},
    };
    e.functions = {
        {"dl",
         {{"V0", 0}, {"V1", k}},
         k,
         0,
         "f = l itself: the fibre is the " + ks +
             "-point linear fibre, empty over the point stratum; Eu(dl) = 0"},
        {"quadratic",
         {{"V0", 0}, {"V1", 2 * k}},
         k,
         k,
         "a generic quadratic form restricts to each line with a double zero, "
         "so the fibre has 2k = " + std::to_string(2 * k) +
             " points; expanding the inversion by hand gives Eu = k"},
    };
    return e;
}

CatalogEntry polynomial_entry(std::string label, std::string poly,
                              std::optional<QuasihomogeneousData> weights,
                              std::int64_t mu, std::int64_t chi_fibre,
                              std::string notes) {
    CatalogEntry e;
    e.kind = CatalogEntry::Kind::Polynomial;
    e.label = std::move(label);
    e.polynomial = std::move(poly);
    e.quasihomogeneous = std::move(weights);
    e.notes = std::move(notes);
    e.expected = {
        {"mu", mu, "Jacobian colength, cross-checked against the weight formula"},
        {"chi_fibre", chi_fibre, "1 + (-1)^(n-1) mu in n variables"},
    };
    return e;
}

CatalogEntry complex_entry(std::string label, SimplicialComplex K, std::int64_t chi,
                           std::string notes) {
    CatalogEntry e;
    e.kind = CatalogEntry::Kind::Complex;
    e.label = std::move(label);
    e.complex = std::move(K);
    e.notes = std::move(notes);
    e.expected = {{"chi", chi, "alternating simplex count; equals every "
                               "Poincaré–Hopf index sum"}};
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    {
        CatalogEntry e;
        e.kind = CatalogEntry::Kind::Germ;
        e.germ = make_germ("smooth-point", {{"V0", 0}}, {}, {},
                           "A single reduced point. Both transforms are the identity; "
                           "every index is 1 by convention.");
        e.label = "smooth-point";
        e.notes = e.germ->notes;
        e.expected = {
            {"ind_dl_top", 1, "on a point germ every index of every form is 1"},
            {"eu_dl_top", 1, "the obstruction on a point is 1, not 0: the vanishing "
                             "of Eu(dl) applies to positive-dimensional germs"},
            {"m_min_top", 1, "one-element poset: the inverse table is the identity"},
        };
        entries.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.kind = CatalogEntry::Kind::Germ;
        e.germ = make_germ(
            "smooth-line", {{"V0", 0}, {"V1", 1}}, {{"V0", "V1"}}, {{"V0", "V1", 0}},
            "A smooth line germ with the origin split off as its own stratum. "
            "n(V0, V1) = 0: the generic linear fibre on a smooth germ is one point.");
        e.label = "smooth-line";
        e.notes = e.germ->notes;
        e.expected = {
            {"ind_dl_top", 0, "dl has no zero on a smooth germ"},
            {"eu_dl_top", 0, "smooth germs have trivial obstruction data"},
            {"m_min_top", 0, "two-element chain with n = 0"},
        };
        e.functions = {
            {"cube",
             {{"V0", 0}, {"V1", 3}},
             1,
             2,
             "f = x^3 on the line: three-point fibre; mu = 2 by the Jacobian "
             "oracle (quotient basis 1, x); on a smooth germ Eu(df) = ind(df) = mu"},
        };
        entries.push_back(std::move(e));
    }

    for (int k = 2; k <= 6; ++k) entries.push_back(k_lines_entry(k));

    {
        CatalogEntry e;
        e.kind = CatalogEntry::Kind::Germ;
        e.germ = make_germ(
            "four-lines-surface", {{"V0", 0}, {"V1", 1}, {"V2", 2}},
            {{"V0", "V1"}, {"V1", "V2"}},
            {{"V0", "V1", 0}, {"V1", "V2", 3}, {"V0", "V2", 0}},
            "Equisingular family of four distinct lines with varying cross ratio, "
            "e.g. x*y*(x-y)*(x-(2+z)*y) = 0, singular exactly along the z-axis near "
            "the origin. n(V0,V1) = 0: the axis closure is a smooth line. "
            "n(V1,V2) = 3: the transverse slice is a four-line plane germ with a "
            "four-point linear fibre. n(V0,V2) = 0: a generic hyperplane meets the "
            "surface in four smooth discs glued at the single point where it "
            "crosses the axis, chi = 4 - 3 = 1, reduced 0, times (-1)^(dim-1) = "
            "(-1)^1. Cross-checks: ind(dl) = n(V0,V2) = 0 = -(chi(M_l) - 1); the "
            "Möbius inverse m(V0,V2) = n01*n12 - n02 = 0.");
        e.label = "four-lines-surface";
        e.notes = e.germ->notes;
        e.expected = {
            {"ind_dl_top", 0, "equals -(chi(M_l) - 1) with the one-point-glued "
                              "four-disc slice, chi(M_l) = 1"},
            {"eu_dl_top", 0, "generic linear differential on a positive-dimensional "
                             "germ"},
            {"m_min_top", 0, "three-chain: m = n01*n12 - n02 = 0*3 - 0"},
        };
        e.functions = {
            {"dl",
             {{"V0", 0}, {"V1", 1}, {"V2", 1}},
             1,
             0,
             "f = l: the fibre on the surface is the four-disc slice (chi 1), on "
             "the axis closure a point, empty on the origin; all three routes "
             "give Eu(dl) = 0"},
        };
        entries.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.kind = CatalogEntry::Kind::Germ;
        e.germ = make_germ(
            "four-lines-degenerate", {{"V0", 0}, {"A1", 1}, {"B1", 1}, {"V2", 2}},
            {{"V0", "A1"}, {"V0", "B1"}, {"A1", "V2"}, {"B1", "V2"}},
            {{"V0", "A1", 0},
             {"V0", "B1", 0},
             {"A1", "V2", 3},
             {"B1", "V2", 1},
             {"V0", "V2", 1}},
            "The four-line family x*y*(x-y)*(x+z*y) = 0, whose fourth line "
            "degenerates onto x = 0 at z = 0. Near the origin the singular locus "
            "is two lines: the axis A1 = {x=y=0} with four-line transverse type "
            "(n = 3) and B1 = {x=z=0} where the sheets x=0 and x+zy=0 cross "
            "transversally (node type, two-point fibre, n = 1). A generic "
            "hyperplane meets the surface in four discs glued at the axis point, "
            "two of which are glued again at the point on B1: chi = 4 - 3 - 1 = 0, "
            "so n(V0,V2) = (-1)^(2-1) * (0 - 1) = 1. Cross-check: ind(dl) = 1 = "
            "-(chi(M_l) - 1).");
        e.label = "four-lines-degenerate";
        e.notes = e.germ->notes;
        e.expected = {
            {"ind_dl_top", 1, "equals -(chi(M_l) - 1) with chi(M_l) = 0 from the "
                              "twice-glued four-disc slice"},
            {"eu_dl_top", 0, "generic linear differential on a positive-dimensional "
                             "germ"},
            {"m_min_top", -1, "chains through A1 and B1 contribute 0 (n(V0,.) = 0); "
                              "the direct chain contributes -n(V0,V2) = -1"},
        };
        e.functions = {
            {"dl",
             {{"V0", 0}, {"A1", 1}, {"B1", 1}, {"V2", 0}},
             0,
             0,
             "f = l: fibre chi 0 on the surface, a point on each singular line "
             "closure, empty on the origin; all three routes give Eu(dl) = 0"},
        };
        entries.push_back(std::move(e));
    }

    entries.push_back(polynomial_entry(
        "quadric", "x^2+y^2", QuasihomogeneousData{{1, 1}, 2}, 1, 0,
        "Ordinary double point. Jacobian oracle: partials (2x, 2y), quotient "
        "basis {1}. Weight formula: (2-1)/1 * (2-1)/1 = 1."));
    for (int k = 1; k <= 6; ++k) {
        const std::string poly = "x^" + std::to_string(k + 1) + "+y^2";
        entries.push_back(polynomial_entry(
            "a" + std::to_string(k), poly,
            QuasihomogeneousData{{2, k + 1}, 2 * (k + 1)}, k, 1 - k,
            "A-series germ x^(k+1) + y^2 with k = " + std::to_string(k) +
                ": quotient basis {1, x, ..., x^(k-1)}; weight formula "
                "(2k/2) * ((k+1)/(k+1)) = k."));
    }
    entries.push_back(polynomial_entry(
        "three-lines-cubic", "x^3+y^3", QuasihomogeneousData{{1, 1}, 3}, 4, -3,
        "Three distinct lines through the origin. Jacobian oracle: partials "
        "(3x^2, 3y^2), quotient basis {1, x, y, xy}. Weight formula: 2 * 2 = 4."));
    entries.push_back(polynomial_entry(
        "fermat-cubic", "x^3+y^3+z^3", QuasihomogeneousData{{1, 1, 1}, 3}, 8, 9,
        "Cone over a plane elliptic curve. Quotient basis: the eight square-free "
        "monomials in x, y, z. Weight formula: 2^3 = 8."));
    entries.push_back(polynomial_entry(
        "e6-singularity", "x^3+y^4", QuasihomogeneousData{{4, 3}, 12}, 6, -5,
        "E6 germ. Quotient basis {1, x, y, y^2, xy, xy^2}. Weight formula: "
        "(8/4) * (9/3) = 6."));
    {
        CatalogEntry e;
        e.kind = CatalogEntry::Kind::Polynomial;
        e.label = "x2y-non-isolated";
        e.polynomial = "x^2*y";
        e.expect_non_isolated = true;
        e.notes =
            "Singular along the whole y-axis: the truncated Jacobian quotient "
            "picks up a fresh power of y at every truncation step and never "
            "stabilises.";
        entries.push_back(std::move(e));
    }

    entries.push_back(complex_entry(
        "circle", fixtures::circle(), 0,
        "Boundary of a triangle: 3 vertices, 3 edges."));
    entries.push_back(complex_entry(
        "octahedron", fixtures::sphere(), 2,
        "Octahedron boundary sphere: 6 vertices, 12 edges, 8 triangles."));
    entries.push_back(complex_entry(
        "torus", fixtures::torus(), 0,
        "Seven-vertex triangulation of the torus: faces (i, i+1, i+3) and "
        "(i, i+2, i+3) modulo 7; 7 - 21 + 14 = 0."));
    entries.push_back(complex_entry(
        "wedge-two-circles", fixtures::wedge_of_circles(), -1,
        "Two triangle boundaries sharing one vertex: 5 - 6 = -1."));

    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry& catalog_entry(std::string_view label) {
    for (const CatalogEntry& e : builtin_catalog())
        if (e.label == label) return e;
    throw DomainError("no catalog entry labelled '" + std::string(label) + "'");
}

namespace {

void check_value(std::vector<std::string>& failures, const std::string& name,
                 std::int64_t got, std::int64_t want) {
    if (got != want)
        failures.push_back(name + ": computed " + std::to_string(got) + ", expected " +
                           std::to_string(want));
}

void verify_germ_entry(const CatalogEntry& entry, std::vector<std::string>& failures) {
    const StratifiedGermModel& germ = *entry.germ;
    const ValidationReport report = validate_germ(germ);
    for (const std::string& issue : report.issues)
        failures.push_back("validate: " + issue);
    if (!report.ok()) return;

    const StratumPoset& poset = germ.poset;
    const std::size_t top = poset.maximal_elements().at(0);
    const std::size_t min = poset.minimal_elements().at(0);
    const std::string& top_id = poset.stratum(top).id;

    // Eu(dl) per closure: 1 on the point, 0 on every positive-dimensional one.
    IndexVector eu_dl;
    eu_dl.kind = IndexKind::EulerObstruction;
    for (const Stratum& s : poset.strata()) eu_dl.values[s.id] = 0;
    eu_dl.values[poset.stratum(min).id] = 1;

    const IndexVector ind_dl = radial_index_via_theorem4(germ, eu_dl);
    const IndexVector eu_back = euler_obstruction_via_corollary(germ, ind_dl);
    const InverseTable m = invert_incidence(poset, germ.nij);

    for (const ExpectedValue& ev : entry.expected) {
        if (ev.name == "ind_dl_top")
            check_value(failures, ev.name, ind_dl.values.at(top_id), ev.value);
        else if (ev.name == "eu_dl_top")
            check_value(failures, ev.name, eu_back.values.at(top_id), ev.value);
        else if (ev.name == "m_min_top")
            check_value(failures, ev.name, m.at(min, top), ev.value);
        else
            failures.push_back("unknown expectation '" + ev.name + "'");
    }

    // The generic-linear round trip must reproduce Eu(dl) on every stratum,
    // not just the top one.
    if (eu_back.values != eu_dl.values)
        failures.push_back("inverting ind(dl) does not reproduce Eu(dl)");

    for (const GermFunctionData& fn : entry.functions) {
        const std::int64_t via_fibres = eu_of_df(
            poset.stratum(top).dim, fn.chi_generic_linear, fn.chi_on_closures.at(top_id));
        const std::int64_t via_expansion = eu_df_full_expansion(germ, fn.chi_on_closures);
        const std::int64_t via_inversion =
            euler_obstruction_via_corollary(germ, ind_vector_of_df(germ, fn.chi_on_closures))
                .values.at(top_id);
        check_value(failures, fn.name + ".eu_df(fibres)", via_fibres, fn.expected_eu_df);
        check_value(failures, fn.name + ".eu_df(expansion)", via_expansion,
                    fn.expected_eu_df);
        check_value(failures, fn.name + ".eu_df(inversion)", via_inversion,
                    fn.expected_eu_df);
    }
}

void verify_polynomial_entry(const CatalogEntry& entry,
                             std::vector<std::string>& failures) {
    const PolynomialGerm f = parse_polynomial(entry.polynomial);
    if (entry.expect_non_isolated) {
        try {
            const std::int64_t mu = milnor_jacobian(f);
            failures.push_back("expected a non-isolated singularity, got mu = " +
                               std::to_string(mu));
        } catch (const NonIsolatedError&) {
            // expected
        }
        return;
    }

    const std::int64_t mu = milnor_jacobian(f);
    if (entry.quasihomogeneous) {
        if (!is_quasihomogeneous(f, *entry.quasihomogeneous))
            failures.push_back("polynomial is not quasihomogeneous for the stored "
                               "weights");
        else
            check_value(failures, "mu (weight formula vs Jacobian)",
                        milnor_quasihomogeneous(*entry.quasihomogeneous), mu);
    }
    const int nvars = static_cast<int>(f.variables.size());
    for (const ExpectedValue& ev : entry.expected) {
        if (ev.name == "mu")
            check_value(failures, ev.name, mu, ev.value);
        else if (ev.name == "chi_fibre")
            check_value(failures, ev.name, chi_hypersurface_fibre(nvars, mu), ev.value);
        else
            failures.push_back("unknown expectation '" + ev.name + "'");
    }
}

void verify_complex_entry(const CatalogEntry& entry,
                          std::vector<std::string>& failures) {
    const SimplicialComplex& K = *entry.complex;
    const std::int64_t chi = euler_characteristic(K);
    for (const ExpectedValue& ev : entry.expected) {
        if (ev.name == "chi")
            check_value(failures, ev.name, chi, ev.value);
        else
            failures.push_back("unknown expectation '" + ev.name + "'");
    }
    for (std::uint64_t seed : {1, 2, 3}) {
        const auto report = poincare_hopf_check(K, generate_heights(K, seed));
        if (!report.equal || report.index_sum != chi)
            failures.push_back("Poincaré–Hopf sum " + std::to_string(report.index_sum) +
                               " != chi " + std::to_string(chi) + " at seed " +
                               std::to_string(seed));
    }
}

}  // namespace

std::vector<std::string> verify_entry(const CatalogEntry& entry) {
    std::vector<std::string> failures;
    try {
        switch (entry.kind) {
            case CatalogEntry::Kind::Germ:
                verify_germ_entry(entry, failures);
                break;
            case CatalogEntry::Kind::Polynomial:
                verify_polynomial_entry(entry, failures);
                break;
            case CatalogEntry::Kind::Complex:
                verify_complex_entry(entry, failures);
                break;
        }
    } catch (const Error& e) {
        failures.push_back(std::string("error while verifying: ") + e.what());
    }
    return failures;
}

std::vector<CatalogVerification> verify_catalog() {
    std::vector<CatalogVerification> out;
    for (const CatalogEntry& entry : builtin_catalog())
        out.push_back({entry.label, verify_entry(entry)});
    return out;
}

}  // namespace stratindex
