#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "stratindex/catalog.hpp"
#include "stratindex/index_calculus.hpp"
#include "stratindex/io.hpp"
#include "stratindex/milnor.hpp"
#include "stratindex/plmorse.hpp"

namespace {

using nlohmann::json;
using namespace stratindex;

std::string join_issues(const std::vector<std::string>& issues) {
    std::string out;
    for (std::size_t i = 0; i < issues.size(); ++i)
        out += (i ? "; " : "") + issues[i];
    return out;
}

GermDocument load_valid_germ(const std::string& path) {
    GermDocument doc = load_germ_document(path);
    const ValidationReport report = validate_germ(doc.model);
    if (!report.ok()) throw DomainError("invalid germ: " + join_issues(report.issues));
    return doc;
}

IndexVector vector_from_csv(const StratumPoset& poset, const std::string& csv,
                            IndexKind kind) {
    const auto nums = parse_int_list(csv);
    if (nums.size() != poset.size())
        throw DomainError("expected " + std::to_string(poset.size()) +
                          " values (one per stratum), got " + std::to_string(nums.size()));
    IndexVector v;
    v.kind = kind;
    for (std::size_t i = 0; i < nums.size(); ++i)
        v.values[poset.stratum(i).id] = nums[i];
    const ValidationReport report = validate_index_vector(poset, v);
    if (!report.ok()) throw DomainError(join_issues(report.issues));
    return v;
}

json vector_to_json(const StratumPoset& poset, const IndexVector& v) {
    json order = json::array();
    json values = json::object();
    for (const Stratum& s : poset.strata()) {
        order.push_back(s.id);
        values[s.id] = v.values.at(s.id);
    }
    return json{{"order", order}, {"values", values}};
}

void emit(bool json_out, const json& as_json, const std::string& as_text) {
    if (json_out)
        std::cout << as_json.dump(2) << "\n";
    else
        std::cout << as_text;
}

struct CliState {
    bool json_out = false;
    int exit_code = 0;
};

void run_germ_eval(CliState& st, const std::string& file, const std::string& eu_csv) {
    const GermDocument doc = load_valid_germ(file);
    const IndexVector eu =
        vector_from_csv(doc.model.poset, eu_csv, IndexKind::EulerObstruction);
    const IndexVector ind = radial_index_via_theorem4(doc.model, eu);
    json j = vector_to_json(doc.model.poset, ind);
    j["germ"] = doc.model.label;
    j["kind"] = "ind";
    emit(st.json_out, j,
         "germ: " + doc.model.label + "\nind = " +
             format_index_vector(doc.model.poset, ind) + "\n");
}

void run_germ_invert(CliState& st, const std::string& file, const std::string& ind_csv) {
    const GermDocument doc = load_valid_germ(file);
    const IndexVector ind =
        vector_from_csv(doc.model.poset, ind_csv, IndexKind::RadialIndex);
    const IndexVector eu = euler_obstruction_via_corollary(doc.model, ind);
    json j = vector_to_json(doc.model.poset, eu);
    j["germ"] = doc.model.label;
    j["kind"] = "eu";
    emit(st.json_out, j,
         "germ: " + doc.model.label + "\neu = " +
             format_index_vector(doc.model.poset, eu) + "\n");
}

void run_germ_gap(CliState& st, int n, std::int64_t chi_linear,
                  const std::optional<std::int64_t>& chi_fibre) {
    const std::int64_t gap = index_obstruction_gap(n, chi_linear);
    json j{{"n", n}, {"chi_linear", chi_linear}, {"gap", gap}};
    std::string text = "gap = " + std::to_string(gap) + "\n";
    if (chi_fibre) {
        const std::int64_t ind = complex_index_of_df(n, *chi_fibre);
        const std::int64_t eu = eu_of_df(n, chi_linear, *chi_fibre);
        j["chi_fibre"] = *chi_fibre;
        j["ind_df"] = ind;
        j["eu_df"] = eu;
        text += "ind_df = " + std::to_string(ind) + "\n";
        text += "eu_df = " + std::to_string(eu) + "\n";
    }
    emit(st.json_out, j, text);
}

void run_milnor(CliState& st, const std::string& poly, const std::string& weights_csv,
                long degree, int max_truncation) {
    const PolynomialGerm f = parse_polynomial(poly);
    const std::int64_t mu = milnor_jacobian(f, max_truncation);
    const int nvars = static_cast<int>(f.variables.size());
    const std::int64_t chi = chi_hypersurface_fibre(nvars, mu);

    json j{{"polynomial", polynomial_to_string(f)},
           {"variables", f.variables},
           {"mu", mu},
           {"chi_fibre", chi}};
    std::string text = "mu = " + std::to_string(mu) + "\n" +
                       "chi_fibre = " + std::to_string(chi) + "\n";

    if (!weights_csv.empty()) {
        QuasihomogeneousData q;
        for (const std::int64_t w : parse_int_list(weights_csv))
            q.weights.push_back(static_cast<long>(w));
        q.degree = degree;
        if (!is_quasihomogeneous(f, q))
            throw DomainError("polynomial is not quasihomogeneous for weights " +
                              weights_csv + " and degree " + std::to_string(degree));
        const std::int64_t mw = milnor_quasihomogeneous(q);
        j["mu_weights"] = mw;
        text += "mu_weights = " + std::to_string(mw) + "\n";
        if (mw != mu) {
            text += "MISMATCH\n";
            j["agree"] = false;
            st.exit_code = 1;
        } else {
            j["agree"] = true;
        }
    }
    emit(st.json_out, j, text);
}

void run_plmorse_check(CliState& st, const std::string& file, std::uint64_t seed) {
    const ComplexDocument doc = load_complex_document(file);
    const HeightAssignment h =
        doc.heights ? *doc.heights : generate_heights(doc.complex, seed);
    const PoincareHopfReport report = poincare_hopf_check(doc.complex, h);

    json indices = json::object();
    for (const VertexId v : doc.complex.vertices())
        indices[std::to_string(v)] = pl_radial_index(doc.complex, v, h);
    json j{{"label", doc.label},
           {"sum", report.index_sum},
           {"chi", report.chi},
           {"equal", report.equal},
           {"indices", indices},
           {"heights_from", doc.heights ? "file" : "seed"}};

    std::string text;
    if (!doc.label.empty()) text += "label: " + doc.label + "\n";
    text += "sum=" + std::to_string(report.index_sum) +
            " chi=" + std::to_string(report.chi) + (report.equal ? " OK" : " MISMATCH") +
            "\n";
    if (!report.equal) st.exit_code = 1;
    emit(st.json_out, j, text);
}

void run_suspension(CliState& st, std::int64_t chi_link) {
    const SuspensionReport r = suspension_check(chi_link);
    json j{{"chi_link", chi_link},
           {"index_bottom", r.index_bottom},
           {"index_top", r.index_top},
           {"sum", r.index_sum},
           {"chi_suspension", r.chi_suspension},
           {"equal", r.equal}};
    std::string text = "index_bottom=" + std::to_string(r.index_bottom) +
                       " index_top=" + std::to_string(r.index_top) +
                       " sum=" + std::to_string(r.index_sum) +
                       " chi=" + std::to_string(r.chi_suspension) +
                       (r.equal ? " OK" : " MISMATCH") + "\n";
    if (!r.equal) st.exit_code = 1;
    emit(st.json_out, j, text);
}

void run_resolution(CliState& st, int n, std::int64_t chi_d, std::int64_t ind) {
    const std::int64_t obst = resolution_obstruction({n, chi_d}, ind);
    emit(st.json_out,
         json{{"n", n}, {"chi_exceptional", chi_d}, {"ind", ind}, {"obstruction", obst}},
         "obstruction = " + std::to_string(obst) + "\n");
}

const char* kind_name(CatalogEntry::Kind kind) {
    switch (kind) {
        case CatalogEntry::Kind::Germ: return "germ";
        case CatalogEntry::Kind::Polynomial: return "polynomial";
        case CatalogEntry::Kind::Complex: return "complex";
    }
    return "?";
}

void run_catalog_list(CliState& st) {
    json j = json::array();
    std::string text;
    for (const CatalogEntry& e : builtin_catalog()) {
        j.push_back({{"label", e.label}, {"kind", kind_name(e.kind)}});
        std::string line = e.label;
        line.resize(std::max<std::size_t>(line.size() + 2, 24), ' ');
        text += line + kind_name(e.kind) + "\n";
    }
    emit(st.json_out, j, text);
}

void run_catalog_show(CliState& st, const std::string& label) {
    const CatalogEntry& e = catalog_entry(label);
    json j{{"label", e.label}, {"kind", kind_name(e.kind)}, {"notes", e.notes}};
    std::string text = "label: " + e.label + "\nkind: " + std::string(kind_name(e.kind)) +
                       "\nnotes: " + e.notes + "\n";

    if (e.germ) {
        j["document"] = germ_document_to_json({*e.germ, true});
        text += "document:\n" + j["document"].dump(2) + "\n";
    }
    if (!e.polynomial.empty()) {
        j["polynomial"] = e.polynomial;
        text += "polynomial: " + e.polynomial + "\n";
        if (e.quasihomogeneous) {
            j["weights"] = e.quasihomogeneous->weights;
            j["degree"] = e.quasihomogeneous->degree;
            text += "weights:";
            for (long w : e.quasihomogeneous->weights) text += " " + std::to_string(w);
            text += "  degree: " + std::to_string(e.quasihomogeneous->degree) + "\n";
        }
    }
    if (e.complex) {
        j["document"] = complex_document_to_json({e.label, *e.complex, {}, ""});
        text += "document:\n" + j["document"].dump(2) + "\n";
    }

    json expected = json::array();
    for (const ExpectedValue& ev : e.expected) {
        expected.push_back({{"name", ev.name}, {"value", ev.value}, {"note", ev.note}});
        text += ev.name + " = " + std::to_string(ev.value) + "   [" + ev.note + "]\n";
    }
    j["expected"] = expected;

    json functions = json::array();
    for (const GermFunctionData& fn : e.functions) {
        json chis = json::object();
        for (const auto& [id, chi] : fn.chi_on_closures) chis[id] = chi;
        functions.push_back({{"name", fn.name},
                             {"chi_on_closures", chis},
                             {"chi_generic_linear", fn.chi_generic_linear},
                             {"eu_df", fn.expected_eu_df},
                             {"note", fn.note}});
        text += "function " + fn.name + ": eu_df = " + std::to_string(fn.expected_eu_df) +
                "   [" + fn.note + "]\n";
    }
    if (!functions.empty()) j["functions"] = functions;

    emit(st.json_out, j, text);
}

void run_catalog_verify(CliState& st) {
    const auto results = verify_catalog();
    json j = json::array();
    std::string text;
    std::size_t failed = 0;
    for (const CatalogVerification& r : results) {
        j.push_back({{"label", r.label},
                     {"ok", r.failures.empty()},
                     {"failures", r.failures}});
        if (r.failures.empty()) {
            text += "[ OK ] " + r.label + "\n";
        } else {
            ++failed;
            for (const std::string& f : r.failures)
                text += "[FAIL] " + r.label + ": " + f + "\n";
        }
    }
    text += "verified " + std::to_string(results.size()) + " entries, " +
            std::to_string(failed) + " failures\n";
    if (failed) st.exit_code = 1;
    emit(st.json_out, j, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact index calculator for 1-forms on stratified spaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    CliState st;
    app.add_flag("--json", st.json_out, "emit JSON instead of text");

    // germ …
    auto* germ = app.add_subcommand("germ", "incidence-table transforms on germ documents");
    germ->require_subcommand(1);
    germ->fallthrough();

    std::string eval_file, eval_eu;
    auto* eval = germ->add_subcommand(
        "eval", "radial indices on all closures from Euler obstructions");
    eval->fallthrough();
    eval->add_option("--file", eval_file, "germ document (.germ)")->required();
    eval->add_option("--eu", eval_eu, "comma-separated Eu values in stratum order")
        ->required();
    eval->callback([&] { run_germ_eval(st, eval_file, eval_eu); });

    std::string invert_file, invert_ind;
    auto* invert = germ->add_subcommand(
        "invert", "Euler obstructions on all closures from radial indices");
    invert->fallthrough();
    invert->add_option("--file", invert_file, "germ document (.germ)")->required();
    invert->add_option("--ind", invert_ind, "comma-separated ind values in stratum order")
        ->required();
    invert->callback([&] { run_germ_invert(st, invert_file, invert_ind); });

    int gap_n = 0;
    std::int64_t gap_chi_linear = 0;
    std::optional<std::int64_t> gap_chi_fibre;
    auto* gap = germ->add_subcommand(
        "gap", "ind - Eu gap (and Eu df / ind df) from fibre Euler characteristics");
    gap->fallthrough();
    gap->add_option("--n", gap_n, "complex dimension of the germ")->required();
    gap->add_option("--chi-linear", gap_chi_linear, "chi of the generic linear fibre")
        ->required();
    gap->add_option("--chi-fibre", gap_chi_fibre, "chi of the Milnor fibre of f");
    gap->callback([&] { run_germ_gap(st, gap_n, gap_chi_linear, gap_chi_fibre); });

    // milnor
    std::string milnor_poly, milnor_weights;
    long milnor_degree = 0;
    int milnor_trunc = 40;
    auto* milnor = app.add_subcommand("milnor", "Milnor number of a polynomial germ");
    milnor->fallthrough();
    milnor->add_option("--poly", milnor_poly, "polynomial, e.g. 'x^3+y^3'")->required();
    auto* wopt = milnor->add_option("--weights", milnor_weights,
                                    "comma-separated positive weights");
    milnor->add_option("--degree", milnor_degree, "weighted degree")->needs(wopt);
    wopt->needs("--degree");
    milnor->add_option("--max-truncation", milnor_trunc,
                       "truncation bound for the Jacobian colength (default 40)");
    milnor->callback(
        [&] { run_milnor(st, milnor_poly, milnor_weights, milnor_degree, milnor_trunc); });

    // plmorse check
    auto* plmorse = app.add_subcommand("plmorse", "PL Morse theory on simplicial complexes");
    plmorse->require_subcommand(1);
    plmorse->fallthrough();
    std::string pl_file;
    std::uint64_t pl_seed = 0;
    auto* pl_check = plmorse->add_subcommand(
        "check", "Poincaré–Hopf: vertex index sum against chi");
    pl_check->fallthrough();
    pl_check->add_option("--file", pl_file, "complex document (.cplx)")->required();
    pl_check->add_option("--seed", pl_seed,
                         "seed for generated heights (ignored if the file has heights)");
    pl_check->callback([&] { run_plmorse_check(st, pl_file, pl_seed); });

    // suspension
    std::int64_t susp_chi = 0;
    auto* susp = app.add_subcommand("suspension",
                                    "index identity for a suspension of a link");
    susp->fallthrough();
    susp->add_option("--chi", susp_chi, "chi of the suspended link")->required();
    susp->callback([&] { run_suspension(st, susp_chi); });

    // resolution
    int res_n = 0;
    std::int64_t res_chi_d = 0, res_ind = 0;
    auto* res = app.add_subcommand(
        "resolution", "obstruction over a resolution from ind and chi of the divisor");
    res->fallthrough();
    res->add_option("--n", res_n, "complex dimension of the germ")->required();
    res->add_option("--chi-d", res_chi_d, "chi of the exceptional divisor")->required();
    res->add_option("--ind", res_ind, "radial index of the form")->required();
    res->callback([&] { run_resolution(st, res_n, res_chi_d, res_ind); });

    // catalog …
    auto* catalog = app.add_subcommand("catalog", "built-in worked examples");
    catalog->require_subcommand(1);
    catalog->fallthrough();
    auto* list = catalog->add_subcommand("list", "list entries");
    list->fallthrough();
    list->callback([&] { run_catalog_list(st); });
    std::string show_label;
    auto* show = catalog->add_subcommand("show", "print one entry");
    show->fallthrough();
    show->add_option("label", show_label, "entry label")->required();
    show->callback([&] { run_catalog_show(st, show_label); });
    auto* verify = catalog->add_subcommand("verify", "recompute every frozen value");
    verify->fallthrough();
    verify->callback([&] { run_catalog_verify(st); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const stratindex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return st.exit_code;
}
