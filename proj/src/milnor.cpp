#include "stratindex/milnor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "stratindex/checked.hpp"

namespace stratindex {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw DomainError("polynomial syntax error at position " + std::to_string(pos) +
                          ": " + what);
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected a number");
        long value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc() || ptr != text.data() + pos) fail("number out of range");
        return value;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto tail = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        if (pos < text.size() && head(text[pos])) {
            ++pos;
            while (pos < text.size() && tail(text[pos])) ++pos;
        }
        if (pos == start) fail("expected a variable name");
        return std::string(text.substr(start, pos - start));
    }
};

struct RawTerm {
    Rational coefficient = 1;
    std::map<std::string, int> powers;
};

}  // namespace

PolynomialGerm parse_polynomial(std::string_view text) {
    Cursor cur{text};
    std::vector<RawTerm> raw;
    std::vector<std::string> variables;  // first-use order

    if (cur.done()) cur.fail("empty polynomial");
    while (true) {
        RawTerm term;
        if (cur.eat('-'))
            term.coefficient = -1;
        else
            cur.eat('+');

        bool more_factors = true;
        while (more_factors) {
            const char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                const long num = cur.integer();
                long den = 1;
                if (cur.eat('/')) den = cur.integer();
                term.coefficient *= make_rational(num, den);
            } else {
                const std::string name = cur.identifier();
                int power = 1;
                if (cur.eat('^')) {
                    const long e = cur.integer();
                    if (e > 256) cur.fail("exponent too large");
                    power = static_cast<int>(e);
                }
                term.powers[name] += power;
                if (std::find(variables.begin(), variables.end(), name) ==
                    variables.end())
                    variables.push_back(name);
            }
            more_factors = cur.eat('*');
        }
        raw.push_back(std::move(term));

        if (cur.done()) break;
        if (cur.peek() != '+' && cur.peek() != '-') cur.fail("expected '+' or '-'");
    }

    PolynomialGerm f;
    f.variables = variables;
    for (const RawTerm& term : raw) {
        std::vector<int> exps(variables.size(), 0);
        for (const auto& [name, power] : term.powers) {
            const auto it = std::find(variables.begin(), variables.end(), name);
            exps[static_cast<std::size_t>(it - variables.begin())] = power;
        }
        f.terms[exps] += term.coefficient;
    }
    std::erase_if(f.terms, [](const auto& kv) { return kv.second == 0; });

    if (f.terms.empty()) throw DomainError("polynomial is identically zero");
    for (const auto& [exps, c] : f.terms)
        if (std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; }))
            throw DomainError("constant term: a germ must vanish at the origin");
    return f;
}

PolynomialGerm derivative(const PolynomialGerm& f, std::size_t var) {
    if (var >= f.variables.size()) throw DomainError("derivative variable out of range");
    PolynomialGerm df;
    df.variables = f.variables;
    for (const auto& [exps, c] : f.terms) {
        if (exps[var] == 0) continue;
        std::vector<int> e = exps;
        const Rational coeff = c * e[var];
        e[var] -= 1;
        df.terms[e] += coeff;
    }
    std::erase_if(df.terms, [](const auto& kv) { return kv.second == 0; });
    return df;
}

int total_degree(const PolynomialGerm& f) {
    int deg = 0;
    for (const auto& [exps, c] : f.terms)
        deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
    return deg;
}

std::string polynomial_to_string(const PolynomialGerm& f) {
    if (f.terms.empty()) return "0";

    // Canonical form, independent of the first-use numbering: variables
    // alphabetically, terms by descending exponent vector in that order.
    std::vector<std::size_t> alpha(f.variables.size());
    for (std::size_t v = 0; v < alpha.size(); ++v) alpha[v] = v;
    std::sort(alpha.begin(), alpha.end(), [&](std::size_t a, std::size_t b) {
        return f.variables[a] < f.variables[b];
    });

    std::map<std::vector<int>, Rational, std::greater<>> ordered;
    for (const auto& [exps, c] : f.terms) {
        std::vector<int> remapped(exps.size());
        for (std::size_t v = 0; v < exps.size(); ++v) remapped[v] = exps[alpha[v]];
        ordered[remapped] = c;
    }

    std::string out;
    bool first = true;
    for (const auto& [exps, c] : ordered) {
        Rational a = c;
        const bool neg = a < 0;
        if (neg) a = -a;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;

        std::vector<std::string> factors;
        const bool all_zero =
            std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
        if (a != 1 || all_zero) factors.push_back(a.get_str());
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            const std::string& name = f.variables[alpha[v]];
            factors.push_back(exps[v] == 1 ? name
                                           : name + "^" + std::to_string(exps[v]));
        }
        for (std::size_t i = 0; i < factors.size(); ++i)
            out += (i == 0 ? "" : "*") + factors[i];
    }
    return out;
}

bool is_quasihomogeneous(const PolynomialGerm& f, const QuasihomogeneousData& q) {
    if (q.weights.size() != f.variables.size())
        throw DomainError("weight count does not match the variable count");
    for (const auto& [exps, c] : f.terms) {
        long w = 0;
        for (std::size_t v = 0; v < exps.size(); ++v) w += q.weights[v] * exps[v];
        if (w != q.degree) return false;
    }
    return true;
}

std::int64_t milnor_quasihomogeneous(const QuasihomogeneousData& q) {
    if (q.weights.empty()) throw DomainError("no weights given");
    if (q.degree <= 0) throw DomainError("weighted degree must be positive");
    Rational product = 1;
    for (long w : q.weights) {
        if (w <= 0) throw DomainError("weights must be positive");
        product *= make_rational(q.degree - w, w);
    }
    if (product.get_den() != 1 || product < 0)
        throw DomainError(
            "prod (d - w_i)/w_i is not a nonnegative integer; no isolated "
            "quasihomogeneous germ has these weights");
    if (!product.get_num().fits_slong_p())
        throw OverflowError("quasihomogeneous Milnor number exceeds 64 bits");
    return product.get_num().get_si();
}

namespace {

int degree_of(const std::vector<int>& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

// All exponent vectors in `nvars` variables of total degree < t, in a fixed
// (lexicographic) order.
std::vector<std::vector<int>> monomials_below(int nvars, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(nvars), 0);
    auto fill = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars) {
            out.push_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
        current[static_cast<std::size_t>(var)] = 0;
    };
    fill(fill, 0, t - 1);
    return out;
}

// dim_Q Q[x]/(J + m^t): number of monomials of degree < t minus the rank of
// all monomial multiples of the partials, truncated below degree t.  Exact
// sparse Gaussian elimination over Q.
std::int64_t truncated_quotient_dim(const std::vector<PolynomialGerm>& partials,
                                    int nvars, int t) {
    const auto mons = monomials_below(nvars, t);
    std::map<std::vector<int>, int> column;
    for (std::size_t i = 0; i < mons.size(); ++i)
        column[mons[i]] = static_cast<int>(i);

    std::map<int, std::map<int, Rational>> pivots;  // leading column -> row
    std::int64_t rank = 0;
    for (const PolynomialGerm& p : partials) {
        if (p.terms.empty()) continue;
        int min_deg = t;
        for (const auto& [exps, c] : p.terms) min_deg = std::min(min_deg, degree_of(exps));

        for (const auto& m : mons) {
            if (degree_of(m) + min_deg >= t) continue;
            std::map<int, Rational> row;
            for (const auto& [exps, c] : p.terms) {
                if (degree_of(exps) + degree_of(m) >= t) continue;
                std::vector<int> prod = exps;
                for (int v = 0; v < nvars; ++v)
                    prod[static_cast<std::size_t>(v)] += m[static_cast<std::size_t>(v)];
                row[column.at(prod)] = c;  // distinct exponents stay distinct
            }
            // Reduce against the pivots already collected.
            while (!row.empty()) {
                const int lead = row.begin()->first;
                const auto it = pivots.find(lead);
                if (it == pivots.end()) {
                    const Rational lc = row.begin()->second;
                    for (auto& [col, v] : row) v /= lc;
                    pivots.emplace(lead, std::move(row));
                    ++rank;
                    break;
                }
                const Rational factor = row.begin()->second;
                for (const auto& [col, v] : it->second) {
                    const auto r = row.find(col);
                    Rational nv = (r == row.end() ? Rational(0) : r->second) - factor * v;
                    if (nv == 0) {
                        if (r != row.end()) row.erase(r);
                    } else {
                        row[col] = std::move(nv);
                    }
                }
            }
        }
    }
    return static_cast<std::int64_t>(mons.size()) - rank;
}

}  // namespace

std::int64_t milnor_jacobian(const PolynomialGerm& f, int max_truncation) {
    if (f.variables.empty()) throw DomainError("polynomial has no variables");
    if (f.terms.empty()) throw DomainError("polynomial is identically zero");
    const int d = total_degree(f);
    if (d < 1) throw DomainError("constant polynomial");
    if (max_truncation < 2 * d)
        throw DomainError("max truncation " + std::to_string(max_truncation) +
                          " is below twice the total degree (" + std::to_string(2 * d) +
                          ")");

    std::vector<PolynomialGerm> partials;
    for (std::size_t v = 0; v < f.variables.size(); ++v)
        partials.push_back(derivative(f, v));

    const int nvars = static_cast<int>(f.variables.size());
    std::vector<std::int64_t> dims;
    for (int t = 2 * d; t <= max_truncation; t += d) {
        dims.push_back(truncated_quotient_dim(partials, nvars, t));
        const std::size_t k = dims.size();
        if (k >= 3 && dims[k - 1] == dims[k - 2] && dims[k - 2] == dims[k - 3])
            return dims.back();
    }
    throw NonIsolatedError("Jacobian colength did not stabilise by truncation " +
                           std::to_string(max_truncation) +
                           "; the critical point is likely non-isolated");
}

std::int64_t chi_hypersurface_fibre(int n, std::int64_t mu) {
    if (n < 1) throw DomainError("fibre formula needs at least one variable");
    if (mu < 0) throw DomainError("negative Milnor number");
    return checked_add(1, checked_mul(sign_pow(n - 1), mu));
}

}  // namespace stratindex
