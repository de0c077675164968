#include "terms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace abmeql {

namespace {

std::string monomial_label(const std::vector<std::string>& vars, const std::vector<int>& exps) {
    std::string out;
    for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[v];
        if (exps[v] > 1) out += "^" + std::to_string(exps[v]);
    }
    return out.empty() ? "1" : out;
}

int find_var(const std::vector<std::string>& vars, const std::string& name) {
    const auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

double Term::eval(std::span<const double> state, double corr) const {
    switch (kind) {
        case Kind::Monomial: {
            double v = 1.0;
            for (std::size_t i = 0; i < exponents.size(); ++i) {
                for (int e = 0; e < exponents[i]; ++e) v *= state[i];
            }
            return v;
        }
        case Kind::Gap: {
            const double x = state[var];
            return x * (1.0 - x);
        }
        case Kind::CorrGap: {
            const double x = state[var];
            return x * (1.0 - corr * x);
        }
    }
    return 0.0;
}

Term monomial_term(const std::vector<std::string>& vars, std::vector<int> exponents) {
    if (exponents.size() != vars.size())
        throw ConfigError("term: exponent count must match state dimension");
    Term t;
    t.kind = Term::Kind::Monomial;
    t.label = monomial_label(vars, exponents);
    t.exponents = std::move(exponents);
    return t;
}

Term gap_term(const std::vector<std::string>& vars, int var) {
    Term t;
    t.kind = Term::Kind::Gap;
    t.var = var;
    t.label = vars[var] + "(1-" + vars[var] + ")";
    return t;
}

Term corr_gap_term(const std::vector<std::string>& vars, int var) {
    Term t;
    t.kind = Term::Kind::CorrGap;
    t.var = var;
    t.label = vars[var] + "(1-F" + vars[var] + ")";
    return t;
}

std::vector<Term> parse_terms(const std::string& text, const std::vector<std::string>& vars) {
    std::vector<Term> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) throw ConfigError("terms: empty entry in '" + text + "'");

        // Composite forms V(1-V) and V(1-FV).
        const auto paren = tok.find('(');
        if (paren != std::string::npos) {
            const std::string head = tok.substr(0, paren);
            const int v = find_var(vars, head);
            if (v < 0) throw ConfigError("terms: unknown variable '" + head + "'");
            if (tok == head + "(1-" + head + ")") {
                out.push_back(gap_term(vars, v));
                continue;
            }
            if (tok == head + "(1-F" + head + ")") {
                out.push_back(corr_gap_term(vars, v));
                continue;
            }
            throw ConfigError("terms: cannot parse '" + tok + "'");
        }

        // Monomial: product of var[^k] factors, '*' optional between names.
        std::vector<int> exps(vars.size(), 0);
        std::size_t pos = 0;
        while (pos < tok.size()) {
            if (tok[pos] == '*') {
                ++pos;
                continue;
            }
            // longest variable-name match at this position
            int best = -1;
            std::size_t best_len = 0;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                const auto& name = vars[v];
                if (tok.compare(pos, name.size(), name) == 0 && name.size() > best_len) {
                    best = static_cast<int>(v);
                    best_len = name.size();
                }
            }
            if (best < 0) throw ConfigError("terms: cannot parse '" + tok + "'");
            pos += best_len;
            int power = 1;
            if (pos < tok.size() && tok[pos] == '^') {
                ++pos;
                std::size_t digits = 0;
                power = 0;
                while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
                    power = power * 10 + (tok[pos] - '0');
                    ++pos;
                    ++digits;
                }
                if (digits == 0 || power < 1)
                    throw ConfigError("terms: bad exponent in '" + tok + "'");
            }
            exps[best] += power;
        }
        out.push_back(monomial_term(vars, std::move(exps)));
    }
    if (out.empty()) throw ConfigError("terms: empty library '" + text + "'");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].label == out[j].label)
                throw ConfigError("terms: duplicate term '" + out[i].label + "'");
    return out;
}

std::vector<Term> bdm_polynomial_library(int max_power) {
    const std::vector<std::string> vars{"C"};
    std::vector<Term> lib;
    for (int p = 1; p <= max_power; ++p) lib.push_back(monomial_term(vars, {p}));
    return lib;
}

std::vector<Term> sir_library() {
    const std::vector<std::string> vars{"S", "I"};
    return {monomial_term(vars, {1, 0}), monomial_term(vars, {2, 0}),
            monomial_term(vars, {0, 1}), monomial_term(vars, {0, 2}),
            monomial_term(vars, {1, 1})};
}

} // namespace abmeql
