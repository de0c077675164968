#ifndef ABMEQL_TERMS_HPP
#define ABMEQL_TERMS_HPP

#include <span>
#include <string>
#include <vector>

namespace abmeql {

// One candidate right-hand-side term. Three shapes cover every library used
// here: plain monomials over the state variables (C^k, S, I^2, S*I, ...) and
// the two composite logistic factors v*(1-v) and v*(1-F*v), where F is an
// exogenous occupancy-correlation signal. The label uniquely identifies the
// evaluation rule within a library.
struct Term {
    enum class Kind { Monomial, Gap, CorrGap };

    Kind kind = Kind::Monomial;
    std::vector<int> exponents;  // Monomial: one exponent per state variable
    int var = 0;                 // Gap / CorrGap: which state variable
    std::string label;

    bool needs_correlation() const { return kind == Kind::CorrGap; }
    double eval(std::span<const double> state, double corr) const;
    bool operator==(const Term& other) const { return label == other.label; }
};

Term monomial_term(const std::vector<std::string>& vars, std::vector<int> exponents);
Term gap_term(const std::vector<std::string>& vars, int var);       // v(1-v)
Term corr_gap_term(const std::vector<std::string>& vars, int var);  // v(1-Fv)

// Parses a comma-separated term list ("C,C^2,C^3,C^4", "S,S^2,I,I^2,SI",
// "C(1-C),C", "C(1-FC),C") against the given state variable names.
std::vector<Term> parse_terms(const std::string& text, const std::vector<std::string>& vars);

// Standard libraries from the case studies.
std::vector<Term> bdm_polynomial_library(int max_power = 4);  // C..C^4
std::vector<Term> sir_library();                              // S,S^2,I,I^2,SI

} // namespace abmeql

#endif
