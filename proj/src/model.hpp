#ifndef ABMEQL_MODEL_HPP
#define ABMEQL_MODEL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "terms.hpp"

namespace abmeql {

// Sparse polynomial ODE model: one equation per state variable, each a linear
// combination of library terms. Terms within an equation have distinct labels
// and finite coefficients.
struct PolynomialModel {
    struct Entry {
        Term term;
        double coeff = 0.0;
    };
    struct Equation {
        std::vector<Entry> terms;
    };

    std::vector<std::string> variables;  // state variable names
    std::vector<Equation> equations;     // one per variable

    int state_dim() const { return static_cast<int>(variables.size()); }
    bool uses_correlation() const;
    double rhs(int eq, std::span<const double> state, double corr = 1.0) const;

    // "0.00468C - 0.00951C^2" style rendering with fixed decimals, matching
    // the report tables; JSON keeps full precision.
    std::string equation_text(int eq, int decimals = 5) const;

    nlohmann::json to_json() const;
    static PolynomialModel from_json(const nlohmann::json& j);
    void save_json(const std::string& path, const nlohmann::json& meta = {}) const;
    static PolynomialModel load_json(const std::string& path);

    void validate() const;
};

// Mean-field logistic dC/dt = (Pp-Pd)C - Pp*C^2 as an explicit 2-term model.
PolynomialModel mean_field_logistic_model(double Pp, double Pd);

// Mean-field SIR (fractions): dS/dt = -M*PI*S*I, dI/dt = M*PI*S*I - PR*I.
// Two-state model over (S, I); R is reconstructed as 1-S-I downstream.
PolynomialModel mean_field_sir_model(double PI, double PR, double M);

// Modified logistic dC/dt = Pp*C(1-FC) - Pd*C over the measured correlation
// signal F(t).
PolynomialModel modified_logistic_model(double Pp, double Pd);

// Right-hand sides of the mean-field and correlation-modified logistic
// models. With F = 1 the two agree bit-for-bit.
inline double logistic_rhs(double C, double Pp, double Pd) {
    return Pp * C * (1.0 - C) - Pd * C;
}
inline double modified_logistic_rhs(double C, double F, double Pp, double Pd) {
    return Pp * C * (1.0 - F * C) - Pd * C;
}

// Per-capita growth rate G(C) = RHS(C)/C for a single-state model. At C = 0
// the analytic limit (the linear coefficient) is returned provided the model
// has no constant term; models with correlation terms are rejected.
double per_capita_growth(const PolynomialModel& model, double C);

// Basic reproductive number from a learned I-equation: with dI/dt containing
// a*I (a < 0) and b*S*I (b > 0), the outbreak threshold at S = 1 gives
// R0 = b / (-a). Empty when either term is missing.
std::optional<double> learned_r0(const PolynomialModel::Equation& i_equation,
                                 const std::vector<std::string>& variables);

} // namespace abmeql

#endif
