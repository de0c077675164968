#ifndef ABMEQL_TRACE_HPP
#define ABMEQL_TRACE_HPP

#include <string>
#include <vector>

namespace abmeql {

// Densities recorded on an equispaced time grid, possibly averaged over an
// ensemble of replicates. BDM traces carry one species ("C", occupied sites
// per X^2); SIR traces carry three ("S","I","R", fractions of the M*X^2
// agents, summing to 1 at every record time). The occupancy correlation F is
// optional; entries are NaN where it is undefined (empty lattice).
struct Trace {
    std::vector<double> times;
    std::vector<std::string> species;
    std::vector<std::vector<double>> density;  // [species][time]
    std::vector<double> correlation;           // empty unless measured
    int n_replicates = 1;

    std::size_t size() const { return times.size(); }
    bool has_correlation() const { return !correlation.empty(); }
    double dt() const;  // grid spacing; throws ConfigError on a non-uniform grid
    int species_index(const std::string& name) const;  // -1 if absent

    // CSV wire format: header `t,<species...>[,F],n_replicates`, one row per
    // record time, every float at 17 significant digits.
    void write_csv(const std::string& path) const;
    std::string to_csv() const;
    static Trace read_csv(const std::string& path);
    static Trace parse_csv(const std::string& text);
};

// Pointwise mean of equally shaped traces. Densities average over all inputs;
// correlation entries average over the inputs where F is defined at that time
// (NaN if none are). n_replicates accumulates.
Trace trace_mean(const std::vector<Trace>& traces);

} // namespace abmeql

#endif
