#ifndef ABMEQL_CONFIG_HPP
#define ABMEQL_CONFIG_HPP

#include <cstdint>
#include <string>

namespace abmeql {

// Birth-death-migration model parameters. Rates are per unit time; every
// attempted event picks one of the four von Neumann neighbours uniformly and
// aborts if the target site is occupied or off-lattice.
struct BdmConfig {
    double Pp = 0.0;            // proliferation rate
    double Pd = 0.0;            // death rate
    double Pm = 0.0;            // migration rate
    int X = 120;                // lattice sites per dimension
    double init_fraction = 0.05;
    double t_end = 0.0;
    int n_record = 100;         // equispaced record times t_i = (i-1) * dt
    std::uint64_t seed = 0;

    void validate() const;      // throws ConfigError
};

// SIR model parameters. Total occupancy M = init_S_fraction + init_I_fraction
// is conserved (no birth or death).
struct SirConfig {
    double PI = 0.0;            // infection rate
    double PR = 0.0;            // recovery rate
    double Pm = 0.0;            // migration rate
    int X = 40;
    double init_S_fraction = 0.49;
    double init_I_fraction = 0.01;
    double t_end = 0.0;
    int n_record = 100;
    std::uint64_t seed = 0;

    double occupied_fraction() const { return init_S_fraction + init_I_fraction; }
    void validate() const;
};

// Flat `key = value` config files (UTF-8, '#' comments). Keys mirror the
// struct fields. Unknown keys are an error.
BdmConfig load_bdm_config(const std::string& path);
SirConfig load_sir_config(const std::string& path);

} // namespace abmeql

#endif
