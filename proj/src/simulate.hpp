#ifndef ABMEQL_SIMULATE_HPP
#define ABMEQL_SIMULATE_HPP

#include "config.hpp"
#include "lattice.hpp"
#include "trace.hpp"

namespace abmeql {

// Exact stochastic simulation of the BDM process. Per event: pick a uniformly
// random agent, propensity a = (Pp+Pm+Pd)*C, tau = -ln(g1)/a, R = a*g2, then
//   R <  Pp*C             attempted proliferation into 1 of 4 directions
//   R <= (Pp+Pm)*C        attempted migration
//   otherwise             death
// Proliferation/migration abort when the target is occupied or off-lattice.
// The simulation stops at t_end, on a full lattice, on an empty lattice, or
// when the total propensity vanishes.
class BdmSimulation {
public:
    BdmSimulation(const BdmConfig& cfg, std::uint64_t seed);

    // One Gillespie event (time advance + state update); false once no
    // further event can occur.
    bool step();
    bool finished() const;

    double time() const { return t_; }
    const BdmLattice& lattice() const { return lattice_; }

    // Full run with zero-order-hold recording: the value at a grid time is
    // the state at the last event at or before it.
    Trace run(bool with_correlation);

private:
    struct Pending {
        double t_new;
        int agent_site;
    };
    Pending draw_event();
    void apply_event(const Pending& ev);

    BdmConfig cfg_;
    BdmLattice lattice_;
    Rng rng_;
    double t_ = 0.0;
};

// Exact stochastic simulation of the SIR process. Total propensity
// a = Pm*(S+I+R) + (PI+PR)*I: every agent migrates at rate Pm; each infected
// agent additionally attempts infection (rate PI, converts a neighbouring
// susceptible) or recovers (rate PR). Once no infected agents remain the
// densities can no longer change, so the run terminates early and holds.
class SirSimulation {
public:
    SirSimulation(const SirConfig& cfg, std::uint64_t seed);

    bool step();
    bool finished() const;

    double time() const { return t_; }
    const SirLattice& lattice() const { return lattice_; }

    Trace run();

private:
    struct Pending {
        double t_new;
        double u_event;  // uniform draw partitioning the propensity
    };
    Pending draw_event();
    void apply_event(const Pending& ev);

    SirConfig cfg_;
    SirLattice lattice_;
    Rng rng_;
    double t_ = 0.0;
};

// Ensemble mean over N independent replicates. Replicate k runs with
// replicate_seed(master_seed, k); results are reduced in replicate order, so
// the output is bit-identical for fixed (master_seed, N) regardless of thread
// count. n_threads <= 0 picks a sensible default.
Trace run_bdm_ensemble(const BdmConfig& cfg, int n_replicates, std::uint64_t master_seed,
                       bool with_correlation, int n_threads = 0);
Trace run_sir_ensemble(const SirConfig& cfg, int n_replicates, std::uint64_t master_seed,
                       int n_threads = 0);

} // namespace abmeql

#endif
