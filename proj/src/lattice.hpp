#ifndef ABMEQL_LATTICE_HPP
#define ABMEQL_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rng.hpp"

namespace abmeql {

// Non-periodic X-by-X square lattice, von Neumann neighbourhood, at most one
// agent per site. Sites are indexed row-major: site = y*X + x.
//
// neighbour() returns -1 for an off-lattice target; callers abort the event,
// which realizes the no-flux boundary without distorting the per-direction
// rate P/4.
inline int lattice_neighbour(int X, int site, int dir) {
    const int x = site % X;
    const int y = site / X;
    switch (dir) {
        case 0: return x + 1 < X ? site + 1 : -1;
        case 1: return x > 0 ? site - 1 : -1;
        case 2: return y + 1 < X ? site + X : -1;
        case 3: return y > 0 ? site - X : -1;
    }
    return -1;
}

// Total number of unordered adjacent site pairs on the lattice.
inline long long adjacent_pair_count(int X) {
    return 2LL * X * (X - 1);
}

// Single-species occupancy lattice for the birth-death-migration process.
// Keeps a dense agent list for O(1) uniform agent picks and O(1) add/remove.
class BdmLattice {
public:
    explicit BdmLattice(int X);

    // Occupies round(fraction * X^2) sites, sampled uniformly without
    // replacement.
    static BdmLattice random_init(int X, double fraction, Rng& rng);

    int extent() const { return X_; }
    int sites() const { return X_ * X_; }
    int count() const { return static_cast<int>(agents_.size()); }
    bool occupied(int site) const { return slot_[site] >= 0; }
    int agent_site(int k) const { return agents_[k]; }

    void add(int site);
    void remove(int site);
    void move(int from, int to);
    int neighbour(int site, int dir) const { return lattice_neighbour(X_, site, dir); }

    // Number of unordered adjacent pairs with both sites occupied.
    long long joint_pairs() const;

    // F = C2 * X^4 / (chi^2 * C^2); empty when no site is occupied.
    std::optional<double> occupancy_correlation() const;

    // Slow recount of occupied sites, for consistency checks in tests.
    int census() const;

private:
    int X_;
    std::vector<std::int32_t> slot_;   // site -> index into agents_, -1 if empty
    std::vector<std::int32_t> agents_; // agent k -> site
};

enum class SirState : std::uint8_t { Empty = 0, Susceptible, Infected, Recovered };

// Three-species lattice for the SIR process. Two dense lists: all agents (for
// migration picks) and infected agents (for infection/recovery picks).
class SirLattice {
public:
    explicit SirLattice(int X);

    static SirLattice random_init(int X, double s_fraction, double i_fraction, Rng& rng);

    int extent() const { return X_; }
    int sites() const { return X_ * X_; }
    SirState state(int site) const { return state_[site]; }

    int agent_count() const { return static_cast<int>(agents_.size()); }
    int infected_count() const { return static_cast<int>(infected_.size()); }
    int susceptible_count() const { return n_s_; }
    int recovered_count() const { return n_r_; }

    int agent_site(int k) const { return agents_[k]; }
    int infected_site(int k) const { return infected_[k]; }

    void move(int from, int to);
    void infect(int site);   // susceptible -> infected
    void recover(int site);  // infected -> recovered
    int neighbour(int site, int dir) const { return lattice_neighbour(X_, site, dir); }

    struct Census { int s = 0, i = 0, r = 0; };
    Census census() const;

private:
    void place(int site, SirState st);

    int X_;
    std::vector<SirState> state_;
    std::vector<std::int32_t> agent_slot_;    // site -> index into agents_
    std::vector<std::int32_t> infected_slot_; // site -> index into infected_
    std::vector<std::int32_t> agents_;
    std::vector<std::int32_t> infected_;
    int n_s_ = 0;
    int n_r_ = 0;
};

} // namespace abmeql

#endif
