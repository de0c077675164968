#include "lattice.hpp"

#include <cmath>

#include "errors.hpp"

namespace abmeql {

namespace {

// First k entries of a partial Fisher-Yates shuffle of 0..n_sites-1: a
// uniform sample of k distinct sites.
std::vector<std::int32_t> sample_sites(int n_sites, int k, Rng& rng) {
    std::vector<std::int32_t> all(n_sites);
    for (int i = 0; i < n_sites; ++i) all[i] = i;
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_sites - i)));
        std::swap(all[i], all[j]);
    }
    all.resize(k);
    return all;
}

int rounded_count(double fraction, int n_sites, const char* what) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw ConfigError(std::string(what) + " must lie in [0,1]");
    return static_cast<int>(std::llround(fraction * n_sites));
}

} // namespace

BdmLattice::BdmLattice(int X) : X_(X) {
    if (X < 2) throw ConfigError("lattice: X must be >= 2");
    slot_.assign(static_cast<std::size_t>(X) * X, -1);
}

BdmLattice BdmLattice::random_init(int X, double fraction, Rng& rng) {
    BdmLattice lat(X);
    const int k = rounded_count(fraction, lat.sites(), "init_fraction");
    for (int site : sample_sites(lat.sites(), k, rng)) lat.add(site);
    return lat;
}

void BdmLattice::add(int site) {
    slot_[site] = static_cast<std::int32_t>(agents_.size());
    agents_.push_back(site);
}

void BdmLattice::remove(int site) {
    const std::int32_t k = slot_[site];
    const std::int32_t last = agents_.back();
    agents_[k] = last;
    slot_[last] = k;
    agents_.pop_back();
    slot_[site] = -1;
}

void BdmLattice::move(int from, int to) {
    const std::int32_t k = slot_[from];
    agents_[k] = to;
    slot_[to] = k;
    slot_[from] = -1;
}

long long BdmLattice::joint_pairs() const {
    long long pairs = 0;
    // Count each unordered pair once via the +x and +y neighbours.
    for (int y = 0; y < X_; ++y) {
        const int row = y * X_;
        for (int x = 0; x < X_; ++x) {
            const int site = row + x;
            if (slot_[site] < 0) continue;
            if (x + 1 < X_ && slot_[site + 1] >= 0) ++pairs;
            if (y + 1 < X_ && slot_[site + X_] >= 0) ++pairs;
        }
    }
    return pairs;
}

std::optional<double> BdmLattice::occupancy_correlation() const {
    const double c = count();
    if (c <= 0.0) return std::nullopt;
    const double x2 = static_cast<double>(sites());
    const double chi2 = static_cast<double>(adjacent_pair_count(X_));
    return static_cast<double>(joint_pairs()) * x2 * x2 / (chi2 * c * c);
}

int BdmLattice::census() const {
    int n = 0;
    for (auto s : slot_)
        if (s >= 0) ++n;
    return n;
}

SirLattice::SirLattice(int X) : X_(X) {
    if (X < 2) throw ConfigError("lattice: X must be >= 2");
    const std::size_t n = static_cast<std::size_t>(X) * X;
    state_.assign(n, SirState::Empty);
    agent_slot_.assign(n, -1);
    infected_slot_.assign(n, -1);
}

SirLattice SirLattice::random_init(int X, double s_fraction, double i_fraction, Rng& rng) {
    SirLattice lat(X);
    const int ks = rounded_count(s_fraction, lat.sites(), "init_S_fraction");
    const int ki = rounded_count(i_fraction, lat.sites(), "init_I_fraction");
    const auto chosen = sample_sites(lat.sites(), ks + ki, rng);
    for (int n = 0; n < ks; ++n) lat.place(chosen[n], SirState::Susceptible);
    for (int n = ks; n < ks + ki; ++n) lat.place(chosen[n], SirState::Infected);
    return lat;
}

void SirLattice::place(int site, SirState st) {
    state_[site] = st;
    agent_slot_[site] = static_cast<std::int32_t>(agents_.size());
    agents_.push_back(site);
    if (st == SirState::Infected) {
        infected_slot_[site] = static_cast<std::int32_t>(infected_.size());
        infected_.push_back(site);
    } else if (st == SirState::Susceptible) {
        ++n_s_;
    } else if (st == SirState::Recovered) {
        ++n_r_;
    }
}

void SirLattice::move(int from, int to) {
    const SirState st = state_[from];
    state_[to] = st;
    state_[from] = SirState::Empty;

    const std::int32_t k = agent_slot_[from];
    agents_[k] = to;
    agent_slot_[to] = k;
    agent_slot_[from] = -1;

    if (st == SirState::Infected) {
        const std::int32_t ki = infected_slot_[from];
        infected_[ki] = to;
        infected_slot_[to] = ki;
        infected_slot_[from] = -1;
    }
}

void SirLattice::infect(int site) {
    state_[site] = SirState::Infected;
    infected_slot_[site] = static_cast<std::int32_t>(infected_.size());
    infected_.push_back(site);
    --n_s_;
}

void SirLattice::recover(int site) {
    state_[site] = SirState::Recovered;
    const std::int32_t k = infected_slot_[site];
    const std::int32_t last = infected_.back();
    infected_[k] = last;
    infected_slot_[last] = k;
    infected_.pop_back();
    infected_slot_[site] = -1;
    ++n_r_;
}

SirLattice::Census SirLattice::census() const {
    Census c;
    for (auto st : state_) {
        if (st == SirState::Susceptible) ++c.s;
        else if (st == SirState::Infected) ++c.i;
        else if (st == SirState::Recovered) ++c.r;
    }
    return c;
}

} // namespace abmeql
