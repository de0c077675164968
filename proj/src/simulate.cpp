#include "simulate.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "errors.hpp"

namespace abmeql {

namespace {

std::vector<double> record_grid(double t_end, int n_record) {
    // t_i = (i-1) * dt with dt = t_end / (n_record - 1)
    std::vector<double> times(n_record);
    const double dt = t_end / (n_record - 1);
    for (int i = 0; i < n_record; ++i) times[i] = i * dt;
    times.back() = t_end;
    return times;
}

int default_threads(int requested, int n_jobs) {
    if (requested > 0) return std::min(requested, n_jobs);
    const unsigned hw = std::thread::hardware_concurrency();
    return std::max(1, std::min<int>(hw == 0 ? 1 : static_cast<int>(hw), n_jobs));
}

} // namespace

BdmSimulation::BdmSimulation(const BdmConfig& cfg, std::uint64_t seed)
    : cfg_(cfg), lattice_(BdmLattice(cfg.X)), rng_(seed) {
    cfg_.validate();
    lattice_ = BdmLattice::random_init(cfg.X, cfg.init_fraction, rng_);
}

bool BdmSimulation::finished() const {
    const int c = lattice_.count();
    if (c == 0 || c == lattice_.sites()) return true;
    if (t_ >= cfg_.t_end) return true;
    return !((cfg_.Pp + cfg_.Pm + cfg_.Pd) * c > 0.0);
}

BdmSimulation::Pending BdmSimulation::draw_event() {
    const int c = lattice_.count();
    const int agent = static_cast<int>(rng_.below(static_cast<std::uint64_t>(c)));
    const double a = (cfg_.Pp + cfg_.Pm + cfg_.Pd) * c;
    const double tau = -std::log(rng_.uniform_open()) / a;
    return {t_ + tau, lattice_.agent_site(agent)};
}

void BdmSimulation::apply_event(const Pending& ev) {
    const double c = lattice_.count();
    const double a = (cfg_.Pp + cfg_.Pm + cfg_.Pd) * c;
    const double R = a * rng_.uniform_open();
    if (R < cfg_.Pp * c) {
        const int dir = static_cast<int>(rng_.below(4));
        const int target = lattice_.neighbour(ev.agent_site, dir);
        if (target >= 0 && !lattice_.occupied(target)) lattice_.add(target);
    } else if (R <= (cfg_.Pp + cfg_.Pm) * c) {
        const int dir = static_cast<int>(rng_.below(4));
        const int target = lattice_.neighbour(ev.agent_site, dir);
        if (target >= 0 && !lattice_.occupied(target)) lattice_.move(ev.agent_site, target);
    } else {
        lattice_.remove(ev.agent_site);
    }
}

bool BdmSimulation::step() {
    if (finished()) return false;
    const Pending ev = draw_event();
    if (ev.t_new >= cfg_.t_end) {
        t_ = cfg_.t_end;
        return false;
    }
    t_ = ev.t_new;
    apply_event(ev);
    return true;
}

Trace BdmSimulation::run(bool with_correlation) {
    Trace tr;
    tr.times = record_grid(cfg_.t_end, cfg_.n_record);
    tr.species = {"C"};
    tr.density.assign(1, std::vector<double>(tr.times.size()));
    if (with_correlation)
        tr.correlation.assign(tr.times.size(), std::numeric_limits<double>::quiet_NaN());
    tr.n_replicates = 1;

    const double inv_sites = 1.0 / lattice_.sites();
    std::size_t next = 0;
    auto record_current = [&]() {
        tr.density[0][next] = lattice_.count() * inv_sites;
        if (with_correlation) {
            const auto f = lattice_.occupancy_correlation();
            if (f) tr.correlation[next] = *f;
        }
        ++next;
    };

    while (!finished()) {
        const Pending ev = draw_event();
        while (next < tr.times.size() && tr.times[next] < ev.t_new) record_current();
        if (ev.t_new >= cfg_.t_end) {
            t_ = cfg_.t_end;
            break;
        }
        t_ = ev.t_new;
        apply_event(ev);
        if (next >= tr.times.size()) break;
    }
    while (next < tr.times.size()) record_current();
    return tr;
}

SirSimulation::SirSimulation(const SirConfig& cfg, std::uint64_t seed)
    : cfg_(cfg), lattice_(SirLattice(cfg.X)), rng_(seed) {
    cfg_.validate();
    lattice_ = SirLattice::random_init(cfg.X, cfg.init_S_fraction, cfg.init_I_fraction, rng_);
}

bool SirSimulation::finished() const {
    if (t_ >= cfg_.t_end) return true;
    // Without infected agents only migration remains, which never changes the
    // densities again.
    if (lattice_.infected_count() == 0) return true;
    const double a = cfg_.Pm * lattice_.agent_count() +
                     (cfg_.PI + cfg_.PR) * lattice_.infected_count();
    return !(a > 0.0);
}

SirSimulation::Pending SirSimulation::draw_event() {
    const double a = cfg_.Pm * lattice_.agent_count() +
                     (cfg_.PI + cfg_.PR) * lattice_.infected_count();
    const double tau = -std::log(rng_.uniform_open()) / a;
    return {t_ + tau, rng_.uniform_open()};
}

void SirSimulation::apply_event(const Pending& ev) {
    const double move_block = cfg_.Pm * lattice_.agent_count();
    const double a = move_block + (cfg_.PI + cfg_.PR) * lattice_.infected_count();
    const double u = ev.u_event * a;
    if (u < move_block) {
        const int k = static_cast<int>(rng_.below(static_cast<std::uint64_t>(lattice_.agent_count())));
        const int site = lattice_.agent_site(k);
        const int dir = static_cast<int>(rng_.below(4));
        const int target = lattice_.neighbour(site, dir);
        if (target >= 0 && lattice_.state(target) == SirState::Empty) lattice_.move(site, target);
        return;
    }
    const int k = static_cast<int>(rng_.below(static_cast<std::uint64_t>(lattice_.infected_count())));
    const int site = lattice_.infected_site(k);
    const double w = (u - move_block) / lattice_.infected_count();
    if (w < cfg_.PI) {
        const int dir = static_cast<int>(rng_.below(4));
        const int target = lattice_.neighbour(site, dir);
        if (target >= 0 && lattice_.state(target) == SirState::Susceptible)
            lattice_.infect(target);
    } else {
        lattice_.recover(site);
    }
}

bool SirSimulation::step() {
    if (finished()) return false;
    const Pending ev = draw_event();
    if (ev.t_new >= cfg_.t_end) {
        t_ = cfg_.t_end;
        return false;
    }
    t_ = ev.t_new;
    apply_event(ev);
    return true;
}

Trace SirSimulation::run() {
    Trace tr;
    tr.times = record_grid(cfg_.t_end, cfg_.n_record);
    tr.species = {"S", "I", "R"};
    tr.density.assign(3, std::vector<double>(tr.times.size()));
    tr.n_replicates = 1;

    const double total = lattice_.agent_count();
    const double inv_total = total > 0.0 ? 1.0 / total : 0.0;
    std::size_t next = 0;
    auto record_current = [&]() {
        tr.density[0][next] = lattice_.susceptible_count() * inv_total;
        tr.density[1][next] = lattice_.infected_count() * inv_total;
        tr.density[2][next] = lattice_.recovered_count() * inv_total;
        ++next;
    };

    while (!finished()) {
        const Pending ev = draw_event();
        while (next < tr.times.size() && tr.times[next] < ev.t_new) record_current();
        if (ev.t_new >= cfg_.t_end) {
            t_ = cfg_.t_end;
            break;
        }
        t_ = ev.t_new;
        apply_event(ev);
        if (next >= tr.times.size()) break;
    }
    while (next < tr.times.size()) record_current();
    return tr;
}

namespace {

template <typename RunReplicate>
Trace run_ensemble(int n_replicates, std::uint64_t master_seed, int n_threads,
                   const RunReplicate& run_one) {
    if (n_replicates < 1) throw ConfigError("ensemble: need at least 1 replicate");
    std::vector<Trace> results(n_replicates);
    const int threads = default_threads(n_threads, n_replicates);
    if (threads <= 1) {
        for (int k = 0; k < n_replicates; ++k)
            results[k] = run_one(replicate_seed(master_seed, k));
    } else {
        std::atomic<int> next{0};
        auto worker = [&]() {
            for (;;) {
                const int k = next.fetch_add(1);
                if (k >= n_replicates) return;
                results[k] = run_one(replicate_seed(master_seed, k));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return trace_mean(results);
}

} // namespace

Trace run_bdm_ensemble(const BdmConfig& cfg, int n_replicates, std::uint64_t master_seed,
                       bool with_correlation, int n_threads) {
    cfg.validate();
    return run_ensemble(n_replicates, master_seed, n_threads,
                        [&](std::uint64_t seed) {
                            BdmSimulation sim(cfg, seed);
                            return sim.run(with_correlation);
                        });
}

Trace run_sir_ensemble(const SirConfig& cfg, int n_replicates, std::uint64_t master_seed,
                       int n_threads) {
    cfg.validate();
    return run_ensemble(n_replicates, master_seed, n_threads,
                        [&](std::uint64_t seed) {
                            SirSimulation sim(cfg, seed);
                            return sim.run();
                        });
}

} // namespace abmeql
