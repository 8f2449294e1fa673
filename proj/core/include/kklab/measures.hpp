#pragma once

#include "kklab/hypergraph.hpp"
#include "kklab/rng.hpp"

namespace kklab {

inline constexpr int default_exact_limit = 22;
inline constexpr long default_mc_trials = 100000;

struct MeasureEstimate {
    double point = 0.0;
    double half_width = 0.0; // 95% two-sided half-interval; 0 for exact
    long trials = 0;         // 0 for exact

    bool exact() const { return trials == 0; }
};

// mu_p of the upset generated by h, by full 2^n enumeration.
MeasureEstimate mu_exact(const Hypergraph& h, double p, int limit = default_exact_limit);

// Monte Carlo estimate of mu_p: sample X_p (independent inclusion with
// probability p) `trials` times; trial k uses stream = seed.stream + k.
MeasureEstimate mu_mc(const Hypergraph& h, double p, long trials, Seed seed);

// Uniformly random m-subset of the ground set; deterministic given seed.
Subset sample_uniform_m_subset(GroundSet g, int m, Seed seed);

// Uniformly random m-subset of an arbitrary element pool.
Subset sample_uniform_m_subset_of(const std::vector<int>& pool, int m, CounterRng& rng);

enum class PcMode { exact, mc };

// The unique p with mu_p = 1/2, located by bisection.
double p_c_bisect(const Hypergraph& h, PcMode mode, double tol, Seed seed,
                  long mc_trials = default_mc_trials, int exact_limit = default_exact_limit);

} // namespace kklab
