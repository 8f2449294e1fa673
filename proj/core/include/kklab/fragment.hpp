#pragma once

#include "kklab/hypergraph.hpp"
#include "kklab/rng.hpp"

namespace kklab {

inline constexpr double theorem_min_L = 1024.0;
inline constexpr long default_enum_budget = 10000000;

struct FragmentResult {
    Subset T;       // the minimum fragment
    int t = 0;      // |T|
    Subset witness; // an edge S' of h with S' inside S u W and S' \ W = T
};

// Minimum (S,W)-fragment: scan edges S' contained in S u W, minimize
// |S' \ W|, ties broken by canonical edge order.
FragmentResult min_fragment(const Hypergraph& h, Subset S, Subset W);

struct SplitResult {
    std::vector<int> good;      // indices into h.edges() with t(S,W) >= threshold
    std::vector<Subset> cover;  // {T(S,W) : S good}, deduplicated
    Hypergraph leftover;        // {T(S,W) : S not good}, deduplicated
};

// One round of the cover construction at fragment-size threshold .9 * ell.
SplitResult split_round(const Hypergraph& h, Subset W, double threshold);

struct ScheduleParams {
    double L = 0.0;
    int ell = 0;
    double p = 0.0;
    int n = 0;
    bool exploratory = false;

    int gamma = 0;              // floor(log_{.9}(1/ell)) + 1
    std::vector<double> ell_i;  // ell_i[k] = .9^(k+1) * ell, rounds 1..gamma
    std::vector<double> L_i;    // L, switching to L*sqrt(log2 ell) near the end
    std::vector<int> w_i;       // ceil(L_i * p * n)
    long total_w = 0;           // sum of w_i
    double implied_C = 0.0;     // total_w = C * L * p * log2(ell) * n
};

ScheduleParams build_schedule(double L, int ell, double p, int n,
                              bool exploratory = false);

struct RoundRecord {
    int i = 0;
    Subset W;
    std::vector<int> good;
    std::vector<Subset> cover;
    Hypergraph leftover;
    double log_cost = 0.0; // log2 of sum p^|U| over cover; -inf when empty
    bool success1 = false;
    bool success2 = false;
};

struct ProcessTranscript {
    ScheduleParams schedule;
    Hypergraph instance;
    std::vector<RoundRecord> rounds;
    int i_max = 0;
    bool terminated_successfully = false;
    std::vector<Subset> assembled_cover;
    Subset w_union;
};

// The iterated randomized cover construction: H_0 = h, W_i uniform from the
// unconsumed ground, stop at the first round whose leftover is within {empty}.
ProcessTranscript run_process(const Hypergraph& h, const ScheduleParams& schedule,
                              Seed seed);

// log2 of the cover cost sum p^|U|, accumulated in log-space.
double log2_cover_cost(const std::vector<Subset>& cover, double p);

// Strict per-round success test: sum p^|U| < L_i^(-.5 * ell_i), in log-space.
bool check_success1(const std::vector<Subset>& cover, double p, double L_i,
                    double ell_i);

struct Lemma31Row {
    int m = 0;
    long long pair_count = 0;  // |{(W, T) : t(S,W) = m}|
    double log2_lhs = 0.0;     // m*log2 p + log2 pair_count; -inf when count 0
    double log2_rhs_step = 0.0; // log2 [ binom(n,w) * L^-m * 2^ell ]
};

struct Lemma31Result {
    int w = 0;
    long long choices = 0;      // binom(n, w)
    std::vector<Lemma31Row> rows; // one per integer m in [ceil(.9 ell), ell]
    double log2_lhs_total = 0.0;
    double log2_rhs_total = 0.0; // log2 [ binom(n,w) * L^(-.6 ell) ]
    bool step_ok = false;        // lhs_m <= rhs_step for every m
    bool total_ok = false;       // sum_m lhs_m <= rhs_total
};

// Exact enumeration of the counting bound: every W in (X choose w) with
// w = ceil(L*p*n), all minimum fragments of size >= .9 ell.
Lemma31Result lemma31_table(const Hypergraph& h, double p, double L,
                            long budget = default_enum_budget);

struct Lemma31PerM {
    double log2_lhs = 0.0;
    double log2_rhs_step = 0.0;
    double log2_rhs_total = 0.0;
};

Lemma31PerM lemma31_bruteforce(const Hypergraph& h, double p, double L, int m,
                               long budget = default_enum_budget);

struct EmpiricalLemma31 {
    double fail_rate = 0.0;  // fraction of W with cover cost >= L^(-.5 ell)
    double mean_cost = 0.0;  // empirical mean cover cost of U(W)
    double fail_bound = 0.0; // L^(-.1 ell), report-only
    double mean_bound = 0.0; // L^(-.6 ell), report-only
};

EmpiricalLemma31 empirical_lemma31(const Hypergraph& h, double p, double L,
                                   long trials, Seed seed);

} // namespace kklab
