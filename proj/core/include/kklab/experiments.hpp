#pragma once

#include <optional>
#include <string>

#include "kklab/cover.hpp"
#include "kklab/fragment.hpp"
#include "kklab/measures.hpp"

namespace kklab {

enum class Family {
    single_edge,       // one edge {0..k-1} on n = k
    singletons,        // all n singletons
    random_k_uniform,  // `count` distinct random k-subsets of {0..n-1}
    triangles,         // ground = edge slots of K_v, edges = triangles
    perfect_matchings, // v even; edges = perfect matchings of K_v
};

struct InstanceSpec {
    Family family = Family::single_edge;
    int k = 0;
    int n = 0;
    int v = 0;
    int count = 0;
    std::uint64_t seed = 0;

    // e.g. "single_edge:k=3", "random_k_uniform:n=10,k=3,count=5,seed=7"
    static InstanceSpec parse(const std::string& text);
    std::string to_string() const;
};

Hypergraph generate(const InstanceSpec& spec);

struct ProcessStats {
    long seeds = 0;
    long feasible = 0;       // seeds whose schedule fit the ground set
    long successful = 0;     // terminated_successfully among feasible
    double mean_cost = 0.0;  // mean assembled-cover cost among feasible runs
};

struct KKConfig {
    double tol = 1e-9;
    long seeds = 0;          // process runs per instance; 0 skips the process
    double L = 2.0;          // desk-scale schedules need the exploratory regime
    bool exploratory = true;
    std::optional<double> process_p; // overrides p = q for the process runs
    PcMode pc_mode = PcMode::exact;  // mc for grounds beyond the exact limit
    long mc_trials = default_mc_trials;
};

struct KKReport {
    InstanceSpec instance;
    int n = 0;
    int ell = 0;
    double q = 0.0;
    double p_c = 0.0;
    std::optional<double> ratio; // p_c / (q * log2 ell); absent when ell < 2
    ProcessStats stats;
};

KKReport run_kk_report(const InstanceSpec& spec, const KKConfig& config, Seed seed);

std::string kk_csv_header();
std::string kk_csv_row(const KKReport& report);

} // namespace kklab
