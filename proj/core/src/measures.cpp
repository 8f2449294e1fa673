#include "kklab/measures.hpp"

#include <cmath>

namespace kklab {

MeasureEstimate mu_exact(const Hypergraph& h, double p, int limit) {
    int n = h.n();
    if (n > limit) fail(errc::too_large_for_exact, "ground set too large for 2^n enumeration");

    // weight of A depends only on |A|
    std::vector<double> weight(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        weight[static_cast<std::size_t>(k)] =
            std::pow(p, k) * std::pow(1.0 - p, n - k);

    double total = 0.0;
    std::uint64_t full = (1ull << n);
    for (std::uint64_t a = 0; a < full; ++a) {
        Subset s(a);
        if (h.in_upset(s)) total += weight[static_cast<std::size_t>(s.size())];
    }
    if (total > 1.0) total = 1.0;
    return MeasureEstimate{total, 0.0, 0};
}

namespace {

// Wilson score interval half-width at 95% confidence.
double wilson_half_width(long hits, long trials) {
    const double z = 1.959963984540054;
    double nn = static_cast<double>(trials);
    double phat = static_cast<double>(hits) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double spread = (z / denom) * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
    return spread;
}

Subset sample_xp(GroundSet g, double p, CounterRng& rng) {
    Subset s;
    for (int e = 0; e < g.n; ++e)
        if (rng.next_unit() < p) s.add(e);
    return s;
}

} // namespace

MeasureEstimate mu_mc(const Hypergraph& h, double p, long trials, Seed seed) {
    long hits = 0;
    for (long k = 0; k < trials; ++k) {
        CounterRng rng(Seed{seed.master, seed.stream + static_cast<std::uint64_t>(k)});
        if (h.in_upset(sample_xp(h.ground(), p, rng))) ++hits;
    }
    double point = static_cast<double>(hits) / static_cast<double>(trials);
    return MeasureEstimate{point, wilson_half_width(hits, trials), trials};
}

Subset sample_uniform_m_subset_of(const std::vector<int>& pool, int m, CounterRng& rng) {
    if (m < 0 || static_cast<std::size_t>(m) > pool.size())
        fail(errc::bad_cardinality, "m-subset cardinality out of range");
    // partial Fisher-Yates
    std::vector<int> elems = pool;
    Subset out;
    std::size_t size = elems.size();
    for (int k = 0; k < m; ++k) {
        std::size_t j = static_cast<std::size_t>(k) +
                        static_cast<std::size_t>(rng.next_below(size - static_cast<std::size_t>(k)));
        std::swap(elems[static_cast<std::size_t>(k)], elems[j]);
        out.add(elems[static_cast<std::size_t>(k)]);
    }
    return out;
}

Subset sample_uniform_m_subset(GroundSet g, int m, Seed seed) {
    if (m < 0 || m > g.n) fail(errc::bad_cardinality, "m-subset cardinality out of range");
    std::vector<int> pool(static_cast<std::size_t>(g.n));
    for (int e = 0; e < g.n; ++e) pool[static_cast<std::size_t>(e)] = e;
    CounterRng rng(seed);
    return sample_uniform_m_subset_of(pool, m, rng);
}

double p_c_bisect(const Hypergraph& h, PcMode mode, double tol, Seed seed,
                  long mc_trials, int exact_limit) {
    if (h.edges().empty() || h.contains_empty_edge())
        fail(errc::degenerate_family, "p_c undefined: upset is empty or everything");

    double lo = 0.0, hi = 1.0;
    if (mode == PcMode::exact) {
        while (hi - lo > tol) {
            double mid = 0.5 * (lo + hi);
            if (mu_exact(h, mid, exact_limit).point < 0.5)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    // mc mode: a fixed trial budget per probe; stop when the bracket is
    // narrow or the interval straddles 1/2 (inconclusive probe).
    std::uint64_t probe = 0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        MeasureEstimate est =
            mu_mc(h, mid, mc_trials,
                  Seed{seed.master, seed.stream + (++probe) * 0x51ed2701ull});
        if (est.point + est.half_width < 0.5)
            lo = mid;
        else if (est.point - est.half_width > 0.5)
            hi = mid;
        else
            break; // 1/2 inside the confidence interval at mid
    }
    return 0.5 * (lo + hi);
}

} // namespace kklab
