#include <doctest.h>

#include <cmath>
#include <map>

#include "kklab/measures.hpp"

using namespace kklab;

namespace {

Hypergraph singletons(int n) {
    std::vector<Subset> edges;
    for (int e = 0; e < n; ++e) edges.push_back(Subset(1ull << e));
    return Hypergraph(GroundSet(n), std::move(edges));
}

} // namespace

TEST_CASE("mu_exact on closed-form families") {
    Hypergraph one = Hypergraph(GroundSet(1), {Subset::of({0})});
    CHECK(mu_exact(one, 0.3).point == doctest::Approx(0.3).epsilon(1e-12));

    CHECK(mu_exact(singletons(2), 0.5).point == doctest::Approx(0.75).epsilon(1e-12));

    // 1 - 0.9^8, cross-checked against the full 2^8 enumeration path
    CHECK(mu_exact(singletons(8), 0.1).point ==
          doctest::Approx(1.0 - std::pow(0.9, 8)).epsilon(1e-12));

    CHECK_THROWS_AS(mu_exact(singletons(30), 0.1), error);
}

TEST_CASE("mu_exact boundary values and monotonicity") {
    CounterRng rng(Seed{21, 0});
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Subset> edges;
        int count = 1 + static_cast<int>(rng.next_below(4));
        for (int e = 0; e < count; ++e) {
            Subset s;
            s.add(static_cast<int>(rng.next_below(10)));
            if (rng.next_below(2)) s.add(static_cast<int>(rng.next_below(10)));
            edges.push_back(s);
        }
        Hypergraph h(GroundSet(10), std::move(edges));
        CHECK(mu_exact(h, 0.0).point == 0.0);
        CHECK(mu_exact(h, 1.0).point == doctest::Approx(1.0).epsilon(1e-12));
        double prev = -1.0;
        for (double p = 0.1; p < 1.0; p += 0.2) {
            double cur = mu_exact(h, p).point;
            REQUIRE(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("mu_mc endpoints and determinism") {
    Hypergraph one(GroundSet(1), {Subset::of({0})});
    CHECK(mu_mc(one, 1.0, 100, Seed{1, 0}).point == 1.0);
    CHECK(mu_mc(one, 0.0, 100, Seed{1, 0}).point == 0.0);

    MeasureEstimate a = mu_mc(singletons(6), 0.3, 5000, Seed{42, 7});
    MeasureEstimate b = mu_mc(singletons(6), 0.3, 5000, Seed{42, 7});
    CHECK(a.point == b.point);
    CHECK(a.half_width == b.half_width);
}

TEST_CASE("mu_mc tracks mu_exact") {
    Hypergraph h = singletons(2);
    MeasureEstimate est = mu_mc(h, 0.5, 100000, Seed{3, 0});
    CHECK(std::abs(est.point - 0.75) <= est.half_width);
}

TEST_CASE("uniform m-subset sampling") {
    CHECK(sample_uniform_m_subset(GroundSet(5), 0, Seed{1, 1}) == Subset{});
    CHECK(sample_uniform_m_subset(GroundSet(5), 5, Seed{1, 1}) ==
          Subset::of({0, 1, 2, 3, 4}));
    CHECK_THROWS_AS(sample_uniform_m_subset(GroundSet(5), 6, Seed{1, 1}), error);

    // chi-square style uniformity over the 6 pairs of a 4-set
    std::map<std::uint64_t, long> freq;
    const long samples = 60000;
    for (long k = 0; k < samples; ++k)
        ++freq[sample_uniform_m_subset(GroundSet(4), 2, Seed{9, static_cast<std::uint64_t>(k)}).bits];
    CHECK(freq.size() == 6);
    for (const auto& [bits, count] : freq) {
        double f = static_cast<double>(count) / samples;
        CHECK(f == doctest::Approx(1.0 / 6.0).epsilon(0.06));
    }
}

TEST_CASE("p_c bisection hits closed forms") {
    Hypergraph pair(GroundSet(2), {Subset::of({0, 1})});
    CHECK(p_c_bisect(pair, PcMode::exact, 1e-9, Seed{}) ==
          doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-7));

    CHECK(p_c_bisect(singletons(8), PcMode::exact, 1e-9, Seed{}) ==
          doctest::Approx(1.0 - std::pow(2.0, -1.0 / 8.0)).epsilon(1e-7));

    CHECK_THROWS_AS(p_c_bisect(Hypergraph(GroundSet(2), {Subset{}}), PcMode::exact,
                               1e-9, Seed{}),
                    error);
}

TEST_CASE("p_c in mc mode lands near the exact crossing") {
    Hypergraph h = singletons(4);
    double exact = p_c_bisect(h, PcMode::exact, 1e-9, Seed{});
    double mc = p_c_bisect(h, PcMode::mc, 1e-4, Seed{5, 0}, 20000);
    CHECK(mc == doctest::Approx(exact).epsilon(0.05));
}
