#include <doctest.h>

#include <cmath>

#include "kklab/cover.hpp"
#include "kklab/fragment.hpp"
#include "kklab/measures.hpp"

using namespace kklab;

namespace {

Hypergraph random_instance(int n, int max_edges, int max_size, CounterRng& rng) {
    std::vector<Subset> edges;
    int count = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_edges)));
    for (int e = 0; e < count; ++e) {
        Subset s;
        int size = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_size)));
        while (s.size() < size) s.add(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n))));
        edges.push_back(s);
    }
    return Hypergraph(GroundSet(n), std::move(edges));
}

} // namespace

TEST_CASE("minimum fragments") {
    Hypergraph h(GroundSet(3), {Subset::of({0, 1}), Subset::of({2})});
    FragmentResult fr = min_fragment(h, Subset::of({0, 1}), Subset::of({1, 2}));
    CHECK(fr.T == Subset{});
    CHECK(fr.t == 0);
    CHECK(fr.witness == Subset::of({2}));

    Hypergraph single(GroundSet(4), {Subset::of({0, 1})});
    CHECK(min_fragment(single, Subset::of({0, 1}), Subset::of({0, 1})).t == 0);
    CHECK(min_fragment(single, Subset::of({0, 1}), Subset::of({2, 3})).T ==
          Subset::of({0, 1}));

    CHECK_THROWS_AS(min_fragment(single, Subset::of({2}), Subset{}), error);
}

TEST_CASE("fragment minimality: T is inside every witness candidate") {
    CounterRng rng(Seed{41, 0});
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 6 + static_cast<int>(rng.next_below(7));
        Hypergraph h = random_instance(n, 6, 4, rng);
        const auto& edges = h.edges();
        Subset S = edges[rng.next_below(edges.size())];
        Subset W(rng.next_below(1ull << n));
        FragmentResult fr = min_fragment(h, S, W);
        Subset zone = S.unite(W);
        Subset pinned = fr.T.unite(W);
        for (Subset candidate : edges) {
            // every witness candidate yields a fragment no smaller than t
            if (candidate.subset_of(zone))
                REQUIRE(candidate.minus(W).size() >= fr.t);
            // and a candidate inside W u T must contain all of T
            if (candidate.subset_of(pinned))
                REQUIRE(fr.T.subset_of(candidate));
        }
        REQUIRE(fr.t <= S.size());
        REQUIRE(fr.T.subset_of(S));
    }
}

TEST_CASE("split round separates good edges from leftovers") {
    Hypergraph h(GroundSet(3), {Subset::of({0, 1})});

    SplitResult far = split_round(h, Subset::of({2}), 1.8);
    CHECK(far.good == std::vector<int>{0});
    CHECK(far.cover == std::vector<Subset>{Subset::of({0, 1})});
    CHECK(far.leftover.edges().empty());

    SplitResult near = split_round(h, Subset::of({1}), 1.8);
    CHECK(near.good.empty());
    CHECK(near.leftover.edges() == std::vector<Subset>{Subset::of({0})});

    Hypergraph point(GroundSet(1), {Subset::of({0})});
    SplitResult absorbed = split_round(point, Subset::of({0}), 0.9);
    CHECK(absorbed.good.empty());
    CHECK(absorbed.leftover.edges() == std::vector<Subset>{Subset{}});
}

TEST_CASE("a cover of the leftover extends to a cover of the round input") {
    CounterRng rng(Seed{42, 0});
    for (int trial = 0; trial < 300; ++trial) {
        int n = 8 + static_cast<int>(rng.next_below(5));
        Hypergraph h = random_instance(n, 6, 4, rng);
        double ell = h.ell_bound();
        Subset W(rng.next_below(1ull << n));
        SplitResult split = split_round(h, W, 0.9 * ell);
        for (Subset e : split.leftover.edges())
            REQUIRE(static_cast<double>(e.size()) < 0.9 * ell);
        // leftover edges cover themselves; together with the round cover they
        // must cover every input edge
        std::vector<Subset> family = split.cover;
        for (Subset e : split.leftover.edges()) family.push_back(e);
        REQUIRE(is_cover(family, h));
    }
}

TEST_CASE("schedule arithmetic") {
    ScheduleParams s2 = build_schedule(1024.0, 2, 1e-5, 50000);
    CHECK(s2.gamma == 7);

    ScheduleParams s10 = build_schedule(1024.0, 10, 1e-7, 2000000);
    CHECK(s10.gamma == 22);
    CHECK(s10.ell_i.back() == doctest::Approx(std::pow(0.9, 22) * 10).epsilon(1e-12));
    CHECK(s10.ell_i.back() > 0.0);
    CHECK(s10.ell_i.back() < 1.0);

    CHECK_THROWS_AS(build_schedule(1024.0, 4, 0.5, 10), error);        // w_1 > n
    CHECK_THROWS_AS(build_schedule(1024.0, 1, 0.01, 100), error);      // ell < 2
    CHECK_THROWS_AS(build_schedule(4.0, 4, 0.01, 100), error);         // L < 1024
    CHECK_NOTHROW(build_schedule(4.0, 4, 0.01, 1000, true));           // exploratory
}

TEST_CASE("late rounds switch to the inflated L_i") {
    ScheduleParams s = build_schedule(1024.0, 100, 1e-8, 50000000);
    double depth = std::log(100.0) / std::log(10.0 / 9.0);
    double boundary = s.gamma - std::sqrt(depth);
    for (int i = 1; i <= s.gamma; ++i) {
        double expected = (i < boundary) ? 1024.0 : 1024.0 * std::sqrt(std::log2(100.0));
        CHECK(s.L_i[static_cast<std::size_t>(i - 1)] == doctest::Approx(expected));
    }
    CHECK(s.implied_C == doctest::Approx(static_cast<double>(s.total_w) /
                                         (1024.0 * 1e-8 * std::log2(100.0) * 50000000)));
}

TEST_CASE("success1 is the strict log-space inequality") {
    CHECK(check_success1({}, 0.5, 1024.0, 2.0));
    CHECK(!check_success1({Subset::of({0, 1})}, 0.1, 1024.0, 2.0));  // 0.01 >= 1/1024
    CHECK(check_success1({Subset::of({0, 1, 2})}, 0.001, 1024.0, 2.0));
    // deep underflow regime: p^|U| ~ 2^-1500 must still compare correctly
    Subset big;
    for (int e = 0; e < 50; ++e) big.add(e);
    CHECK(check_success1({big}, 1e-10, 1024.0, 2.0));
}

TEST_CASE("process on a single edge, forced absorption and forced success") {
    Hypergraph h(GroundSet(20), {Subset::of({0, 1})});

    // w_i = 2 per round; scan seeds until both outcomes appear
    bool saw_absorbed = false, saw_good = false;
    for (std::uint64_t s = 0; s < 200 && !(saw_absorbed && saw_good); ++s) {
        ScheduleParams sched = build_schedule(0.5, 2, 0.2, 20, true);
        ProcessTranscript tr = run_process(h, sched, Seed{s, 0});
        REQUIRE(tr.i_max <= sched.gamma);
        if (!tr.rounds.front().success2) {
            // absorption in round one: the leftover holds the empty set
            saw_absorbed = true;
            CHECK(tr.i_max == 1);
            CHECK(!tr.terminated_successfully);
            CHECK(h.in_upset(tr.w_union));
        }
        if (tr.rounds.front().good == std::vector<int>{0}) {
            saw_good = true;
            CHECK(tr.rounds.front().cover == std::vector<Subset>{Subset::of({0, 1})});
            bool expect_success = 0.2 * 0.2 < std::pow(sched.L_i[0], -0.5 * sched.ell_i[0]);
            if (tr.i_max == 1) CHECK(tr.terminated_successfully == expect_success);
        }
    }
    CHECK(saw_absorbed);
    CHECK(saw_good);
}

TEST_CASE("process transcripts satisfy the structural propositions") {
    CounterRng rng(Seed{43, 0});
    int successful_seen = 0, suc2_failures_seen = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 30 + static_cast<int>(rng.next_below(21));
        Hypergraph h = random_instance(n, 5, 4, rng);
        if (h.contains_empty_edge() || h.ell_bound() < 2) continue;
        double p = 0.01 + 0.04 * rng.next_unit();
        ScheduleParams sched;
        try {
            sched = build_schedule(2.0, h.ell_bound(), p, n, true);
        } catch (const error&) {
            continue;
        }
        ProcessTranscript tr = run_process(h, sched, Seed{99, static_cast<std::uint64_t>(trial)});

        REQUIRE(tr.i_max <= sched.gamma);
        Subset prefix;
        Subset seen_union;
        for (const RoundRecord& rec : tr.rounds) {
            REQUIRE(!rec.W.intersects(seen_union)); // W_i pairwise disjoint
            seen_union = seen_union.unite(rec.W);
            REQUIRE(rec.W.size() == sched.w_i[static_cast<std::size_t>(rec.i - 1)]);
            prefix = prefix.unite(rec.W);
            if (!rec.success2) {
                ++suc2_failures_seen;
                REQUIRE(h.in_upset(prefix));
            }
        }
        if (tr.terminated_successfully) {
            ++successful_seen;
            REQUIRE(is_cover(tr.assembled_cover, h));
            double budget = 0.0;
            for (int k = 0; k < tr.i_max; ++k)
                budget += std::pow(sched.L_i[static_cast<std::size_t>(k)],
                                   -0.5 * sched.ell_i[static_cast<std::size_t>(k)]);
            REQUIRE(std::exp2(log2_cover_cost(tr.assembled_cover, p)) <= budget + 1e-12);
        }
    }
    CHECK(successful_seen > 0);
    CHECK(suc2_failures_seen > 0);
}

TEST_CASE("process rejects degenerate inputs") {
    ScheduleParams sched = build_schedule(2.0, 2, 0.05, 40, true);
    CHECK_THROWS_AS(run_process(Hypergraph(GroundSet(40), {}), sched, Seed{}), error);
    CHECK_THROWS_AS(run_process(Hypergraph(GroundSet(40), {Subset{}}), sched, Seed{}),
                    error);
}

TEST_CASE("exact counting bound on a single small edge") {
    // n=14, one edge of size 3, w=1: the 14-way enumeration is fully checkable
    Hypergraph h(GroundSet(14), {Subset::of({0, 1, 2})});
    double L = 1024.0;
    double p = 1.0 / (L * 14.0); // w = ceil(L*p*n) = 1
    Lemma31Result table = lemma31_table(h, p, L);
    CHECK(table.w == 1);
    CHECK(table.choices == 14);
    CHECK(table.step_ok);
    CHECK(table.total_ok);

    Lemma31PerM m3 = lemma31_bruteforce(h, p, L, 3);
    // 11 of the 14 W miss the edge entirely: fragment = S, t = 3
    CHECK(m3.log2_lhs == doctest::Approx(3 * std::log2(p) + std::log2(11.0)));
    CHECK(m3.log2_rhs_step == doctest::Approx(std::log2(14.0) - 3 * std::log2(L) + 3));
    CHECK(m3.log2_lhs <= m3.log2_rhs_step);
}

TEST_CASE("sampled lemma statistics match the enumeration") {
    Hypergraph h(GroundSet(10), {Subset::of({0, 1, 2}), Subset::of({2, 3, 4})});
    double L = 1024.0;
    double p = 2.0 / (L * 10.0); // w = 2
    Lemma31Result table = lemma31_table(h, p, L);

    double exact_mean = 0.0;
    for (const auto& row : table.rows)
        exact_mean += std::exp2(row.log2_lhs) / static_cast<double>(table.choices);

    EmpiricalLemma31 emp = empirical_lemma31(h, p, L, 20000, Seed{7, 0});
    CHECK(emp.fail_rate >= 0.0);
    CHECK(emp.fail_rate <= 1.0);
    CHECK(emp.mean_cost == doctest::Approx(exact_mean).epsilon(0.05));

    // tiny p: the single-edge cover cost always beats the success bound
    Hypergraph single(GroundSet(10), {Subset::of({0, 1, 2})});
    EmpiricalLemma31 tiny = empirical_lemma31(single, 1e-6, 1024.0, 500, Seed{8, 0});
    CHECK(tiny.fail_rate == 0.0);
}
