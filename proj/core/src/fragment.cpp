#include "kklab/fragment.hpp"

#include "kklab/measures.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace kklab {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// ceil with a guard against float noise pushing an integral product up
int ceil_count(double x) {
    return static_cast<int>(std::ceil(x - 1e-9));
}

double log2_binom(int n, int k) {
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
           std::log(2.0);
}

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// log2(2^a + 2^b)
double log2_add(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    if (a < b) std::swap(a, b);
    return a + std::log2(1.0 + std::exp2(b - a));
}

} // namespace

FragmentResult min_fragment(const Hypergraph& h, Subset S, Subset W) {
    if (!h.has_edge(S)) fail(errc::not_an_edge, "S is not an edge of the hypergraph");
    Subset zone = S.unite(W);
    FragmentResult best;
    bool found = false;
    for (Subset candidate : h.edges()) { // canonical order fixes tie-breaking
        if (!candidate.subset_of(zone)) continue;
        Subset frag = candidate.minus(W);
        if (!found || frag.size() < best.t) {
            best = FragmentResult{frag, frag.size(), candidate};
            found = true;
        }
    }
    // S itself is always a witness, so found holds
    return best;
}

SplitResult split_round(const Hypergraph& h, Subset W, double threshold) {
    std::vector<int> good;
    std::vector<Subset> cover;
    std::vector<Subset> leftover_edges;
    const auto& edges = h.edges();
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        FragmentResult fr = min_fragment(h, edges[idx], W);
        if (static_cast<double>(fr.t) >= threshold) {
            if (!fr.T.subset_of(edges[idx]))
                throw std::logic_error("minimum fragment escaped its edge");
            good.push_back(static_cast<int>(idx));
            cover.push_back(fr.T);
        } else {
            leftover_edges.push_back(fr.T);
        }
    }
    std::sort(cover.begin(), cover.end(), canonical_less);
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    return SplitResult{std::move(good), std::move(cover),
                       Hypergraph(h.ground(), std::move(leftover_edges))};
}

ScheduleParams build_schedule(double L, int ell, double p, int n, bool exploratory) {
    if (ell < 2) fail(errc::bad_ell, "schedule requires ell >= 2");
    if (!(p > 0.0 && p < 1.0)) fail(errc::bad_ell, "schedule requires 0 < p < 1");
    if (!exploratory && L < theorem_min_L)
        fail(errc::bad_ell, "L < 1024 requires exploratory mode");

    ScheduleParams s;
    s.L = L;
    s.ell = ell;
    s.p = p;
    s.n = n;
    s.exploratory = exploratory;

    // log_{.9}(1/ell) = ln(ell) / ln(10/9)
    double depth = std::log(static_cast<double>(ell)) / std::log(10.0 / 9.0);
    s.gamma = static_cast<int>(std::floor(depth)) + 1;
    double boundary = static_cast<double>(s.gamma) - std::sqrt(depth);
    double tail_L = L * std::sqrt(std::log2(static_cast<double>(ell)));

    for (int i = 1; i <= s.gamma; ++i) {
        double ell_i = std::pow(0.9, i) * ell;
        double L_i = (static_cast<double>(i) < boundary) ? L : tail_L;
        int w = ceil_count(L_i * p * n);
        s.ell_i.push_back(ell_i);
        s.L_i.push_back(L_i);
        s.w_i.push_back(w);
        s.total_w += w;
    }
    if (s.total_w > n)
        fail(errc::insufficient_ground,
             "schedule needs " + std::to_string(s.total_w) + " elements, ground has " +
                 std::to_string(n));
    s.implied_C = static_cast<double>(s.total_w) /
                  (L * p * std::log2(static_cast<double>(ell)) * n);
    return s;
}

double log2_cover_cost(const std::vector<Subset>& cover, double p) {
    double total = neg_inf;
    double lp = (p > 0.0) ? std::log2(p) : neg_inf;
    for (Subset u : cover) {
        int k = u.size();
        double term = (k == 0) ? 0.0 : k * lp;
        total = log2_add(total, term);
    }
    return total;
}

bool check_success1(const std::vector<Subset>& cover, double p, double L_i,
                    double ell_i) {
    return log2_cover_cost(cover, p) < -0.5 * ell_i * std::log2(L_i);
}

ProcessTranscript run_process(const Hypergraph& h, const ScheduleParams& schedule,
                              Seed seed) {
    if (h.edges().empty() || h.contains_empty_edge())
        fail(errc::degenerate_input, "process requires nonempty edges without the empty set");
    if (schedule.ell != h.ell_bound())
        fail(errc::bad_ell, "schedule ell does not match the hypergraph bound");

    ProcessTranscript tr{schedule, h, {}, 0, false, {}, Subset{}};
    CounterRng rng(seed);

    Hypergraph current = h;
    Subset unconsumed(h.ground().full_mask());
    bool all_successful = true;

    for (int i = 1; i <= schedule.gamma; ++i) {
        std::size_t k = static_cast<std::size_t>(i - 1);
        Subset W = sample_uniform_m_subset_of(unconsumed.members(), schedule.w_i[k], rng);

        // the good-set threshold .9 * ell_{i-1} equals ell_i
        SplitResult split = split_round(current, W, schedule.ell_i[k]);

        RoundRecord rec{i,
                        W,
                        std::move(split.good),
                        std::move(split.cover),
                        std::move(split.leftover),
                        0.0,
                        false,
                        false};
        rec.log_cost = log2_cover_cost(rec.cover, schedule.p);
        rec.success1 = rec.log_cost < -0.5 * schedule.ell_i[k] * std::log2(schedule.L_i[k]);
        rec.success2 = !rec.leftover.contains_empty_edge();
        all_successful = all_successful && rec.success1 && rec.success2;

        bool done = rec.leftover.edges().empty() ||
                    (rec.leftover.edges().size() == 1 && rec.leftover.contains_empty_edge());

        current = rec.leftover;
        unconsumed = unconsumed.minus(W);
        tr.w_union = tr.w_union.unite(W);
        for (Subset u : rec.cover) tr.assembled_cover.push_back(u);
        tr.rounds.push_back(std::move(rec));

        if (done) {
            tr.i_max = i;
            break;
        }
    }
    // gamma rounds always suffice: ell_gamma < 1 forces size-0 fragments
    if (tr.i_max == 0) throw std::logic_error("process failed to terminate by round gamma");

    std::sort(tr.assembled_cover.begin(), tr.assembled_cover.end(), canonical_less);
    tr.assembled_cover.erase(
        std::unique(tr.assembled_cover.begin(), tr.assembled_cover.end()),
        tr.assembled_cover.end());
    tr.terminated_successfully = all_successful;
    return tr;
}

namespace {

// shared enumeration core: pair counts per fragment size m >= .9 ell
std::map<int, long long> count_fragment_pairs(const Hypergraph& h, int w, long budget) {
    int n = h.n();
    double ell = h.ell_bound();
    long long choices = binom_ll(n, w);
    if (choices > budget) fail(errc::budget_exceeded, "binom(n,w) exceeds enumeration budget");

    std::map<int, long long> counts;
    std::uint64_t full = (1ull << n);
    // Gosper's hack over all w-subsets
    std::uint64_t wmask = (w == 0) ? 0 : ((1ull << w) - 1);
    for (long long iter = 0; iter < choices; ++iter) {
        Subset W(wmask);
        std::set<std::pair<int, std::uint64_t>> seen; // dedup (m, T) per W
        for (Subset S : h.edges()) {
            FragmentResult fr = min_fragment(h, S, W);
            if (static_cast<double>(fr.t) >= 0.9 * ell)
                seen.insert({fr.t, fr.T.bits});
        }
        for (const auto& [m, bits] : seen) ++counts[m];

        if (wmask == 0) break;
        std::uint64_t c = wmask & (~wmask + 1);
        std::uint64_t r = wmask + c;
        wmask = (((r ^ wmask) >> 2) / c) | r;
        if (wmask >= full) break;
    }
    return counts;
}

} // namespace

Lemma31Result lemma31_table(const Hypergraph& h, double p, double L, long budget) {
    int n = h.n();
    int ell = h.ell_bound();
    int w = ceil_count(L * p * n);
    if (w > n) fail(errc::insufficient_ground, "w = ceil(L*p*n) exceeds n");

    std::map<int, long long> counts = count_fragment_pairs(h, w, budget);

    Lemma31Result out;
    out.w = w;
    out.choices = binom_ll(n, w);
    double lb = log2_binom(n, w);
    double lp = (p > 0.0) ? std::log2(p) : neg_inf;
    double lL = std::log2(L);
    out.log2_lhs_total = neg_inf;
    out.log2_rhs_total = lb - 0.6 * ell * lL;
    out.step_ok = true;

    int m_lo = static_cast<int>(std::ceil(0.9 * ell));
    for (int m = m_lo; m <= ell; ++m) {
        long long cnt = counts.count(m) ? counts.at(m) : 0;
        Lemma31Row row;
        row.m = m;
        row.pair_count = cnt;
        row.log2_lhs = (cnt == 0) ? neg_inf : m * lp + std::log2(static_cast<double>(cnt));
        row.log2_rhs_step = lb - m * lL + ell;
        if (row.log2_lhs > row.log2_rhs_step) out.step_ok = false;
        out.log2_lhs_total = log2_add(out.log2_lhs_total, row.log2_lhs);
        out.rows.push_back(row);
    }
    out.total_ok = out.log2_lhs_total <= out.log2_rhs_total;
    return out;
}

Lemma31PerM lemma31_bruteforce(const Hypergraph& h, double p, double L, int m,
                               long budget) {
    Lemma31Result table = lemma31_table(h, p, L, budget);
    Lemma31PerM out;
    out.log2_lhs = neg_inf;
    out.log2_rhs_step =
        log2_binom(h.n(), table.w) - m * std::log2(L) + h.ell_bound();
    out.log2_rhs_total = table.log2_rhs_total;
    for (const auto& row : table.rows)
        if (row.m == m) out.log2_lhs = row.log2_lhs;
    return out;
}

EmpiricalLemma31 empirical_lemma31(const Hypergraph& h, double p, double L,
                                   long trials, Seed seed) {
    int n = h.n();
    double ell = h.ell_bound();
    int w = ceil_count(L * p * n);
    if (w > n) fail(errc::insufficient_ground, "w = ceil(L*p*n) exceeds n");

    double success_log_bound = -0.5 * ell * std::log2(L);
    long fails = 0;
    double cost_sum = 0.0;
    for (long k = 0; k < trials; ++k) {
        Subset W = sample_uniform_m_subset(
            h.ground(), w, Seed{seed.master, seed.stream + static_cast<std::uint64_t>(k)});
        std::vector<Subset> cover;
        for (Subset S : h.edges()) {
            FragmentResult fr = min_fragment(h, S, W);
            if (static_cast<double>(fr.t) >= 0.9 * ell) cover.push_back(fr.T);
        }
        std::sort(cover.begin(), cover.end(), canonical_less);
        cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
        double lc = log2_cover_cost(cover, p);
        if (lc >= success_log_bound) ++fails;
        cost_sum += std::exp2(lc);
    }
    EmpiricalLemma31 out;
    out.fail_rate = static_cast<double>(fails) / static_cast<double>(trials);
    out.mean_cost = cost_sum / static_cast<double>(trials);
    out.fail_bound = std::exp2(-0.1 * ell * std::log2(L));
    out.mean_bound = std::exp2(-0.6 * ell * std::log2(L));
    return out;
}

} // namespace kklab
