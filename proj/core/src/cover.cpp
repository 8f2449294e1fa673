#include "kklab/cover.hpp"

#include <cmath>
#include <limits>

namespace kklab {

double cover_cost(const std::vector<Subset>& sets, double p) {
    double total = 0.0;
    for (Subset s : sets) {
        int k = s.size();
        total += (k == 0) ? 1.0 : std::pow(p, k);
    }
    return total;
}

bool is_cover(const std::vector<Subset>& sets, const Hypergraph& h) {
    for (Subset edge : h.edges()) {
        bool covered = false;
        for (Subset u : sets) {
            if (u.subset_of(edge)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool verify_certificate(const CoverCertificate& cert, const Hypergraph& h) {
    return is_cover(cert.sets, h) && cover_cost(cert.sets, cert.p) <= 0.5;
}

namespace {

// Exact weighted set cover over the candidate universe (all subsets of the
// inclusion-minimal edges, plus the empty set), by dynamic programming over
// the mask of covered edges. The candidate geometry is p-independent, so one
// instance serves a whole bisection.
class ExactCoverSolver {
public:
    ExactCoverSolver(const Hypergraph& h, long budget)
        : reduced_(h.minimal_antichain()) {
        const auto& edges = reduced_.edges();
        edge_count_ = static_cast<int>(edges.size());
        if (edge_count_ == 0) fail(errc::no_edges, "cannot cover an empty hypergraph");
        if (edge_count_ > 22)
            fail(errc::budget_exceeded, "too many minimal edges for exact cover search");

        long universe = 0;
        for (Subset e : edges) {
            universe += 1l << e.size();
            if (universe > budget)
                fail(errc::budget_exceeded, "candidate universe exceeds budget");
        }

        // enumerate distinct candidates and their edge-coverage masks
        std::vector<Subset> raw;
        raw.push_back(Subset{}); // the empty set covers everything at cost 1
        for (Subset e : edges)
            for (std::uint64_t sub = e.bits; sub; sub = (sub - 1) & e.bits)
                raw.push_back(Subset(sub));
        std::sort(raw.begin(), raw.end(), canonical_less);
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        candidates_ = std::move(raw);

        coverage_.resize(candidates_.size());
        per_edge_.resize(static_cast<std::size_t>(edge_count_));
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            std::uint32_t mask = 0;
            for (int e = 0; e < edge_count_; ++e) {
                if (candidates_[c].subset_of(edges[static_cast<std::size_t>(e)])) {
                    mask |= 1u << e;
                    per_edge_[static_cast<std::size_t>(e)].push_back(c);
                }
            }
            coverage_[c] = mask;
        }
    }

    MinCoverResult solve(double p) const {
        std::vector<double> cost(candidates_.size());
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            int k = candidates_[c].size();
            cost[c] = (k == 0) ? 1.0 : std::pow(p, k);
        }

        const std::uint32_t full = (edge_count_ == 32) ? ~0u : ((1u << edge_count_) - 1);
        const double inf = std::numeric_limits<double>::infinity();
        std::vector<double> best(full + 1u, inf);
        std::vector<int> nsets(full + 1u, 0);
        std::vector<std::uint32_t> from(full + 1u, 0);
        std::vector<std::size_t> via(full + 1u, 0);
        best[0] = 0.0;

        for (std::uint32_t mask = 0; mask < full; ++mask) {
            if (best[mask] == inf) continue;
            int e = std::countr_zero(~mask & full); // lowest uncovered edge
            for (std::size_t c : per_edge_[static_cast<std::size_t>(e)]) {
                std::uint32_t next = mask | coverage_[c];
                double cand = best[mask] + cost[c];
                int cnt = nsets[mask] + 1;
                if (cand < best[next] - tie_eps ||
                    (cand < best[next] + tie_eps && cnt < nsets[next])) {
                    best[next] = cand;
                    nsets[next] = cnt;
                    from[next] = mask;
                    via[next] = c;
                }
            }
        }

        MinCoverResult out;
        out.cost = best[full];
        for (std::uint32_t mask = full; mask != 0; mask = from[mask])
            out.sets.push_back(candidates_[via[mask]]);
        std::sort(out.sets.begin(), out.sets.end(), canonical_less);
        return out;
    }

private:
    static constexpr double tie_eps = 1e-15;
    Hypergraph reduced_;
    int edge_count_ = 0;
    std::vector<Subset> candidates_;
    std::vector<std::uint32_t> coverage_;
    std::vector<std::vector<std::size_t>> per_edge_;
};

} // namespace

MinCoverResult min_cover_cost(const Hypergraph& h, double p, long budget) {
    return ExactCoverSolver(h, budget).solve(p);
}

QResult q_exact(const Hypergraph& h, double tol, long budget) {
    if (h.edges().empty()) fail(errc::no_edges, "q undefined for an empty edge list");
    if (h.contains_empty_edge())
        fail(errc::degenerate_family, "family containing the empty set is never p-small");

    ExactCoverSolver solver(h, budget);

    // nonempty edges force min cover cost >= 1 at p = 1
    MinCoverResult at_one = solver.solve(1.0);
    if (at_one.cost <= 0.5) fail(errc::degenerate_family, "min cover cost <= 1/2 at p = 1");

    double lo = 0.0, hi = 1.0;
    MinCoverResult witness = solver.solve(0.0);
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        MinCoverResult r = solver.solve(mid);
        if (r.cost <= 0.5) {
            lo = mid;
            witness = std::move(r);
        } else {
            hi = mid;
        }
    }

    QResult out;
    out.q = 0.5 * (lo + hi);
    out.witness = CoverCertificate{std::move(witness.sets), lo};
    return out;
}

} // namespace kklab
