#pragma once

#include "kklab/hypergraph.hpp"

namespace kklab {

inline constexpr long default_candidate_budget = 2000000;
inline constexpr double default_bisect_tol = 1e-9;

struct CoverCertificate {
    std::vector<Subset> sets;
    double p = 0.0;
};

// Sum of p^|S| over sets, with 0^0 = 1 (the empty set costs 1).
double cover_cost(const std::vector<Subset>& sets, double p);

// True iff every edge of h contains some member of sets.
bool is_cover(const std::vector<Subset>& sets, const Hypergraph& h);

// True iff cert.sets covers h and its cost at cert.p is at most 1/2.
bool verify_certificate(const CoverCertificate& cert, const Hypergraph& h);

struct MinCoverResult {
    double cost = 0.0;
    std::vector<Subset> sets;
};

// Exact minimum of cover_cost over all families covering h. Candidates are
// restricted to subsets of edges: a cover set U of edge S can be replaced by
// U \cap S at equal or smaller cost.
MinCoverResult min_cover_cost(const Hypergraph& h, double p,
                              long budget = default_candidate_budget);

struct QResult {
    double q = 0.0;
    CoverCertificate witness; // at a probability within tolerance below q
};

// The expectation-threshold: maximum p at which h admits a cover of cost
// <= 1/2, by bisection (min cover cost is nondecreasing in p).
QResult q_exact(const Hypergraph& h, double tol = default_bisect_tol,
                long budget = default_candidate_budget);

} // namespace kklab
