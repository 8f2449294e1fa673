#pragma once

#include <algorithm>
#include <vector>

#include "kklab/subset.hpp"

namespace kklab {

// An ell-bounded hypergraph on {0..n-1}: deduplicated edges in canonical
// order (size, then ascending element list). Immutable after construction.
class Hypergraph {
public:
    Hypergraph(GroundSet ground, std::vector<Subset> edges)
        : ground_(ground), edges_(std::move(edges)) {
        for (Subset e : edges_) {
            if (!e.subset_of(Subset(ground_.full_mask())))
                fail(errc::edge_out_of_range, "edge contains an element >= n");
        }
        std::sort(edges_.begin(), edges_.end(), canonical_less);
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (Subset e : edges_) ell_bound_ = std::max(ell_bound_, e.size());
    }

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.n; }
    const std::vector<Subset>& edges() const { return edges_; }
    int ell_bound() const { return ell_bound_; }

    bool has_edge(Subset s) const {
        return std::binary_search(edges_.begin(), edges_.end(), s, canonical_less);
    }

    bool contains_empty_edge() const {
        return !edges_.empty() && edges_.front().empty();
    }

    // True iff some edge is contained in a.
    bool in_upset(Subset a) const {
        for (Subset e : edges_) {
            if (e.size() > a.size()) break; // edges sorted by size
            if (e.subset_of(a)) return true;
        }
        return false;
    }

    // The hypergraph of inclusion-minimal edges; generates the same upset.
    Hypergraph minimal_antichain() const {
        std::vector<Subset> keep;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < i; ++j) {
                if (edges_[j].subset_of(edges_[i]) && edges_[j] != edges_[i]) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) keep.push_back(edges_[i]);
        }
        return Hypergraph(ground_, std::move(keep));
    }

    // ell of the generated upset: max size over inclusion-minimal edges.
    int largest_minimal_element() const {
        if (edges_.empty()) fail(errc::no_edges, "hypergraph has no edges");
        return minimal_antichain().ell_bound();
    }

    bool operator==(const Hypergraph&) const = default;

private:
    GroundSet ground_;
    std::vector<Subset> edges_;
    int ell_bound_ = 0;
};

} // namespace kklab
