#pragma once

#include <stdexcept>
#include <string>

namespace kklab {

enum class errc {
    edge_out_of_range,
    empty_ground,
    no_edges,
    too_large_for_exact,
    bad_cardinality,
    degenerate_family,
    not_an_edge,
    insufficient_ground,
    bad_ell,
    degenerate_input,
    budget_exceeded,
    malformed_document,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace kklab
