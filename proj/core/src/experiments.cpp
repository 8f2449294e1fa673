#include "kklab/experiments.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace kklab {

namespace {

const std::map<std::string, Family> family_names = {
    {"single_edge", Family::single_edge},
    {"singletons", Family::singletons},
    {"random_k_uniform", Family::random_k_uniform},
    {"triangles", Family::triangles},
    {"perfect_matchings", Family::perfect_matchings},
};

std::string family_name(Family f) {
    for (const auto& [name, fam] : family_names)
        if (fam == f) return name;
    return "?";
}

// slot index of the pair {a,b}, a < b, among the edges of K_v
int slot_index(int a, int b, int v) {
    return a * v - a * (a + 1) / 2 + (b - a - 1);
}

void matchings_rec(int v, Subset used_vertices, Subset slots,
                   std::vector<Subset>& out) {
    int a = -1;
    for (int x = 0; x < v; ++x) {
        if (!used_vertices.contains(x)) {
            a = x;
            break;
        }
    }
    if (a < 0) {
        out.push_back(slots);
        return;
    }
    for (int b = a + 1; b < v; ++b) {
        if (used_vertices.contains(b)) continue;
        Subset next_used = used_vertices;
        next_used.add(a);
        next_used.add(b);
        Subset next_slots = slots;
        next_slots.add(slot_index(a, b, v));
        matchings_rec(v, next_used, next_slots, out);
    }
}

} // namespace

InstanceSpec InstanceSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    auto it = family_names.find(name);
    if (it == family_names.end())
        fail(errc::malformed_document, "unknown instance family: " + name);

    InstanceSpec spec;
    spec.family = it->second;
    std::map<std::string, long long> params;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                fail(errc::malformed_document, "bad instance parameter: " + item);
            try {
                params[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
            } catch (const std::exception&) {
                fail(errc::malformed_document, "bad instance parameter: " + item);
            }
        }
    }
    auto take = [&](const char* key, int& dst) {
        if (auto p = params.find(key); p != params.end()) {
            dst = static_cast<int>(p->second);
            params.erase(p);
        }
    };
    take("k", spec.k);
    take("n", spec.n);
    take("v", spec.v);
    take("count", spec.count);
    if (auto p = params.find("seed"); p != params.end()) {
        spec.seed = static_cast<std::uint64_t>(p->second);
        params.erase(p);
    }
    if (!params.empty())
        fail(errc::malformed_document,
             "unknown instance parameter: " + params.begin()->first);
    return spec;
}

std::string InstanceSpec::to_string() const {
    std::stringstream ss;
    ss << family_name(family) << ':';
    switch (family) {
    case Family::single_edge: ss << "k=" << k; break;
    case Family::singletons: ss << "n=" << n; break;
    case Family::random_k_uniform:
        ss << "n=" << n << ",k=" << k << ",count=" << count << ",seed=" << seed;
        break;
    case Family::triangles:
    case Family::perfect_matchings: ss << "v=" << v; break;
    }
    return ss.str();
}

Hypergraph generate(const InstanceSpec& spec) {
    switch (spec.family) {
    case Family::single_edge: {
        if (spec.k < 1 || spec.k > max_ground_size)
            fail(errc::malformed_document, "single_edge requires 1 <= k <= 63");
        return Hypergraph(GroundSet(spec.k), {Subset((1ull << spec.k) - 1)});
    }
    case Family::singletons: {
        if (spec.n < 1 || spec.n > max_ground_size)
            fail(errc::malformed_document, "singletons requires 1 <= n <= 63");
        std::vector<Subset> edges;
        for (int e = 0; e < spec.n; ++e) edges.push_back(Subset(1ull << e));
        return Hypergraph(GroundSet(spec.n), std::move(edges));
    }
    case Family::random_k_uniform: {
        if (spec.n < 1 || spec.n > max_ground_size || spec.k < 1 || spec.k > spec.n ||
            spec.count < 1)
            fail(errc::malformed_document, "bad random_k_uniform parameters");
        std::vector<Subset> edges;
        std::uint64_t attempt = 0;
        while (static_cast<int>(edges.size()) < spec.count) {
            if (++attempt > 1000ull * static_cast<std::uint64_t>(spec.count))
                fail(errc::malformed_document, "cannot draw enough distinct edges");
            Subset s = sample_uniform_m_subset(GroundSet(spec.n), spec.k,
                                               Seed{spec.seed, attempt});
            if (std::find(edges.begin(), edges.end(), s) == edges.end())
                edges.push_back(s);
        }
        return Hypergraph(GroundSet(spec.n), std::move(edges));
    }
    case Family::triangles: {
        int v = spec.v;
        if (v < 3 || v * (v - 1) / 2 > max_ground_size)
            fail(errc::malformed_document, "triangles requires 3 <= v <= 11");
        std::vector<Subset> edges;
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                for (int c = b + 1; c < v; ++c)
                    edges.push_back(Subset::of({slot_index(a, b, v), slot_index(a, c, v),
                                                slot_index(b, c, v)}));
        return Hypergraph(GroundSet(v * (v - 1) / 2), std::move(edges));
    }
    case Family::perfect_matchings: {
        int v = spec.v;
        if (v < 2 || v % 2 != 0 || v * (v - 1) / 2 > max_ground_size)
            fail(errc::malformed_document, "perfect_matchings requires even 2 <= v <= 11");
        std::vector<Subset> edges;
        matchings_rec(v, Subset{}, Subset{}, edges);
        return Hypergraph(GroundSet(v * (v - 1) / 2), std::move(edges));
    }
    }
    fail(errc::malformed_document, "unreachable instance family");
}

KKReport run_kk_report(const InstanceSpec& spec, const KKConfig& config, Seed seed) {
    Hypergraph h = generate(spec);

    KKReport report;
    report.instance = spec;
    report.n = h.n();
    report.ell = h.largest_minimal_element();
    report.q = q_exact(h, config.tol).q;
    report.p_c = p_c_bisect(h, config.pc_mode, config.tol, seed, config.mc_trials);
    if (config.pc_mode == PcMode::exact && report.q > report.p_c + 2 * config.tol)
        throw std::logic_error("expectation-threshold exceeded the threshold");
    if (report.ell >= 2)
        report.ratio = report.p_c / (report.q * std::log2(static_cast<double>(report.ell)));

    double process_p = config.process_p.value_or(report.q);
    report.stats.seeds = config.seeds;
    for (long s = 0; s < config.seeds; ++s) {
        try {
            ScheduleParams sched = build_schedule(config.L, h.ell_bound(), process_p,
                                                  h.n(), config.exploratory);
            ProcessTranscript tr =
                run_process(h, sched, Seed{seed.master, seed.stream + static_cast<std::uint64_t>(s)});
            ++report.stats.feasible;
            if (tr.terminated_successfully) ++report.stats.successful;
            report.stats.mean_cost += cover_cost(tr.assembled_cover, process_p);
        } catch (const error& e) {
            if (e.code() != errc::insufficient_ground && e.code() != errc::bad_ell) throw;
        }
    }
    if (report.stats.feasible > 0)
        report.stats.mean_cost /= static_cast<double>(report.stats.feasible);
    return report;
}

std::string kk_csv_header() {
    return "family,params,n,ell,q,p_c,ratio,seeds,success_rate,mean_cost";
}

std::string kk_csv_row(const KKReport& r) {
    std::stringstream ss;
    ss.precision(12);
    std::string spec = r.instance.to_string();
    auto colon = spec.find(':');
    ss << spec.substr(0, colon) << ',' << spec.substr(colon + 1) << ',' << r.n << ','
       << r.ell << ',' << r.q << ',' << r.p_c << ',';
    if (r.ratio)
        ss << *r.ratio;
    else
        ss << "NA";
    ss << ',' << r.stats.seeds << ',';
    if (r.stats.feasible > 0)
        ss << static_cast<double>(r.stats.successful) / static_cast<double>(r.stats.feasible)
           << ',' << r.stats.mean_cost;
    else
        ss << "NA,NA";
    return ss.str();
}

} // namespace kklab
