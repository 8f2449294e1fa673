// kklab: threshold / expectation-threshold laboratory CLI.
//
// Exit codes: 0 success or valid, 1 invalid certificate, 2 degenerate
// family, 3 infeasible schedule, 4 malformed input, 5 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kklab/experiments.hpp"
#include "kklab/io.hpp"

namespace {

using namespace kklab;

int exit_code_for(errc code) {
    switch (code) {
    case errc::degenerate_family:
    case errc::degenerate_input: return 2;
    case errc::insufficient_ground: return 3;
    case errc::budget_exceeded: return 5;
    default: return 4;
    }
}

long env_budget(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    return (end && *end == '\0' && parsed > 0) ? parsed : fallback;
}

// --instance accepts either a generator spec (family:params) or a JSON file.
Hypergraph resolve_instance(const std::string& text) {
    if (text.find(':') != std::string::npos && !std::ifstream(text).good())
        return generate(InstanceSpec::parse(text));
    return hypergraph_from_json(load_json_file(text));
}

void emit(const std::string& out_path, const json& doc) {
    if (out_path.empty())
        std::cout << doc.dump(2) << '\n';
    else
        save_json_file(out_path, doc);
}

struct CommonOpts {
    std::string instance;
    std::string out;
    double tol = 1e-9;
    long trials = default_mc_trials;
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
    bool exploratory = false;

    Seed seed() const { return Seed{master, stream}; }

    void attach(CLI::App* cmd, bool needs_instance = true) {
        auto* opt = cmd->add_option("--instance", instance,
                                    "generator spec (family:k=v,..) or JSON file");
        if (needs_instance) opt->required();
        cmd->add_option("--out", out, "output file (default stdout)");
        cmd->add_option("--tol", tol, "bisection tolerance");
        cmd->add_option("--trials", trials, "Monte Carlo trial count");
        cmd->add_option("--seed", master, "master seed");
        cmd->add_option("--stream", stream, "seed stream");
        cmd->add_flag("--exploratory", exploratory,
                      "allow schedules outside the theorem regime (L < 1024)");
    }
};

int cmd_pc(const CommonOpts& o, const std::string& mode) {
    Hypergraph h = resolve_instance(o.instance);
    PcMode m = (mode == "mc") ? PcMode::mc : PcMode::exact;
    double pc = p_c_bisect(h, m, o.tol, o.seed(), o.trials);
    double residual =
        (m == PcMode::exact) ? std::abs(mu_exact(h, pc).point - 0.5) : -1.0;
    json doc{{"p_c", real_to_string(pc)}, {"mode", mode}, {"tol", real_to_string(o.tol)}};
    if (residual >= 0) doc["residual"] = real_to_string(residual);
    std::cout.precision(12);
    std::cout << "p_c = " << pc << '\n';
    if (!o.out.empty()) save_json_file(o.out, doc);
    return 0;
}

int cmd_q(const CommonOpts& o) {
    Hypergraph h = resolve_instance(o.instance);
    QResult r = q_exact(h, o.tol, env_budget("KKLAB_CANDIDATE_BUDGET", default_candidate_budget));
    std::cout.precision(12);
    std::cout << "q = " << r.q << "  (witness: " << r.witness.sets.size()
              << " sets, cost " << cover_cost(r.witness.sets, r.witness.p) << ")\n";
    if (!o.out.empty()) save_json_file(o.out, certificate_to_json(r.witness));
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& cert_path) {
    Hypergraph h = resolve_instance(o.instance);
    CoverCertificate cert = certificate_from_json(load_json_file(cert_path));
    if (!is_cover(cert.sets, h)) {
        for (Subset edge : h.edges()) {
            bool covered = false;
            for (Subset u : cert.sets)
                if (u.subset_of(edge)) covered = true;
            if (!covered) {
                std::cout << "NOT_A_COVER uncovered_edge=" << json(edge.members()).dump()
                          << '\n';
                return 1;
            }
        }
    }
    double cost = cover_cost(cert.sets, cert.p);
    if (cost > 0.5) {
        std::cout << "COST_EXCEEDS_HALF cost=" << cost << '\n';
        return 1;
    }
    std::cout << "VALID cost=" << cost << '\n';
    return 0;
}

int cmd_process(const CommonOpts& o, double p, double L, const std::string& replay_path) {
    if (!replay_path.empty()) {
        ProcessTranscript tr = transcript_from_json(load_json_file(replay_path));
        std::vector<std::string> bad = replay_verify(tr);
        if (bad.empty()) {
            std::cout << "REPLAY_OK rounds=" << tr.rounds.size()
                      << " i_max=" << tr.i_max << '\n';
            return 0;
        }
        for (const auto& msg : bad) std::cout << "REPLAY_VIOLATION " << msg << '\n';
        return 1;
    }
    Hypergraph h = resolve_instance(o.instance);
    ScheduleParams sched = build_schedule(L, h.ell_bound(), p, h.n(), o.exploratory);
    ProcessTranscript tr = run_process(h, sched, o.seed());
    std::cout << "rounds=" << tr.rounds.size() << " i_max=" << tr.i_max
              << " successful=" << (tr.terminated_successfully ? "yes" : "no")
              << " cover_sets=" << tr.assembled_cover.size() << '\n';
    emit(o.out, transcript_to_json(tr));
    return 0;
}

int cmd_lemma31(const CommonOpts& o, double p, double L) {
    Hypergraph h = resolve_instance(o.instance);
    long budget = env_budget("KKLAB_ENUM_BUDGET", default_enum_budget);
    Lemma31Result table = lemma31_table(h, p, L, budget);
    std::cout.precision(9);
    std::cout << "w=" << table.w << " choices=" << table.choices << '\n';
    std::cout << "m  pairs  log2_lhs  log2_rhs_step\n";
    for (const auto& row : table.rows)
        std::cout << row.m << "  " << row.pair_count << "  " << row.log2_lhs << "  "
                  << row.log2_rhs_step << (row.log2_lhs <= row.log2_rhs_step ? "  ok" : "  FAIL")
                  << '\n';
    std::cout << "total: log2_lhs=" << table.log2_lhs_total
              << " log2_rhs=" << table.log2_rhs_total
              << (table.total_ok ? "  ok" : "  FAIL") << '\n';
    if (o.trials > 0) {
        EmpiricalLemma31 emp = empirical_lemma31(h, p, L, o.trials, o.seed());
        std::cout << "sampled: fail_rate=" << emp.fail_rate << " (bound " << emp.fail_bound
                  << ") mean_cost=" << emp.mean_cost << " (bound " << emp.mean_bound
                  << ")\n";
    }
    return (table.step_ok && table.total_ok) ? 0 : 1;
}

int cmd_kk(const CommonOpts& o, const std::string& corpus_path, long seeds, double L) {
    std::vector<InstanceSpec> specs;
    if (!corpus_path.empty()) {
        std::ifstream in(corpus_path);
        if (!in) fail(errc::malformed_document, "cannot open corpus " + corpus_path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            try {
                specs.push_back(InstanceSpec::parse(line));
            } catch (const error&) {
                fail(errc::malformed_document,
                     "malformed corpus line " + std::to_string(lineno) + ": " + line);
            }
        }
    } else {
        for (int k = 1; k <= 5; ++k)
            specs.push_back(InstanceSpec::parse("single_edge:k=" + std::to_string(k)));
        for (int n = 2; n <= 10; ++n)
            specs.push_back(InstanceSpec::parse("singletons:n=" + std::to_string(n)));
        specs.push_back(InstanceSpec::parse("triangles:v=4"));
        specs.push_back(InstanceSpec::parse("triangles:v=5"));
        specs.push_back(InstanceSpec::parse("perfect_matchings:v=4"));
        specs.push_back(InstanceSpec::parse("perfect_matchings:v=6"));
    }

    KKConfig config;
    config.tol = o.tol;
    config.seeds = seeds;
    config.L = L;
    config.exploratory = o.exploratory || L < theorem_min_L;

    std::ostringstream csv;
    csv << kk_csv_header() << '\n';
    for (const auto& spec : specs)
        csv << kk_csv_row(run_kk_report(spec, config, o.seed())) << '\n';
    if (o.out.empty())
        std::cout << csv.str();
    else {
        std::ofstream out(o.out);
        out << csv.str();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph threshold laboratory"};
    app.require_subcommand(1);

    CommonOpts pc_o, q_o, verify_o, process_o, lemma_o, kk_o;
    std::string pc_mode = "exact";
    std::string cert_path, replay_path, corpus_path;
    double proc_p = 0.1, proc_L = theorem_min_L;
    double lem_p = 0.0, lem_L = theorem_min_L;
    long kk_seeds = 0;
    double kk_L = 2.0;

    auto* pc = app.add_subcommand("pc", "threshold p_c by bisection");
    pc_o.attach(pc);
    pc->add_option("--mode", pc_mode, "exact|mc")->check(CLI::IsMember({"exact", "mc"}));

    auto* q = app.add_subcommand("q", "expectation-threshold q with witness cover");
    q_o.attach(q);

    auto* verify = app.add_subcommand("verify", "check a cover certificate");
    verify_o.attach(verify);
    verify->add_option("--cert", cert_path, "certificate JSON")->required();

    auto* process = app.add_subcommand("process", "run or replay the cover construction");
    process_o.attach(process, false);
    process->add_option("--p", proc_p, "edge probability");
    process->add_option("--L", proc_L, "schedule constant L");
    process->add_option("--replay", replay_path, "re-verify a transcript file");

    auto* lemma = app.add_subcommand("lemma31", "exact counting check over all W");
    lemma_o.attach(lemma);
    lemma_o.trials = 0;
    lemma->add_option("--p", lem_p, "edge probability")->required();
    lemma->add_option("--L", lem_L, "constant L");

    auto* kk = app.add_subcommand("kk", "q / p_c / ratio report over a corpus");
    kk_o.attach(kk, false);
    kk->add_option("--corpus", corpus_path, "file of instance specs, one per line");
    kk->add_option("--seeds", kk_seeds, "process runs per instance");
    kk->add_option("--L", kk_L, "schedule constant for process runs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pc->parsed()) return cmd_pc(pc_o, pc_mode);
        if (q->parsed()) return cmd_q(q_o);
        if (verify->parsed()) return cmd_verify(verify_o, cert_path);
        if (process->parsed()) {
            if (replay_path.empty() && process_o.instance.empty()) {
                std::cerr << "process requires --instance or --replay\n";
                return 4;
            }
            return cmd_process(process_o, proc_p, proc_L, replay_path);
        }
        if (lemma->parsed()) return cmd_lemma31(lemma_o, lem_p, lem_L);
        if (kk->parsed()) return cmd_kk(kk_o, corpus_path, kk_seeds, kk_L);
    } catch (const kklab::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
