#include "kklab/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace kklab {

std::string real_to_string(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::ostringstream ss;
    ss.precision(17);
    ss << x;
    return ss.str();
}

double real_from_string(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        fail(errc::malformed_document, "bad real literal: " + s);
    return v;
}

namespace {

json subset_to_json(Subset s) {
    return json(s.members());
}

Subset subset_from_json(const json& doc) {
    if (!doc.is_array()) fail(errc::malformed_document, "subset must be an array");
    std::vector<int> elems;
    for (const auto& e : doc) {
        if (!e.is_number_integer())
            fail(errc::malformed_document, "subset element must be an integer");
        elems.push_back(e.get<int>());
    }
    return Subset::from_elements(elems);
}

json family_to_json(const std::vector<Subset>& sets) {
    json arr = json::array();
    for (Subset s : sets) arr.push_back(subset_to_json(s));
    return arr;
}

std::vector<Subset> family_from_json(const json& doc) {
    if (!doc.is_array()) fail(errc::malformed_document, "set family must be an array");
    std::vector<Subset> out;
    for (const auto& e : doc) out.push_back(subset_from_json(e));
    return out;
}

double real_field(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_string())
        fail(errc::malformed_document, std::string("missing real field: ") + key);
    return real_from_string(doc.at(key).get<std::string>());
}

template <typename T>
T int_field(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_number_integer())
        fail(errc::malformed_document, std::string("missing integer field: ") + key);
    return doc.at(key).get<T>();
}

bool bool_field(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_boolean())
        fail(errc::malformed_document, std::string("missing boolean field: ") + key);
    return doc.at(key).get<bool>();
}

} // namespace

json hypergraph_to_json(const Hypergraph& h) {
    return json{{"n", h.n()}, {"edges", family_to_json(h.edges())}};
}

Hypergraph hypergraph_from_json(const json& doc) {
    if (!doc.is_object()) fail(errc::malformed_document, "hypergraph must be an object");
    int n = int_field<int>(doc, "n");
    if (n < 1) fail(errc::empty_ground, "hypergraph requires n >= 1");
    if (!doc.contains("edges")) fail(errc::malformed_document, "missing edges field");
    return Hypergraph(GroundSet(n), family_from_json(doc.at("edges")));
}

json certificate_to_json(const CoverCertificate& cert) {
    return json{{"p", real_to_string(cert.p)}, {"sets", family_to_json(cert.sets)}};
}

CoverCertificate certificate_from_json(const json& doc) {
    if (!doc.is_object()) fail(errc::malformed_document, "certificate must be an object");
    CoverCertificate cert;
    cert.p = real_field(doc, "p");
    if (!doc.contains("sets")) fail(errc::malformed_document, "missing sets field");
    cert.sets = family_from_json(doc.at("sets"));
    return cert;
}

json schedule_to_json(const ScheduleParams& s) {
    json ell_i = json::array(), L_i = json::array();
    for (double v : s.ell_i) ell_i.push_back(real_to_string(v));
    for (double v : s.L_i) L_i.push_back(real_to_string(v));
    return json{{"L", real_to_string(s.L)},
                {"ell", s.ell},
                {"p", real_to_string(s.p)},
                {"n", s.n},
                {"exploratory", s.exploratory},
                {"gamma", s.gamma},
                {"ell_i", ell_i},
                {"L_i", L_i},
                {"w_i", s.w_i},
                {"total_w", s.total_w},
                {"implied_C", real_to_string(s.implied_C)}};
}

ScheduleParams schedule_from_json(const json& doc) {
    ScheduleParams s;
    s.L = real_field(doc, "L");
    s.ell = int_field<int>(doc, "ell");
    s.p = real_field(doc, "p");
    s.n = int_field<int>(doc, "n");
    s.exploratory = bool_field(doc, "exploratory");
    s.gamma = int_field<int>(doc, "gamma");
    for (const auto& v : doc.at("ell_i")) s.ell_i.push_back(real_from_string(v));
    for (const auto& v : doc.at("L_i")) s.L_i.push_back(real_from_string(v));
    for (const auto& v : doc.at("w_i")) s.w_i.push_back(v.get<int>());
    s.total_w = int_field<long>(doc, "total_w");
    s.implied_C = real_field(doc, "implied_C");
    return s;
}

json transcript_to_json(const ProcessTranscript& tr) {
    json rounds = json::array();
    for (const auto& r : tr.rounds) {
        rounds.push_back(json{{"i", r.i},
                              {"W", subset_to_json(r.W)},
                              {"good", r.good},
                              {"cover", family_to_json(r.cover)},
                              {"leftover", family_to_json(r.leftover.edges())},
                              {"log_cost", real_to_string(r.log_cost)},
                              {"success1", r.success1},
                              {"success2", r.success2}});
    }
    return json{{"schedule", schedule_to_json(tr.schedule)},
                {"instance", hypergraph_to_json(tr.instance)},
                {"rounds", rounds},
                {"i_max", tr.i_max},
                {"terminated_successfully", tr.terminated_successfully},
                {"assembled_cover", family_to_json(tr.assembled_cover)},
                {"W_union", subset_to_json(tr.w_union)}};
}

ProcessTranscript transcript_from_json(const json& doc) {
    if (!doc.is_object()) fail(errc::malformed_document, "transcript must be an object");
    ProcessTranscript tr{schedule_from_json(doc.at("schedule")),
                         hypergraph_from_json(doc.at("instance")),
                         {},
                         int_field<int>(doc, "i_max"),
                         bool_field(doc, "terminated_successfully"),
                         family_from_json(doc.at("assembled_cover")),
                         subset_from_json(doc.at("W_union"))};
    GroundSet g = tr.instance.ground();
    for (const auto& r : doc.at("rounds")) {
        tr.rounds.push_back(RoundRecord{
            int_field<int>(r, "i"), subset_from_json(r.at("W")),
            r.at("good").get<std::vector<int>>(), family_from_json(r.at("cover")),
            Hypergraph(g, family_from_json(r.at("leftover"))),
            real_field(r, "log_cost"), bool_field(r, "success1"),
            bool_field(r, "success2")});
    }
    return tr;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::malformed_document, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        fail(errc::malformed_document, "parse error in " + path + ": " + e.what());
    }
    return doc;
}

void save_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) fail(errc::malformed_document, "cannot open " + path + " for writing");
    out << doc.dump(2) << '\n';
}

std::vector<std::string> replay_verify(const ProcessTranscript& tr) {
    std::vector<std::string> bad;
    auto complain = [&](int i, const std::string& msg) {
        bad.push_back("round " + std::to_string(i) + ": " + msg);
    };

    ScheduleParams expect;
    try {
        expect = build_schedule(tr.schedule.L, tr.schedule.ell, tr.schedule.p,
                                tr.schedule.n, tr.schedule.exploratory);
    } catch (const error& e) {
        bad.push_back(std::string("schedule does not rebuild: ") + e.what());
        return bad;
    }
    if (expect.gamma != tr.schedule.gamma || expect.w_i != tr.schedule.w_i ||
        expect.ell_i != tr.schedule.ell_i || expect.L_i != tr.schedule.L_i)
        bad.push_back("schedule fields differ from rebuilt schedule");
    if (tr.schedule.ell != tr.instance.ell_bound())
        bad.push_back("schedule ell does not match instance");
    if (tr.i_max > tr.schedule.gamma) bad.push_back("i_max exceeds gamma");
    if (static_cast<int>(tr.rounds.size()) != tr.i_max)
        bad.push_back("round count does not match i_max");

    Hypergraph current = tr.instance;
    Subset unconsumed(tr.instance.ground().full_mask());
    Subset w_union;
    std::vector<Subset> assembled;
    bool all_successful = true;

    for (std::size_t k = 0; k < tr.rounds.size(); ++k) {
        const RoundRecord& rec = tr.rounds[k];
        int i = static_cast<int>(k) + 1;
        if (rec.i != i) complain(i, "round index out of order");
        if (!rec.W.subset_of(unconsumed)) complain(i, "W_i not drawn from unconsumed ground");
        if (k < tr.schedule.w_i.size() &&
            rec.W.size() != tr.schedule.w_i[k])
            complain(i, "|W_i| != w_i");

        SplitResult split = split_round(current, rec.W, tr.schedule.ell_i[k]);
        if (split.good != rec.good) complain(i, "good set differs on replay");
        if (split.cover != rec.cover) complain(i, "cover differs on replay");
        if (split.leftover != rec.leftover) complain(i, "leftover differs on replay");

        double log_cost = log2_cover_cost(rec.cover, tr.schedule.p);
        if (log_cost != rec.log_cost) complain(i, "cover cost differs on replay");
        bool s1 = log_cost < -0.5 * tr.schedule.ell_i[k] * std::log2(tr.schedule.L_i[k]);
        if (s1 != rec.success1) complain(i, "success1 flag differs on replay");
        if ((!rec.leftover.contains_empty_edge()) != rec.success2)
            complain(i, "success2 flag differs on replay");

        // leftover strictly .9 * ell_{i-1}-bounded
        for (Subset e : rec.leftover.edges())
            if (static_cast<double>(e.size()) >= tr.schedule.ell_i[k])
                complain(i, "leftover edge not below the fragment threshold");
        // every good edge contains its fragment
        for (std::size_t g = 0; g < rec.good.size(); ++g) {
            Subset edge = current.edges()[static_cast<std::size_t>(rec.good[g])];
            FragmentResult fr = min_fragment(current, edge, rec.W);
            if (!fr.T.subset_of(edge)) complain(i, "fragment of a good edge escapes it");
        }

        bool done = rec.leftover.edges().empty() ||
                    (rec.leftover.edges().size() == 1 && rec.leftover.contains_empty_edge());
        if (done != (i == tr.i_max))
            complain(i, "termination point inconsistent with i_max");

        all_successful = all_successful && rec.success1 && rec.success2;
        current = rec.leftover;
        unconsumed = unconsumed.minus(rec.W);
        w_union = w_union.unite(rec.W);
        for (Subset u : rec.cover) assembled.push_back(u);
    }

    std::sort(assembled.begin(), assembled.end(), canonical_less);
    assembled.erase(std::unique(assembled.begin(), assembled.end()), assembled.end());
    if (assembled != tr.assembled_cover) bad.push_back("assembled cover differs on replay");
    if (w_union != tr.w_union) bad.push_back("W_union differs on replay");
    if (all_successful != tr.terminated_successfully)
        bad.push_back("terminated_successfully flag differs on replay");

    if (tr.terminated_successfully) {
        if (!is_cover(tr.assembled_cover, tr.instance))
            bad.push_back("successful transcript whose assembled cover misses an edge");
        double budget = 0.0;
        for (int k = 0; k < tr.i_max; ++k)
            budget += std::exp2(-0.5 * tr.schedule.ell_i[static_cast<std::size_t>(k)] *
                                std::log2(tr.schedule.L_i[static_cast<std::size_t>(k)]));
        double cost = std::exp2(log2_cover_cost(tr.assembled_cover, tr.schedule.p));
        if (cost > budget)
            bad.push_back("assembled cover cost exceeds the per-round success budget");
    }
    for (const RoundRecord& rec : tr.rounds) {
        if (!rec.success2) {
            // W_1 u ... u W_i must then contain an edge
            Subset prefix;
            for (const RoundRecord& r2 : tr.rounds) {
                prefix = prefix.unite(r2.W);
                if (r2.i == rec.i) break;
            }
            if (!tr.instance.in_upset(prefix))
                bad.push_back("success2 failure without W-prefix containing an edge");
        }
    }
    return bad;
}

} // namespace kklab
