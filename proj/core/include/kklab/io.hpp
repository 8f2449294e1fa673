#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kklab/cover.hpp"
#include "kklab/fragment.hpp"

namespace kklab {

using json = nlohmann::json;

// Reals in documents are decimal strings (17 significant digits, "inf"/"-inf"
// allowed) so that parse(emit(x)) is bit-exact.
std::string real_to_string(double x);
double real_from_string(const std::string& s);

json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& doc);

json certificate_to_json(const CoverCertificate& cert);
CoverCertificate certificate_from_json(const json& doc);

json schedule_to_json(const ScheduleParams& s);
ScheduleParams schedule_from_json(const json& doc);

json transcript_to_json(const ProcessTranscript& tr);
ProcessTranscript transcript_from_json(const json& doc);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& doc);

// Re-derives every round of a transcript from the recorded W_i alone and
// checks all structural invariants. Returns the list of violations.
std::vector<std::string> replay_verify(const ProcessTranscript& tr);

} // namespace kklab
