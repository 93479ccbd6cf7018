#pragma once

#include <string>

#include "json.hpp"

#include "assembly.hpp"
#include "core.hpp"
#include "genseq.hpp"
#include "hampack.hpp"
#include "oracle.hpp"

// JSON views of the domain types. nlohmann::json keeps object keys sorted, which fixes field order.
namespace dfg::serialize {

using nlohmann::json;

json edges_json(const std::vector<core::Edge>& edges);
json pair_json(const core::LabelsLayout& pair);
json certificate_json(const core::Certificate& cert);
json genseq_json(const genseq::GeneratingSequence& gs, const genseq::VerifyResult& vr);
json decomposition_json(const hampack::Decomposition& d);
json report_json(const hampack::PartitionReport& r);
json search_json(const oracle::SearchResult& r);

// Throw Error(InvalidArgument) on schema violations.
core::LabelsLayout parse_pair(const std::string& text);
hampack::Decomposition parse_decomposition(const std::string& text);
genseq::GeneratingSequence parse_genseq(const std::string& text);

std::string dump(const json& j);

}  // namespace dfg::serialize
