#include "serialize.hpp"

#include <limits>

namespace dfg::serialize {

namespace {

json parse_object(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "expected a JSON object");
    return j;
}

int get_int(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw Error(ErrorKind::InvalidArgument, what + " must be an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw Error(ErrorKind::InvalidArgument, what + " out of range");
    return static_cast<int>(x);
}

const json& field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw Error(ErrorKind::InvalidArgument, std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<int> get_ints(const json& obj, const char* key) {
    const json& arr = field(obj, key);
    if (!arr.is_array()) throw Error(ErrorKind::InvalidArgument, std::string("\"") + key + "\" must be an array");
    std::vector<int> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(get_int(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

json edges_json(const std::vector<core::Edge>& edges) {
    json out = json::array();
    for (const auto& e : edges) out.push_back({e.lo, e.hi});
    return out;
}

json pair_json(const core::LabelsLayout& pair) {
    json layout = json::array();
    for (auto b : pair.layout) layout.push_back(static_cast<int>(b));
    return {{"n", pair.n}, {"labels", pair.labels}, {"layout", layout}};
}

json certificate_json(const core::Certificate& c) {
    return {{"good", c.good},
            {"circular", c.circular},
            {"covered_edges", c.covered_edges},
            {"diameter", c.diameter ? json(*c.diameter) : json(nullptr)},
            {"optimum", c.optimum},
            {"matches_optimum", c.matches_optimum},
            {"uncovered_edges", edges_json(c.uncovered_edges)}};
}

json genseq_json(const genseq::GeneratingSequence& gs, const genseq::VerifyResult& vr) {
    json j = {{"n", gs.n},
              {"terms", gs.terms},
              {"turns", gs.turns},
              {"missing", vr.missing},
              {"valid", vr.valid}};
    if (vr.valid) j["blue_terms"] = genseq::blue_terms(gs);
    if (!vr.reason.empty()) j["reason"] = vr.reason;
    return j;
}

json decomposition_json(const hampack::Decomposition& d) {
    json cycles = json::array();
    for (const auto& c : d.cycles) cycles.push_back(c.order);
    return {{"n", d.n}, {"cycles", cycles}};
}

json report_json(const hampack::PartitionReport& r) {
    return {{"success", r.success},
            {"cycle_count", r.cycle_count},
            {"expected_cycles", r.expected_cycles},
            {"missing", edges_json(r.missing)},
            {"doubled", edges_json(r.doubled)},
            {"problems", r.problems}};
}

json search_json(const oracle::SearchResult& r) {
    return {{"n", r.n},
            {"best_diameter", r.best_diameter},
            {"witness", pair_json(r.witness)},
            {"exhaustive", r.exhaustive},
            {"nodes_explored", r.nodes_explored}};
}

core::LabelsLayout parse_pair(const std::string& text) {
    json j = parse_object(text);
    core::LabelsLayout pair;
    pair.n = get_int(field(j, "n"), "n");
    pair.labels = get_ints(j, "labels");
    for (int b : get_ints(j, "layout")) {
        if (b != 0 && b != 1) throw Error(ErrorKind::InvalidArgument, "layout entries must be 0 or 1");
        pair.layout.push_back(static_cast<std::uint8_t>(b));
    }
    core::validate_pair(pair);
    return pair;
}

hampack::Decomposition parse_decomposition(const std::string& text) {
    json j = parse_object(text);
    hampack::Decomposition d;
    d.n = get_int(field(j, "n"), "n");
    const json& cycles = field(j, "cycles");
    if (!cycles.is_array()) throw Error(ErrorKind::InvalidArgument, "\"cycles\" must be an array");
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (!cycles[i].is_array()) throw Error(ErrorKind::InvalidArgument, "each cycle must be an array");
        hampack::CycleSquare c;
        for (std::size_t k = 0; k < cycles[i].size(); ++k)
            c.order.push_back(get_int(cycles[i][k], "cycles[" + std::to_string(i) + "]"));
        d.cycles.push_back(std::move(c));
    }
    return d;
}

genseq::GeneratingSequence parse_genseq(const std::string& text) {
    json j = parse_object(text);
    genseq::GeneratingSequence gs;
    gs.n = get_int(field(j, "n"), "n");
    if (gs.n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
    gs.terms = get_ints(j, "terms");
    gs.turns = j.contains("turns") ? get_ints(j, "turns") : std::vector<int>{};
    for (int& a : gs.terms) a = genseq::mod(a, gs.n);
    return gs;
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace dfg::serialize
