#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace dfg::genseq {

struct GeneratingSequence {
    int n = 0;
    std::vector<int> terms;
    std::vector<int> turns;  // sorted, distinct indices into terms
};

struct VerifyResult {
    bool valid = false;
    std::vector<int> missing;  // ascending residues in [1, (n-1)/2]
    std::string reason;        // empty when valid
};

// Absent fields impose no constraint.
struct CutSpec {
    std::optional<core::Edge> destroyed_edge;
    std::optional<core::Edge> end_edge;         // must end up in the last triangle
    std::optional<core::Edge> second_end_edge;  // must end up in the first triangle
};

enum class Family { Full, Missing12, Missing1248 };

int mod(long long a, int n);
int residue(long long d, int n);

std::vector<int> blue_terms(const GeneratingSequence& gs);
VerifyResult verify_generating_sequence(const GeneratingSequence& gs);

GeneratingSequence gs_full(int k);
GeneratingSequence gs_missing_12(int k);
GeneratingSequence gs_missing_1248(int k);
GeneratingSequence family(Family f, int k);

// Cut for the 4k+4 attachment: leaves {0,4k-2} free at the tail.
CutSpec cut_4k4(int k);
// Cut for the 4k+3 attachment: destroys {0,13}, leaves {0,7} free at the tail.
CutSpec cut_4k3(int k);
// Cut for the 4k+6 attachments: destroys {0,17}, {0,6} at the tail, {6,17} at the head.
CutSpec cut_4k6(int k);

core::LabelsLayout expand_to_circular(const GeneratingSequence& gs);

core::TriangleSeq cut_circular(const core::TriangleSeq& seq, const CutSpec& spec);

}  // namespace dfg::genseq
