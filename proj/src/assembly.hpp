#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "core.hpp"

namespace dfg::assembly {

using core::Edge;
using core::Triangle;
using core::Vertex;

struct AttachmentPlan {
    Edge anchor;
    std::vector<Triangle> triangles;
};

struct SmallTableEntry {
    int n = 0;
    core::LabelsLayout pair;
};

struct Construction {
    core::TriangleSeq seq;
    core::Certificate cert;
};

AttachmentPlan rotation(Vertex center, const std::vector<Vertex>& path);
AttachmentPlan zigzag(Vertex u, Vertex w, const std::vector<Vertex>& path);

// Gadgets on Z/(4k+1) plus extra vertices a = 4k+1, b = 4k+2, ...
AttachmentPlan attach_4k4(int k);
AttachmentPlan attach_4k3(int k);
std::pair<AttachmentPlan, AttachmentPlan> attach_4k6(int k);  // (plan A at {6,17}, plan B at {0,6})

std::set<Edge> plan_edges(const AttachmentPlan& plan);

std::optional<SmallTableEntry> small_table(int n);
std::vector<int> small_table_sizes();

bool has_general_construction(int n);
// n values where the table and the general construction both apply; the general one is used.
const std::vector<int>& cross_check_sizes();

core::TriangleSeq construct_general(int n);
Construction construct_optimal(int n);

}  // namespace dfg::assembly
