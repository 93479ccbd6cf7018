#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfg {

enum class ErrorKind {
    InvalidArgument,  // malformed input, schema violations
    Degenerate,       // a triple repeats a label
    NotGood,          // walk cannot be encoded / verified
    Precondition,     // operation-specific precondition failed
    Construction,     // internal audit of a construction failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace core {

using Vertex = int;

struct Edge {
    Vertex lo = 0;
    Vertex hi = 0;
    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

// Vertices kept sorted ascending.
struct Triangle {
    std::array<Vertex, 3> v{};
    auto operator<=>(const Triangle&) const = default;
    bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
    bool contains(const Edge& e) const { return contains(e.lo) && contains(e.hi); }
    std::array<Edge, 3> edges() const;
};

Triangle make_triangle(Vertex a, Vertex b, Vertex c);
int shared_vertices(const Triangle& a, const Triangle& b);

struct TriangleSeq {
    std::vector<Triangle> triangles;
    bool circular = false;
};

struct LabelsLayout {
    int n = 0;
    std::vector<Vertex> labels;
    std::vector<std::uint8_t> layout;
};

struct Certificate {
    bool good = false;
    bool circular = false;
    std::int64_t covered_edges = 0;
    std::optional<int> diameter;
    int optimum = 0;
    bool matches_optimum = false;
    std::vector<Edge> uncovered_edges;
};

using EdgeCounts = std::map<Edge, int>;

// Checks n, label range and length consistency; throws InvalidArgument.
void validate_pair(const LabelsLayout& pair);

TriangleSeq expand_pair(const LabelsLayout& pair);
LabelsLayout encode_triples(const TriangleSeq& seq, int n);

bool is_good(const TriangleSeq& seq);
EdgeCounts covered_edges(const TriangleSeq& seq);

// Diameter of the dual graph over the distinct facets; nullopt if disconnected or empty.
std::optional<int> dual_diameter(const TriangleSeq& seq);

int hs_max_diameter(int n);

Certificate certify(const TriangleSeq& seq, int n);

}  // namespace core
}  // namespace dfg
