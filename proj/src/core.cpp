#include "core.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace dfg::core {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw Error(ErrorKind::Degenerate, "edge with equal endpoints " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
    if (a == b || b == c || a == c) {
        throw Error(ErrorKind::Degenerate, "degenerate triangle {" + std::to_string(a) + "," +
                                               std::to_string(b) + "," + std::to_string(c) + "}");
    }
    Triangle t{{a, b, c}};
    std::sort(t.v.begin(), t.v.end());
    return t;
}

std::array<Edge, 3> Triangle::edges() const {
    return {Edge{v[0], v[1]}, Edge{v[0], v[2]}, Edge{v[1], v[2]}};
}

int shared_vertices(const Triangle& a, const Triangle& b) {
    int s = 0;
    for (Vertex x : a.v) s += b.contains(x) ? 1 : 0;
    return s;
}

void validate_pair(const LabelsLayout& pair) {
    if (pair.n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
    if (pair.labels.size() < 3) throw Error(ErrorKind::InvalidArgument, "labels must have at least 3 entries");
    if (pair.layout.size() + 3 != pair.labels.size()) {
        throw Error(ErrorKind::InvalidArgument,
                    "layout length " + std::to_string(pair.layout.size()) + " != labels length " +
                        std::to_string(pair.labels.size()) + " - 3");
    }
    for (std::size_t i = 0; i < pair.labels.size(); ++i) {
        if (pair.labels[i] < 0 || pair.labels[i] >= pair.n) {
            throw Error(ErrorKind::InvalidArgument,
                        "label " + std::to_string(pair.labels[i]) + " at index " + std::to_string(i) +
                            " outside [0," + std::to_string(pair.n) + ")");
        }
    }
    for (auto bit : pair.layout) {
        if (bit > 1) throw Error(ErrorKind::InvalidArgument, "layout entries must be 0 or 1");
    }
}

TriangleSeq expand_pair(const LabelsLayout& pair) {
    validate_pair(pair);
    const auto& x = pair.labels;
    TriangleSeq seq;
    seq.triangles.reserve(x.size() - 2);
    auto first = [&](Vertex a, Vertex b, Vertex c, std::size_t idx) {
        try {
            return make_triangle(a, b, c);
        } catch (const Error& e) {
            throw Error(ErrorKind::Degenerate, std::string(e.what()) + " at triangle " + std::to_string(idx));
        }
    };
    seq.triangles.push_back(first(x[0], x[1], x[2], 0));
    Vertex carry = x[0];
    for (std::size_t i = 3; i < x.size(); ++i) {
        Vertex p = pair.layout[i - 3] ? carry : x[i - 2];
        seq.triangles.push_back(first(p, x[i - 1], x[i], i - 2));
        carry = p;
    }
    const std::size_t t = seq.triangles.size();
    if (t >= 3) {
        const std::size_t m = x.size();
        bool closes = (x[m - 2] == x[0] && x[m - 1] == x[1]) || (x[m - 2] == x[1] && x[m - 1] == x[0]);
        seq.circular = closes && shared_vertices(seq.triangles.front(), seq.triangles.back()) == 2;
    }
    return seq;
}

namespace {

Vertex newest_of(const Triangle& cur, const Triangle& prev) {
    for (Vertex v : cur.v)
        if (!prev.contains(v)) return v;
    throw Error(ErrorKind::NotGood, "consecutive triangles are equal");
}

Vertex third_of(const Triangle& t, Vertex a, Vertex b) {
    for (Vertex v : t.v)
        if (v != a && v != b) return v;
    throw Error(ErrorKind::NotGood, "triangle lacks a third vertex");
}

// Encodes seq given the first three labels; throws NotGood when the walk cannot be expressed.
LabelsLayout encode_from(const std::vector<Triangle>& tris, Vertex x0, Vertex x1, Vertex x2, int n) {
    LabelsLayout out;
    out.n = n;
    out.labels = {x0, x1, x2};
    Vertex carry = x0;
    for (std::size_t i = 1; i < tris.size(); ++i) {
        const Triangle& cur = tris[i];
        Vertex last = out.labels.back();
        Vertex second = out.labels[out.labels.size() - 2];
        if (!cur.contains(last)) {
            throw Error(ErrorKind::NotGood,
                        "triangle " + std::to_string(i) + " does not contain the newest label of its predecessor");
        }
        Vertex nw = newest_of(cur, tris[i - 1]);
        Vertex p = third_of(cur, last, nw);
        if (p == second) {
            out.layout.push_back(0);
        } else if (p == carry) {
            out.layout.push_back(1);
        } else {
            throw Error(ErrorKind::NotGood, "triangle " + std::to_string(i) + " attaches to a used edge");
        }
        out.labels.push_back(nw);
        carry = p;
    }
    return out;
}

void check_walk(const std::vector<Triangle>& tris) {
    for (std::size_t i = 1; i < tris.size(); ++i) {
        if (shared_vertices(tris[i - 1], tris[i]) != 2) {
            throw Error(ErrorKind::NotGood, "triangles " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                                " do not share exactly two vertices");
        }
    }
}

LabelsLayout encode_linear(std::vector<Triangle> tris, int n) {
    if (tris.size() == 1) {
        LabelsLayout out;
        out.n = n;
        out.labels.assign(tris[0].v.begin(), tris[0].v.end());
        return out;
    }
    if (tris.back() < tris.front()) std::reverse(tris.begin(), tris.end());
    const Triangle& t0 = tris[0];
    Vertex x0 = newest_of(t0, tris[1]);
    std::vector<Vertex> shared;
    for (Vertex v : t0.v)
        if (v != x0) shared.push_back(v);
    return encode_from(tris, x0, shared[0], shared[1], n);
}

LabelsLayout encode_circular(const std::vector<Triangle>& base, int n) {
    const std::size_t t = base.size();
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<Triangle> oriented = base;
        if (dir == 1) std::reverse(oriented.begin(), oriented.end());
        for (std::size_t s = 0; s < t; ++s) {
            std::vector<Triangle> tris(t);
            for (std::size_t i = 0; i < t; ++i) tris[i] = oriented[(s + i) % t];
            const Triangle& first = tris[0];
            const Triangle& last = tris[t - 1];
            Vertex z = newest_of(last, tris[t - 2]);
            if (!first.contains(z)) continue;
            Vertex x0 = -1;
            for (Vertex v : first.v)
                if (v != z && last.contains(v)) x0 = v;
            if (x0 < 0 || newest_of(tris[t - 2], tris[t - 3]) != x0) continue;
            try {
                return encode_from(tris, x0, z, third_of(first, x0, z), n);
            } catch (const Error&) {
                continue;
            }
        }
    }
    throw Error(ErrorKind::NotGood, "circular sequence has no closing encoding");
}

}  // namespace

LabelsLayout encode_triples(const TriangleSeq& seq, int n) {
    if (seq.triangles.empty()) throw Error(ErrorKind::InvalidArgument, "empty triangle sequence");
    check_walk(seq.triangles);
    if (seq.circular && seq.triangles.size() >= 3) {
        if (shared_vertices(seq.triangles.front(), seq.triangles.back()) != 2)
            throw Error(ErrorKind::NotGood, "circular sequence does not close");
        return encode_circular(seq.triangles, n);
    }
    return encode_linear(seq.triangles, n);
}

bool is_good(const TriangleSeq& seq) {
    const auto& tr = seq.triangles;
    const std::size_t t = tr.size();
    if (t == 0) return false;
    const bool circ = seq.circular && t >= 3;
    for (std::size_t i = 1; i < t; ++i)
        if (shared_vertices(tr[i - 1], tr[i]) != 2) return false;
    if (circ && shared_vertices(tr[t - 1], tr[0]) != 2) return false;

    auto adjacent = [&](std::size_t i, std::size_t j) {
        std::size_t d = i > j ? i - j : j - i;
        return d == 1 || (circ && d == t - 1);
    };
    std::map<Edge, std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < t; ++i)
        for (const Edge& e : tr[i].edges()) where[e].push_back(i);
    for (const auto& [e, idx] : where) {
        if (idx.size() > 2) return false;
        if (idx.size() == 2 && !adjacent(idx[0], idx[1])) return false;
    }
    return true;
}

EdgeCounts covered_edges(const TriangleSeq& seq) {
    EdgeCounts counts;
    for (const Triangle& t : seq.triangles)
        for (const Edge& e : t.edges()) ++counts[e];
    return counts;
}

std::optional<int> dual_diameter(const TriangleSeq& seq) {
    std::vector<Triangle> facets = seq.triangles;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    const std::size_t v = facets.size();
    if (v == 0) return std::nullopt;

    std::map<Edge, std::vector<int>> on_edge;
    for (std::size_t i = 0; i < v; ++i)
        for (const Edge& e : facets[i].edges()) on_edge[e].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> adj(v);
    std::size_t arcs = 0;
    for (const auto& [e, ids] : on_edge) {
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                adj[ids[a]].push_back(ids[b]);
                adj[ids[b]].push_back(ids[a]);
                ++arcs;
            }
    }
    // Two facets share at most one edge, so arcs counts distinct dual edges.

    std::vector<int> dist(v);
    auto bfs = [&](int src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q{src};
        dist[src] = 0;
        int far = src;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (dist[u] > dist[far]) far = u;
            for (int w : adj[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
        }
        return far;
    };

    int far = bfs(0);
    if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) return std::nullopt;
    if (arcs + 1 == v) {
        int other = bfs(far);
        return dist[other];
    }
    int best = 0;
    for (std::size_t s = 0; s < v; ++s) {
        int f = bfs(static_cast<int>(s));
        best = std::max(best, dist[f]);
    }
    return best;
}

int hs_max_diameter(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
    if (n == 6) return 5;
    const std::int64_t c = static_cast<std::int64_t>(n) * (n - 1) / 2;
    return static_cast<int>((c - 3) / 2);
}

Certificate certify(const TriangleSeq& seq, int n) {
    Certificate cert;
    cert.good = is_good(seq);
    cert.circular = seq.circular;
    EdgeCounts counts = covered_edges(seq);
    cert.covered_edges = static_cast<std::int64_t>(counts.size());
    cert.diameter = dual_diameter(seq);
    cert.optimum = hs_max_diameter(n);
    cert.matches_optimum = cert.good && !cert.circular && cert.diameter && *cert.diameter == cert.optimum;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!counts.count(Edge{a, b})) cert.uncovered_edges.push_back(Edge{a, b});
    return cert;
}

}  // namespace dfg::core
