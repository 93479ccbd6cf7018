#include "assembly.hpp"

#include <algorithm>
#include <initializer_list>

#include "genseq.hpp"

namespace dfg::assembly {

using core::make_edge;
using core::make_triangle;
using Tris = std::vector<Triangle>;
using Path = std::vector<Vertex>;

namespace {

// Half-open arithmetic progression [from, to) with the given step (negative steps count down).
Path span(int from, int to, int step) {
    Path out;
    if (step > 0)
        for (int x = from; x < to; x += step) out.push_back(x);
    else
        for (int x = from; x > to; x += step) out.push_back(x);
    return out;
}

Path cat(std::initializer_list<Path> parts) {
    Path out;
    for (const Path& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void append(Tris& dst, const Tris& src) { dst.insert(dst.end(), src.begin(), src.end()); }

Triangle T(Vertex a, Vertex b, Vertex c) { return make_triangle(a, b, c); }

void check_path(const Path& path, std::initializer_list<Vertex> apexes) {
    if (path.size() < 2) throw Error(ErrorKind::InvalidArgument, "path needs at least two vertices");
    Path sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::InvalidArgument, "path repeats a vertex");
    for (Vertex a : apexes)
        if (std::binary_search(sorted.begin(), sorted.end(), a))
            throw Error(ErrorKind::InvalidArgument, "apex " + std::to_string(a) + " lies on the path");
}

Tris rot(Vertex u, const Path& p) { return rotation(u, p).triangles; }
Tris zig(Vertex u, Vertex w, const Path& p) { return zigzag(u, w, p).triangles; }

std::set<Edge> residue_edges(int np, std::initializer_list<int> residues) {
    std::set<Edge> out;
    for (int r : residues)
        for (int x = 0; x < np; ++x) out.insert(make_edge(x, (x + r) % np));
    return out;
}

// Edges from each extra vertex to every residue vertex and to the listed partners.
void add_spokes(std::set<Edge>& out, int np, std::initializer_list<Vertex> hubs, std::initializer_list<Vertex> partners) {
    for (Vertex h : hubs) {
        for (int x = 0; x < np; ++x) out.insert(make_edge(h, x));
        for (Vertex q : partners)
            if (q != h) out.insert(make_edge(h, q));
    }
}

void audit(const AttachmentPlan& plan, const std::set<Edge>& expected, std::size_t count, const char* name, int k) {
    std::set<Edge> got = plan_edges(plan);
    got.erase(plan.anchor);
    if (got == expected && got.size() == count) return;
    std::string msg = std::string(name) + " audit failed for k=" + std::to_string(k) + ": " +
                      std::to_string(got.size()) + " edges, expected " + std::to_string(count);
    int shown = 0;
    for (const Edge& e : got)
        if (!expected.count(e) && shown++ < 8) msg += " extra{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}";
    for (const Edge& e : expected)
        if (!got.count(e) && shown++ < 16) msg += " missing{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}";
    throw Error(ErrorKind::Construction, msg);
}

}  // namespace

AttachmentPlan rotation(Vertex center, const Path& path) {
    check_path(path, {center});
    AttachmentPlan plan{make_edge(path[0], path[1]), {}};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) plan.triangles.push_back(T(center, path[i], path[i + 1]));
    return plan;
}

AttachmentPlan zigzag(Vertex u, Vertex w, const Path& path) {
    check_path(path, {u, w});
    if (u == w) throw Error(ErrorKind::InvalidArgument, "zig-zag apexes must differ");
    AttachmentPlan plan{make_edge(path[0], path[1]), {}};
    for (std::size_t i = 1; i < path.size(); ++i) {
        Vertex x = path[i - 1], y = path[i];
        switch (i % 4) {
            case 1:
                plan.triangles.push_back(T(u, x, y));
                plan.triangles.push_back(T(x, y, w));
                break;
            case 2: plan.triangles.push_back(T(x, y, w)); break;
            case 3:
                plan.triangles.push_back(T(x, y, w));
                plan.triangles.push_back(T(x, y, u));
                break;
            default: plan.triangles.push_back(T(u, x, y)); break;
        }
    }
    return plan;
}

std::set<Edge> plan_edges(const AttachmentPlan& plan) {
    std::set<Edge> out;
    for (const Triangle& t : plan.triangles)
        for (const Edge& e : t.edges()) out.insert(e);
    return out;
}

AttachmentPlan attach_4k4(int k) {
    if (k < 4) throw Error(ErrorKind::Precondition, "attach_4k4 needs k >= 4");
    const int np = 4 * k + 1, K = 4 * k;
    const Vertex a = np, b = np + 1, c = np + 2;
    AttachmentPlan plan{make_edge(0, K - 2), {T(K - 2, 0, K - 1)}};
    Tris& t = plan.triangles;
    append(t, rot(a, cat({{K - 1}, span(0, K - 7, 1), {K - 6, K - 7, K - 5, K - 3, K - 4, c, K - 2, K, b}})));
    t.push_back(T(b, K, 0));
    append(t, zig(b, c, cat({span(0, K - 7, 2), span(K - 7, 0, -2)})));
    append(t, {T(1, c, K), T(c, K, K - 1), T(c, K - 3, K - 1), T(K - 1, b, K - 3), T(K - 3, K - 2, b),
               T(b, K - 4, K - 2), T(b, K - 6, K - 4), T(K - 4, K - 5, K - 6), T(K - 6, c, K - 5), T(K - 5, b, c)});

    std::set<Edge> want = residue_edges(np, {1, 2});
    add_spokes(want, np, {a, b, c}, {a, b, c});
    audit(plan, want, 20 * k + 8, "attach_4k4", k);
    return plan;
}

AttachmentPlan attach_4k3(int k) {
    if (k < 5) throw Error(ErrorKind::Precondition, "attach_4k3 needs k >= 5");
    const int np = 4 * k + 1, K = 4 * k;
    const Vertex a = np, b = np + 1;
    AttachmentPlan plan{make_edge(0, 7), {}};
    Tris& t = plan.triangles;
    append(t, rot(a, cat({{7, 0}, span(13, K, 2), span(K, 7, -2), {9, 11, b}})));
    append(t, {T(11, 10, b), T(b, 9, 10), T(9, 7, b),  T(b, 5, 7), T(7, 6, 5), T(7, 8, 6),
               T(6, b, 8),   T(6, 4, b),  T(6, a, 4),  T(4, 2, a), T(2, 3, 4), T(4, 5, 3),
               T(3, a, 5),   T(a, 1, 3),  T(3, b, 1),  T(1, 2, b), T(2, 0, 1), T(1, K, 0)});
    append(t, rot(b, cat({{K, 0}, span(K - 1, 11, -1)})));
    t.push_back(T(11, 12, 13));

    std::set<Edge> want = residue_edges(np, {1, 2});
    add_spokes(want, np, {a, b}, {a, b});
    want.insert(make_edge(0, 13));
    audit(plan, want, 16 * k + 6, "attach_4k3", k);
    return plan;
}

namespace {

AttachmentPlan plan_a(int k) {
    const int np = 4 * k + 1, K = 4 * k;
    const Vertex a = np, b = np + 1;
    AttachmentPlan plan{make_edge(6, 17), {}};
    Tris& t = plan.triangles;
    append(t, rot(a, cat({{6, 17, 0}, span(K - 1, 18, -2), span(18, K + 1, 2), {1, b, 13}})));
    append(t, {T(13, b, 15), T(15, b, 14), T(b, 16, 14), T(14, a, 16), T(16, 15, a), T(15, 17, 16), T(16, 18, 17)});
    append(t, rot(b, cat({{18, 17}, span(19, K + 1, 1), {0, 2}})));
    append(t, {T(0, 1, 2),    T(1, 2, 3),    T(2, 3, a),    T(a, 4, 2),    T(a, 5, 4),   T(4, 3, 5),
               T(3, b, 4),    T(4, 6, b),    T(b, 8, 6),    T(6, 7, 8),    T(7, 5, 6),   T(5, b, 7),
               T(b, 9, 7),    T(7, a, 9),    T(9, 11, a),   T(11, 9, 10),  T(10, 8, 9),  T(8, a, 10),
               T(a, 12, 10),  T(10, b, 12),  T(12, 11, b),  T(11, 13, 12), T(12, 14, 13)});

    std::set<Edge> want = residue_edges(np, {1, 2});
    add_spokes(want, np, {a, b}, {a, b});
    want.insert(make_edge(0, 17));
    audit(plan, want, 16 * k + 6, "attach_4k6 plan A", k);
    return plan;
}

AttachmentPlan plan_b(int k) {
    const int np = 4 * k + 1, K = 4 * k;
    const Vertex a = np, b = np + 1, c = np + 2, d = np + 3, e = np + 4;
    AttachmentPlan plan{make_edge(0, 6), {}};
    Tris& t = plan.triangles;
    if (k % 2 == 0) {
        t.push_back(T(0, 6, c));
        append(t, zig(c, d, cat({span(0, K + 1, 4), span(3, K, 4), {2}})));
        append(t, {T(2, d, 6), T(d, 6, 10)});
        append(t, zig(d, c, cat({span(10, K - 1, 4), span(1, K - 18, 4)})));
        append(t, {T(c, K - 19, K - 11), T(K - 11, c, K - 3)});
        append(t, rot(e, cat({{K - 11, K - 3}, span(4, K - 3, 8), span(3, K - 4, 8), span(2, K - 5, 8),
                              span(1, K - 14, 8), span(K - 19, 4, -8), span(K - 2, 5, -8), span(K - 1, 6, -8),
                              span(K, 7, -8), {0, K - 7}})));
        append(t, {T(K - 7, K - 3, 0), T(K - 3, d, K - 7), T(d, K - 7, K - 11), T(K - 11, K - 15, K - 7),
                   T(K - 7, c, K - 15), T(K - 15, d, c), T(c, d, a), T(c, a, e), T(c, e, b), T(b, e, d)});
    } else {
        append(t, {T(0, 6, c), T(0, c, 4)});
        append(t, zig(c, d, cat({span(4, K + 1, 4), span(3, K, 4), {2, 10}})));
        append(t, {T(10, c, e), T(c, e, b), T(b, d, c), T(c, a, d), T(a, e, d), T(d, 14, e), T(14, 6, d),
                   T(6, 14, 10), T(14, 10, 18)});
        append(t, rot(c, cat({{18, 14}, span(22, K - 1, 4), span(1, K - 2, 4)})));
        append(t, {T(K - 7, K - 3, 0), T(K - 7, 0, d)});
        append(t, zig(d, e, cat({span(K - 7, 4, -8), span(K - 2, 17, -8), span(22, K - 5, 8), span(1, K - 2, 8)})));
        append(t, rot(e, cat({{K - 3}, span(4, K + 1, 8), span(7, K - 4, 8), {2, 6}, span(K - 1, 2, -8),
                              span(K - 4, 7, -8), {0}})));
    }

    std::set<Edge> want = residue_edges(np, {4, 8});
    add_spokes(want, np, {c, d, e}, {a, b, c, d, e});
    audit(plan, want, 20 * k + 14, "attach_4k6 plan B", k);
    return plan;
}

core::TriangleSeq cut_family(genseq::Family f, int k, const genseq::CutSpec& spec) {
    auto gs = genseq::family(f, k);
    core::TriangleSeq circ = core::expand_pair(genseq::expand_to_circular(gs));
    return genseq::cut_circular(circ, spec);
}

}  // namespace

std::pair<AttachmentPlan, AttachmentPlan> attach_4k6(int k) {
    if (k < 7) throw Error(ErrorKind::Precondition, "attach_4k6 needs k >= 7");
    return {plan_a(k), plan_b(k)};
}

const std::vector<int>& cross_check_sizes() {
    static const std::vector<int> sizes{13, 17, 20, 21, 23, 24, 25, 27, 28, 29};
    return sizes;
}

bool has_general_construction(int n) {
    if (n < 3) return false;
    switch (n % 4) {
        case 1: return n >= 13;
        case 0: return n >= 20;
        case 3: return n >= 23;
        default: return n >= 34;
    }
}

core::TriangleSeq construct_general(int n) {
    if (!has_general_construction(n))
        throw Error(ErrorKind::Precondition, "no general construction for n=" + std::to_string(n));
    core::TriangleSeq out;
    auto& t = out.triangles;
    switch (n % 4) {
        case 1: {
            const int k = (n - 1) / 4;
            out = cut_family(genseq::Family::Full, k, {});
            break;
        }
        case 0: {
            const int k = (n - 4) / 4;
            out = cut_family(genseq::Family::Missing12, k, genseq::cut_4k4(k));
            append(t, attach_4k4(k).triangles);
            break;
        }
        case 3: {
            const int k = (n - 3) / 4;
            out = cut_family(genseq::Family::Missing12, k, genseq::cut_4k3(k));
            append(t, attach_4k3(k).triangles);
            break;
        }
        default: {
            const int k = (n - 6) / 4;
            auto [pa, pb] = attach_4k6(k);
            core::TriangleSeq mid = cut_family(genseq::Family::Missing1248, k, genseq::cut_4k6(k));
            t.assign(pa.triangles.rbegin(), pa.triangles.rend());
            append(t, mid.triangles);
            append(t, pb.triangles);
            break;
        }
    }
    out.circular = false;
    return out;
}

Construction construct_optimal(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
    const auto& cross = cross_check_sizes();
    const bool prefer_general = std::find(cross.begin(), cross.end(), n) != cross.end();
    Construction out;
    auto entry = small_table(n);
    if (entry && !prefer_general)
        out.seq = core::expand_pair(entry->pair);
    else
        out.seq = construct_general(n);
    out.cert = core::certify(out.seq, n);
    return out;
}

}  // namespace dfg::assembly
