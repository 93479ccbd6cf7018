#include "doctest.h"

#include "assembly.hpp"
#include "check.hpp"
#include "genseq.hpp"

using namespace dfg;
using namespace dfg::assembly;
using core::make_edge;
using core::make_triangle;

namespace {

std::vector<check::Tri> tris(const AttachmentPlan& p) {
    core::TriangleSeq s{p.triangles, false};
    return check::tris_of(s);
}

std::set<check::EdgeKey> residue_class(int n, std::initializer_list<int> rs) {
    std::set<check::EdgeKey> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int r : rs)
                if (check::residue(i, j, n) == r) out.insert({i, j});
    return out;
}

void add_star(std::set<check::EdgeKey>& out, int hub, int np, std::initializer_list<int> also) {
    for (int x = 0; x < np; ++x) out.insert(check::key(hub, x));
    for (int q : also)
        if (q != hub) out.insert(check::key(hub, q));
}

std::set<check::EdgeKey> without(std::set<check::EdgeKey> s, const core::Edge& e) {
    s.erase({e.lo, e.hi});
    return s;
}

// The cut circular complex each plan is glued onto.
core::TriangleSeq cut_of(genseq::Family f, int k, const genseq::CutSpec& spec) {
    auto circ = core::expand_pair(genseq::expand_to_circular(genseq::family(f, k)));
    return genseq::cut_circular(circ, spec);
}

void check_disjoint(const AttachmentPlan& plan, const core::TriangleSeq& body) {
    auto a = without(check::edge_set(tris(plan)), plan.anchor);
    auto b = check::edge_set(check::tris_of(body));
    for (const auto& e : a) CHECK_MESSAGE(!b.count(e), "shared edge " << e.first << "," << e.second);
    CHECK(b.count({plan.anchor.lo, plan.anchor.hi}));
}

}  // namespace

TEST_CASE("rotation") {
    auto one = rotation(9, {1, 2});
    REQUIRE(one.triangles.size() == 1);
    CHECK(one.triangles[0] == make_triangle(9, 1, 2));

    // Rotation with step 6 on Z/13 plus an outside centre: residue-6 edges and the spokes.
    const int a = 13;
    auto red = rotation(a, {0, 6, 12, 5, 11, 4, 10, 3, 9, 2, 8});
    CHECK(red.triangles.size() == 10);
    CHECK(red.anchor == make_edge(0, 6));
    auto t = tris(red);
    CHECK(check::walk_good(t, false));
    CHECK(check::brute_diameter(t) == 9);
    // The path visits 11 of the 13 vertices, so it carries 10 of the 13 residue-6 edges.
    auto got = check::edge_set(t);
    std::size_t spokes = 0, res6 = 0;
    for (auto [x, y] : got) {
        if (y == a) ++spokes;
        else {
            CHECK(check::residue(x, y, 13) == 6);
            ++res6;
        }
    }
    CHECK(spokes == 11);
    CHECK(res6 == 10);
    CHECK(got.size() == 2 * 11 - 1);

    CHECK_THROWS_AS(rotation(1, {1, 2}), Error);
    CHECK_THROWS_AS(rotation(0, {1, 2, 1}), Error);
    CHECK_THROWS_AS(rotation(0, {1}), Error);
}

TEST_CASE("zigzag") {
    auto two = zigzag(7, 8, {1, 2});
    REQUIRE(two.triangles.size() == 2);
    CHECK(two.triangles[0] == make_triangle(7, 1, 2));
    CHECK(two.triangles[1] == make_triangle(1, 2, 8));
    CHECK(check::brute_diameter(tris(two)) == 1);

    // Zig-zag with step 5 on Z/13 with apexes b = 14, c = 15 and step 5.
    auto blue = zigzag(14, 15, {0, 5, 10, 2, 7, 12, 4, 9, 1, 6, 11});
    auto t = tris(blue);
    CHECK(check::walk_good(t, false));
    for (auto [x, y] : check::edge_set(t)) {
        if (y < 13) CHECK(check::residue(x, y, 13) == 5);
        else CHECK((y == 14 || y == 15));
    }

    for (int len = 2; len <= 23; ++len) {
        std::vector<int> path;
        for (int i = 0; i < len; ++i) path.push_back(i);
        auto z = tris(zigzag(100, 101, path));
        CHECK(check::walk_good(z, false));
        CHECK(check::brute_diameter(z) == 3 * len / 2 - 2);
        // Even lengths end on a double step and reach both apexes from the last vertex.
        const std::size_t edges = check::edge_set(z).size();
        CHECK(edges == static_cast<std::size_t>(len % 2 == 0 ? 3 * len - 1 : 3 * len - 2));
    }
    CHECK_THROWS_AS(zigzag(1, 1, {2, 3}), Error);
    CHECK_THROWS_AS(zigzag(1, 2, {2, 3}), Error);
    CHECK_THROWS_AS(zigzag(1, 2, {3, 4, 3}), Error);
}

TEST_CASE("attach_4k4 covers residues 1, 2 and the three new vertices") {
    for (int k = 4; k <= 40; ++k) {
        const int np = 4 * k + 1, a = np, b = np + 1, c = np + 2;
        auto plan = attach_4k4(k);
        CHECK(plan.anchor == make_edge(0, 4 * k - 2));
        CHECK(plan.triangles.front().contains(plan.anchor));
        auto t = tris(plan);
        CHECK(check::walk_good(t, false));
        auto want = residue_class(np, {1, 2});
        for (int h : {a, b, c}) add_star(want, h, np, {a, b, c});
        auto got = without(check::edge_set(t), plan.anchor);
        CHECK(got == want);
        CHECK(got.size() == static_cast<std::size_t>(20 * k + 8));
        if (k <= 12) check_disjoint(plan, cut_of(genseq::Family::Missing12, k, genseq::cut_4k4(k)));
    }
    CHECK(plan_edges(attach_4k4(4)).size() - 1 == 88);
    CHECK_THROWS_AS(attach_4k4(3), Error);
}

TEST_CASE("attach_4k3 re-covers {0,13}") {
    for (int k = 5; k <= 40; ++k) {
        const int np = 4 * k + 1, a = np, b = np + 1;
        auto plan = attach_4k3(k);
        CHECK(plan.anchor == make_edge(0, 7));
        auto t = tris(plan);
        CHECK(check::walk_good(t, false));
        auto want = residue_class(np, {1, 2});
        for (int h : {a, b}) add_star(want, h, np, {a, b});
        want.insert({0, 13});
        auto got = without(check::edge_set(t), plan.anchor);
        CHECK(got == want);
        CHECK(got.size() == static_cast<std::size_t>(16 * k + 6));
        int hits = 0;
        for (auto& x : t) hits += check::common(x, {0, 13, -1}) == 2;
        CHECK(hits == 1);
        if (k <= 12) check_disjoint(plan, cut_of(genseq::Family::Missing12, k, genseq::cut_4k3(k)));
    }
    CHECK_THROWS_AS(attach_4k3(4), Error);
}

TEST_CASE("attach_4k6 plans") {
    for (int k = 7; k <= 40; ++k) {
        const int np = 4 * k + 1, a = np, b = np + 1, c = np + 2, d = np + 3, e = np + 4;
        auto [pa, pb] = attach_4k6(k);
        CHECK(pa.anchor == make_edge(6, 17));
        CHECK(pb.anchor == make_edge(0, 6));
        auto ta = tris(pa), tb = tris(pb);
        CHECK(check::walk_good(ta, false));
        CHECK(check::walk_good(tb, false));

        auto want_a = residue_class(np, {1, 2});
        for (int h : {a, b}) add_star(want_a, h, np, {a, b});
        want_a.insert({0, 17});
        auto got_a = without(check::edge_set(ta), pa.anchor);
        CHECK(got_a == want_a);
        CHECK(got_a.size() == static_cast<std::size_t>(16 * k + 6));

        auto want_b = residue_class(np, {4, 8});
        for (int h : {c, d, e}) add_star(want_b, h, np, {a, b, c, d, e});
        auto got_b = without(check::edge_set(tb), pb.anchor);
        CHECK(got_b == want_b);
        CHECK(got_b.size() == static_cast<std::size_t>(20 * k + 14));

        if (k <= 12) {
            auto body = cut_of(genseq::Family::Missing1248, k, genseq::cut_4k6(k));
            check_disjoint(pa, body);
            check_disjoint(pb, body);
            // The two plans meet only along their shared vertices.
            for (auto& x : without(got_a, pa.anchor)) CHECK_FALSE(got_b.count(x));
        }
    }
    auto [a7, b7] = attach_4k6(7);
    CHECK(plan_edges(a7).size() - 1 == 118);
    CHECK(plan_edges(b7).size() - 1 == 154);
    CHECK_THROWS_AS(attach_4k6(6), Error);
}

TEST_CASE("odd-k plan B shares {e,4k-3} between a zig-zag and a rotation") {
    for (int k : {7, 9, 11, 13}) {
        const int e = 4 * k + 5;
        auto tb = tris(attach_4k6(k).second);
        std::vector<std::size_t> at;
        for (std::size_t i = 0; i < tb.size(); ++i)
            if (check::common(tb[i], {e, 4 * k - 3, -1}) == 2) at.push_back(i);
        REQUIRE(at.size() == 2);
        CHECK(at[1] == at[0] + 1);
    }
}

TEST_CASE("small table entries are optimal") {
    std::vector<int> want{3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 19, 22, 26, 30};
    CHECK(small_table_sizes() == want);
    for (int n : want) {
        auto entry = small_table(n);
        REQUIRE(entry);
        CHECK(entry->n == n);
        auto t = check::expand(entry->pair.labels, std::vector<int>(entry->pair.layout.begin(), entry->pair.layout.end()));
        CHECK(check::walk_good(t, false));
        CHECK(check::brute_diameter(t) == check::optimum(n));
        for (auto& x : t)
            for (int v : x) CHECK((v >= 0 && v < n));
    }
    auto seven = small_table(7);
    CHECK(seven->pair.labels == std::vector<int>{0, 1, 2, 3, 4, 5, 0, 6, 4, 1, 5, 2});
    CHECK(seven->pair.layout == std::vector<std::uint8_t>{0, 0, 0, 1, 1, 0, 0, 1, 1});
    CHECK(small_table(3)->pair.layout.empty());
    CHECK_FALSE(small_table(17));
    CHECK_FALSE(small_table(2));
    CHECK_FALSE(small_table(31));
}

TEST_CASE("construct_optimal: assembled examples") {
    auto c20 = construct_optimal(20);
    CHECK(c20.cert.covered_edges == 189);
    CHECK(c20.cert.diameter == 93);
    auto c23 = construct_optimal(23);
    CHECK(c23.cert.covered_edges == 253);
    CHECK(c23.cert.diameter == 125);
    auto c34 = construct_optimal(34);
    CHECK(c34.cert.covered_edges == 561);
    CHECK(c34.cert.diameter == 279);
    CHECK(construct_optimal(6).cert.diameter == 5);
    CHECK(construct_optimal(13).cert.diameter == 37);
    CHECK_THROWS_AS(construct_optimal(2), Error);
    CHECK_THROWS_AS(construct_general(30), Error);
    CHECK_FALSE(has_general_construction(30));
    CHECK(has_general_construction(34));
}

TEST_CASE("construct_optimal: totality and the parity law up to 80") {
    for (int n = 3; n <= 80; ++n) {
        auto c = construct_optimal(n);
        auto t = check::tris_of(c.seq);
        CHECK_MESSAGE(check::walk_good(t, false), "n=" << n);
        CHECK(c.cert.diameter == check::optimum(n));
        CHECK(c.cert.matches_optimum);
        const long long all = 1LL * n * (n - 1) / 2;
        const long long uncovered = all - static_cast<long long>(check::edge_set(t).size());
        if (n == 6) CHECK(uncovered == 2);
        else CHECK(uncovered == (all % 2 == 0 ? 1 : 0));
        CHECK(c.cert.uncovered_edges.size() == static_cast<std::size_t>(uncovered));
        for (auto& x : t)
            for (int v : x) CHECK((v >= 0 && v < n));
    }
}

TEST_CASE("cross-check sizes use the general construction and agree with the table") {
    for (int n : cross_check_sizes()) {
        CHECK(has_general_construction(n));
        auto general = check::tris_of(construct_general(n));
        CHECK(check::walk_good(general, false));
        CHECK(static_cast<int>(general.size()) - 1 == check::optimum(n));
        if (auto entry = small_table(n)) {
            auto table = check::expand(entry->pair.labels, std::vector<int>(entry->pair.layout.begin(), entry->pair.layout.end()));
            CHECK(table.size() == general.size());
        }
    }
}
