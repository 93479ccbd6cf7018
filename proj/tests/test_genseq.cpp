#include "doctest.h"

#include <numeric>

#include "check.hpp"
#include "genseq.hpp"

using namespace dfg;
using namespace dfg::genseq;
using core::make_edge;

namespace {

GeneratingSequence gs_of(int n, std::vector<int> terms, std::vector<int> turns = {}) {
    GeneratingSequence g;
    g.n = n;
    for (int& a : terms) a = ((a % n) + n) % n;
    g.terms = std::move(terms);
    g.turns = std::move(turns);
    return g;
}

std::vector<int> reduced(std::vector<int> v, int n) {
    for (int& a : v) a = ((a % n) + n) % n;
    return v;
}

// Residues covered by ±a_i and ±c_i, computed straight from the definition.
std::set<int> covered_residues(const GeneratingSequence& g) {
    const int m = static_cast<int>(g.terms.size());
    std::set<int> out;
    for (int i = 0; i < m; ++i) {
        long long c = g.terms[i] + g.terms[(i + 1) % m];
        if (std::count(g.turns.begin(), g.turns.end(), i)) c += g.terms[(i + m - 1) % m];
        out.insert(check::residue(g.terms[i], 0, g.n));
        out.insert(check::residue(static_cast<int>(c % g.n), 0, g.n));
    }
    return out;
}

}  // namespace

TEST_CASE("blue_terms") {
    CHECK(blue_terms(gs_of(13, {1, 2, 4})) == std::vector<int>{3, 6, 5});
    CHECK(blue_terms(gs_of(17, {3, 2, 7, 6}, {3})) == std::vector<int>{5, 9, 13, 16});
    CHECK(blue_terms(gs_of(13, {5})) == std::vector<int>{10});
}

TEST_CASE("verify_generating_sequence") {
    auto a = verify_generating_sequence(gs_of(13, {1, 2, 4}));
    CHECK(a.valid);
    CHECK(a.missing.empty());

    auto b = verify_generating_sequence(gs_of(17, {3, 4, 8}));
    CHECK(b.valid);
    CHECK(b.missing == std::vector<int>{1, 2});

    auto c = verify_generating_sequence(gs_of(13, {1, 2, 3}));
    CHECK_FALSE(c.valid);
    CHECK(c.reason.find("distinct") != std::string::npos);
    // The 12 signed values for (1,2,3): a = 1,2,3 and c = 3,5,4 collide at 3.
    std::vector<int> signed_vals;
    for (int v : {1, 2, 3, 3, 5, 4}) {
        signed_vals.push_back(v % 13);
        signed_vals.push_back((13 - v) % 13);
    }
    CHECK(std::set<int>(signed_vals.begin(), signed_vals.end()).size() < 12);

    CHECK_FALSE(verify_generating_sequence(gs_of(13, {1, 1, 11})).valid);     // sum 13
    CHECK_FALSE(verify_generating_sequence(gs_of(17, {3, 2, 7, 6}, {0, 3})).valid);  // cyclic consecutive turns
    CHECK_FALSE(verify_generating_sequence(gs_of(15, {1, 2, 4})).valid);
    CHECK_FALSE(verify_generating_sequence(gs_of(13, {1, 2, 4, 5})).valid);
}

TEST_CASE("gs_full") {
    auto k3 = gs_full(3);
    CHECK(k3.terms == std::vector<int>{1, 2, 4});
    CHECK(k3.turns.empty());
    CHECK(gs_full(4).terms == std::vector<int>{1, 2, 6, 4});
    auto k8 = gs_full(8);
    CHECK(k8.n == 33);
    CHECK(k8.terms == std::vector<int>{3, 2, 7, 6, 11, 10, 15, 14});
    CHECK(k8.turns == std::vector<int>{7});
    auto v8 = verify_generating_sequence(k8);
    CHECK(v8.valid);
    CHECK(v8.missing.empty());
    // Odd family: ℓ = 4 gives (-10, 18, -4, -9, 2, 1, 11, 6, 15).
    CHECK(gs_full(9).terms == reduced({-10, 18, -4, -9, 2, 1, 11, 6, 15}, 37));
    CHECK_THROWS_AS(gs_full(2), Error);
}

TEST_CASE("gs_missing_12") {
    CHECK(gs_missing_12(4).terms == std::vector<int>{3, 4, 8});
    CHECK(gs_missing_12(7).terms == reduced({11, 8, -12, 7, 6, 3}, 29));
    CHECK(blue_terms(gs_missing_12(7)) == reduced({-10, -4, -5, 13, 9, 14}, 29));
    auto k9 = gs_missing_12(9);
    CHECK(k9.terms == reduced({8, -5, 15, 4, -16, 7, 6, 11}, 37));
    CHECK(k9.turns == std::vector<int>{2});
    CHECK(verify_generating_sequence(k9).missing == std::vector<int>{1, 2});
    CHECK(gs_missing_12(8).turns == std::vector<int>{0});
    CHECK_THROWS_AS(gs_missing_12(3), Error);
}

TEST_CASE("gs_missing_1248") {
    auto k7 = gs_missing_1248(7);
    CHECK(k7.terms == std::vector<int>{5, 14, 3, 6, 11});
    CHECK(k7.turns == std::vector<int>{1});
    CHECK(blue_terms(k7) == std::vector<int>{19, 22, 9, 17, 16});
    CHECK(verify_generating_sequence(k7).missing == std::vector<int>{1, 2, 4, 8});
    CHECK(gs_missing_1248(8).terms == std::vector<int>{3, 9, 5, 6, 11, 7});
    auto k11 = verify_generating_sequence(gs_missing_1248(11));
    CHECK(k11.valid);
    CHECK(k11.missing == std::vector<int>{1, 2, 4, 8});
    CHECK_THROWS_AS(gs_missing_1248(6), Error);
}

TEST_CASE("families verify for small k") {
    for (int k = 3; k <= 20; ++k) {
        auto v = verify_generating_sequence(gs_full(k));
        CHECK(v.valid);
        CHECK(v.missing.empty());
        CHECK(gs_full(k).terms.size() == static_cast<std::size_t>(k));
    }
    for (int k = 4; k <= 20; ++k) CHECK(verify_generating_sequence(gs_missing_12(k)).missing == std::vector<int>{1, 2});
    for (int k = 7; k <= 20; ++k)
        CHECK(verify_generating_sequence(gs_missing_1248(k)).missing == std::vector<int>{1, 2, 4, 8});
}

TEST_CASE("sum coprimality identity for the odd full family") {
    // n = 8ℓ+5 and the term sum equals 4ℓ²−7ℓ−6 after reduction; both sides checked numerically.
    for (int l = 3; l <= 30; ++l) {
        auto g = gs_full(2 * l + 1);
        long long s = 0;
        for (int a : g.terms) s += a;
        long long want = ((4LL * l * l - 7LL * l - 6) % g.n + g.n) % g.n;
        CHECK(s % g.n == want);
        CHECK(std::gcd(4LL * l * l - 7LL * l - 6, 8LL * l + 5) == 1);
    }
}

TEST_CASE("expand_to_circular: (1,2,4) over Z/13") {
    auto pair = expand_to_circular(gs_of(13, {1, 2, 4}));
    std::vector<int> want{0, 1, 3, 7, 8, 10, 1, 2, 4, 8, 9, 11, 2, 3, 5, 9, 10, 12, 3, 4, 6,
                          10, 11, 0, 4, 5, 7, 11, 12, 1, 5, 6, 8, 12, 0, 2, 6, 7, 9, 0, 1};
    CHECK(pair.labels == want);
    CHECK(std::all_of(pair.layout.begin(), pair.layout.end(), [](auto b) { return b == 0; }));
    auto s = core::expand_pair(pair);
    CHECK(s.circular);
    CHECK(core::is_good(s));
}

TEST_CASE("expand_to_circular: (3,2,7,6) with a turn over Z/17") {
    auto g = gs_of(17, {3, 2, 7, 6}, {3});
    auto pair = expand_to_circular(g);
    CHECK(pair.labels.size() == 4u * 17 + 2);
    CHECK(pair.labels[pair.labels.size() - 2] == 0);
    CHECK(pair.labels.back() == 3);
    // Turns land on the triangle that closes each period.
    for (std::size_t j = 0; j < pair.layout.size(); ++j) CHECK(pair.layout[j] == ((j + 1) % 4 == 3 ? 1 : 0));
    auto s = core::expand_pair(pair);
    CHECK(s.circular);
    CHECK(check::walk_good(check::tris_of(s), true));
    CHECK(core::covered_edges(s).size() == 2u * 4 * 17);
    CHECK(core::covered_edges(s).size() == 136);  // every edge of K_17
}

TEST_CASE("expand_to_circular rotates past a turn at index 0") {
    auto g = gs_missing_12(8);
    REQUIRE(g.turns == std::vector<int>{0});
    auto s = core::expand_pair(expand_to_circular(g));
    CHECK(s.circular);
    CHECK(check::walk_good(check::tris_of(s), true));
    CHECK_THROWS_AS(expand_to_circular(gs_of(13, {1, 2, 3})), Error);
}

TEST_CASE("covered edges are exactly the covered residue classes") {
    auto run = [](const GeneratingSequence& g) {
        auto s = core::expand_pair(expand_to_circular(g));
        auto tris = check::tris_of(s);
        std::set<int> res = covered_residues(g);
        std::set<check::EdgeKey> want;
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                if (res.count(check::residue(i, j, g.n))) want.insert({i, j});
        CHECK(check::edge_set(tris) == want);
        CHECK(check::walk_good(tris, true));
    };
    for (int k = 3; k <= 12; ++k) run(gs_full(k));
    for (int k = 4; k <= 12; ++k) run(gs_missing_12(k));
    for (int k = 7; k <= 12; ++k) run(gs_missing_1248(k));
}

TEST_CASE("verify agrees with direct expansion for all length-3 sequences mod 13") {
    const int n = 13;
    int valid_count = 0;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int c = 1; c < n; ++c) {
                if (std::gcd(a + b + c, n) != 1) continue;
                auto v = verify_generating_sequence(gs_of(n, {a, b, c}));
                std::vector<int> x{0};
                const int terms[3] = {a, b, c};
                for (int i = 0; i < 3 * n + 1; ++i) x.push_back((x.back() + terms[i % 3]) % n);
                auto tris = check::expand(x, std::vector<int>(x.size() - 3, 0));
                const bool direct = check::walk_good(tris, true) && check::edge_set(tris).size() == 6u * n;
                CHECK(v.valid == direct);
                valid_count += v.valid;
            }
    CHECK(valid_count > 0);
}

TEST_CASE("cut_circular") {
    auto circ = core::expand_pair(expand_to_circular(gs_of(13, {1, 2, 4})));
    // Blue edges are the singly covered ones; cutting at any of them is optimal.
    int cuts = 0;
    for (int i = 0; i < 13; ++i)
        for (int r : {3, 6, 5}) {
            CutSpec spec;
            spec.destroyed_edge = make_edge(i, (i + r) % 13);
            auto lin = cut_circular(circ, spec);
            CHECK(lin.triangles.size() == 38);
            CHECK(check::walk_good(check::tris_of(lin), false));
            CHECK(core::dual_diameter(lin) == 37);
            CHECK(core::covered_edges(lin).size() == 77);
            ++cuts;
        }
    CHECK(cuts == 39);

    CutSpec twice;
    twice.destroyed_edge = make_edge(0, 1);
    CHECK_THROWS_AS(cut_circular(circ, twice), Error);
}

TEST_CASE("cut_circular honours end constraints") {
    auto circ = core::expand_pair(expand_to_circular(gs_missing_1248(7)));
    bool has_0_6_17 = false;
    for (auto& t : circ.triangles) has_0_6_17 |= t == core::make_triangle(0, 6, 17);
    CHECK(has_0_6_17);
    auto lin = cut_circular(circ, cut_4k6(7));
    CHECK(lin.triangles.front().contains(make_edge(6, 17)));
    CHECK(lin.triangles.back().contains(make_edge(0, 6)));
    CHECK_FALSE(lin.triangles[1].contains(make_edge(6, 17)));
    CHECK_FALSE(lin.triangles[lin.triangles.size() - 2].contains(make_edge(0, 6)));
    CHECK(lin.triangles.size() + 1 == circ.triangles.size());
    CHECK(core::covered_edges(lin).size() + 1 == core::covered_edges(circ).size());

    for (int k = 5; k <= 15; ++k) {
        auto c = core::expand_pair(expand_to_circular(gs_missing_12(k)));
        auto l3 = cut_circular(c, cut_4k3(k));
        CHECK(l3.triangles.back().contains(make_edge(0, 7)));
        auto l4 = cut_circular(c, cut_4k4(k));
        CHECK(l4.triangles.back().contains(make_edge(0, 4 * k - 2)));
    }
    CHECK_THROWS_AS(cut_4k3(4), Error);
    CHECK_NOTHROW(cut_4k4(4));
}
