#include "doctest.h"

#include "check.hpp"
#include "oracle.hpp"

using namespace dfg;
using namespace dfg::oracle;

namespace {

// Witness must expand to a good walk of the reported diameter over labels in [0,n).
void check_witness(const SearchResult& r) {
    const auto& w = r.witness;
    CHECK(w.n == r.n);
    REQUIRE(w.labels.size() == w.layout.size() + 3);
    for (int v : w.labels) CHECK((v >= 0 && v < r.n));
    auto t = check::expand(w.labels, std::vector<int>(w.layout.begin(), w.layout.end()));
    CHECK(check::walk_good(t, false));
    CHECK(static_cast<int>(t.size()) - 1 == r.best_diameter);
    CHECK(check::brute_diameter(t) == r.best_diameter);
}

}  // namespace

TEST_CASE("exhaustive values for small n") {
    const int want[] = {0, 1, 3, 5, 9};
    for (int n = 3; n <= 7; ++n) {
        auto r = search_max_diameter(n);
        CHECK(r.exhaustive);
        CHECK(r.best_diameter == want[n - 3]);
        // n = 6 is the single size where the edge-count bound is not reached.
        CHECK(r.best_diameter == check::optimum(n));
        check_witness(r);
    }
}

TEST_CASE("witness is canonical") {
    auto r = search_max_diameter(5);
    CHECK(r.witness.labels[0] == 0);
    CHECK(r.witness.labels[1] == 1);
    CHECK(r.witness.labels[2] == 2);
    int next = 3;
    for (std::size_t i = 3; i < r.witness.labels.size(); ++i)
        if (r.witness.labels[i] >= 3) {
            CHECK(r.witness.labels[i] <= next);
            if (r.witness.labels[i] == next) ++next;
        }
}

TEST_CASE("pruning does not change the answer") {
    for (int n = 3; n <= 5; ++n) {
        SearchOptions off;
        off.prune = false;
        auto a = search_max_diameter(n);
        auto b = search_max_diameter(n, off);
        CHECK(a.best_diameter == b.best_diameter);
        CHECK(a.witness.labels == b.witness.labels);
        CHECK(a.witness.layout == b.witness.layout);
        CHECK(b.nodes_explored >= a.nodes_explored);
    }
}

TEST_CASE("thread count does not change the witness") {
    for (int n : {6, 7, 8}) {
        SearchOptions one, four;
        four.jobs = 4;
        auto a = search_max_diameter(n, one);
        auto b = search_max_diameter(n, four);
        CHECK(a.best_diameter == b.best_diameter);
        CHECK(a.witness.labels == b.witness.labels);
        CHECK(a.witness.layout == b.witness.layout);
        CHECK(a.exhaustive == b.exhaustive);
    }
}

TEST_CASE("budget exhaustion is reported") {
    SearchOptions tiny;
    tiny.budget = 10;
    auto r = search_max_diameter(9, tiny);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.best_diameter <= check::optimum(9));
    check_witness(r);
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(search_max_diameter(2), Error);
    CHECK_THROWS_AS(search_max_diameter(65), Error);
    // Non-positive job counts fall back to a single worker.
    SearchOptions zero;
    zero.jobs = 0;
    CHECK(search_max_diameter(5, zero).best_diameter == 3);
}
