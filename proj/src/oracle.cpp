#include "oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <tuple>

namespace dfg::oracle {

namespace {

// A walk prefix in canonical form: first triangle {0,1,2}, new labels introduced in increasing order.
struct Node {
    std::vector<int> labels;
    std::vector<std::uint8_t> layout;
    int carry = 0;
    int max_label = 2;
    int uncovered = 0;
    std::vector<std::uint8_t> used;  // n*n edge flags
};

struct Best {
    int diameter = -1;
    std::vector<int> labels;
    std::vector<std::uint8_t> layout;

    void offer(const Node& s) {
        const int d = static_cast<int>(s.labels.size()) - 3;
        if (d > diameter || (d == diameter && std::tie(s.labels, s.layout) < std::tie(labels, layout))) {
            diameter = d;
            labels = s.labels;
            layout = s.layout;
        }
    }
    void merge(const Best& o) {
        if (o.diameter > diameter ||
            (o.diameter == diameter && std::tie(o.labels, o.layout) < std::tie(labels, layout)))
            *this = o;
    }
};

class Searcher {
public:
    Searcher(int n, const SearchOptions& opts) : n_(n), opts_(opts) {}

    SearchResult run() {
        Node root;
        root.labels = {0, 1, 2};
        root.used.assign(static_cast<std::size_t>(n_) * n_, 0);
        root.uncovered = n_ * (n_ - 1) / 2;
        mark(root, 0, 1);
        mark(root, 0, 2);
        mark(root, 1, 2);

        // Expand the top two levels serially, then hand the frontier to workers.
        Best best;
        std::vector<Node> frontier{root};
        for (int level = 0; level < 2 && !frontier.empty(); ++level) {
            std::vector<Node> next;
            for (Node& s : frontier) {
                if (!visit(s, best)) continue;
                for_each_child(s, [&](Node&& c) { next.push_back(std::move(c)); });
            }
            frontier = std::move(next);
        }

        const int jobs = std::max(1, opts_.jobs);
        std::atomic<std::size_t> cursor{0};
        std::mutex mu;
        auto worker = [&] {
            Best local;
            for (std::size_t i; (i = cursor.fetch_add(1)) < frontier.size();) dfs(frontier[i], local);
            std::lock_guard<std::mutex> lock(mu);
            best.merge(local);
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }

        SearchResult r;
        r.n = n_;
        r.best_diameter = best.diameter;
        r.witness.n = n_;
        r.witness.labels = best.labels;
        r.witness.layout = best.layout;
        r.nodes_explored = nodes_.load();
        r.exhaustive = !aborted_.load();
        return r;
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(std::min(a, b)) * n_ + std::max(a, b); }

    void mark(Node& s, int a, int b) {
        s.used[idx(a, b)] = 1;
        --s.uncovered;
    }

    // Counts the node, records it as a candidate and reports whether it is worth expanding.
    bool visit(const Node& s, Best& local) {
        const std::uint64_t seen = nodes_.fetch_add(1) + 1;
        if (opts_.budget != 0 && seen > opts_.budget) {
            aborted_.store(true);
            return false;
        }
        local.offer(s);
        int cur = global_best_.load();
        const int d = static_cast<int>(s.labels.size()) - 3;
        while (d > cur && !global_best_.compare_exchange_weak(cur, d)) {
        }
        if (!opts_.prune) return true;
        // Each further triangle needs two fresh edges.
        return d + s.uncovered / 2 >= global_best_.load();
    }

    template <class F>
    void for_each_child(const Node& s, F&& emit) {
        const int last = s.labels.back();
        const int second = s.labels[s.labels.size() - 2];
        const int top = std::min(s.max_label + 1, n_ - 1);
        for (int x = 0; x <= top; ++x) {
            for (std::uint8_t y = 0; y < 2; ++y) {
                const int p = y ? s.carry : second;
                if (x == p || x == last) continue;
                if (s.used[idx(p, x)] || s.used[idx(last, x)]) continue;
                Node c = s;
                c.labels.push_back(x);
                c.layout.push_back(y);
                c.carry = p;
                c.max_label = std::max(s.max_label, x);
                mark(c, p, x);
                mark(c, last, x);
                emit(std::move(c));
            }
        }
    }

    void dfs(const Node& s, Best& local) {
        if (aborted_.load(std::memory_order_relaxed)) return;
        if (!visit(s, local)) return;
        for_each_child(s, [&](Node&& c) { dfs(c, local); });
    }

    int n_;
    SearchOptions opts_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> aborted_{false};
    std::atomic<int> global_best_{0};
};

}  // namespace

SearchResult search_max_diameter(int n, const SearchOptions& opts) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
    if (n > 64) throw Error(ErrorKind::InvalidArgument, "exhaustive search is limited to n <= 64");
    return Searcher(n, opts).run();
}

}  // namespace dfg::oracle
