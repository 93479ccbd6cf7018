#include "genseq.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dfg::genseq {

using core::Edge;
using core::make_edge;
using core::Triangle;
using core::TriangleSeq;

int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

int residue(long long d, int n) {
    int r = mod(d, n);
    return std::min(r, n - r);
}

namespace {

bool in_turns(const GeneratingSequence& gs, int i) {
    return std::binary_search(gs.turns.begin(), gs.turns.end(), i);
}

GeneratingSequence make(int k, std::vector<int> terms, std::vector<int> turns) {
    GeneratingSequence gs;
    gs.n = 4 * k + 1;
    gs.terms = std::move(terms);
    gs.turns = std::move(turns);
    for (int& a : gs.terms) a = mod(a, gs.n);
    return gs;
}

}  // namespace

std::vector<int> blue_terms(const GeneratingSequence& gs) {
    const int m = static_cast<int>(gs.terms.size());
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) {
        long long s = static_cast<long long>(gs.terms[i]) + gs.terms[(i + 1) % m];
        if (in_turns(gs, i)) s += gs.terms[(i + m - 1) % m];
        c[i] = mod(s, gs.n);
    }
    return c;
}

VerifyResult verify_generating_sequence(const GeneratingSequence& gs) {
    VerifyResult r;
    const int n = gs.n;
    const int m = static_cast<int>(gs.terms.size());
    if (n < 5 || n % 4 != 1) {
        r.reason = "n must be 1 mod 4 and at least 5";
        return r;
    }
    if (m == 0 || m > (n - 1) / 4) {
        r.reason = "length must be between 1 and (n-1)/4";
        return r;
    }
    for (std::size_t i = 0; i < gs.turns.size(); ++i) {
        if (gs.turns[i] < 0 || gs.turns[i] >= m || (i > 0 && gs.turns[i] <= gs.turns[i - 1])) {
            r.reason = "turn indices must be sorted, distinct and in range";
            return r;
        }
    }
    long long sum = 0;
    for (int a : gs.terms) {
        if (mod(a, n) == 0) {
            r.reason = "zero term";
            return r;
        }
        sum += mod(a, n);
    }
    if (std::gcd(sum % n, static_cast<long long>(n)) != 1) {
        r.reason = "sum of terms not coprime to n";
        return r;
    }
    for (int i : gs.turns) {
        if (in_turns(gs, (i + 1) % m)) {
            r.reason = "consecutive turns at " + std::to_string(i) + " and " + std::to_string((i + 1) % m);
            return r;
        }
    }
    std::vector<int> vals;
    for (int a : gs.terms) vals.push_back(mod(a, n));
    for (int c : blue_terms(gs)) vals.push_back(c);
    std::set<int> signed_vals;
    for (int v : vals) {
        signed_vals.insert(v);
        signed_vals.insert(mod(-static_cast<long long>(v), n));
    }
    if (static_cast<int>(signed_vals.size()) != 4 * m) {
        r.reason = "signed terms and blue terms are not pairwise distinct";
        return r;
    }
    std::set<int> covered;
    for (int v : vals) covered.insert(residue(v, n));
    for (int x = 1; x <= (n - 1) / 2; ++x)
        if (!covered.count(x)) r.missing.push_back(x);
    r.valid = true;
    return r;
}

GeneratingSequence gs_full(int k) {
    if (k < 3) throw Error(ErrorKind::Precondition, "gs_full needs k >= 3");
    // Small cases k = 3, 4, 5 are literal rows.
    if (k == 3) return make(k, {1, 2, 4}, {});
    if (k == 4) return make(k, {1, 2, 6, 4}, {});
    if (k == 5) return make(k, {1, 2, 7, 6, 4}, {});
    std::vector<int> s;
    if (k % 2 == 1) {
        const int l = (k - 1) / 2;
        s = {-4 * l + 6, 4 * l + 2, -4, -9, 2, 1, 11};
        for (int i = 1; i <= l - 3; ++i) {
            s.push_back(4 * i + 2);
            s.push_back(4 * i + 11);
        }
        return make(k, s, {});
    }
    const int l = k / 2;
    for (int i = 1; i <= l; ++i) {
        s.push_back(4 * i - 1);
        s.push_back(4 * i - 2);
    }
    return make(k, s, {k - 1});
}

GeneratingSequence gs_missing_12(int k) {
    if (k < 4) throw Error(ErrorKind::Precondition, "gs_missing_12 needs k >= 4");
    // Literal rows for n' = 17, 21, 25, 29.
    if (k == 4) return make(k, {3, 4, 8}, {});
    if (k == 5) return make(k, {4, 7, 6, -9}, {});
    if (k == 6) return make(k, {4, 10, 7, 6, -9}, {});
    if (k == 7) return make(k, {11, 8, -12, 7, 6, 3}, {});
    std::vector<int> s;
    std::vector<int> turns;
    if (k % 2 == 1) {
        const int l = (k - 1) / 2;
        s = {8, -5, 4 * l - 1, 4, -16, 7};
        turns = {2};
    } else {
        const int l = k / 2;
        s = {4, 4 * l - 6, 9, -12, 7};
        turns = {0};
    }
    const int l = k / 2;
    for (int i = 1; i <= l - 3; ++i) {
        s.push_back(4 * i + 2);
        s.push_back(4 * i + 7);
    }
    return make(k, s, turns);
}

GeneratingSequence gs_missing_1248(int k) {
    if (k < 7) throw Error(ErrorKind::Precondition, "gs_missing_1248 needs k >= 7");
    // Literal rows for n' = 29, 33.
    if (k == 7) return make(k, {5, 14, 3, 6, 11}, {1});
    if (k == 8) return make(k, {3, 9, 5, 6, 11, 7}, {2});
    std::vector<int> s;
    const int l = k / 2;
    if (k % 2 == 1) {
        s = {7, 5, 4 * l - 6, 13, -16, -6, 17};
        for (int i = 1; i <= l - 4; ++i) {
            s.push_back(4 * i + 6);
            s.push_back(4 * i + 11);
        }
        return make(k, s, {4, 6});
    }
    s = {-4 * l + 1, 5, -4 * l + 5, -3, -13, 6};
    for (int i = 1; i <= l - 4; ++i) {
        s.push_back(4 * i + 7);
        s.push_back(4 * i + 6);
    }
    return make(k, s, {1});
}

GeneratingSequence family(Family f, int k) {
    switch (f) {
        case Family::Full: return gs_full(k);
        case Family::Missing12: return gs_missing_12(k);
        case Family::Missing1248: return gs_missing_1248(k);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
}

CutSpec cut_4k4(int k) {
    if (k < 4) throw Error(ErrorKind::Precondition, "4k+4 cut needs k >= 4");
    CutSpec spec;
    spec.end_edge = make_edge(0, 4 * k - 2);
    return spec;
}

CutSpec cut_4k3(int k) {
    if (k < 5) throw Error(ErrorKind::Precondition, "the {0,13} cut is only available for k >= 5");
    CutSpec spec;
    spec.destroyed_edge = make_edge(0, 13);
    spec.end_edge = make_edge(0, 7);
    return spec;
}

CutSpec cut_4k6(int k) {
    if (k < 7) throw Error(ErrorKind::Precondition, "4k+6 cut needs k >= 7");
    CutSpec spec;
    spec.destroyed_edge = make_edge(0, 17);
    spec.end_edge = make_edge(0, 6);
    spec.second_end_edge = make_edge(6, 17);
    return spec;
}

core::LabelsLayout expand_to_circular(const GeneratingSequence& input) {
    VerifyResult vr = verify_generating_sequence(input);
    if (!vr.valid) throw Error(ErrorKind::Precondition, "invalid generating sequence: " + vr.reason);
    const int n = input.n;
    const int m = static_cast<int>(input.terms.size());

    // A turn on term 0 cannot be expressed on the first triangle, so start at the first non-turn index.
    int start = 0;
    while (in_turns(input, start)) ++start;
    std::vector<int> a(m);
    std::vector<bool> turn(m);
    for (int i = 0; i < m; ++i) {
        a[i] = mod(input.terms[(start + i) % m], n);
        turn[i] = in_turns(input, (start + i) % m);
    }

    core::LabelsLayout out;
    out.n = n;
    const long long len = static_cast<long long>(m) * n + 2;
    out.labels.reserve(len);
    out.labels.push_back(0);
    for (long long i = 0; i + 1 < len; ++i) out.labels.push_back(mod(out.labels.back() + a[i % m], n));
    for (long long i = 3; i < len; ++i) out.layout.push_back(turn[(i - 2) % m] ? 1 : 0);
    return out;
}

TriangleSeq cut_circular(const TriangleSeq& seq, const CutSpec& spec) {
    const auto& tr = seq.triangles;
    const std::size_t t = tr.size();
    if (!seq.circular || t < 4) throw Error(ErrorKind::Precondition, "cut needs a circular sequence of >= 4 triangles");
    if (spec.destroyed_edge) {
        int hits = 0;
        for (const Triangle& x : tr) hits += x.contains(*spec.destroyed_edge) ? 1 : 0;
        if (hits != 1) {
            throw Error(ErrorKind::Precondition, "destroyed edge {" + std::to_string(spec.destroyed_edge->lo) + "," +
                                                     std::to_string(spec.destroyed_edge->hi) + "} covered " +
                                                     std::to_string(hits) + " times");
        }
    }
    core::EdgeCounts counts = core::covered_edges(seq);

    for (std::size_t i = 0; i < t; ++i) {
        const Triangle& cur = tr[i];
        const Triangle& prev = tr[(i + t - 1) % t];
        const Triangle& next = tr[(i + 1) % t];
        std::optional<Edge> unique;
        for (const Edge& e : cur.edges())
            if (!prev.contains(e) && !next.contains(e)) unique = e;
        if (!unique) continue;
        if (spec.destroyed_edge && *unique != *spec.destroyed_edge) continue;

        std::vector<Triangle> lin;
        lin.reserve(t - 1);
        for (std::size_t j = 1; j < t; ++j) lin.push_back(tr[(i + j) % t]);

        // Free at an end: inside the terminal triangle and nowhere else once cur is gone.
        auto free_in = [&](const Triangle& end, const Edge& e) {
            auto it = counts.find(e);
            if (!end.contains(e) || it == counts.end()) return false;
            return it->second - (cur.contains(e) ? 1 : 0) == 1;
        };
        auto fits = [&](const std::vector<Triangle>& l) {
            if (spec.end_edge && !free_in(l.back(), *spec.end_edge)) return false;
            if (spec.second_end_edge && !free_in(l.front(), *spec.second_end_edge)) return false;
            return true;
        };
        if (!fits(lin)) {
            std::reverse(lin.begin(), lin.end());
            if (!fits(lin)) continue;
        }
        return TriangleSeq{std::move(lin), false};
    }
    throw Error(ErrorKind::Precondition, "no triangle satisfies the cut constraints");
}

}  // namespace dfg::genseq
