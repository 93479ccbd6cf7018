#include "hampack.hpp"

#include <algorithm>

namespace dfg::hampack {

namespace {

// Operands stay below 2^31, so the product fits in 64 bits.
long long mulmod(long long a, long long b, long long m) { return a * b % m; }

long long powmod(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

std::vector<long long> prime_factors(long long x) {
    std::vector<long long> out;
    for (long long q = 2; q * q <= x; ++q) {
        if (x % q) continue;
        out.push_back(q);
        while (x % q == 0) x /= q;
    }
    if (x > 1) out.push_back(x);
    return out;
}

}  // namespace

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

std::set<Edge> square_edges(const CycleSquare& c) {
    const int n = static_cast<int>(c.order.size());
    if (n < 5) throw Error(ErrorKind::InvalidArgument, "cycle squares need at least 5 vertices");
    std::set<Edge> out;
    for (int i = 0; i < n; ++i) {
        out.insert(core::make_edge(c.order[i], c.order[(i + 1) % n]));
        out.insert(core::make_edge(c.order[i], c.order[(i + 2) % n]));
    }
    return out;
}

long long ord_mod(long long base, long long p) {
    if (p >= (1LL << 31)) throw Error(ErrorKind::InvalidArgument, "modulus must be below 2^31");
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    long long b = ((base % p) + p) % p;
    if (b == 0) throw Error(ErrorKind::InvalidArgument, "base is divisible by p");
    long long t = p - 1;
    for (long long q : prime_factors(p - 1))
        while (t % q == 0 && powmod(b, t / q, p) == 1) t /= q;
    return t;
}

Decomposition decompose_prime(int p) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(ErrorKind::Precondition, "2 has no order modulo 2");
    const long long ord = ord_mod(2, p);
    if (ord % 4 != 0) {
        throw Error(ErrorKind::Precondition,
                    "ord_" + std::to_string(p) + "(2) = " + std::to_string(ord) + " is not divisible by 4");
    }
    Decomposition d;
    d.n = p;
    std::vector<bool> seen(p, false);
    for (int a = 1; a < p; ++a) {
        if (seen[a]) continue;
        long long x = a;
        for (long long j = 0; j < ord; ++j, x = x * 2 % p) seen[x] = true;
        for (long long k = 0; k < ord / 2; k += 2) {
            const long long step = mulmod(a, powmod(2, k, p), p);
            CycleSquare c;
            c.order.reserve(p);
            for (long long i = 0; i < p; ++i) c.order.push_back(static_cast<int>(mulmod(i, step, p)));
            d.cycles.push_back(std::move(c));
        }
    }
    return d;
}

Decomposition cycles_from_sequences(int n, const std::vector<std::vector<int>>& seqs) {
    if (n < 5) throw Error(ErrorKind::InvalidArgument, "n must be at least 5");
    Decomposition d;
    d.n = n;
    for (std::size_t s = 0; s < seqs.size(); ++s) {
        const auto& a = seqs[s];
        const int len = static_cast<int>(a.size());
        if (len == 0 || n % len != 0)
            throw Error(ErrorKind::Precondition, "sequence " + std::to_string(s) + " length does not divide n");
        for (int v : a)
            if (((v % n) + n) % n == 0)
                throw Error(ErrorKind::Precondition, "sequence " + std::to_string(s) + " has a zero entry");
        for (int start = 0; start < len; ++start) {
            CycleSquare c;
            std::vector<bool> seen(n, false);
            int x = start;
            for (int i = 0; i < n; ++i) {
                if (seen[x]) {
                    throw Error(ErrorKind::Precondition, "sequence " + std::to_string(s) + " from start " +
                                                             std::to_string(start) + " revisits vertex " +
                                                             std::to_string(x));
                }
                seen[x] = true;
                c.order.push_back(x);
                x = (((x + a[i % len]) % n) + n) % n;
            }
            d.cycles.push_back(std::move(c));
        }
    }
    return d;
}

const std::vector<std::vector<int>>& builtin_105() {
    static const std::vector<std::vector<int>> seqs{
        {19, 10, 4},
        {-40, -43, 5},
        {-41, 28, 25},
        {-48, 6, 21, -18, -26},
        {-17, 8, 51, 47, -49},
        {-30, -20, -12, 36, 1, -34, 45},
    };
    return seqs;
}

Decomposition decompose_builtin_105() { return cycles_from_sequences(105, builtin_105()); }

PartitionReport verify_partition(const Decomposition& d) {
    PartitionReport r;
    const int n = d.n;
    r.n = n;
    r.cycle_count = d.cycles.size();
    r.expected_cycles = n >= 5 ? static_cast<std::size_t>((n - 1) / 4) : 0;
    if (n < 5) {
        r.problems.push_back("n must be at least 5");
        return r;
    }
    if (n % 4 != 1) r.problems.push_back("n is not 1 mod 4, so no partition exists");
    std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t ci = 0; ci < d.cycles.size(); ++ci) {
        const auto& order = d.cycles[ci].order;
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        bool perm = static_cast<int>(sorted.size()) == n;
        for (int i = 0; perm && i < n; ++i) perm = sorted[i] == i;
        if (!perm) {
            r.problems.push_back("cycle " + std::to_string(ci) + " is not a permutation of 0..n-1");
            continue;
        }
        for (const Edge& e : square_edges(d.cycles[ci])) ++count[static_cast<std::size_t>(e.lo) * n + e.hi];
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int c = count[static_cast<std::size_t>(a) * n + b];
            if (c == 0) r.missing.push_back({a, b});
            if (c >= 2) r.doubled.push_back({a, b});
        }
    r.success = r.problems.empty() && r.missing.empty() && r.doubled.empty() && r.cycle_count == r.expected_cycles;
    return r;
}

}  // namespace dfg::hampack
