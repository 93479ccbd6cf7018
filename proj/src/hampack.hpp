#pragma once

#include <set>
#include <string>
#include <vector>

#include "core.hpp"

namespace dfg::hampack {

using core::Edge;

struct CycleSquare {
    std::vector<int> order;
};

struct Decomposition {
    int n = 0;
    std::vector<CycleSquare> cycles;
};

struct PartitionReport {
    bool success = false;
    int n = 0;
    std::size_t cycle_count = 0;
    std::size_t expected_cycles = 0;
    std::vector<Edge> missing;
    std::vector<Edge> doubled;
    std::vector<std::string> problems;  // malformed orderings
};

bool is_prime(long long p);

std::set<Edge> square_edges(const CycleSquare& c);

long long ord_mod(long long base, long long p);

Decomposition decompose_prime(int p);

Decomposition cycles_from_sequences(int n, const std::vector<std::vector<int>>& seqs);

// The six short sequences that generate a decomposition of K_105.
const std::vector<std::vector<int>>& builtin_105();
Decomposition decompose_builtin_105();

PartitionReport verify_partition(const Decomposition& d);

}  // namespace dfg::hampack
