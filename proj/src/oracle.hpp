#pragma once

#include <cstdint>

#include "core.hpp"

namespace dfg::oracle {

constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget;  // node limit; 0 means unlimited
    int jobs = 1;
    bool prune = true;
};

struct SearchResult {
    int n = 0;
    int best_diameter = 0;
    core::LabelsLayout witness;
    bool exhaustive = false;
    std::uint64_t nodes_explored = 0;
};

SearchResult search_max_diameter(int n, const SearchOptions& opts = {});

}  // namespace dfg::oracle
