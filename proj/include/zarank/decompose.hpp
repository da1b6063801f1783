#pragma once

#include "zarank/hypergraph.hpp"

#include <string>
#include <vector>

namespace zarank {

enum class SearchStatus { Found, Impossible, BudgetExhausted, NotDivisible };

std::string to_string(SearchStatus s);

struct DecompositionTask {
    Multigraph host;
    int part = 3;                         // decompose into K_part copies
    long long step_budget = 10'000'000;   // node expansions
    unsigned seed = 0;                    // rotates candidate vertex order
};

struct DecompositionResult {
    SearchStatus status = SearchStatus::Impossible;
    std::vector<std::vector<int>> parts;
    long long nodes = 0;
};

// Backtracking exact cover of the host's pair multiset by K_part cliques.
// Branches on the lexicographically least uncovered pair; candidates in
// (seed-rotated) index order. Throws on a divisibility violation without
// searching; exhaustion within budget is reported distinctly from a fully
// explored (impossible) search.
DecompositionResult kl_decompose(const DecompositionTask& task);

struct BlockDecomposition {
    bool k_divisible = false, k1_divisible = false;
    long long q_k = 0, q_k1 = 0;  // piece counts C(h,2)/C(l,2) when divisible
    DecompositionResult pieces_k, pieces_k1;
};

// Decompositions of K_h into size-k pieces and into size-(k+1) pieces,
// each attempted iff the divisibility conditions hold for that size.
BlockDecomposition decompose_block_mixed(int h, int k, long long budget = 10'000'000);

}  // namespace zarank
