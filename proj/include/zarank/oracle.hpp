#pragma once

#include "zarank/hypergraph.hpp"

#include <optional>
#include <vector>

namespace zarank {

struct OracleTask {
    long long lambda = 1;
    int m = 1;
    long long n = 1;
    long long node_budget = 100'000'000;
    std::optional<long long> upper_seed;  // known upper bound; search stops on reaching it
    int m_cap = 12;
    long long n_cap = 40;
    long long lower_seed = 0;  // known achievable total degree (internal seeding for scans)
};

struct OracleResult {
    long long value = 0;
    bool exact = true;  // false when the node budget ran out (value is a lower bound)
    Hypergraph witness;
    long long nodes = 0;
};

// Exact maximum total degree of a lambda-linear hypergraph with m vertices
// and n edges, by canonical branch-and-bound (size-descending edge order,
// lexicographic within a size, first-appearance vertex numbering), pruned
// with the closed-form bound family on the residual problem.
OracleResult exact_z(const OracleTask& t);

struct ScanRow {
    long long n = 0;
    long long value = 0;
    bool exact = true;
};

// exact_z over a range of n, each cell seeded by the previous value
// (the maximum grows by at least 1 per added edge).
std::vector<ScanRow> scan_exact(long long lambda, int m, long long n_from, long long n_to,
                                long long node_budget_per_cell = 100'000'000);

}  // namespace zarank
