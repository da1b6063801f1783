#pragma once

#include "zarank/rat.hpp"

#include <set>
#include <vector>

namespace zarank {

// counts[i-1] = n_i, the number of edges of size i; length m.
struct EdgeProfile {
    std::vector<Rat> counts;

    static EdgeProfile zeros(long long m) {
        EdgeProfile p;
        p.counts.assign(static_cast<size_t>(m), Rat(0));
        return p;
    }
    Rat& at1(long long i) { return counts.at(static_cast<size_t>(i - 1)); }
    const Rat& at1(long long i) const { return counts.at(static_cast<size_t>(i - 1)); }
    Rat objective() const;  // sum of i * n_i
};

enum class LpConstraint { EdgeCount, PairCapacity, DeficiencyCap };  // (1), (2), (3)

struct LpSolution {
    EdgeProfile profile;
    Rat objective;
    std::set<LpConstraint> tight;
};

// Exact optimum of the edge-profile LP with constraints (1) and (2):
//   maximize sum i*n_i  s.t.  sum n_i = n,  sum C(i,2) n_i <= lambda*C(m,2).
LpSolution lp_solve_A(long long lambda, long long m, long long n);

// Exact optimum of the LP with the extra per-vertex deficiency constraint (3):
//   1/(k-1-alpha) * sum_{i<k} i(i-1-alpha) n_i + sum_{i>=k} i n_i
//     <= m(lambda(m-1)-alpha)/(k-1).
LpSolution lp_solve_B(long long k, long long lambda, long long m, long long n);

// Closed-form optimal profile (n*_{k-1}, n*_k, n*_{k+1}); requires alpha >= 1
// and n*C(k,2) within [lambda*C(m,2) - alpha*k*m/(k+1), lambda*C(m,2) + m(k-1-alpha)].
EdgeProfile optimal_profile_B(long long k, long long lambda, long long m, long long n);

// Signed slacks (RHS - LHS) of constraints (1), (2), (3) for the given k.
struct ConstraintSlacks {
    Rat edge_count;      // zero for a hypergraph with exactly n edges
    Rat pair_capacity;   // >= 0 for any lambda-linear hypergraph
    Rat deficiency_cap;  // >= 0 for any lambda-linear hypergraph, each k >= 2
};

ConstraintSlacks check_profile_feasible(const EdgeProfile& profile, long long k, long long lambda,
                                        long long m, long long n);

}  // namespace zarank
