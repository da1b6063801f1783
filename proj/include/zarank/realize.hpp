#pragma once

#include "zarank/hypergraph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zarank {

// Per-vertex degree targets for one uniform layer, together with the
// lambda-linear anchor multigraph A the layer's union must respect.
struct DegreePrescription {
    std::vector<long long> targets;  // r_x, indexed by vertex
    int uniformity = 2;              // edge size, >= 2
    Multigraph context;              // A; may be empty (order 0 means "none")
    long long lambda = 1;

    int order() const { return static_cast<int>(targets.size()); }
    long long total() const;
    long long edge_goal() const;  // total / uniformity
    long long max_target() const;
};

struct RealizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest closed saturated-neighbourhood size the repair loop can meet:
// 1 + floor(max{r_x(l-1) + deg_A(x) : r_x > 0} / lambda), and 1 when no
// vertex has a positive target.
long long saturation_radius(const DegreePrescription& p);
// The sufficient condition for guaranteed repair:
// edge_goal >= 2 * saturation_radius * max_target.
bool meets_size_condition(const DegreePrescription& p);

// Degree-sequence realization of a uniform hypergraph: edges filled
// greedily from the highest-residual vertices, ties by index. Output is
// canonical and deterministic; not necessarily linear.
Hypergraph gale_ryser_realize(const DegreePrescription& p);

struct SwapRepairStats {
    long long steps = 0;
    std::vector<long long> potential_trace;  // excess codegree after each step
};

// Repairs M so that M+A is lambda-linear, preserving each vertex degree.
// Violating pair chosen lexicographically least; the replacement edge and
// vertex are the least admissible ones. Throws RealizeError naming the
// stuck pair if no admissible replacement exists.
Hypergraph swap_repair(Hypergraph m, const DegreePrescription& p, SwapRepairStats* stats = nullptr);

Hypergraph realize_linear(const DegreePrescription& p, SwapRepairStats* stats = nullptr);

// Exact degree-constrained subgraph: a subgraph of C with degree exactly
// a[x] at every vertex, found by backtracking. Throws RealizeError when no
// such subgraph exists.
Multigraph prescribed_degree_subgraph(const Multigraph& c, const std::vector<int>& a, int s);

}  // namespace zarank
