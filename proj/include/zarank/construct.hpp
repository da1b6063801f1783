#pragma once

#include "zarank/bounds.hpp"
#include "zarank/decompose.hpp"
#include "zarank/hypergraph.hpp"
#include "zarank/rat.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace zarank {

// Integer rounding of the two-size optimum:
//   n_k  = ceil((k+1)/2 n - lambda/k C(m,2)),  n_k1 = n - n_k,
//   d in {0..k-1} with lambda*C(m,2) - C(k,2)n == d (mod k).
// Invariants: n_k + n_k1 = n and C(k,2)n_k + C(k+1,2)n_k1 = lambda*C(m,2) - d.
struct Split {
    long long n_k = 0, n_k1 = 0, d = 0;
};

Split split(long long k, long long lambda, long long m, long long n);

struct WitnessCheck {
    bool ok = false;
    std::string failure;
    DegreeSummary summary;
};

// True iff H is lambda-linear with exactly n_k size-k and n_k1 size-(k+1)
// edges (no others), total degree floor(A^k), and a d-edge defect.
WitnessCheck verify_witness(const Hypergraph& h, long long k, long long lambda, long long m, long long n);

// Bookkeeping for the middle-range block plan: lambda*C(m,2) - d splits as
// b repetitions of (K_h + K_{k+1} + K_k) plus a remainder e, and the two
// layer counts decompose as n_l = b + b_l q_l + np_l.
struct MiddlePlan {
    bool feasible = false;
    std::string failure;
    long long h = 0;
    Rat eps;
    long long q_k = 0, q_k1 = 0;
    long long b = 0, e = 0;
    long long b_k = 0, b_k1 = 0;
    long long np_k = 0, np_k1 = 0;
    Split sp;
};

MiddlePlan plan_middle_range(long long k, long long lambda, long long m, long long n,
                             const Rat& eps = Rat(1, 2));

// Least h == 1 (mod k(k^2-1)) with eps*C(h,2) >= 2k.
long long middle_block_order(long long k, const Rat& eps = Rat(1, 2));

// Per-vertex plan for a three-size witness meeting floor(B^k):
// d = k*tau + nu, m2 = (k-1-alpha)tau - (k-1)nu, parts |V1..V4| =
// (m1, m2, 2d, rest), prescriptions (count of size-(k-1), size-(k+1))
// per part.
struct Skeleton {
    Rat tau, nu, m1_star;
    long long m1 = 0, m2 = 0;
    long long n_km1 = 0, n_k = 0, n_k1 = 0, d = 0;
    std::array<long long, 4> part_sizes{};
    std::array<std::pair<long long, long long>, 4> prescriptions{};
};

Skeleton plan_skeleton_B(long long k, long long lambda, long long m, long long n);

enum class ConstructStatus { Success, Failure, BudgetExhausted };

struct ConstructResult {
    ConstructStatus status = ConstructStatus::Failure;
    std::string stage;   // failing stage when not Success
    std::string detail;
    Hypergraph witness;
};

ConstructResult construct_A_witness(long long k, long long lambda, long long m, long long n,
                                    long long budget = 10'000'000, unsigned seed = 0);
ConstructResult construct_B_witness(long long k, long long lambda, long long m, long long n,
                                    long long budget = 10'000'000, unsigned seed = 0);

enum class Achievability { AchievedA, AchievedB, NotAchieved, EquivalentToDesign, Unknown };

std::string to_string(Achievability a);

struct AchievabilityVerdict {
    Achievability status = Achievability::Unknown;
    int clause = 0;  // 1, 2, 3 when a clause fired
    std::string detail;
    long long design_k = 0, design_lambda = 0;
    Rat design_h;
};

// Non-achievability predicates at the integral bound points
// (lambda*C(m,2) - n*C(k,2) == 0 (mod k) required; domain error otherwise).
AchievabilityVerdict not_achieved(long long k, long long lambda, long long m, long long n);

enum class DesignStatus { Exists, Nonexistent, Unknown };

std::string to_string(DesignStatus s);

struct DesignResult {
    DesignStatus status = DesignStatus::Unknown;
    long long h = 0;
    Hypergraph design;  // k-uniform with underlying lambda*K_h when Exists
    std::string source;
};

// Symmetric design with block size k and index lambda on h = k(k-1)/lambda + 1
// vertices. Resolution order: catalog file, built-in constructions
// (projective planes over small fields, complement families, the order-3
// biplane), then bounded backtracking search. Nonexistence is only ever
// reported from catalog facts.
DesignResult symmetric_design(long long k, long long lambda, const std::string& catalog_dir = "",
                              long long budget = 10'000'000);

// Catalog file helpers ({"k","lambda","h","status","blocks","source"}).
std::string design_to_catalog_json(long long k, long long lambda, const DesignResult& r);
std::optional<DesignResult> read_catalog_file(const std::string& path, long long k, long long lambda);

}  // namespace zarank
