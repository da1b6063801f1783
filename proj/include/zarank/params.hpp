#pragma once

#include "zarank/rat.hpp"

#include <stdexcept>

namespace zarank {

// The driving tuple (k, lambda, m, n). k is the block size the bound
// families are indexed by, lambda the linearity index, m the vertex
// count, n the edge count.
struct Params {
    long long k = 1;
    long long lambda = 1;
    long long m = 1;
    long long n = 1;
};

// Residues of lambda(m-1) and of the pair-count balance:
//   lambda(m-1) - alpha == 0 (mod k-1), alpha in {0..k-2}   (k >= 2)
//   lambda(m-1) + beta  == 0 (mod k),   beta  in {0..k-1}
//   lambda*C(m,2) - C(k,2)*n == d (mod k), d in {0..k-1}
struct Residues {
    long long alpha = 0;
    long long beta = 0;
    long long d = 0;
};

void validate_positive(const Params& p);

// alpha is undefined at k < 2; that is an error, not a default.
long long alpha_of(long long k, long long lambda, long long m);
long long beta_of(long long k, long long lambda, long long m);
long long d_of(long long k, long long lambda, long long m, long long n);

Residues residues(const Params& p);

// Thrown by regime_thresholds when m is below the floor m >= k(k-1)/lambda + 1;
// carries the least valid m.
struct BelowRegimeFloor : std::domain_error {
    long long min_valid_m;
    BelowRegimeFloor(long long mv, const std::string& what) : std::domain_error(what), min_valid_m(mv) {}
};

// The four regime breakpoints, guaranteed L1 <= L2 <= L3 <= L4:
//   L1 = lambda*C(m,2)/C(k+1,2)
//   L2 = (lambda*C(m,2) + beta*m)/C(k+1,2)
//   L3 = (lambda*C(m,2) - alpha*k*m/(k+1))/C(k,2)
//   L4 = lambda*C(m,2)/C(k,2)
struct RegimeThresholds {
    Rat L1, L2, L3, L4;
};

RegimeThresholds regime_thresholds(long long k, long long lambda, long long m);

// Least valid m for regime_thresholds, i.e. ceil(k(k-1)/lambda) + 1.
long long regime_floor_m(long long k, long long lambda);

}  // namespace zarank
