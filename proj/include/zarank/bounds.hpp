#pragma once

#include "zarank/params.hpp"
#include "zarank/rat.hpp"

#include <string>
#include <vector>

namespace zarank {

enum class BoundFamily { Culik, A, B };
enum class BoundRegime { AboveCulikThreshold, LowerB, MiddleA, UpperB, Degenerate };

std::string to_string(BoundFamily f);
std::string to_string(BoundRegime r);

struct BoundReport {
    Rat value;
    Int floor_value;
    BoundFamily family = BoundFamily::A;
    long long k_used = 1;
    BoundRegime regime = BoundRegime::MiddleA;
};

// A^k(m,n) = (k+1)/2 * n + lambda/k * C(m,2), k >= 1.
Rat bound_A(long long k, long long lambda, long long m, long long n);

// B^k(m,n) = (lambda(m-1)-a)/(k-1) * m
//          + (k+1)/(k^2-1-a) * (n*C(k,2) - lambda*C(m,2) + a*k*m/(k+1)),
// with a = alpha_of(k, lambda, m); k >= 2. Equals A^{k-1} when alpha = 0.
Rat bound_B(long long k, long long lambda, long long m, long long n);

// Best upper bound on Z_{2,lambda+1}(m,n) with regime selection:
// Culik line for n >= lambda*C(m,2); otherwise the located interval's
// family; exhaustive minimum (regime = Degenerate) when m is below the
// regime floor for the located k.
BoundReport best_bound(long long lambda, long long m, long long n);

// Certificate coefficients c_i for the A-family combination:
// c_i = (k+1)/2 + C(i,2)/k, with c_i >= i and equality exactly at
// i in {k, k+1}.
std::vector<Rat> certificate_coefficients_A(long long k, long long m_max);

// Certificate coefficients for the B-family combination:
// c_i = (k(k^2-1) + (k-1)i(i-1) + 2i(min(k,i)-1-alpha)) / (2(k^2-1-alpha)),
// equality at i in {k-1, k, k+1}. alpha must be nonzero.
std::vector<Rat> certificate_coefficients_B(long long k, long long lambda, long long m, long long m_max);

}  // namespace zarank
