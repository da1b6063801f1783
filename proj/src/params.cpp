#include "zarank/params.hpp"

namespace zarank {

void validate_positive(const Params& p) {
    if (p.k < 1 || p.lambda < 1 || p.m < 1 || p.n < 1)
        throw std::invalid_argument("Params: k, lambda, m, n must all be positive");
}

long long alpha_of(long long k, long long lambda, long long m) {
    if (k < 2) throw std::domain_error("alpha is undefined for k < 2");
    Int lm1 = Int(static_cast<long>(lambda)) * Int(static_cast<long>(m - 1));
    return to_ll(mod_floor(lm1, Int(static_cast<long>(k - 1))));
}

long long beta_of(long long k, long long lambda, long long m) {
    if (k < 1) throw std::domain_error("beta requires k >= 1");
    Int lm1 = Int(static_cast<long>(lambda)) * Int(static_cast<long>(m - 1));
    return to_ll(mod_floor(-lm1, Int(static_cast<long>(k))));
}

long long d_of(long long k, long long lambda, long long m, long long n) {
    if (k < 1) throw std::domain_error("d requires k >= 1");
    Int lhs = Int(static_cast<long>(lambda)) * binom2(m) - binom2(k) * Int(static_cast<long>(n));
    return to_ll(mod_floor(lhs, Int(static_cast<long>(k))));
}

Residues residues(const Params& p) {
    validate_positive(p);
    Residues r;
    r.alpha = alpha_of(p.k, p.lambda, p.m);
    r.beta = beta_of(p.k, p.lambda, p.m);
    r.d = d_of(p.k, p.lambda, p.m, p.n);
    return r;
}

long long regime_floor_m(long long k, long long lambda) {
    // least m with m - 1 >= k(k-1)/lambda
    Int kk = Int(static_cast<long>(k)) * Int(static_cast<long>(k - 1));
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), kk.get_mpz_t(), Int(static_cast<long>(lambda)).get_mpz_t());
    return to_ll(q) + 1;
}

RegimeThresholds regime_thresholds(long long k, long long lambda, long long m) {
    if (k < 2) throw std::domain_error("regime_thresholds requires k >= 2");
    if (lambda < 1 || m < 1) throw std::invalid_argument("regime_thresholds: lambda, m must be positive");
    long long floor_m = regime_floor_m(k, lambda);
    if (m < floor_m)
        throw BelowRegimeFloor(floor_m, "regime_thresholds: m below the regime floor; least valid m is " +
                                            std::to_string(floor_m));
    Int lc = Int(static_cast<long>(lambda)) * binom2(m);
    long long alpha = alpha_of(k, lambda, m);
    long long beta = beta_of(k, lambda, m);
    Int ck2 = binom2(k);
    Int ck12 = binom2(k + 1);
    RegimeThresholds t;
    t.L1 = Rat(lc, ck12);
    t.L2 = Rat(lc + Int(static_cast<long>(beta)) * Int(static_cast<long>(m)), ck12);
    Rat corner = Rat(Int(static_cast<long>(alpha)) * Int(static_cast<long>(k)) * Int(static_cast<long>(m)),
                     Int(static_cast<long>(k + 1)));
    t.L3 = (Rat(lc) - corner) / Rat(ck2);
    t.L4 = Rat(lc, ck2);
    return t;
}

}  // namespace zarank
