#include "zarank/bounds.hpp"

#include <algorithm>
#include <optional>

namespace zarank {

std::string to_string(BoundFamily f) {
    switch (f) {
        case BoundFamily::Culik: return "Culik";
        case BoundFamily::A: return "A";
        case BoundFamily::B: return "B";
    }
    return "?";
}

std::string to_string(BoundRegime r) {
    switch (r) {
        case BoundRegime::AboveCulikThreshold: return "above-culik-threshold";
        case BoundRegime::LowerB: return "lower-B";
        case BoundRegime::MiddleA: return "middle-A";
        case BoundRegime::UpperB: return "upper-B";
        case BoundRegime::Degenerate: return "degenerate";
    }
    return "?";
}

Rat bound_A(long long k, long long lambda, long long m, long long n) {
    if (k < 1 || lambda < 1 || m < 1 || n < 1)
        throw std::invalid_argument("bound_A: all inputs must be positive");
    Rat half(Int(static_cast<long>(k + 1)), Int(2));
    return half * Rat(n) + Rat(Int(static_cast<long>(lambda)) * binom2(m), Int(static_cast<long>(k)));
}

Rat bound_B(long long k, long long lambda, long long m, long long n) {
    if (k < 2) throw std::invalid_argument("bound_B requires k >= 2");
    if (lambda < 1 || m < 1 || n < 1)
        throw std::invalid_argument("bound_B: all inputs must be positive");
    long long a = alpha_of(k, lambda, m);
    Int lm1 = Int(static_cast<long>(lambda)) * Int(static_cast<long>(m - 1));
    Rat first((lm1 - I(a)) * I(m), I(k - 1));
    Int lc = Int(static_cast<long>(lambda)) * binom2(m);
    Rat inner = Rat(binom2(k) * I(n)) - Rat(lc) +
                Rat(Int(static_cast<long>(a)) * Int(static_cast<long>(k)) * Int(static_cast<long>(m)),
                    Int(static_cast<long>(k + 1)));
    Rat coef(Int(static_cast<long>(k + 1)), Int(static_cast<long>(k * k - 1 - a)));
    return first + coef * inner;
}

namespace {

// Least k >= 1 with C(k+1,2)*n >= lambda*C(m,2); for n < lambda*C(m,2)
// this is the unique k whose interval [L1, L4) contains n.
long long locate_k(long long lambda, long long m, long long n) {
    Int lc = Int(static_cast<long>(lambda)) * binom2(m);
    Int nn(static_cast<long>(n));
    long long k = 1;
    while (binom2(k + 1) * nn < lc) ++k;
    return k;
}

BoundReport degenerate_min(long long lambda, long long m, long long n) {
    // Exhaustive minimum over A^l (1 <= l <= m) and B^l (2 <= l <= m).
    std::optional<BoundReport> best;
    auto consider = [&](const Rat& v, BoundFamily fam, long long l) {
        if (!best || v < best->value ||
            (v == best->value && fam == BoundFamily::A && best->family == BoundFamily::B)) {
            BoundReport r;
            r.value = v;
            r.floor_value = v.floor();
            r.family = fam;
            r.k_used = l;
            r.regime = BoundRegime::Degenerate;
            best = r;
        }
    };
    for (long long l = 1; l <= m; ++l) consider(bound_A(l, lambda, m, n), BoundFamily::A, l);
    for (long long l = 2; l <= m; ++l) consider(bound_B(l, lambda, m, n), BoundFamily::B, l);
    return *best;
}

}  // namespace

BoundReport best_bound(long long lambda, long long m, long long n) {
    if (lambda < 1 || m < 2 || n < 1)
        throw std::invalid_argument("best_bound requires lambda >= 1, m >= 2, n >= 1");
    Int lc = Int(static_cast<long>(lambda)) * binom2(m);
    if (Int(static_cast<long>(n)) >= lc) {
        BoundReport r;
        r.value = Rat(lc + I(n));
        r.floor_value = r.value.floor();
        r.family = BoundFamily::Culik;
        r.k_used = 1;
        r.regime = BoundRegime::AboveCulikThreshold;
        return r;
    }
    long long k = locate_k(lambda, m, n);
    if (m < regime_floor_m(k, lambda)) return degenerate_min(lambda, m, n);

    RegimeThresholds t = regime_thresholds(k, lambda, m);
    Rat rn(n);
    BoundReport r;
    if (rn < t.L2) {
        r.family = BoundFamily::B;
        r.k_used = k + 1;
        r.regime = BoundRegime::LowerB;
        r.value = bound_B(k + 1, lambda, m, n);
    } else if (rn <= t.L3) {
        // Endpoints n = L2 and n = L3 report the middle family.
        r.family = BoundFamily::A;
        r.k_used = k;
        r.regime = BoundRegime::MiddleA;
        r.value = bound_A(k, lambda, m, n);
    } else {
        r.family = BoundFamily::B;
        r.k_used = k;
        r.regime = BoundRegime::UpperB;
        r.value = bound_B(k, lambda, m, n);
    }
    r.floor_value = r.value.floor();
    return r;
}

std::vector<Rat> certificate_coefficients_A(long long k, long long m_max) {
    if (k < 1) throw std::invalid_argument("certificate_coefficients_A requires k >= 1");
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(m_max));
    Rat half(Int(static_cast<long>(k + 1)), Int(2));
    for (long long i = 1; i <= m_max; ++i)
        c.push_back(half + Rat(binom2(i), Int(static_cast<long>(k))));
    return c;
}

std::vector<Rat> certificate_coefficients_B(long long k, long long lambda, long long m, long long m_max) {
    if (k < 2) throw std::invalid_argument("certificate_coefficients_B requires k >= 2");
    long long a = alpha_of(k, lambda, m);
    if (a == 0) throw std::domain_error("certificate_coefficients_B: alpha = 0 is excluded");
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(m_max));
    Int den = 2 * Int(static_cast<long>(k * k - 1 - a));
    for (long long i = 1; i <= m_max; ++i) {
        Int num = Int(static_cast<long>(k)) * Int(static_cast<long>(k * k - 1)) +
                  Int(static_cast<long>(k - 1)) * Int(static_cast<long>(i)) * Int(static_cast<long>(i - 1)) +
                  2 * Int(static_cast<long>(i)) * Int(static_cast<long>(std::min(k, i) - 1 - a));
        c.push_back(Rat(num, den));
    }
    return c;
}

}  // namespace zarank
