#include "zarank/construct.hpp"

#include "zarank/params.hpp"
#include "zarank/realize.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>

namespace zarank {

Split split(long long k, long long lambda, long long m, long long n) {
    if (k < 1 || lambda < 1 || m < 1 || n < 1)
        throw std::invalid_argument("split: inputs must be positive");
    Rat half_hi(Int(static_cast<long>(k + 1)), Int(2));
    Rat half_lo(Int(static_cast<long>(k - 1)), Int(2));
    Rat lc_over_k(Int(static_cast<long>(lambda)) * binom2(m), Int(static_cast<long>(k)));
    Split s;
    s.n_k = to_ll((half_hi * Rat(n) - lc_over_k).ceil());
    s.n_k1 = to_ll((lc_over_k - half_lo * Rat(n)).floor());
    s.d = d_of(k, lambda, m, n);
    if (s.n_k + s.n_k1 != n) throw std::logic_error("split: rounding identity failed");
    Int pairs = binom2(k) * I(s.n_k) + binom2(k + 1) * I(s.n_k1);
    if (pairs != I(lambda) * binom2(m) - I(s.d))
        throw std::logic_error("split: pair-count identity failed");
    return s;
}

WitnessCheck verify_witness(const Hypergraph& h, long long k, long long lambda, long long m, long long n) {
    WitnessCheck w;
    w.summary = degree_summary(h);
    if (h.m != m) {
        w.failure = "order is " + std::to_string(h.m) + ", expected " + std::to_string(m);
        return w;
    }
    auto lin = is_lambda_linear(h, lambda);
    if (!lin.linear) {
        w.failure = "not " + std::to_string(lambda) + "-linear at pair (" + std::to_string(lin.u) + "," +
                    std::to_string(lin.v) + ")";
        return w;
    }
    Split s = split(k, lambda, m, n);
    auto profile = h.size_profile();
    for (long long i = 1; i <= m; ++i) {
        long long want = i == k ? s.n_k : (i == k + 1 ? s.n_k1 : 0);
        if (profile[static_cast<size_t>(i - 1)] != want) {
            w.failure = "profile has " + std::to_string(profile[static_cast<size_t>(i - 1)]) +
                        " edges of size " + std::to_string(i) + ", expected " + std::to_string(want);
            return w;
        }
    }
    Int target = bound_A(k, lambda, m, n).floor();
    if (Int(static_cast<long>(h.total_degree())) != target) {
        w.failure = "total degree " + std::to_string(h.total_degree()) + " != floor bound " + target.get_str();
        return w;
    }
    long long defect_edges = defect(h, lambda).edge_count();
    if (defect_edges != s.d) {
        w.failure = "defect has " + std::to_string(defect_edges) + " edges, expected " + std::to_string(s.d);
        return w;
    }
    w.ok = true;
    return w;
}

long long middle_block_order(long long k, const Rat& eps) {
    long long period = k * (k * k - 1);
    for (long long h = 1 + period;; h += period) {
        if (eps * Rat(binom2(h)) >= Rat(2 * k)) return h;
    }
}

MiddlePlan plan_middle_range(long long k, long long lambda, long long m, long long n, const Rat& eps) {
    if (k < 2) throw std::invalid_argument("plan_middle_range requires k >= 2");
    if (eps <= Rat(0) || eps >= Rat(1)) throw std::invalid_argument("plan_middle_range: eps must be in (0,1)");
    MiddlePlan p;
    p.eps = eps;
    p.h = middle_block_order(k, eps);
    p.sp = split(k, lambda, m, n);
    Int lc = Int(static_cast<long>(lambda)) * binom2(m);
    Rat lo = (Rat(1) + eps) * Rat(lc, binom2(k + 1));
    Rat hi = (Rat(1) - eps) * Rat(lc, binom2(k));
    if (Rat(n) < lo || Rat(n) > hi) {
        p.failure = "n outside the middle interval [" + lo.str() + ", " + hi.str() + "] at eps=" + eps.str();
        return p;
    }
    Int ch2 = binom2(p.h);
    Int period = ch2 + binom2(k + 1) + binom2(k);
    p.q_k = to_ll(ch2 / binom2(k));
    p.q_k1 = to_ll(ch2 / binom2(k + 1));
    Int base = lc - I(p.sp.d);
    if (base < ch2) {
        p.failure = "lambda*C(m,2) - d below C(h,2); m too small for block order h=" + std::to_string(p.h);
        return p;
    }
    Int b;
    mpz_fdiv_q(b.get_mpz_t(), Int(base - ch2).get_mpz_t(), period.get_mpz_t());
    p.b = to_ll(b);
    p.e = to_ll(base - b * period);
    if (p.sp.n_k < p.b) {
        p.failure = "n_k below b";
        return p;
    }
    p.b_k = (p.sp.n_k - p.b) / p.q_k;
    p.np_k = (p.sp.n_k - p.b) - p.b_k * p.q_k;
    p.b_k1 = p.b - p.b_k;
    if (p.b_k1 < 0) {
        p.failure = "b_{k+1} negative";
        return p;
    }
    Int rem = I(p.e) - binom2(k) * I(p.np_k);
    if (rem < 0 || rem % binom2(k + 1) != 0) {
        p.failure = "remainder e - n'_k C(k,2) not a nonnegative multiple of C(k+1,2)";
        return p;
    }
    p.np_k1 = to_ll(rem / binom2(k + 1));
    if (p.sp.n_k1 != p.b + p.b_k1 * p.q_k1 + p.np_k1) {
        p.failure = "n_{k+1} reconstruction failed";
        return p;
    }
    p.feasible = true;
    return p;
}

Skeleton plan_skeleton_B(long long k, long long lambda, long long m, long long n) {
    if (k < 3) throw std::domain_error("plan_skeleton_B requires k >= 3");
    long long alpha = alpha_of(k, lambda, m);
    if (alpha == 0) throw std::domain_error("plan_skeleton_B: alpha = 0 (the bound reduces to the A family)");
    Int lc = Int(static_cast<long>(lambda)) * binom2(m);
    Rat interval_lo = (Rat(lc) - Rat(I(alpha) * I(k) * I(m), I(k + 1))) /
                          Rat(binom2(k)) +
                      Rat(4 * (k - 2) * (k - 1));
    Rat interval_hi = (Rat(lc) + Rat(Int(static_cast<long>(m)) * Int(static_cast<long>(k - 1 - alpha)))) /
                          Rat(binom2(k)) -
                      Rat(4 * (k + 1) * (k + 2));
    if (Rat(n) < interval_lo || Rat(n) > interval_hi)
        throw std::out_of_range("plan_skeleton_B: n outside [" + interval_lo.str() + ", " +
                                interval_hi.str() + "]");

    Skeleton s;
    Rat b = bound_B(k, lambda, m, n);
    Int floor_b = b.floor();
    s.tau = b - Rat(floor_b);
    Rat nk2 = Rat(binom2(k) * I(n));
    s.m1_star = Rat(Int(static_cast<long>(k + 1)), Int(static_cast<long>(k * k - 1 - alpha))) *
                (nk2 - Rat(lc) +
                 Rat(I(alpha) * I(k) * I(m), I(k + 1)));
    s.m1 = to_ll(s.m1_star.floor());
    Rat n_km1_star = Rat(Int(static_cast<long>(k - 1 - alpha)), Int(static_cast<long>(k - 1))) * s.m1_star;
    s.n_km1 = to_ll((Rat(Int(static_cast<long>(k - 1 - alpha)) * Int(static_cast<long>(s.m1)),
                         Int(static_cast<long>(k - 1))))
                        .ceil());
    s.nu = n_km1_star - Rat(s.n_km1);
    s.n_k1 = to_ll(floor_b - I(k) * I(n)) + s.n_km1;
    s.n_k = n - s.n_km1 - s.n_k1;
    Int d_int = lc - binom2(k - 1) * I(s.n_km1) - binom2(k) * I(s.n_k) - binom2(k + 1) * I(s.n_k1);
    s.d = to_ll(d_int);
    s.m2 = (k - 1) * s.n_km1 - s.m1 * (k - 1 - alpha);

    // Forced identities and ranges; any failure here is a logic error, not
    // an input error.
    if (Rat(s.d) != Rat(k) * s.tau + s.nu) throw std::logic_error("skeleton: d != k*tau + nu");
    if (Rat(s.m2) != Rat(k - 1 - alpha) * s.tau - Rat(k - 1) * s.nu)
        throw std::logic_error("skeleton: m2 identity failed");
    if (s.d < 0 || s.d > k) throw std::logic_error("skeleton: d out of {0..k}");
    if (s.m2 < 0 || s.m2 > k - 2) throw std::logic_error("skeleton: m2 out of {0..k-2}");
    long long rest = m - s.m1 - s.m2 - 2 * s.d;
    if (s.m1 < 0 || rest < 0) throw std::logic_error("skeleton: negative part size");
    s.part_sizes = {s.m1, s.m2, 2 * s.d, rest};
    s.prescriptions = {std::pair<long long, long long>{k - 1 - alpha, 0},
                       {1, alpha + 1},
                       {0, alpha - 1},
                       {0, alpha}};
    long long sum_km1 = 0, sum_k1 = 0;
    for (int part = 0; part < 4; ++part) {
        sum_km1 += s.part_sizes[static_cast<size_t>(part)] * s.prescriptions[static_cast<size_t>(part)].first;
        sum_k1 += s.part_sizes[static_cast<size_t>(part)] * s.prescriptions[static_cast<size_t>(part)].second;
    }
    if (sum_km1 != (k - 1) * s.n_km1) throw std::logic_error("skeleton: size-(k-1) prescription sum failed");
    if (sum_k1 != (k + 1) * s.n_k1) throw std::logic_error("skeleton: size-(k+1) prescription sum failed");
    if ((k - 1) * s.n_km1 + k * s.n_k + (k + 1) * s.n_k1 != to_ll(floor_b))
        throw std::logic_error("skeleton: total degree identity failed");
    return s;
}

namespace {

ConstructResult fail(std::string stage, std::string detail,
                     ConstructStatus st = ConstructStatus::Failure) {
    ConstructResult r;
    r.status = st;
    r.stage = std::move(stage);
    r.detail = std::move(detail);
    return r;
}

// Matching with d edges on the 2d top-indexed vertices.
Multigraph top_matching(int m, long long d) {
    Multigraph dg(m);
    for (long long i = 0; i < d; ++i)
        dg.add_pair(static_cast<int>(m - 2 * d + 2 * i), static_cast<int>(m - 2 * d + 2 * i + 1), 1);
    return dg;
}

Multigraph defect_against(const Multigraph& covered, int m, long long lambda) {
    Multigraph g(m);
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            long long c = covered.codegree(x, y);
            if (c > lambda) throw NotLinearError(x, y);
            g.add_pair(x, y, lambda - c);
        }
    return g;
}

Multigraph plus(const Multigraph& a, const Multigraph& b) {
    Multigraph g(std::max(a.order(), b.order()));
    for (const auto& pr : a.pairs()) g.add_pair(pr.first.first, pr.first.second, pr.second);
    for (const auto& pr : b.pairs()) g.add_pair(pr.first.first, pr.first.second, pr.second);
    return g;
}

// Distributes `increments` additions of `step` over the targets, visiting
// the matched vertices first and then everyone else, round-robin.
void distribute(std::vector<long long>& targets, const Multigraph& dmatch, long long increments,
                long long step) {
    std::vector<int> order;
    for (int x = 0; x < static_cast<int>(targets.size()); ++x)
        if (dmatch.order() > x && dmatch.degree(x) > 0) order.push_back(x);
    for (int x = 0; x < static_cast<int>(targets.size()); ++x)
        if (!(dmatch.order() > x && dmatch.degree(x) > 0)) order.push_back(x);
    for (long long i = 0; i < increments; ++i)
        targets[static_cast<size_t>(order[static_cast<size_t>(i % order.size())])] += step;
}

Hypergraph pieces_to_hypergraph(int m, const std::vector<std::vector<int>>& parts) {
    Hypergraph h(m);
    for (const auto& p : parts) h.add_edge(p);
    return h;
}

}  // namespace

ConstructResult construct_A_witness(long long k, long long lambda, long long m, long long n,
                                    long long budget, unsigned seed) {
    if (k < 1 || lambda < 1 || m < 1 || n < 1)
        return fail("precondition", "all of k, lambda, m, n must be positive");
    Split s;
    try {
        s = split(k, lambda, m, n);
    } catch (const std::exception& e) {
        return fail("precondition", e.what());
    }
    if (s.n_k < 0 || s.n_k1 < 0)
        return fail("precondition", "split gives a negative layer count (n_k=" + std::to_string(s.n_k) +
                                        ", n_{k+1}=" + std::to_string(s.n_k1) + ")");
    if (2 * s.d > m) return fail("precondition", "not enough vertices for the defect matching");

    if (k == 1) {
        // Culik regime: a full lambda*K_m of pair edges plus singletons.
        Hypergraph h(static_cast<int>(m));
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y)
                for (long long c = 0; c < lambda; ++c) h.add_edge({x, y});
        for (long long i = 0; i < s.n_k; ++i) h.add_edge({static_cast<int>(i % m)});
        h.canonicalize();
        auto chk = verify_witness(h, k, lambda, m, n);
        if (!chk.ok) return fail("verification", chk.failure);
        ConstructResult r;
        r.status = ConstructStatus::Success;
        r.witness = std::move(h);
        return r;
    }

    Multigraph dmatch = top_matching(static_cast<int>(m), s.d);
    auto decompose_stage = [&](const Multigraph& host, long long part,
                               const char* stage) -> std::pair<ConstructResult, Hypergraph> {
        if (!is_kl_divisible(host, static_cast<int>(part)))
            return {fail(stage, "host is not K_" + std::to_string(part) + "-divisible"), Hypergraph{}};
        auto res = kl_decompose({host, static_cast<int>(part), budget, seed});
        if (res.status == SearchStatus::BudgetExhausted)
            return {fail(stage, "search budget exhausted after " + std::to_string(res.nodes) + " nodes",
                         ConstructStatus::BudgetExhausted),
                    Hypergraph{}};
        if (res.status != SearchStatus::Found)
            return {fail(stage, "decomposition search proved infeasible"), Hypergraph{}};
        ConstructResult ok;
        ok.status = ConstructStatus::Success;
        return {ok, pieces_to_hypergraph(static_cast<int>(m), res.parts)};
    };

    Hypergraph h(static_cast<int>(m));
    if (s.n_k1 == 0 || s.n_k == 0) {
        long long part = s.n_k1 == 0 ? k : k + 1;
        Multigraph host = defect_against(dmatch, static_cast<int>(m), lambda);
        auto [st, layer] = decompose_stage(host, part, "single-layer-decomposition");
        if (st.status != ConstructStatus::Success) return st;
        h = std::move(layer);
    } else {
        // Realize the smaller layer against the matching by prescribed
        // degrees, then decompose the remaining defect into the other size.
        bool small_k = s.n_k <= s.n_k1;
        long long ell = small_k ? k : k + 1;
        long long mod = small_k ? k : k - 1;
        long long layer_edges = small_k ? s.n_k : s.n_k1;
        long long beta = beta_of(k, lambda, m);
        long long alpha = k >= 2 ? alpha_of(k, lambda, m) : 0;
        std::vector<long long> targets(static_cast<size_t>(m), 0);
        long long base_total = 0;
        for (int x = 0; x < m; ++x) {
            long long degd = dmatch.degree(x);
            long long base = small_k ? (beta + degd) % mod : ((alpha - degd) % mod + mod) % mod;
            targets[static_cast<size_t>(x)] = base;
            base_total += base;
        }
        long long extra = ell * layer_edges - base_total;
        if (extra < 0 || extra % mod != 0)
            return fail("layer-prescription", "degree surplus " + std::to_string(extra) +
                                                  " is not a nonnegative multiple of " + std::to_string(mod));
        distribute(targets, dmatch, extra / mod, mod);
        DegreePrescription p{targets, static_cast<int>(ell), dmatch, lambda};
        Hypergraph small;
        try {
            small = realize_linear(p);
        } catch (const std::exception& e) {
            return fail("layer-realization", e.what());
        }
        Multigraph covered = plus(underlying_multigraph(small), dmatch);
        Multigraph rest;
        try {
            rest = defect_against(covered, static_cast<int>(m), lambda);
        } catch (const NotLinearError& e) {
            return fail("layer-realization", e.what());
        }
        auto [st, big] = decompose_stage(rest, small_k ? k + 1 : k, "second-layer-decomposition");
        if (st.status != ConstructStatus::Success) return st;
        h = hyper_union(small, big);
    }

    auto chk = verify_witness(h, k, lambda, m, n);
    if (!chk.ok) return fail("verification", chk.failure);
    ConstructResult r;
    r.status = ConstructStatus::Success;
    r.witness = std::move(h);
    return r;
}

ConstructResult construct_B_witness(long long k, long long lambda, long long m, long long n,
                                    long long budget, unsigned seed) {
    Skeleton sk;
    try {
        sk = plan_skeleton_B(k, lambda, m, n);
    } catch (const std::exception& e) {
        return fail("precondition", e.what());
    }

    // Ascending index blocks V1, V2, V3, V4; the defect matching lives on V3.
    std::vector<int> part_of(static_cast<size_t>(m), 3);
    long long at = 0;
    for (int part = 0; part < 4; ++part) {
        for (long long i = 0; i < sk.part_sizes[static_cast<size_t>(part)]; ++i)
            part_of[static_cast<size_t>(at + i)] = part;
        at += sk.part_sizes[static_cast<size_t>(part)];
    }
    Multigraph dmatch(static_cast<int>(m));
    long long v3_begin = sk.m1 + sk.m2;
    for (long long i = 0; i < sk.d; ++i)
        dmatch.add_pair(static_cast<int>(v3_begin + 2 * i), static_cast<int>(v3_begin + 2 * i + 1), 1);

    std::vector<long long> r_km1(static_cast<size_t>(m)), r_k1(static_cast<size_t>(m));
    for (int x = 0; x < m; ++x) {
        auto pres = sk.prescriptions[static_cast<size_t>(part_of[static_cast<size_t>(x)])];
        r_km1[static_cast<size_t>(x)] = pres.first;
        r_k1[static_cast<size_t>(x)] = pres.second;
    }

    std::vector<int> v2;
    for (long long i = 0; i < sk.m2; ++i) v2.push_back(static_cast<int>(sk.m1 + i));
    Hypergraph h_km1, h_k1;
    try {
        DegreePrescription p{r_km1, static_cast<int>(k - 1),
                             Multigraph::complete_on(static_cast<int>(m), v2, lambda), lambda};
        h_km1 = realize_linear(p);
    } catch (const std::exception& e) {
        return fail("low-layer-realization", e.what());
    }
    try {
        DegreePrescription p{r_k1, static_cast<int>(k + 1), dmatch, lambda};
        h_k1 = realize_linear(p);
    } catch (const std::exception& e) {
        return fail("high-layer-realization", e.what());
    }

    Multigraph covered = plus(plus(underlying_multigraph(h_km1), underlying_multigraph(h_k1)), dmatch);
    Multigraph rest;
    try {
        rest = defect_against(covered, static_cast<int>(m), lambda);
    } catch (const NotLinearError& e) {
        return fail("layer-union", std::string("layer union exceeds lambda: ") + e.what());
    }
    if (rest.edge_count() != to_ll(binom2(k) * I(sk.n_k)))
        return fail("layer-union", "defect edge count mismatch");
    if (!is_kl_divisible(rest, static_cast<int>(k)))
        return fail("middle-layer-divisibility", "remaining defect is not K_k-divisible");
    auto res = kl_decompose({rest, static_cast<int>(k), budget, seed});
    if (res.status == SearchStatus::BudgetExhausted)
        return fail("middle-layer-decomposition",
                    "search budget exhausted after " + std::to_string(res.nodes) + " nodes",
                    ConstructStatus::BudgetExhausted);
    if (res.status != SearchStatus::Found)
        return fail("middle-layer-decomposition", "decomposition search proved infeasible");

    Hypergraph h = hyper_union(hyper_union(h_km1, h_k1),
                               pieces_to_hypergraph(static_cast<int>(m), res.parts));

    // Full verification: linearity, edge and degree totals, per-vertex
    // prescription counts for the outer sizes.
    auto lin = is_lambda_linear(h, lambda);
    if (!lin.linear)
        return fail("verification", "witness is not lambda-linear at (" + std::to_string(lin.u) + "," +
                                        std::to_string(lin.v) + ")");
    if (h.edge_total() != n)
        return fail("verification", "witness has " + std::to_string(h.edge_total()) + " edges, expected " +
                                        std::to_string(n));
    Int floor_b = bound_B(k, lambda, m, n).floor();
    if (Int(static_cast<long>(h.total_degree())) != floor_b)
        return fail("verification", "total degree " + std::to_string(h.total_degree()) +
                                        " != floor bound " + floor_b.get_str());
    std::vector<long long> cnt_km1(static_cast<size_t>(m), 0), cnt_k1(static_cast<size_t>(m), 0);
    for (const auto& e : h.edges) {
        if (static_cast<long long>(e.size()) == k - 1)
            for (int v : e) cnt_km1[static_cast<size_t>(v)]++;
        if (static_cast<long long>(e.size()) == k + 1)
            for (int v : e) cnt_k1[static_cast<size_t>(v)]++;
    }
    for (int x = 0; x < m; ++x)
        if (cnt_km1[static_cast<size_t>(x)] != r_km1[static_cast<size_t>(x)] ||
            cnt_k1[static_cast<size_t>(x)] != r_k1[static_cast<size_t>(x)])
            return fail("verification", "vertex " + std::to_string(x) + " breaks its size prescription");

    ConstructResult out;
    out.status = ConstructStatus::Success;
    out.witness = std::move(h);
    return out;
}

std::string to_string(Achievability a) {
    switch (a) {
        case Achievability::AchievedA: return "achieved-A";
        case Achievability::AchievedB: return "achieved-B";
        case Achievability::NotAchieved: return "not-achieved";
        case Achievability::EquivalentToDesign: return "equivalent-to-design";
        case Achievability::Unknown: return "unknown";
    }
    return "?";
}

AchievabilityVerdict not_achieved(long long k, long long lambda, long long m, long long n) {
    if (k < 2) throw std::domain_error("not_achieved requires k >= 2");
    Int lc = Int(static_cast<long>(lambda)) * binom2(m);
    Int balance = lc - binom2(k) * I(n);
    if (mod_floor(balance, Int(static_cast<long>(k))) != 0)
        throw std::domain_error("not_achieved: lambda*C(m,2) - n*C(k,2) must be divisible by k");
    Rat h = Rat(Int(static_cast<long>(k)) * Int(static_cast<long>(k - 1)), Int(static_cast<long>(lambda))) +
            Rat(1);
    Int lm1 = Int(static_cast<long>(lambda)) * Int(static_cast<long>(m - 1));

    AchievabilityVerdict v;
    v.design_k = k;
    v.design_lambda = lambda;
    v.design_h = h;

    Rat top = Rat(lc) / Rat(binom2(k));
    Rat bottom = Rat(lc) / Rat(binom2(k + 1));
    Rat two_over(Int(2), Int(static_cast<long>(k + 1)));

    if (mod_floor(lm1, Int(static_cast<long>(k - 1))) == 0) {
        Rat span = two_over * std::max(h, Rat(k + 1));
        if (Rat(n) > top - span && Rat(n) < top) {
            v.status = Achievability::NotAchieved;
            v.clause = 1;
            v.detail = "forced size-(k+1) degrees rule out the bound on (" + (top - span).str() + ", " +
                       top.str() + ")";
            return v;
        }
    }
    if (mod_floor(lm1, Int(static_cast<long>(k))) == 0) {
        Rat span = two_over * std::max(h, Rat(k));
        if (Rat(n) > bottom && Rat(n) < bottom + span) {
            v.status = Achievability::NotAchieved;
            v.clause = 2;
            v.detail = "forced size-k degrees rule out the bound on (" + bottom.str() + ", " +
                       (bottom + span).str() + ")";
            return v;
        }
        if (Rat(n) == bottom + two_over * h) {
            v.status = Achievability::EquivalentToDesign;
            v.clause = 3;
            v.detail = "achieving the bound forces a symmetric design with block size " +
                       std::to_string(k) + ", index " + std::to_string(lambda) + ", order " + h.str();
            if (!h.is_integer()) v.detail += " (no such design: order is not an integer)";
            return v;
        }
    }
    v.status = Achievability::Unknown;
    v.detail = "no predicate clause applies";
    return v;
}

std::string to_string(DesignStatus s) {
    switch (s) {
        case DesignStatus::Exists: return "exists";
        case DesignStatus::Nonexistent: return "nonexistent";
        case DesignStatus::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// Arithmetic for GF(q), q prime or 4 or 8.
struct SmallField {
    int q;
    bool binary;  // q in {4, 8}: polynomial arithmetic over GF(2)
    int reduce_poly;

    explicit SmallField(int q_) : q(q_), binary(q_ == 4 || q_ == 8), reduce_poly(q_ == 4 ? 0b111 : 0b1011) {
        static const int supported[] = {2, 3, 4, 5, 7, 8};
        if (std::find(std::begin(supported), std::end(supported), q_) == std::end(supported))
            throw std::domain_error("no built-in field of order " + std::to_string(q_));
    }
    int add(int a, int b) const { return binary ? (a ^ b) : (a + b) % q; }
    int mul(int a, int b) const {
        if (!binary) return (a * b) % q;
        int acc = 0;
        for (int bit = 0; bit < 3; ++bit)
            if (b & (1 << bit)) acc ^= a << bit;
        for (int bit = 5; bit >= (q == 4 ? 2 : 3); --bit)
            if (acc & (1 << bit)) acc ^= reduce_poly << (bit - (q == 4 ? 2 : 3));
        return acc;
    }
};

// Projective plane of order q as a (q^2+q+1, q+1, 1)-design.
Hypergraph projective_plane(int q) {
    SmallField f(q);
    std::vector<std::array<int, 3>> points;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) points.push_back({1, a, b});
    for (int a = 0; a < q; ++a) points.push_back({0, 1, a});
    points.push_back({0, 0, 1});
    int h = static_cast<int>(points.size());
    Hypergraph design(h);
    for (const auto& line : points) {  // lines share the normalized parametrization
        std::vector<int> block;
        for (int i = 0; i < h; ++i) {
            const auto& p = points[static_cast<size_t>(i)];
            int dot = f.add(f.add(f.mul(line[0], p[0]), f.mul(line[1], p[1])), f.mul(line[2], p[2]));
            if (dot == 0) block.push_back(i);
        }
        design.add_edge(block);
    }
    design.canonicalize();
    return design;
}

Hypergraph all_k_subsets(int h, int k) {
    Hypergraph design(h);
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == k) {
            design.add_edge(pick);
            return;
        }
        for (int v = from; v < h; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return design;
}

bool verify_design(const Hypergraph& d, long long k, long long lambda, long long h) {
    if (d.m != h) return false;
    for (const auto& e : d.edges)
        if (static_cast<long long>(e.size()) != k) return false;
    return underlying_multigraph(d) == Multigraph::complete(static_cast<int>(h), lambda);
}

std::optional<Hypergraph> builtin_design(long long k, long long lambda, long long h) {
    if (lambda == k - 1 && h == k + 1) return all_k_subsets(static_cast<int>(h), static_cast<int>(k));
    if (lambda == k && h == k) {
        Hypergraph d(static_cast<int>(h));
        std::vector<int> all(static_cast<size_t>(h));
        for (int i = 0; i < h; ++i) all[static_cast<size_t>(i)] = i;
        for (long long c = 0; c < k; ++c) d.add_edge(all);
        return d;
    }
    if (lambda == 1) {
        int q = static_cast<int>(k - 1);
        if (q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8) return projective_plane(q);
    }
    if (lambda == 2 && k == 4 && h == 7) {
        Hypergraph fano = projective_plane(2);
        Hypergraph d(7);
        for (const auto& line : fano.edges) {
            std::vector<int> comp;
            for (int v = 0; v < 7; ++v)
                if (!std::binary_search(line.begin(), line.end(), v)) comp.push_back(v);
            d.add_edge(comp);
        }
        d.canonicalize();
        return d;
    }
    if (lambda == 2 && k == 5 && h == 11) {
        // Difference-set biplane on Z_11 from the quadratic residues.
        static const int base[] = {1, 3, 4, 5, 9};
        Hypergraph d(11);
        for (int shift = 0; shift < 11; ++shift) {
            std::vector<int> block;
            for (int b : base) block.push_back((b + shift) % 11);
            d.add_edge(std::move(block));
        }
        d.canonicalize();
        return d;
    }
    return std::nullopt;
}

}  // namespace

std::string design_to_catalog_json(long long k, long long lambda, const DesignResult& r) {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["lambda"] = lambda;
    j["h"] = r.h;
    j["status"] = r.status == DesignStatus::Exists
                      ? "exists"
                      : (r.status == DesignStatus::Nonexistent ? "nonexistent" : "unknown");
    if (r.status == DesignStatus::Exists) {
        Hypergraph c = r.design;
        c.canonicalize();
        j["blocks"] = c.edges;
    } else {
        j["blocks"] = nullptr;
    }
    j["source"] = r.source;
    return j.dump() + "\n";
}

std::optional<DesignResult> read_catalog_file(const std::string& path, long long k, long long lambda) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("k").get<long long>() != k || j.at("lambda").get<long long>() != lambda)
        throw std::runtime_error("catalog file " + path + " does not match the requested parameters");
    DesignResult r;
    r.h = j.at("h").get<long long>();
    r.source = j.value("source", "catalog");
    std::string status = j.at("status").get<std::string>();
    if (status == "exists") {
        r.status = DesignStatus::Exists;
        r.design = Hypergraph(static_cast<int>(r.h));
        for (const auto& e : j.at("blocks")) r.design.add_edge(e.get<std::vector<int>>());
        r.design.canonicalize();
        if (!verify_design(r.design, k, lambda, r.h))
            throw std::runtime_error("catalog file " + path + " fails design verification");
    } else if (status == "nonexistent") {
        r.status = DesignStatus::Nonexistent;
    } else {
        r.status = DesignStatus::Unknown;
    }
    return r;
}

DesignResult symmetric_design(long long k, long long lambda, const std::string& catalog_dir,
                              long long budget) {
    if (k < 2 || lambda < 1) throw std::domain_error("symmetric_design requires k >= 2, lambda >= 1");
    Int kk = Int(static_cast<long>(k)) * Int(static_cast<long>(k - 1));
    if (mod_floor(kk, Int(static_cast<long>(lambda))) != 0)
        throw std::domain_error("symmetric_design: k(k-1)/lambda is not an integer");
    long long h = to_ll(kk / Int(static_cast<long>(lambda))) + 1;

    if (!catalog_dir.empty()) {
        std::string path =
            catalog_dir + "/k" + std::to_string(k) + "_lambda" + std::to_string(lambda) + ".json";
        if (auto r = read_catalog_file(path, k, lambda)) return *r;
    }
    if (auto d = builtin_design(k, lambda, h)) {
        if (!verify_design(*d, k, lambda, h))
            throw std::logic_error("built-in design failed verification");
        DesignResult r;
        r.status = DesignStatus::Exists;
        r.h = h;
        r.design = std::move(*d);
        r.source = "built-in construction";
        return r;
    }
    DesignResult r;
    r.h = h;
    if (h <= 40 && k <= h) {
        auto res = kl_decompose({Multigraph::complete(static_cast<int>(h), lambda),
                                 static_cast<int>(k), budget, 0});
        if (res.status == SearchStatus::Found) {
            r.status = DesignStatus::Exists;
            r.design = Hypergraph(static_cast<int>(h));
            for (const auto& b : res.parts) r.design.add_edge(b);
            r.design.canonicalize();
            r.source = "backtracking search";
            return r;
        }
        // Nonexistence is never concluded from a search outcome.
        r.source = res.status == SearchStatus::BudgetExhausted
                       ? "search budget exhausted"
                       : "search exhausted without a decomposition; nonexistence not asserted";
    } else {
        r.source = "outside search range and not in the catalog";
    }
    r.status = DesignStatus::Unknown;
    return r;
}

}  // namespace zarank
