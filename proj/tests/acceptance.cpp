// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code; everything is exact
// rational or integer comparison.

#include "zarank/bounds.hpp"
#include "zarank/construct.hpp"
#include "zarank/lp.hpp"
#include "zarank/oracle.hpp"
#include "zarank/params.hpp"
#include "zarank/realize.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace zarank;

#ifndef ZARANK_CLI_PATH
#define ZARANK_CLI_PATH "./zarank"
#endif
#ifndef ZARANK_DATA_DIR
#define ZARANK_DATA_DIR "data"
#endif

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string run_cli(const std::string& args, int* code) {
    std::string cmd = std::string(ZARANK_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    std::array<char, 4096> buf{};
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        *code = -1;
        return out;
    }
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion1_table() {
    int code = 0;
    std::string out = run_cli("table --preset dhs-improvements --no-header", &code);
    const std::string expected =
        "m\tn\tk\tfloor\n"
        "14\t29\t3\t87\n"
        "14\t30\t3\t89\n"
        "17\t24\t4\t92\n"
        "17\t25\t4\t94\n"
        "18\t24\t4\t97\n"
        "18\t25\t4\t99\n"
        "20\t31\t4\t124\n"
        "21\t31\t4\t129\n"
        "22\t25\t5\t119\n"
        "23\t25\t5\t124\n";
    report(1, "improvement-table preset reproduces the ten rows bit-exactly",
           code == 0 && out == expected);
}

void criterion2_worked_example() {
    bool ok = bound_A(6, 1, 99, 235) == Rat(1631);
    ok = ok && bound_B(7, 1, 99, 235).floor() == 1628;
    LpSolution a = lp_solve_A(1, 99, 235);
    ok = ok && a.objective == Rat(1631) && a.profile.at1(6) == Rat(14) && a.profile.at1(7) == Rat(221);
    for (long long i = 1; ok && i <= 99; ++i)
        if (i != 6 && i != 7) ok = a.profile.at1(i) == Rat(0);
    LpSolution b = lp_solve_B(7, 1, 99, 235);
    ok = ok && b.objective == bound_B(7, 1, 99, 235);
    report(2, "worked-example numerics: A=1631, floor B=1628, LP vertex (14,221), LP-B = B", ok);
}

void criterion3_lp_sweep() {
    bool ok = true;
    std::string detail;
    long long lp_checks = 0, b_checks = 0;
    for (long long lambda = 1; lambda <= 3 && ok; ++lambda) {
        for (long long m = 5; m <= 30 && ok; ++m) {
            long long top = to_ll(I(lambda) * binom2(m));
            // 30 deterministic samples spanning [lambda, lambda*C(m,2)];
            // below lambda the two-size certificates provably do not bind
            // (a single size-m edge wins), so the sweep floor is lambda.
            for (int j = 0; j < 30 && ok; ++j) {
                long long n = lambda + ((top - lambda) * j) / 29;
                LpSolution s = lp_solve_A(lambda, m, n);
                Rat best = bound_A(1, lambda, m, n);
                for (long long k = 2; k <= m; ++k) best = std::min(best, bound_A(k, lambda, m, n));
                ++lp_checks;
                if (s.objective != best) {
                    ok = false;
                    detail = "lp_A mismatch at lambda=" + std::to_string(lambda) + " m=" + std::to_string(m) +
                             " n=" + std::to_string(n);
                    break;
                }
                for (long long k = 2; k <= m && ok; ++k) {
                    if (alpha_of(k, lambda, m) == 0) continue;
                    EdgeProfile prof;
                    try {
                        prof = optimal_profile_B(k, lambda, m, n);
                    } catch (const std::exception&) {
                        continue;  // outside the closed-form interval
                    }
                    if (prof.at1(k) < Rat(0)) continue;  // vertex not feasible
                    ++b_checks;
                    if (lp_solve_B(k, lambda, m, n).objective != bound_B(k, lambda, m, n)) {
                        ok = false;
                        detail = "lp_B mismatch at k=" + std::to_string(k) + " lambda=" +
                                 std::to_string(lambda) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
                    }
                }
            }
        }
    }
    if (ok)
        detail = std::to_string(lp_checks) + " relaxed solves, " + std::to_string(b_checks) +
                 " in-interval three-row solves";
    report(3, "LP optima equal the closed forms across the sweep", ok, detail);
}

void criterion4_oracle() {
    bool ok = true;
    std::string detail;
    // (a) dense-threshold agreement
    for (long long lambda = 1; lambda <= 2 && ok; ++lambda) {
        for (int m = 2; m <= 6 && ok; ++m) {
            long long lc = to_ll(I(lambda) * binom2(static_cast<long long>(m)));
            for (long long n = lc; n <= lc + 5 && ok; ++n) {
                OracleTask t;
                t.lambda = lambda;
                t.m = m;
                t.n = n;
                t.n_cap = 80;
                OracleResult r = exact_z(t);
                if (!r.exact || r.value != lc + n) {
                    ok = false;
                    detail = "dense threshold failed at lambda=" + std::to_string(lambda) +
                             " m=" + std::to_string(m) + " n=" + std::to_string(n);
                }
            }
        }
    }
    // (b) the floor of the two-size bound across the classical region
    for (int m : {5, 6, 7}) {
        if (!ok) break;
        long long b = (m / 3) * ((m - 1) / 2);
        if (m % 6 == 5) b -= 1;
        long long lc = to_ll(binom2(static_cast<long long>(m)));
        for (long long n = lc - 2 * b; n <= lc && ok; ++n) {
            OracleTask t;
            t.lambda = 1;
            t.m = m;
            t.n = n;
            OracleResult r = exact_z(t);
            long long target = to_ll(bound_A(2, 1, m, n).floor());
            if (!r.exact || r.value != target) {
                ok = false;
                detail = "two-size floor failed at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         " got " + std::to_string(r.value) + " want " + std::to_string(target);
            }
        }
    }
    // (c) strictness at the non-achievable point
    if (ok) {
        OracleTask t;
        t.lambda = 1;
        t.m = 7;
        t.n = 6;
        OracleResult r = exact_z(t);
        AchievabilityVerdict v = not_achieved(3, 1, 7, 6);
        ok = r.exact && r.value < 19 && v.status == Achievability::NotAchieved;
        if (!ok) detail = "strictness at (7,6)";
    }
    report(4, "oracle matches the theory on tiny instances", ok, detail);
}

void criterion5_witnesses() {
    bool ok = true;
    std::string detail;
    struct Case {
        long long k, lambda, m, n, degree;
    };
    for (Case c : {Case{3, 1, 7, 7, 21}, {3, 1, 9, 12, 36}, {2, 1, 5, 10, 20}}) {
        ConstructResult r = construct_A_witness(c.k, c.lambda, c.m, c.n);
        WitnessCheck w{};
        if (r.status == ConstructStatus::Success) w = verify_witness(r.witness, c.k, c.lambda, c.m, c.n);
        if (r.status != ConstructStatus::Success || !w.ok || r.witness.total_degree() != c.degree) {
            ok = false;
            detail = "failed at (" + std::to_string(c.k) + "," + std::to_string(c.lambda) + "," +
                     std::to_string(c.m) + "," + std::to_string(c.n) + ")";
        }
    }
    report(5, "witness pipeline constructs and verifies the anchor instances", ok, detail);
}

void criterion6_properties() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(0xACCE97);

    // (a) threshold ordering and the interval-disjointness identity
    {
        std::uniform_int_distribution<long long> kd(2, 12), ld(1, 5), md(2, 500);
        int done = 0;
        while (done < 10'000 && ok) {
            long long k = kd(rng), lambda = ld(rng), m = md(rng);
            if (m < regime_floor_m(k, lambda)) continue;
            RegimeThresholds t = regime_thresholds(k, lambda, m);
            long long a = alpha_of(k, lambda, m), b = beta_of(k, lambda, m);
            Rat gap = Rat(2 * m) * (Rat(I(lambda) * I(m - 1)) - Rat(a * k) - Rat(b * (k - 1))) /
                      Rat(I(k) * I(k * k - 1));
            if (!(t.L1 <= t.L2 && t.L2 <= t.L3 && t.L3 <= t.L4) || t.L3 - t.L2 != gap ||
                gap < Rat(0)) {
                ok = false;
                detail = "threshold ordering/disjointness";
            }
            ++done;
        }
    }
    // (b) family collapse at alpha = 0
    if (ok) {
        std::uniform_int_distribution<long long> kd(2, 10), ld(1, 6), td(0, 300), nd(1, 4000);
        int done = 0;
        while (done < 10'000 && ok) {
            long long k = kd(rng), lambda = ld(rng), n = nd(rng);
            long long m = 1 + (k - 1) * td(rng);  // forces lambda(m-1) == 0 (mod k-1)
            if (m < 1) continue;
            if (alpha_of(k, lambda, m) != 0) continue;
            if (bound_B(k, lambda, m, n) != bound_A(k - 1, lambda, m, n)) {
                ok = false;
                detail = "family collapse at alpha=0";
            }
            ++done;
        }
    }
    // (c) split identities and skeleton invariants
    if (ok) {
        std::uniform_int_distribution<long long> kd(1, 9), ld(1, 4), md(2, 300), nd(1, 4000);
        for (int i = 0; i < 10'000 && ok; ++i) {
            long long k = kd(rng), lambda = ld(rng), m = md(rng), n = nd(rng);
            Split s = split(k, lambda, m, n);
            if (s.n_k + s.n_k1 != n ||
                binom2(k) * I(s.n_k) + binom2(k + 1) * I(s.n_k1) != I(lambda) * binom2(m) - I(s.d)) {
                ok = false;
                detail = "split identities";
            }
        }
        std::uniform_int_distribution<long long> skd(3, 5), sld(1, 3), smd(150, 1600);
        int done = 0;
        while (done < 10'000 && ok) {
            long long k = skd(rng), lambda = sld(rng), m = smd(rng);
            long long alpha = alpha_of(k, lambda, m);
            if (alpha == 0) continue;
            Int lc = I(lambda) * binom2(m);
            Rat lo = (Rat(lc) - Rat(I(alpha) * I(k) * I(m), I(k + 1))) / Rat(binom2(k)) +
                     Rat(4 * (k - 2) * (k - 1));
            Rat hi = (Rat(lc) + Rat(I(m) * I(k - 1 - alpha))) / Rat(binom2(k)) - Rat(4 * (k + 1) * (k + 2));
            if (lo.ceil() > hi.floor()) continue;
            long long span = to_ll(hi.floor() - lo.ceil());
            long long n = to_ll(lo.ceil()) +
                          static_cast<long long>(rng() % static_cast<unsigned long long>(span + 1));
            try {
                Skeleton s = plan_skeleton_B(k, lambda, m, n);
                bool good = Rat(s.d) == Rat(k) * s.tau + s.nu &&
                            Rat(s.m2) == Rat(k - 1 - alpha) * s.tau - Rat(k - 1) * s.nu &&
                            s.part_sizes[0] >= 0 && s.part_sizes[1] >= 0 && s.part_sizes[2] >= 0 &&
                            s.part_sizes[3] >= 0;
                long long sum_km1 = 0, sum_k1 = 0;
                for (int part = 0; part < 4; ++part) {
                    sum_km1 += s.part_sizes[static_cast<size_t>(part)] *
                               s.prescriptions[static_cast<size_t>(part)].first;
                    sum_k1 += s.part_sizes[static_cast<size_t>(part)] *
                              s.prescriptions[static_cast<size_t>(part)].second;
                }
                good = good && sum_km1 == (k - 1) * s.n_km1 && sum_k1 == (k + 1) * s.n_k1;
                if (!good) {
                    ok = false;
                    detail = "skeleton invariants";
                }
            } catch (const std::exception& e) {
                ok = false;
                detail = std::string("skeleton planner threw: ") + e.what();
            }
            ++done;
        }
    }
    // (d) randomized repair runs
    if (ok) {
        int successes = 0;
        for (int iter = 0; iter < 1000 && ok; ++iter) {
            int m = 12 + static_cast<int>(rng() % 20);
            int ell = 2 + static_cast<int>(rng() % 3);
            long long lambda = 1 + static_cast<long long>(rng() % 2);
            Multigraph a(m);
            for (int t = 0; t < m / 2; ++t) {
                int x = static_cast<int>(rng() % static_cast<unsigned>(m));
                int y = static_cast<int>(rng() % static_cast<unsigned>(m));
                if (x != y && a.codegree(x, y) < lambda) a.add_pair(x, y, 1);
            }
            std::vector<long long> targets(static_cast<size_t>(m), 0);
            int carriers = ell + 1 + static_cast<int>(rng() % (m - ell - 1));
            for (int x = 0; x < carriers; ++x)
                targets[static_cast<size_t>(x)] = 1 + static_cast<long long>(rng() % 2);
            long long total = std::accumulate(targets.begin(), targets.end(), 0LL);
            targets[0] += (ell - total % ell) % ell;
            DegreePrescription p{targets, ell, a, lambda};
            bool assured = meets_size_condition(p);
            SwapRepairStats stats;
            try {
                Hypergraph h = realize_linear(p, &stats);
                std::vector<long long> got(static_cast<size_t>(m), 0);
                for (const auto& e : h.edges)
                    for (int v : e) got[static_cast<size_t>(v)]++;
                bool good = got == targets;
                Multigraph u = underlying_multigraph(h);
                for (int x = 0; x < m && good; ++x)
                    for (int y = x + 1; y < m && good; ++y)
                        if (u.codegree(x, y) + a.codegree(x, y) > lambda) good = false;
                for (size_t i = 1; i < stats.potential_trace.size() && good; ++i)
                    if (stats.potential_trace[i] >= stats.potential_trace[i - 1]) good = false;
                if (!good) {
                    ok = false;
                    detail = "repair postconditions";
                }
                ++successes;
            } catch (const RealizeError&) {
                if (assured) {
                    ok = false;
                    detail = "repair failed inside the guaranteed regime";
                }
            }
        }
        if (ok && successes < 500) {
            ok = false;
            detail = "too few repair successes: " + std::to_string(successes);
        }
    }
    // (e) decomposition replay
    if (ok) {
        for (int iter = 0; iter < 150 && ok; ++iter) {
            int m = 6 + static_cast<int>(rng() % 7);
            int part = 3 + static_cast<int>(rng() % 2);
            Multigraph g(m);
            int pieces = 2 + static_cast<int>(rng() % 6);
            for (int p = 0; p < pieces; ++p) {
                std::vector<int> verts;
                while (static_cast<int>(verts.size()) < part) {
                    int v = static_cast<int>(rng() % static_cast<unsigned>(m));
                    if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
                }
                for (size_t i = 0; i < verts.size(); ++i)
                    for (size_t j = i + 1; j < verts.size(); ++j) g.add_pair(verts[i], verts[j], 1);
            }
            auto r = kl_decompose({g, part, 5'000'000, 0});
            if (r.status != SearchStatus::Found) continue;
            Multigraph back(m);
            for (const auto& pc : r.parts)
                for (size_t i = 0; i < pc.size(); ++i)
                    for (size_t j = i + 1; j < pc.size(); ++j) back.add_pair(pc[i], pc[j], 1);
            if (!(back == g)) {
                ok = false;
                detail = "decomposition replay";
            }
        }
    }
    report(6, "property suites (thresholds, collapse, split/skeleton, repair, replay)", ok, detail);
}

void criterion7_predicates() {
    AchievabilityVerdict v = not_achieved(3, 1, 19, 32);
    bool ok = v.status == Achievability::EquivalentToDesign && v.design_k == 3 && v.design_lambda == 1 &&
              v.design_h == Rat(7);
    DesignResult fano = symmetric_design(3, 1, std::string(ZARANK_DATA_DIR) + "/designs");
    ok = ok && fano.status == DesignStatus::Exists && fano.h == 7 &&
         underlying_multigraph(fano.design) == Multigraph::complete(7, 1);
    report(7, "design-equivalence predicate and the order-2 plane", ok);
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    criterion1_table();
    criterion2_worked_example();
    criterion3_lp_sweep();
    criterion4_oracle();
    criterion5_witnesses();
    criterion6_properties();
    criterion7_predicates();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
              << " in " << ms << " ms" << std::endl;
    return failures == 0 ? 0 : 1;
}
