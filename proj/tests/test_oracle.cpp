#include "zarank/oracle.hpp"

#include "zarank/bounds.hpp"
#include "zarank/params.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <random>

using namespace zarank;

namespace {

OracleResult run(long long lambda, int m, long long n) {
    OracleTask t;
    t.lambda = lambda;
    t.m = m;
    t.n = n;
    return exact_z(t);
}

// Reference enumeration with no canonicalization and no bound pruning:
// every multiset of n nonempty subsets, filtered by pair capacities.
long long naive_max(long long lambda, int m, long long n) {
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < m; ++v)
            if (mask & (1 << v)) s.push_back(v);
        subsets.push_back(std::move(s));
    }
    std::vector<std::vector<long long>> cap(static_cast<size_t>(m),
                                            std::vector<long long>(static_cast<size_t>(m), lambda));
    long long best = -1;
    std::function<void(size_t, long long, long long)> rec = [&](size_t from, long long left, long long deg) {
        if (left == 0) {
            best = std::max(best, deg);
            return;
        }
        for (size_t i = from; i < subsets.size(); ++i) {
            const auto& e = subsets[i];
            bool ok = true;
            for (size_t a = 0; a < e.size() && ok; ++a)
                for (size_t b = a + 1; b < e.size() && ok; ++b)
                    if (cap[static_cast<size_t>(e[a])][static_cast<size_t>(e[b])] == 0) ok = false;
            if (!ok) continue;
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = a + 1; b < e.size(); ++b) {
                    cap[static_cast<size_t>(e[a])][static_cast<size_t>(e[b])]--;
                    cap[static_cast<size_t>(e[b])][static_cast<size_t>(e[a])]--;
                }
            rec(i, left - 1, deg + static_cast<long long>(e.size()));
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = a + 1; b < e.size(); ++b) {
                    cap[static_cast<size_t>(e[a])][static_cast<size_t>(e[b])]++;
                    cap[static_cast<size_t>(e[b])][static_cast<size_t>(e[a])]++;
                }
        }
    };
    rec(0, n, 0);
    return best;
}

void check_witness(const OracleResult& r, long long lambda, int m, long long n) {
    CHECK(r.witness.m == m);
    CHECK(r.witness.edge_total() == n);
    CHECK(r.witness.total_degree() == r.value);
    CHECK(is_lambda_linear(r.witness, lambda).linear);
}

}  // namespace

TEST_CASE("known exact values") {
    OracleResult a = run(1, 4, 6);
    CHECK(a.value == 12);
    check_witness(a, 1, 4, 6);

    OracleResult b = run(1, 5, 10);
    CHECK(b.value == 20);
    check_witness(b, 1, 5, 10);

    OracleResult c = run(1, 7, 6);
    CHECK(c.value == 18);  // strictly below floor A^3 = 19
    CHECK(c.exact);
    check_witness(c, 1, 7, 6);
}

TEST_CASE("scan rows, monotonicity, dense-threshold line") {
    auto rows = scan_exact(1, 5, 6, 10);
    std::vector<long long> values;
    for (const auto& r : rows) values.push_back(r.value);
    CHECK(values == std::vector<long long>{14, 15, 17, 18, 20});
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].value > rows[i - 1].value);

    auto culik = scan_exact(1, 4, 6, 12);
    for (const auto& r : culik) CHECK(r.value == 6 + r.n);
}

TEST_CASE("agreement with an unpruned reference enumeration") {
    for (long long lambda : {1, 2})
        for (int m = 2; m <= 4; ++m)
            for (long long n = 1; n <= 4; ++n) {
                CAPTURE(lambda);
                CAPTURE(m);
                CAPTURE(n);
                CHECK(run(lambda, m, n).value == naive_max(lambda, m, n));
            }
    // one larger spot check
    CHECK(run(1, 5, 3).value == naive_max(1, 5, 3));
    CHECK(run(2, 5, 4).value == naive_max(2, 5, 4));
}

TEST_CASE("soundness against the closed-form bounds") {
    std::mt19937_64 rng(888);
    for (int iter = 0; iter < 40; ++iter) {
        long long lambda = 1 + static_cast<long long>(rng() % 2);
        int m = 3 + static_cast<int>(rng() % 4);
        long long n = 1 + static_cast<long long>(rng() % 10);
        OracleResult r = run(lambda, m, n);
        if (!r.exact) continue;
        CHECK(I(r.value) <= best_bound(lambda, m, n).floor_value);
        check_witness(r, lambda, m, n);
    }
}

TEST_CASE("caps are enforced and budget exhaustion is flagged") {
    OracleTask big;
    big.lambda = 1;
    big.m = 13;
    big.n = 5;
    CHECK_THROWS_AS(exact_z(big), std::invalid_argument);
    OracleTask starved;
    starved.lambda = 1;
    starved.m = 8;
    starved.n = 12;
    starved.node_budget = 50;
    OracleResult r = exact_z(starved);
    CHECK_FALSE(r.exact);
}

TEST_CASE("upper seed stops the search at the proven optimum") {
    OracleTask t;
    t.lambda = 1;
    t.m = 6;
    t.n = 15;  // dense threshold: value = C(6,2) + 15
    OracleResult base = exact_z(t);
    CHECK(base.value == 30);
    t.upper_seed = 30;
    OracleResult seeded = exact_z(t);
    CHECK(seeded.value == 30);
    CHECK(seeded.nodes <= base.nodes);
}
