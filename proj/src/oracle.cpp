#include "zarank/oracle.hpp"

#include "zarank/bounds.hpp"

#include <algorithm>

namespace zarank {

namespace {

struct BranchBound {
    int m;
    long long lambda, n;
    long long budget;
    long long global_ub;

    std::vector<std::vector<long long>> res;  // residual pair capacities
    long long pair_capacity = 0;              // sum of residuals
    long long deg = 0;
    int used_max = -1;
    std::vector<std::vector<int>> chosen;

    long long best = -1;
    bool best_has_witness = false;
    Hypergraph best_witness;
    long long nodes = 0;
    bool budget_hit = false;
    bool stop = false;

    BranchBound(const OracleTask& t, long long ub, long long seed_value)
        : m(t.m), lambda(t.lambda), n(t.n), budget(t.node_budget), global_ub(ub),
          res(static_cast<size_t>(t.m), std::vector<long long>(static_cast<size_t>(t.m), 0)) {
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (x != y) res[static_cast<size_t>(x)][static_cast<size_t>(y)] = lambda;
        pair_capacity = lambda * static_cast<long long>(m) * (m - 1) / 2;
        best = seed_value;
        best_witness = Hypergraph(m);
        chosen.reserve(static_cast<size_t>(n));  // node() keeps pointers into chosen
    }

    bool tick() {
        if (budget_hit) return false;
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    // Exact best total of t edges of size <= 2: every 2-edge consumes one
    // unit of some pair's residual.
    long long tail_value(long long t) const { return t + std::min(t, pair_capacity); }

    // Upper bound on the total size of t further edges, all of size <= cap,
    // against the residual pair capacity: the certificate family plus the
    // trivial cap*t.
    long long residual_bound(long long t, int cap) const {
        if (t == 0) return 0;
        long long bound = static_cast<long long>(cap) * t;
        for (int k = 1; k <= cap; ++k) {
            // floor((k+1)/2 t + P/k) computed exactly in integers
            long long num = (static_cast<long long>(k) + 1) * t * k + 2 * pair_capacity;
            long long div = 2LL * k;
            long long fl = num >= 0 ? num / div : -((-num + div - 1) / div);
            bound = std::min(bound, fl);
        }
        return bound;
    }

    void record_leaf_with_tail(long long t) {
        long long value = deg + tail_value(t);
        if (value <= best) return;
        best = value;
        best_has_witness = true;
        Hypergraph w(m);
        w.edges = chosen;
        long long twos = std::min(t, pair_capacity);
        long long placed = 0;
        for (int x = 0; x < m && placed < twos; ++x)
            for (int y = x + 1; y < m && placed < twos; ++y) {
                long long avail = res[static_cast<size_t>(x)][static_cast<size_t>(y)];
                for (long long c = 0; c < avail && placed < twos; ++c, ++placed) w.add_edge({x, y});
            }
        for (long long i = 0; i < t - twos; ++i) w.add_edge({0});
        w.canonicalize();
        best_witness = std::move(w);
        if (best >= global_ub) stop = true;
    }

    void place(const std::vector<int>& e, long long delta) {
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                res[static_cast<size_t>(e[i])][static_cast<size_t>(e[j])] += delta;
                res[static_cast<size_t>(e[j])][static_cast<size_t>(e[i])] += delta;
            }
        long long s = static_cast<long long>(e.size());
        pair_capacity += delta * s * (s - 1) / 2;
        deg += -delta * s;  // delta = -1 places the edge, +1 removes it
    }

    void node(int cap, const std::vector<int>* last_edge) {
        if (stop || !tick()) return;
        long long t = n - static_cast<long long>(chosen.size());
        record_leaf_with_tail(t);
        if (stop || t == 0) return;
        for (int s = std::min(cap, m); s >= 3; --s) {
            if (deg + residual_bound(t, s) <= best) break;  // smaller sizes bound lower
            if (static_cast<long long>(s) * (s - 1) / 2 > pair_capacity) continue;
            std::vector<int> prefix;
            const std::vector<int>* tie =
                (last_edge && static_cast<int>(last_edge->size()) == s) ? last_edge : nullptr;
            grow(s, prefix, tie, used_max + 1);
        }
    }

    // Builds the next edge of size s, ascending vertices; tie != nullptr
    // while the prefix still equals the previous edge's prefix (lex
    // constraint within a size class); next_new is the only admissible
    // not-yet-used vertex (first-appearance numbering).
    void grow(int s, std::vector<int>& prefix, const std::vector<int>* tie, int next_new) {
        if (stop || !tick()) return;
        if (static_cast<int>(prefix.size()) == s) {
            place(prefix, -1);
            chosen.push_back(prefix);
            int saved_used = used_max;
            used_max = std::max(used_max, prefix.back());
            node(s, &chosen.back());
            used_max = saved_used;
            chosen.pop_back();
            place(prefix, +1);
            return;
        }
        size_t pos = prefix.size();
        int lo = pos == 0 ? 0 : prefix.back() + 1;
        if (tie) lo = std::max(lo, (*tie)[pos]);
        int hi = std::min(m - 1, next_new);  // nothing beyond the next fresh vertex
        for (int v = lo; v <= hi; ++v) {
            bool ok = true;
            for (int u : prefix)
                if (res[static_cast<size_t>(u)][static_cast<size_t>(v)] <= 0) { ok = false; break; }
            if (!ok) continue;
            const std::vector<int>* next_tie = (tie && v == (*tie)[pos]) ? tie : nullptr;
            prefix.push_back(v);
            grow(s, prefix, next_tie, v == next_new ? next_new + 1 : next_new);
            prefix.pop_back();
            if (stop || budget_hit) return;
        }
    }
};

}  // namespace

OracleResult exact_z(const OracleTask& t) {
    if (t.lambda < 1 || t.m < 1 || t.n < 1) throw std::invalid_argument("exact_z: inputs must be positive");
    if (t.m > t.m_cap)
        throw std::invalid_argument("exact_z: m exceeds the cap " + std::to_string(t.m_cap));
    if (t.n > t.n_cap)
        throw std::invalid_argument("exact_z: n exceeds the cap " + std::to_string(t.n_cap));

    OracleResult out;
    if (t.m == 1) {
        out.value = t.n;  // n singleton edges
        out.witness = Hypergraph(1);
        for (long long i = 0; i < t.n; ++i) out.witness.add_edge({0});
        return out;
    }
    long long ub = to_ll(best_bound(t.lambda, t.m, t.n).floor_value);
    if (t.upper_seed) ub = std::min(ub, *t.upper_seed);

    BranchBound bb(t, ub, t.lower_seed > 0 ? t.lower_seed - 1 : -1);
    bb.node(t.m, nullptr);
    out.value = bb.best;
    out.exact = !bb.budget_hit;
    out.nodes = bb.nodes;
    if (bb.best_has_witness) out.witness = bb.best_witness;
    return out;
}

std::vector<ScanRow> scan_exact(long long lambda, int m, long long n_from, long long n_to,
                                long long node_budget_per_cell) {
    std::vector<ScanRow> rows;
    long long seed = 0;
    for (long long n = n_from; n <= n_to; ++n) {
        OracleTask t;
        t.lambda = lambda;
        t.m = m;
        t.n = n;
        t.node_budget = node_budget_per_cell;
        t.lower_seed = seed;
        OracleResult r = exact_z(t);
        long long value = std::max(r.value, seed > 0 ? seed : 0);
        rows.push_back({n, value, r.exact});
        seed = value + 1;  // one more edge always adds a singleton
    }
    return rows;
}

}  // namespace zarank
