#include "zarank/realize.hpp"

#include "zarank/rat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace zarank {

long long DegreePrescription::total() const {
    return std::accumulate(targets.begin(), targets.end(), 0LL);
}

long long DegreePrescription::edge_goal() const { return total() / uniformity; }

long long DegreePrescription::max_target() const {
    return targets.empty() ? 0 : *std::max_element(targets.begin(), targets.end());
}

namespace {

long long context_degree(const DegreePrescription& p, int x) {
    if (p.context.order() == 0) return 0;
    if (x >= p.context.order()) return 0;
    return p.context.degree(x);
}

void validate(const DegreePrescription& p) {
    if (p.uniformity < 2) throw std::invalid_argument("prescription uniformity must be >= 2");
    if (p.lambda < 1) throw std::invalid_argument("prescription lambda must be >= 1");
    for (long long r : p.targets)
        if (r < 0) throw std::invalid_argument("prescription targets must be nonnegative");
    if (p.context.order() > p.order())
        throw std::invalid_argument("context multigraph exceeds the prescription's vertex range");
}

}  // namespace

long long saturation_radius(const DegreePrescription& p) {
    long long best = -1;
    for (int x = 0; x < p.order(); ++x) {
        if (p.targets[static_cast<size_t>(x)] <= 0) continue;
        long long v = p.targets[static_cast<size_t>(x)] * (p.uniformity - 1) + context_degree(p, x);
        best = std::max(best, v);
    }
    if (best < 0) return 1;  // no positive targets
    return 1 + best / p.lambda;
}

bool meets_size_condition(const DegreePrescription& p) {
    return p.edge_goal() >= 2 * saturation_radius(p) * p.max_target();
}

Hypergraph gale_ryser_realize(const DegreePrescription& p) {
    validate(p);
    const int m = p.order();
    const int l = p.uniformity;
    long long total = p.total();
    if (total % l != 0)
        throw RealizeError("degree total " + std::to_string(total) + " is not divisible by the edge size " +
                           std::to_string(l));
    long long goal = total / l;

    // Bipartite realizability against a right side of goal vertices all of
    // degree l: sorted prefix sums must stay within goal*min(j,l).
    std::vector<long long> sorted = p.targets;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    long long prefix = 0;
    for (size_t j = 1; j <= sorted.size(); ++j) {
        prefix += sorted[j - 1];
        long long cap = goal * std::min<long long>(static_cast<long long>(j), l);
        if (prefix > cap)
            throw RealizeError("degree sequence not realizable: top-" + std::to_string(j) +
                               " degree sum " + std::to_string(prefix) + " exceeds " + std::to_string(cap));
    }

    std::vector<long long> residual = p.targets;
    Hypergraph h(m);
    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    for (long long e = 0; e < goal; ++e) {
        // highest residual first, ties by vertex index
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            long long ra = residual[static_cast<size_t>(a)], rb = residual[static_cast<size_t>(b)];
            return ra != rb ? ra > rb : a < b;
        });
        std::vector<int> edge;
        for (int idx = 0; idx < m && static_cast<int>(edge.size()) < l; ++idx) {
            int v = order[static_cast<size_t>(idx)];
            if (residual[static_cast<size_t>(v)] > 0) edge.push_back(v);
        }
        if (static_cast<int>(edge.size()) < l)
            throw RealizeError("ran out of vertices with residual degree while filling edge " +
                               std::to_string(e));
        for (int v : edge) residual[static_cast<size_t>(v)]--;
        h.add_edge(std::move(edge));
    }
    h.canonicalize();
    return h;
}

namespace {

// Codegrees of M+A maintained incrementally during repair.
struct RepairState {
    Multigraph co;  // codegree of M plus context
    long long lambda;

    long long excess() const {
        long long t = 0;
        for (const auto& pr : co.pairs()) t += std::max(pr.second - lambda, 0LL);
        return t;
    }
    // Lexicographically least violating pair, or {-1,-1}.
    std::pair<int, int> violating() const {
        for (int x = 0; x < co.order(); ++x)
            for (int y = x + 1; y < co.order(); ++y)
                if (co.codegree(x, y) > lambda) return {x, y};
        return {-1, -1};
    }
    bool in_closed_nbhd(int x, int v) const {  // v in N^lambda[x]
        return v == x || co.codegree(x, v) >= lambda;
    }
};

void apply_edge(Multigraph& co, const std::vector<int>& e, long long delta) {
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) co.add_pair(e[i], e[j], delta);
}

}  // namespace

Hypergraph swap_repair(Hypergraph m, const DegreePrescription& p, SwapRepairStats* stats) {
    validate(p);
    RepairState st{underlying_multigraph(m), p.lambda};
    if (p.context.order() > 0)
        for (const auto& pr : p.context.pairs()) st.co.add_pair(pr.first.first, pr.first.second, pr.second);

    Int cap_big = 10 * I(p.lambda) * binom2(static_cast<long long>(p.order()));
    long long cap = cap_big.fits_slong_p() ? to_ll(cap_big) : (1LL << 62);
    long long steps = 0;

    for (;;) {
        auto [u, v] = st.violating();
        if (u < 0) break;
        if (steps >= cap)
            throw RealizeError("repair step cap reached at pair (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");

        // The edge being shrunk: least-index edge of M containing both.
        size_t euv_idx = m.edges.size();
        for (size_t i = 0; i < m.edges.size(); ++i) {
            const auto& e = m.edges[i];
            if (std::binary_search(e.begin(), e.end(), u) && std::binary_search(e.begin(), e.end(), v)) {
                euv_idx = i;
                break;
            }
        }
        if (euv_idx == m.edges.size())
            throw RealizeError("violating pair (" + std::to_string(u) + "," + std::to_string(v) +
                               ") has no supporting edge in M; the context itself exceeds lambda");
        const std::vector<int> euv = m.edges[euv_idx];

        // Forbidden zone for the incoming vertex: closed neighbourhoods of
        // every vertex of euv except u.
        std::vector<char> forbidden(static_cast<size_t>(p.order()), 0);
        for (int y : euv) {
            if (y == u) continue;
            for (int z = 0; z < p.order(); ++z)
                if (st.in_closed_nbhd(y, z)) forbidden[static_cast<size_t>(z)] = 1;
        }

        size_t ew_idx = m.edges.size();
        int w = -1;
        for (size_t i = 0; i < m.edges.size() && w < 0; ++i) {
            const auto& e = m.edges[i];
            bool touches_u = false;
            for (int z : e)
                if (st.in_closed_nbhd(u, z)) { touches_u = true; break; }
            if (touches_u) continue;  // excluded: would re-saturate u
            for (int z : e)
                if (!forbidden[static_cast<size_t>(z)]) { ew_idx = i; w = z; break; }
            // fully inside the forbidden zone: excluded
        }
        if (w < 0)
            throw RealizeError("no admissible replacement edge for pair (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");

        std::vector<int> new_uv = euv;
        new_uv.erase(std::find(new_uv.begin(), new_uv.end(), u));
        new_uv.push_back(w);
        std::sort(new_uv.begin(), new_uv.end());
        std::vector<int> new_w = m.edges[ew_idx];
        new_w.erase(std::find(new_w.begin(), new_w.end(), w));
        new_w.push_back(u);
        std::sort(new_w.begin(), new_w.end());

        apply_edge(st.co, m.edges[euv_idx], -1);
        apply_edge(st.co, m.edges[ew_idx], -1);
        apply_edge(st.co, new_uv, +1);
        apply_edge(st.co, new_w, +1);
        m.edges[euv_idx] = std::move(new_uv);
        m.edges[ew_idx] = std::move(new_w);

        ++steps;
        if (stats) {
            stats->steps = steps;
            stats->potential_trace.push_back(st.excess());
        }
    }
    m.canonicalize();
    return m;
}

Hypergraph realize_linear(const DegreePrescription& p, SwapRepairStats* stats) {
    return swap_repair(gale_ryser_realize(p), p, stats);
}

namespace {

struct SubgraphSearch {
    const Multigraph& c;
    std::vector<int> residual;
    std::vector<std::vector<int>> chosen;  // adjacency lists of the subgraph
    long long nodes = 0;
    static constexpr long long kNodeCap = 30'000'000;

    explicit SubgraphSearch(const Multigraph& c_, const std::vector<int>& a)
        : c(c_), residual(a.begin(), a.end()), chosen(a.size()) {}

    bool feasible_from(int x) const {
        // Every unsettled vertex must still be able to reach its residual
        // through undecided edges, i.e. edges {v,y} with min(v,y) >= x.
        for (int v = x; v < c.order(); ++v) {
            if (residual[static_cast<size_t>(v)] == 0) continue;
            int avail = 0;
            for (int y = x; y < c.order(); ++y) {
                if (y == v || residual[static_cast<size_t>(y)] == 0) continue;
                if (c.codegree(v, y) > 0) ++avail;
            }
            if (avail < residual[static_cast<size_t>(v)]) return false;
        }
        return true;
    }

    // Decide edges incident to x toward larger vertices; all vertices < x
    // are already settled.
    bool solve(int x) {
        if (x >= c.order()) return true;
        std::vector<int> cands;
        for (int y = x + 1; y < c.order(); ++y)
            if (c.codegree(x, y) > 0 && residual[static_cast<size_t>(y)] > 0) cands.push_back(y);
        return pick(x, 0, cands);
    }

    bool pick(int x, size_t from, const std::vector<int>& cands) {
        if (++nodes > kNodeCap) throw RealizeError("prescribed-degree search exceeded its node cap");
        int need = residual[static_cast<size_t>(x)];
        if (need == 0) {
            if (!feasible_from(x + 1)) return false;
            return solve(x + 1);
        }
        if (static_cast<int>(cands.size() - from) < need) return false;
        // take cands[from]
        int y = cands[from];
        residual[static_cast<size_t>(x)]--;
        residual[static_cast<size_t>(y)]--;
        chosen[static_cast<size_t>(x)].push_back(y);
        if (pick(x, from + 1, cands)) return true;
        chosen[static_cast<size_t>(x)].pop_back();
        residual[static_cast<size_t>(x)]++;
        residual[static_cast<size_t>(y)]++;
        // skip cands[from]
        return pick(x, from + 1, cands);
    }
};

}  // namespace

Multigraph prescribed_degree_subgraph(const Multigraph& c, const std::vector<int>& a, int s) {
    if (static_cast<int>(a.size()) != c.order())
        throw std::invalid_argument("prescribed_degree_subgraph: degree vector length must equal order");
    if (!c.is_simple()) throw std::invalid_argument("prescribed_degree_subgraph: host must be simple");
    long long total = 0;
    for (int v : a) {
        if (v < 1 || v > s) throw std::invalid_argument("prescribed degrees must lie in [1, s]");
        total += v;
    }
    if (total % 2 != 0) throw RealizeError("prescribed degree sum is odd; no subgraph exists");
    for (int x = 0; x < c.order(); ++x)
        if (c.degree(x) < a[static_cast<size_t>(x)])
            throw RealizeError("vertex " + std::to_string(x) + " has host degree below its prescription");

    SubgraphSearch search(c, a);
    if (!search.solve(0)) throw RealizeError("no subgraph with the prescribed degrees exists");
    Multigraph out(c.order());
    for (int x = 0; x < c.order(); ++x)
        for (int y : search.chosen[static_cast<size_t>(x)]) out.add_pair(x, y, 1);
    return out;
}

}  // namespace zarank
