#include "zarank/decompose.hpp"

#include "zarank/rat.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace zarank {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Impossible: return "impossible";
        case SearchStatus::BudgetExhausted: return "budget-exhausted";
        case SearchStatus::NotDivisible: return "not-divisible";
    }
    return "?";
}

namespace {

struct CoverSearch {
    int m, l;
    long long budget;
    size_t words;
    std::vector<int> byrank;  // rank -> vertex (seed rotation)
    std::vector<int> rank;    // vertex -> rank
    std::vector<std::vector<long long>> res;  // residual pair multiplicities
    std::vector<std::vector<uint64_t>> adj;   // bit y set iff res[x][y] >= 1
    std::vector<std::vector<int>> placed;
    long long nodes = 0;
    bool budget_hit = false;

    CoverSearch(const Multigraph& host, int l_, long long budget_, unsigned seed)
        : m(host.order()), l(l_), budget(budget_), words((static_cast<size_t>(m) + 63) / 64),
          res(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0)),
          adj(static_cast<size_t>(m), std::vector<uint64_t>(words, 0)) {
        byrank.resize(static_cast<size_t>(m));
        rank.resize(static_cast<size_t>(m));
        int shift = m > 0 ? static_cast<int>(seed % static_cast<unsigned>(m)) : 0;
        for (int r = 0; r < m; ++r) {
            int v = (r + shift) % m;
            byrank[static_cast<size_t>(r)] = v;
            rank[static_cast<size_t>(v)] = r;
        }
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                long long c = host.codegree(x, y);
                res[static_cast<size_t>(x)][static_cast<size_t>(y)] = c;
                res[static_cast<size_t>(y)][static_cast<size_t>(x)] = c;
                if (c > 0) {
                    set_bit(x, y);
                    set_bit(y, x);
                }
            }
    }

    void set_bit(int x, int y) { adj[static_cast<size_t>(x)][static_cast<size_t>(y) / 64] |= 1ULL << (y % 64); }
    void clear_bit(int x, int y) {
        adj[static_cast<size_t>(x)][static_cast<size_t>(y) / 64] &= ~(1ULL << (y % 64));
    }

    void add_pair(int x, int y, long long delta) {
        long long& r1 = res[static_cast<size_t>(x)][static_cast<size_t>(y)];
        r1 += delta;
        res[static_cast<size_t>(y)][static_cast<size_t>(x)] = r1;
        if (r1 == 0 && delta < 0) {
            clear_bit(x, y);
            clear_bit(y, x);
        } else if (r1 == 1 && delta > 0) {
            set_bit(x, y);
            set_bit(y, x);
        }
    }

    void apply(const std::vector<int>& clique, long long delta) {
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) add_pair(clique[i], clique[j], delta);
    }

    int common_count(int x, int y) const {
        const auto& ax = adj[static_cast<size_t>(x)];
        const auto& ay = adj[static_cast<size_t>(y)];
        int c = 0;
        for (size_t w = 0; w < words; ++w) c += __builtin_popcountll(ax[w] & ay[w]);
        return c;
    }

    // Most-constrained uncovered pair: fewest common candidates, ties by
    // rank order. Returns count -1 when everything is covered; a zero
    // count is an immediate dead end at this node.
    struct Pick {
        int x = -1, y = -1, count = -1;
    };
    Pick most_constrained() const {
        Pick best;
        for (int rx = 0; rx < m; ++rx) {
            int x = byrank[static_cast<size_t>(rx)];
            const auto& row = res[static_cast<size_t>(x)];
            for (int ry = rx + 1; ry < m; ++ry) {
                int y = byrank[static_cast<size_t>(ry)];
                if (row[static_cast<size_t>(y)] <= 0) continue;
                int c = common_count(x, y);
                if (best.count < 0 || c < best.count) {
                    best = {x, y, c};
                    if (c == 0) return best;
                }
            }
        }
        return best;
    }

    bool search() {
        if (budget_hit) return false;
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        Pick pr = most_constrained();
        if (pr.count < 0) return true;   // covered
        if (pr.count == 0) return false; // uncoverable pair
        std::vector<int> clique{pr.x, pr.y};
        return extend(clique, -1);
    }

    bool extend(std::vector<int>& clique, int last_rank) {
        if (budget_hit || ++nodes > budget) {
            budget_hit = true;
            return false;
        }
        if (static_cast<int>(clique.size()) == l) {
            apply(clique, -1);
            placed.push_back(clique);
            std::sort(placed.back().begin(), placed.back().end());
            if (search()) return true;
            placed.pop_back();
            apply(clique, +1);
            return false;
        }
        for (int r = last_rank + 1; r < m; ++r) {
            int z = byrank[static_cast<size_t>(r)];
            if (z == clique[0] || z == clique[1]) continue;
            bool ok = true;
            for (int v : clique)
                if (res[static_cast<size_t>(v)][static_cast<size_t>(z)] <= 0) { ok = false; break; }
            if (!ok) continue;
            clique.push_back(z);
            if (extend(clique, r)) return true;
            clique.pop_back();
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

DecompositionResult kl_decompose(const DecompositionTask& task) {
    if (task.part < 2) throw std::invalid_argument("kl_decompose: part size must be >= 2");
    if (!is_kl_divisible(task.host, task.part))
        throw std::invalid_argument("kl_decompose: host is not K_" + std::to_string(task.part) +
                                    "-divisible");
    DecompositionResult out;
    if (task.host.edge_count() == 0) {
        out.status = SearchStatus::Found;
        return out;
    }
    if (task.part == 2) {
        for (const auto& pr : task.host.pairs())
            for (long long i = 0; i < pr.second; ++i)
                out.parts.push_back({pr.first.first, pr.first.second});
        out.status = SearchStatus::Found;
        return out;
    }
    CoverSearch cs(task.host, task.part, task.step_budget, task.seed);
    bool found = cs.search();
    out.nodes = cs.nodes;
    if (found) {
        out.status = SearchStatus::Found;
        out.parts = cs.placed;
        std::sort(out.parts.begin(), out.parts.end());
    } else {
        out.status = cs.budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::Impossible;
    }
    return out;
}

BlockDecomposition decompose_block_mixed(int h, int k, long long budget) {
    if (h < 2 || h > 40)
        throw std::invalid_argument("decompose_block_mixed: h must lie in [2, 40]");
    if (k < 2) throw std::invalid_argument("decompose_block_mixed: k must be >= 2");
    BlockDecomposition out;
    Multigraph kh = Multigraph::complete(h, 1);
    Int ch2 = binom2(static_cast<long long>(h));
    for (int l : {k, k + 1}) {
        bool div = is_kl_divisible(kh, l);
        DecompositionResult res;
        long long q = 0;
        if (div) {
            q = to_ll(ch2 / binom2(static_cast<long long>(l)));
            res = kl_decompose({kh, l, budget, 0});
        } else {
            res.status = SearchStatus::NotDivisible;
        }
        if (l == k) {
            out.k_divisible = div;
            out.q_k = q;
            out.pieces_k = std::move(res);
        } else {
            out.k1_divisible = div;
            out.q_k1 = q;
            out.pieces_k1 = std::move(res);
        }
    }
    return out;
}

}  // namespace zarank
