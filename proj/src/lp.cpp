#include "zarank/lp.hpp"

#include "zarank/params.hpp"

#include <stdexcept>

namespace zarank {

Rat EdgeProfile::objective() const {
    Rat total(0);
    for (size_t i = 0; i < counts.size(); ++i) total += Rat(static_cast<long long>(i + 1)) * counts[i];
    return total;
}

namespace {

enum Rel { EQ, LE };

struct Constraint {
    std::vector<Rat> a;
    Rel rel;
    Rat b;  // must be >= 0
};

// Dense two-phase simplex over exact rationals, Bland's rule throughout:
// entering = least-index column with negative reduced cost, leaving = least
// basic-variable index among minimum ratios. Deterministic and cycle-free.
struct Simplex {
    size_t nvars;
    std::vector<std::vector<Rat>> T;  // rows x (ncols + 1), last column = rhs
    std::vector<size_t> basis;        // per row
    size_t ncols = 0;
    size_t art_begin = 0;  // columns >= art_begin are artificial

    Simplex(size_t nvars_, const std::vector<Constraint>& cons) : nvars(nvars_) {
        size_t nslack = 0, nart = 0;
        for (const auto& c : cons) (c.rel == LE ? nslack : nart)++;
        ncols = nvars + nslack + nart;
        art_begin = nvars + nslack;
        size_t slack_at = nvars, art_at = art_begin;
        for (const auto& c : cons) {
            if (c.b.sign() < 0) throw std::logic_error("simplex: negative rhs");
            std::vector<Rat> row(ncols + 1, Rat(0));
            for (size_t j = 0; j < nvars; ++j) row[j] = c.a[j];
            if (c.rel == LE) {
                row[slack_at] = Rat(1);
                basis.push_back(slack_at++);
            } else {
                row[art_at] = Rat(1);
                basis.push_back(art_at++);
            }
            row[ncols] = c.b;
            T.push_back(std::move(row));
        }
    }

    void pivot(size_t r, size_t j) {
        Rat inv = Rat(1) / T[r][j];
        for (auto& v : T[r]) v *= inv;
        for (size_t i = 0; i < T.size(); ++i) {
            if (i == r || T[i][j] == Rat(0)) continue;
            Rat f = T[i][j];
            for (size_t c = 0; c <= ncols; ++c) T[i][c] -= f * T[r][c];
        }
        basis[r] = j;
    }

    // Minimize cost over the current feasible dictionary. banned columns
    // never enter. Returns false if unbounded.
    bool run(const std::vector<Rat>& cost, size_t col_limit) {
        for (;;) {
            size_t enter = ncols;
            for (size_t j = 0; j < col_limit; ++j) {
                bool is_basic = false;
                for (size_t r = 0; r < basis.size(); ++r)
                    if (basis[r] == j) { is_basic = true; break; }
                if (is_basic) continue;
                Rat red = cost[j];
                for (size_t r = 0; r < T.size(); ++r)
                    if (cost[basis[r]] != Rat(0)) red -= cost[basis[r]] * T[r][j];
                if (red.sign() < 0) { enter = j; break; }
            }
            if (enter == ncols) return true;
            size_t leave = T.size();
            Rat best(0);
            for (size_t r = 0; r < T.size(); ++r) {
                if (T[r][enter].sign() <= 0) continue;
                Rat ratio = T[r][ncols] / T[r][enter];
                if (leave == T.size() || ratio < best ||
                    (ratio == best && basis[r] < basis[leave]))
                    { leave = r; best = ratio; }
            }
            if (leave == T.size()) return false;
            pivot(leave, enter);
        }
    }

    // Phase 1 + phase 2; returns the optimal x (length nvars).
    std::vector<Rat> solve(const std::vector<Rat>& objective_max) {
        if (art_begin < ncols) {
            std::vector<Rat> c1(ncols, Rat(0));
            for (size_t j = art_begin; j < ncols; ++j) c1[j] = Rat(1);
            run(c1, ncols);
            Rat p1(0);
            for (size_t r = 0; r < T.size(); ++r)
                if (basis[r] >= art_begin) p1 += T[r][ncols];
            if (p1 != Rat(0)) throw std::domain_error("simplex: infeasible");
            // Drive any zero-level artificial out of the basis.
            for (size_t r = 0; r < T.size(); ++r) {
                if (basis[r] < art_begin) continue;
                for (size_t j = 0; j < art_begin; ++j)
                    if (T[r][j] != Rat(0)) { pivot(r, j); break; }
            }
        }
        std::vector<Rat> c2(ncols, Rat(0));
        for (size_t j = 0; j < nvars; ++j) c2[j] = -objective_max[j];
        if (!run(c2, art_begin)) throw std::logic_error("simplex: unbounded objective");
        std::vector<Rat> x(nvars, Rat(0));
        for (size_t r = 0; r < T.size(); ++r)
            if (basis[r] < nvars) x[basis[r]] = T[r][ncols];
        return x;
    }
};

std::vector<Rat> deficiency_row(long long k, long long m, long long alpha) {
    std::vector<Rat> row(static_cast<size_t>(m));
    for (long long i = 1; i <= m; ++i) {
        if (i <= k - 1)
            row[static_cast<size_t>(i - 1)] =
                Rat(Int(static_cast<long>(i)) * Int(static_cast<long>(i - 1 - alpha)),
                    Int(static_cast<long>(k - 1 - alpha)));
        else
            row[static_cast<size_t>(i - 1)] = Rat(i);
    }
    return row;
}

Rat deficiency_rhs(long long k, long long lambda, long long m, long long alpha) {
    Int lm1 = Int(static_cast<long>(lambda)) * Int(static_cast<long>(m - 1));
    return Rat(I(m) * (lm1 - I(alpha)), I(k - 1));
}

LpSolution finish(long long k_for_c3, long long lambda, long long m, long long n, std::vector<Rat> x) {
    LpSolution sol;
    sol.profile.counts = std::move(x);
    sol.objective = sol.profile.objective();
    ConstraintSlacks s = check_profile_feasible(sol.profile, k_for_c3 >= 2 ? k_for_c3 : 2, lambda, m, n);
    if (s.edge_count == Rat(0)) sol.tight.insert(LpConstraint::EdgeCount);
    if (s.pair_capacity == Rat(0)) sol.tight.insert(LpConstraint::PairCapacity);
    if (k_for_c3 >= 2 && s.deficiency_cap == Rat(0)) sol.tight.insert(LpConstraint::DeficiencyCap);
    return sol;
}

}  // namespace

LpSolution lp_solve_A(long long lambda, long long m, long long n) {
    if (lambda < 1 || m < 1 || n < 1) throw std::invalid_argument("lp_solve_A: inputs must be positive");
    std::vector<Constraint> cons;
    Constraint c1{std::vector<Rat>(static_cast<size_t>(m), Rat(1)), EQ, Rat(n)};
    Constraint c2{{}, LE, Rat(Int(static_cast<long>(lambda)) * binom2(m))};
    c2.a.resize(static_cast<size_t>(m));
    for (long long i = 1; i <= m; ++i) c2.a[static_cast<size_t>(i - 1)] = Rat(binom2(i));
    cons.push_back(std::move(c1));
    cons.push_back(std::move(c2));
    std::vector<Rat> obj(static_cast<size_t>(m));
    for (long long i = 1; i <= m; ++i) obj[static_cast<size_t>(i - 1)] = Rat(i);
    Simplex sx(static_cast<size_t>(m), cons);
    return finish(0, lambda, m, n, sx.solve(obj));
}

LpSolution lp_solve_B(long long k, long long lambda, long long m, long long n) {
    if (k < 2) throw std::invalid_argument("lp_solve_B requires k >= 2");
    if (lambda < 1 || m < 1 || n < 1) throw std::invalid_argument("lp_solve_B: inputs must be positive");
    long long alpha = alpha_of(k, lambda, m);
    std::vector<Constraint> cons;
    Constraint c1{std::vector<Rat>(static_cast<size_t>(m), Rat(1)), EQ, Rat(n)};
    Constraint c2{{}, LE, Rat(Int(static_cast<long>(lambda)) * binom2(m))};
    c2.a.resize(static_cast<size_t>(m));
    for (long long i = 1; i <= m; ++i) c2.a[static_cast<size_t>(i - 1)] = Rat(binom2(i));
    Constraint c3{deficiency_row(k, m, alpha), LE, deficiency_rhs(k, lambda, m, alpha)};
    cons.push_back(std::move(c1));
    cons.push_back(std::move(c2));
    cons.push_back(std::move(c3));
    std::vector<Rat> obj(static_cast<size_t>(m));
    for (long long i = 1; i <= m; ++i) obj[static_cast<size_t>(i - 1)] = Rat(i);
    Simplex sx(static_cast<size_t>(m), cons);
    return finish(k, lambda, m, n, sx.solve(obj));
}

EdgeProfile optimal_profile_B(long long k, long long lambda, long long m, long long n) {
    if (k < 2) throw std::invalid_argument("optimal_profile_B requires k >= 2");
    long long alpha = alpha_of(k, lambda, m);
    if (alpha == 0) throw std::domain_error("optimal_profile_B: alpha = 0 is excluded");
    Int lc = Int(static_cast<long>(lambda)) * binom2(m);
    Rat nk2 = Rat(binom2(k) * I(n));
    Rat lo = Rat(lc) - Rat(I(alpha) * I(k) * I(m), I(k + 1));
    Rat hi = Rat(lc + Int(static_cast<long>(m)) * Int(static_cast<long>(k - 1 - alpha)));
    if (nk2 < lo || nk2 > hi)
        throw std::out_of_range("optimal_profile_B: n*C(k,2) outside [" + lo.str() + ", " + hi.str() + "]");
    EdgeProfile p = EdgeProfile::zeros(m);
    Rat nkm1 = Rat(Int(static_cast<long>(k + 1)) * Int(static_cast<long>(k - 1 - alpha)),
                   Int(static_cast<long>(k - 1)) * Int(static_cast<long>(k * k - 1 - alpha))) *
               (nk2 - Rat(lc) + Rat(I(alpha) * I(k) * I(m), I(k + 1)));
    Rat nkp1 = Rat(Int(static_cast<long>(alpha)), Int(static_cast<long>(k * k - 1 - alpha))) *
               (Rat(lc) - nk2 + Rat(Int(static_cast<long>(m)) * Int(static_cast<long>(k - 1 - alpha))));
    p.at1(k - 1) = nkm1;
    p.at1(k + 1) = nkp1;
    p.at1(k) = Rat(n) - nkm1 - nkp1;
    return p;
}

ConstraintSlacks check_profile_feasible(const EdgeProfile& profile, long long k, long long lambda,
                                        long long m, long long n) {
    if (k < 2) throw std::invalid_argument("check_profile_feasible requires k >= 2");
    if (static_cast<long long>(profile.counts.size()) != m)
        throw std::invalid_argument("check_profile_feasible: profile length must equal m");
    long long alpha = alpha_of(k, lambda, m);
    Rat sum(0), pairs(0), defi(0);
    std::vector<Rat> row3 = deficiency_row(k, m, alpha);
    for (long long i = 1; i <= m; ++i) {
        const Rat& ni = profile.at1(i);
        sum += ni;
        pairs += Rat(binom2(i)) * ni;
        defi += row3[static_cast<size_t>(i - 1)] * ni;
    }
    ConstraintSlacks s;
    s.edge_count = Rat(n) - sum;
    s.pair_capacity = Rat(Int(static_cast<long>(lambda)) * binom2(m)) - pairs;
    s.deficiency_cap = deficiency_rhs(k, lambda, m, alpha) - defi;
    return s;
}

}  // namespace zarank
