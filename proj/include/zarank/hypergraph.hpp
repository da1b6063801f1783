#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zarank {

// Multigraph as a symmetric codegree map on {0..m-1}, no self-loops.
// Dense triangular storage up to 2048 vertices, sparse map above; the
// codegree-query loops in the oracle and the repair machinery lean on the
// dense path.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int m);

    int order() const { return m_; }
    long long codegree(int x, int y) const;
    void add_pair(int x, int y, long long delta);
    void set_pair(int x, int y, long long value);

    long long edge_count() const;   // sum of multiplicities
    long long degree(int x) const;  // sum of codegrees at x
    std::vector<long long> degrees() const;
    bool empty() const { return edge_count() == 0; }
    bool is_simple() const;  // all multiplicities <= 1

    // Pairs with multiplicity > 0, ascending (x < y), with multiplicity.
    std::vector<std::pair<std::pair<int, int>, long long>> pairs() const;

    static Multigraph complete(int m, long long lambda);
    // Complete graph on a vertex subset, embedded in {0..m-1}.
    static Multigraph complete_on(int m, const std::vector<int>& verts, long long lambda);

    friend bool operator==(const Multigraph& a, const Multigraph& b);

private:
    int m_ = 0;
    bool dense_ = true;
    std::vector<long long> tri_;
    std::map<std::pair<int, int>, long long> sparse_;
    size_t tri_index(int x, int y) const;
};

// Vertex set {0..m-1} plus a multiset of edges (nonempty vertex subsets,
// each stored sorted ascending). Canonical form sorts the edge list
// lexicographically; equality is structural.
struct Hypergraph {
    int m = 0;
    std::vector<std::vector<int>> edges;

    Hypergraph() = default;
    explicit Hypergraph(int m_) : m(m_) {}

    void add_edge(std::vector<int> e);  // sorts and validates
    void canonicalize();                // lexicographic edge order
    long long edge_total() const { return static_cast<long long>(edges.size()); }
    long long total_degree() const;
    // n_i counts indexed 1..m (position i-1).
    std::vector<long long> size_profile() const;
};

struct DegreeSummary {
    std::vector<long long> degrees;
    long long total_degree = 0;
    long long max_codegree = 0;
};

DegreeSummary degree_summary(const Hypergraph& h);

struct NotLinearError : std::domain_error {
    int u, v;
    NotLinearError(int u_, int v_)
        : std::domain_error("hypergraph is not lambda-linear at pair (" + std::to_string(u_) + "," +
                            std::to_string(v_) + ")"),
          u(u_), v(v_) {}
};

struct LinearityCheck {
    bool linear = true;
    int u = -1, v = -1;  // a violating pair when !linear
};

Hypergraph hyper_union(const Hypergraph& a, const Hypergraph& b);
// Saturating multiset difference: mult = max(mult_a - mult_b, 0).
Hypergraph hyper_difference(const Hypergraph& a, const Hypergraph& b);

Multigraph underlying_multigraph(const Hypergraph& h);
LinearityCheck is_lambda_linear(const Hypergraph& h, long long lambda);
LinearityCheck is_lambda_linear(const Multigraph& g, long long lambda);
// lambda - codegree for every pair; throws NotLinearError if any pair exceeds lambda.
Multigraph defect(const Hypergraph& h, long long lambda);
Multigraph defect(const Multigraph& g, long long lambda);

// |E(F)| divides |E(G)| and gcd of F's degrees divides every degree of G.
// F must be simple and nonempty.
bool is_F_divisible(const Multigraph& g, const Multigraph& f);
bool is_kl_divisible(const Multigraph& g, int l);

// { y != x : codegree(x,y) >= lambda }, ascending.
std::vector<int> lambda_neighbourhood(const Multigraph& g, int x, long long lambda);

// Witness file format: {"m": .., "lambda": .., "edges": [[..],..]} with inner
// arrays ascending and the outer array sorted lexicographically; the dump is
// canonical byte-for-byte.
std::string witness_to_json(const Hypergraph& h, long long lambda);
Hypergraph witness_from_json(const std::string& text, long long* lambda_out);
void write_witness_file(const std::string& path, const Hypergraph& h, long long lambda);
Hypergraph read_witness_file(const std::string& path, long long* lambda_out);

}  // namespace zarank
