#include "zarank/hypergraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace zarank {

namespace {
constexpr int kDenseLimit = 2048;

void check_vertex(int v, int m) {
    if (v < 0 || v >= m)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," + std::to_string(m) + ")");
}
}  // namespace

Multigraph::Multigraph(int m) : m_(m), dense_(m <= kDenseLimit) {
    if (m < 0) throw std::invalid_argument("Multigraph: negative order");
    if (dense_) tri_.assign(static_cast<size_t>(m) * (m > 0 ? m - 1 : 0) / 2, 0);
}

size_t Multigraph::tri_index(int x, int y) const {
    // x < y assumed
    return static_cast<size_t>(x) * (2 * m_ - x - 1) / 2 + static_cast<size_t>(y - x - 1);
}

long long Multigraph::codegree(int x, int y) const {
    check_vertex(x, m_);
    check_vertex(y, m_);
    if (x == y) throw std::invalid_argument("codegree of a vertex with itself");
    if (x > y) std::swap(x, y);
    if (dense_) return tri_[tri_index(x, y)];
    auto it = sparse_.find({x, y});
    return it == sparse_.end() ? 0 : it->second;
}

void Multigraph::add_pair(int x, int y, long long delta) {
    check_vertex(x, m_);
    check_vertex(y, m_);
    if (x == y) throw std::invalid_argument("no self-loops");
    if (x > y) std::swap(x, y);
    long long next;
    if (dense_) {
        next = tri_[tri_index(x, y)] + delta;
        if (next < 0) throw std::logic_error("pair multiplicity went negative");
        tri_[tri_index(x, y)] = next;
    } else {
        next = sparse_[{x, y}] + delta;
        if (next < 0) throw std::logic_error("pair multiplicity went negative");
        if (next == 0)
            sparse_.erase({x, y});
        else
            sparse_[{x, y}] = next;
    }
}

void Multigraph::set_pair(int x, int y, long long value) {
    add_pair(x, y, value - codegree(x, y));
}

long long Multigraph::edge_count() const {
    if (dense_) return std::accumulate(tri_.begin(), tri_.end(), 0LL);
    long long t = 0;
    for (const auto& kv : sparse_) t += kv.second;
    return t;
}

long long Multigraph::degree(int x) const {
    check_vertex(x, m_);
    long long d = 0;
    for (int y = 0; y < m_; ++y)
        if (y != x) d += codegree(x, y);
    return d;
}

std::vector<long long> Multigraph::degrees() const {
    std::vector<long long> d(static_cast<size_t>(m_), 0);
    for (int x = 0; x < m_; ++x)
        for (int y = x + 1; y < m_; ++y) {
            long long c = codegree(x, y);
            d[static_cast<size_t>(x)] += c;
            d[static_cast<size_t>(y)] += c;
        }
    return d;
}

bool Multigraph::is_simple() const {
    for (int x = 0; x < m_; ++x)
        for (int y = x + 1; y < m_; ++y)
            if (codegree(x, y) > 1) return false;
    return true;
}

std::vector<std::pair<std::pair<int, int>, long long>> Multigraph::pairs() const {
    std::vector<std::pair<std::pair<int, int>, long long>> out;
    for (int x = 0; x < m_; ++x)
        for (int y = x + 1; y < m_; ++y) {
            long long c = codegree(x, y);
            if (c > 0) out.push_back({{x, y}, c});
        }
    return out;
}

Multigraph Multigraph::complete(int m, long long lambda) {
    Multigraph g(m);
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) g.add_pair(x, y, lambda);
    return g;
}

Multigraph Multigraph::complete_on(int m, const std::vector<int>& verts, long long lambda) {
    Multigraph g(m);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) g.add_pair(verts[i], verts[j], lambda);
    return g;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
    if (a.m_ != b.m_) return false;
    for (int x = 0; x < a.m_; ++x)
        for (int y = x + 1; y < a.m_; ++y)
            if (a.codegree(x, y) != b.codegree(x, y)) return false;
    return true;
}

void Hypergraph::add_edge(std::vector<int> e) {
    if (e.empty()) throw std::invalid_argument("edges must be nonempty");
    std::sort(e.begin(), e.end());
    for (size_t i = 0; i < e.size(); ++i) {
        check_vertex(e[i], m);
        if (i > 0 && e[i] == e[i - 1])
            throw std::invalid_argument("edge has a repeated vertex " + std::to_string(e[i]));
    }
    edges.push_back(std::move(e));
}

void Hypergraph::canonicalize() { std::sort(edges.begin(), edges.end()); }

long long Hypergraph::total_degree() const {
    long long t = 0;
    for (const auto& e : edges) t += static_cast<long long>(e.size());
    return t;
}

std::vector<long long> Hypergraph::size_profile() const {
    std::vector<long long> p(static_cast<size_t>(m), 0);
    for (const auto& e : edges) p.at(e.size() - 1)++;
    return p;
}

DegreeSummary degree_summary(const Hypergraph& h) {
    DegreeSummary s;
    s.degrees.assign(static_cast<size_t>(h.m), 0);
    for (const auto& e : h.edges)
        for (int v : e) s.degrees[static_cast<size_t>(v)]++;
    s.total_degree = h.total_degree();
    Multigraph g = underlying_multigraph(h);
    for (int x = 0; x < h.m; ++x)
        for (int y = x + 1; y < h.m; ++y) s.max_codegree = std::max(s.max_codegree, g.codegree(x, y));
    return s;
}

Hypergraph hyper_union(const Hypergraph& a, const Hypergraph& b) {
    Hypergraph u(std::max(a.m, b.m));
    u.edges = a.edges;
    u.edges.insert(u.edges.end(), b.edges.begin(), b.edges.end());
    u.canonicalize();
    return u;
}

Hypergraph hyper_difference(const Hypergraph& a, const Hypergraph& b) {
    std::map<std::vector<int>, long long> mult;
    for (const auto& e : a.edges) mult[e]++;
    for (const auto& e : b.edges) {
        auto it = mult.find(e);
        if (it != mult.end() && it->second > 0) it->second--;
    }
    Hypergraph d(a.m);
    for (const auto& kv : mult)
        for (long long i = 0; i < kv.second; ++i) d.edges.push_back(kv.first);
    d.canonicalize();
    return d;
}

Multigraph underlying_multigraph(const Hypergraph& h) {
    Multigraph g(h.m);
    for (const auto& e : h.edges)
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) g.add_pair(e[i], e[j], 1);
    return g;
}

LinearityCheck is_lambda_linear(const Multigraph& g, long long lambda) {
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y)
            if (g.codegree(x, y) > lambda) return {false, x, y};
    return {};
}

LinearityCheck is_lambda_linear(const Hypergraph& h, long long lambda) {
    return is_lambda_linear(underlying_multigraph(h), lambda);
}

Multigraph defect(const Multigraph& g, long long lambda) {
    Multigraph d(g.order());
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y) {
            long long c = g.codegree(x, y);
            if (c > lambda) throw NotLinearError(x, y);
            d.add_pair(x, y, lambda - c);
        }
    return d;
}

Multigraph defect(const Hypergraph& h, long long lambda) {
    return defect(underlying_multigraph(h), lambda);
}

bool is_F_divisible(const Multigraph& g, const Multigraph& f) {
    if (f.empty()) throw std::invalid_argument("is_F_divisible: F must be nonempty");
    if (!f.is_simple()) throw std::invalid_argument("is_F_divisible: F must be simple");
    long long ef = f.edge_count();
    if (g.edge_count() % ef != 0) return false;
    long long gcd = 0;
    for (long long d : f.degrees()) gcd = std::gcd(gcd, d);
    for (long long d : g.degrees())
        if (d % gcd != 0) return false;
    return true;
}

bool is_kl_divisible(const Multigraph& g, int l) {
    return is_F_divisible(g, Multigraph::complete(l, 1));
}

std::vector<int> lambda_neighbourhood(const Multigraph& g, int x, long long lambda) {
    std::vector<int> out;
    for (int y = 0; y < g.order(); ++y)
        if (y != x && g.codegree(x, y) >= lambda) out.push_back(y);
    return out;
}

std::string witness_to_json(const Hypergraph& h, long long lambda) {
    Hypergraph c = h;
    c.canonicalize();
    nlohmann::ordered_json j;
    j["m"] = c.m;
    j["lambda"] = lambda;
    j["edges"] = c.edges;
    return j.dump() + "\n";
}

Hypergraph witness_from_json(const std::string& text, long long* lambda_out) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Recover line/column from the byte offset the parser reports.
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') { ++line; col = 1; } else ++col;
        }
        throw std::runtime_error("witness JSON parse error at line " + std::to_string(line) + ", column " +
                                 std::to_string(col) + ": " + e.what());
    }
    if (!j.contains("m") || !j.contains("lambda") || !j.contains("edges"))
        throw std::runtime_error("witness JSON must contain m, lambda, edges");
    Hypergraph h(j.at("m").get<int>());
    if (lambda_out) *lambda_out = j.at("lambda").get<long long>();
    for (const auto& e : j.at("edges")) h.add_edge(e.get<std::vector<int>>());
    h.canonicalize();
    return h;
}

void write_witness_file(const std::string& path, const Hypergraph& h, long long lambda) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << witness_to_json(h, lambda);
}

Hypergraph read_witness_file(const std::string& path, long long* lambda_out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open witness file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return witness_from_json(ss.str(), lambda_out);
}

}  // namespace zarank
