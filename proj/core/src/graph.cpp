#include "graphcoh/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace graphcoh {

std::string_view to_string(Backbone b) { return b == Backbone::circle ? "circle" : "line"; }
std::string_view to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

Backbone parse_backbone(std::string_view s)
{
    if (s == "circle") return Backbone::circle;
    if (s == "line") return Backbone::line;
    throw ValidationError("unknown backbone '" + std::string(s) + "' (expected circle|line)");
}

Parity parse_parity(std::string_view s)
{
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
    throw ValidationError("unknown parity '" + std::string(s) + "' (expected odd|even)");
}

ParseError::ParseError(const std::string& what, int line, int column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

Limits Limits::from_environment()
{
    Limits l;
    if (const char* s = std::getenv("GRAPHCOH_MAX_RAW_GRAPHS")) l.max_raw_graphs = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("GRAPHCOH_MAX_MATRIX_DIM")) l.max_matrix_dim = std::strtoull(s, nullptr, 10);
    return l;
}

int permutation_sign(std::span<const int> perm)
{
    // cycle decomposition; a cycle of length L contributes (-1)^(L-1)
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

namespace {

bool is_permutation_of_range(std::span<const int> p)
{
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

int rotation_sign(int r, int n) { return (r * (n - r)) % 2 == 0 ? 1 : -1; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

std::string vertex_name(const RawGraph& g, int x)
{
    return (g.is_external(x) ? "external vertex " : "internal vertex ") + std::to_string(x + 1);
}

}  // namespace

void check_well_formed(const RawGraph& g)
{
    if (g.v_e < 0 || g.v_i < 0) throw ValidationError("vertex counts must be non-negative");
    const int n = g.vertex_count();
    for (const Edge& e : g.edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw ValidationError("edge endpoint out of range 1.." + std::to_string(n));
        if (e.halves_swapped && (g.parity == Parity::even || !e.is_loop()))
            throw ValidationError("half-edge order is only a decoration of odd external loops");
    }
    if (!g.labels.empty()) {
        const auto expected = static_cast<std::size_t>(g.parity == Parity::odd ? n : g.v_e);
        if (g.labels.size() != expected || !is_permutation_of_range(g.labels))
            throw ValidationError("vertex labels must be a bijection onto 1.." + std::to_string(expected));
    }
}

void validate(const RawGraph& g)
{
    check_well_formed(g);
    const int n = g.vertex_count();
    std::vector<int> valence(n, 0);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        if (e.is_loop() && !g.is_external(e.u))
            throw ValidationError("internal loop at " + vertex_name(g, e.u) + " (no internal loops)");
        ++valence[e.u];
        ++valence[e.v];
        pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    if (auto it = std::adjacent_find(pairs.begin(), pairs.end()); it != pairs.end())
        throw ValidationError("double line between vertices " + std::to_string(it->first + 1) + " and " +
                              std::to_string(it->second + 1) + " (no double lines)");
    for (int x = 0; x < n; ++x) {
        if (g.is_external(x) && valence[x] < 1)
            throw ValidationError(vertex_name(g, x) + " has valence 0 (external vertices need valence >= 1)");
        if (!g.is_external(x) && valence[x] < 3)
            throw ValidationError(vertex_name(g, x) + " has valence " + std::to_string(valence[x]) +
                                  " (internal vertices need valence >= 3)");
    }
    UnionFind uf(n);
    for (const Edge& e : g.edges) uf.join(e.u, e.v);
    std::vector<char> touches(n, 0);
    for (int x = 0; x < g.v_e; ++x) touches[uf.find(x)] = 1;
    for (int x = g.v_e; x < n; ++x)
        if (!touches[uf.find(x)])
            throw ValidationError(vertex_name(g, x) +
                                  " lies in a component without external vertices (components must touch the backbone)");
}

Grading grading(const RawGraph& g)
{
    validate(g);
    const int e = static_cast<int>(g.edges.size());
    Grading out;
    out.k = e - g.v_i;
    out.m = 2 * e - g.v_e - 3 * g.v_i;
    out.label_degree = g.parity == Parity::even ? e + g.v_e : g.v_e + g.v_i;
    return out;
}

CanonicalGraph CanonicalGraph::unit(Backbone b, Parity p)
{
    CanonicalGraph g;
    g.backbone_ = b;
    g.parity_ = p;
    return g;
}

Grading CanonicalGraph::grading() const
{
    const int e = edge_count();
    return {e - v_i_, 2 * e - v_e_ - 3 * v_i_, label_degree()};
}

int CanonicalGraph::label_degree() const
{
    return parity_ == Parity::even ? edge_count() + v_e_ : v_e_ + v_i_;
}

RawGraph CanonicalGraph::raw() const
{
    return RawGraph{backbone_, parity_, v_e_, v_i_, edges_, {}};
}

SignedGraph SignedGraph::negated() const
{
    if (is_zero()) return zero();
    return SignedGraph(-sign_, *graph_);
}

// Brute-force minimisation over the residual relabelling group: cyclic
// rotations of the externals (circle only) times all permutations of the
// internal vertices. Each group element induces a sign; the encoding of a
// relabelled graph is its sorted, normalised edge list.
class Canonicalizer {
public:
    static SignedGraph run(const RawGraph& g)
    {
        check_well_formed(g);

        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(g.edges.size());
        for (const Edge& e : g.edges) {
            if (e.is_loop() && !g.is_external(e.u)) return SignedGraph::zero();
            pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        }
        std::sort(pairs.begin(), pairs.end());
        if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return SignedGraph::zero();

        const bool odd = g.parity == Parity::odd;
        const int base = g.labels.empty() ? 1 : permutation_sign(g.labels);
        const int n = g.vertex_count();
        const int rotations = (g.backbone == Backbone::circle && g.v_e > 0) ? g.v_e : 1;
        const std::size_t edge_count = g.edges.size();

        std::vector<int> internal(g.v_i);
        std::iota(internal.begin(), internal.end(), 0);
        std::vector<int> phi(n);
        std::vector<Edge> current(edge_count);
        std::vector<Edge> best;
        std::vector<int> order(edge_count);
        bool have = false;
        bool plus = false;
        bool minus = false;

        do {
            const int internal_sign = odd ? permutation_sign(internal) : 1;
            for (int j = 0; j < g.v_i; ++j) phi[g.v_e + j] = g.v_e + internal[j];
            for (int r = 0; r < rotations; ++r) {
                for (int x = 0; x < g.v_e; ++x) phi[x] = (x + r) % g.v_e;
                int s = rotation_sign(r, g.v_e) * internal_sign;
                for (std::size_t i = 0; i < edge_count; ++i) {
                    const Edge& e = g.edges[i];
                    int a = phi[e.u];
                    int b = phi[e.v];
                    if (a > b) {
                        std::swap(a, b);
                        if (odd) s = -s;
                    }
                    if (odd && e.halves_swapped) s = -s;
                    current[i] = Edge{a, b, false};
                }
                if (odd) {
                    std::sort(current.begin(), current.end());
                } else {
                    std::iota(order.begin(), order.end(), 0);
                    std::sort(order.begin(), order.end(),
                              [&](int x, int y) { return current[x] < current[y]; });
                    s *= permutation_sign(order);
                    std::sort(current.begin(), current.end());
                }
                if (!have || current < best) {
                    best = current;
                    have = true;
                    plus = s > 0;
                    minus = s < 0;
                } else if (current == best) {
                    (s > 0 ? plus : minus) = true;
                }
            }
        } while (std::next_permutation(internal.begin(), internal.end()));

        if (plus && minus) return SignedGraph::zero();
        CanonicalGraph out;
        out.backbone_ = g.backbone;
        out.parity_ = g.parity;
        out.v_e_ = g.v_e;
        out.v_i_ = g.v_i;
        out.edges_ = std::move(best);
        return SignedGraph(plus ? base : -base, std::move(out));
    }
};

SignedGraph canonicalize(const RawGraph& g) { return Canonicalizer::run(g); }

RawGraph subgraph(const RawGraph& g, std::span<const int> externals, std::span<const int> internals)
{
    const int n = g.vertex_count();
    std::vector<int> remap(n, -1);
    RawGraph out;
    out.backbone = g.backbone;
    out.parity = g.parity;
    out.v_e = static_cast<int>(externals.size());
    out.v_i = static_cast<int>(internals.size());
    int next = 0;
    for (int x : externals) remap[x] = next++;
    for (int x : internals) remap[x] = next++;
    for (const Edge& e : g.edges) {
        if (remap[e.u] < 0 || remap[e.v] < 0) continue;
        out.edges.push_back(Edge{remap[e.u], remap[e.v], e.halves_swapped});
    }

    // relative order of the original labels
    auto label_of = [&](int x) { return g.labels.empty() ? x : g.labels[x]; };
    std::vector<int> members(externals.begin(), externals.end());
    if (g.parity == Parity::odd) members.insert(members.end(), internals.begin(), internals.end());
    std::vector<int> by_label(members.size());
    std::iota(by_label.begin(), by_label.end(), 0);
    std::sort(by_label.begin(), by_label.end(),
              [&](int a, int b) { return label_of(members[a]) < label_of(members[b]); });
    std::vector<int> labels(members.size());
    for (std::size_t rank = 0; rank < by_label.size(); ++rank) labels[by_label[rank]] = static_cast<int>(rank);
    bool identity = true;
    for (std::size_t i = 0; i < labels.size(); ++i) identity = identity && labels[i] == static_cast<int>(i);
    if (!identity) out.labels = std::move(labels);
    return out;
}

std::vector<FactorBlock> factor_blocks(const RawGraph& g)
{
    if (g.backbone != Backbone::line)
        throw UnsupportedBackboneError("primitive factorisation is only defined on the line backbone");
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (const Edge& e : g.edges) uf.join(e.u, e.v);
    std::vector<int> lo(n, n), hi(n, -1);
    for (int x = 0; x < g.v_e; ++x) {
        const int r = uf.find(x);
        lo[r] = std::min(lo[r], x);
        hi[r] = std::max(hi[r], x);
    }
    // arc x joins external x and x + 1; it is a cut point unless some
    // component spans across it
    std::vector<char> covered(std::max(g.v_e - 1, 0), 0);
    for (int r = 0; r < n; ++r)
        for (int x = lo[r]; x < hi[r]; ++x) covered[x] = 1;

    std::vector<FactorBlock> blocks;
    std::vector<int> block_of(g.v_e, 0);
    for (int x = 0; x < g.v_e; ++x) {
        if (x == 0 || !covered[x - 1]) blocks.push_back(FactorBlock{x, x, {}});
        blocks.back().last_external = x;
        block_of[x] = static_cast<int>(blocks.size()) - 1;
    }
    for (int x = g.v_e; x < n; ++x) {
        const int r = uf.find(x);
        if (hi[r] < 0)
            throw ValidationError("internal vertex " + std::to_string(x + 1) +
                                  " lies in a component without external vertices");
        blocks[block_of[lo[r]]].internal_vertices.push_back(x);
    }
    return blocks;
}

std::vector<CanonicalGraph> primitive_factors(const CanonicalGraph& g)
{
    const RawGraph raw = g.raw();
    std::vector<CanonicalGraph> out;
    for (const FactorBlock& b : factor_blocks(raw)) {
        std::vector<int> ext(b.last_external - b.first_external + 1);
        std::iota(ext.begin(), ext.end(), b.first_external);
        const SignedGraph f = canonicalize(subgraph(raw, ext, b.internal_vertices));
        if (f.is_zero()) throw ValidationError("primitive factor reduced to zero in a nonzero graph");
        out.push_back(f.graph());
    }
    return out;
}

}  // namespace graphcoh
