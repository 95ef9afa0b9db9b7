#include "graphcoh/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "graphcoh/complex.hpp"

namespace graphcoh {

namespace {

// Calls fn(subset) for every k-subset of [first, last), in lexicographic order.
void for_each_combination(int first, int last, int k, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int slot, int from) {
        if (slot == k) {
            fn(pick);
            return;
        }
        for (int x = from; x <= last - (k - slot); ++x) {
            pick[slot] = x;
            rec(slot + 1, x + 1);
        }
    };
    rec(0, first);
}

int parity_sign(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

void require_same_kind(const CanonicalGraph& a, const CanonicalGraph& b)
{
    if (a.backbone() != b.backbone() || a.parity() != b.parity())
        throw ValidationError("shuffle product needs factors of the same backbone and parity");
}

void require_line(const CanonicalGraph& g)
{
    if (g.backbone() != Backbone::line)
        throw UnsupportedBackboneError("the coproduct is only defined on the line backbone");
}

ShuffleTerm build_term(const CanonicalGraph& g1, const CanonicalGraph& g2, const std::vector<int>& pos1,
                       const std::vector<int>& pos2, int sign)
{
    const int n1 = g1.v_e(), n2 = g2.v_e(), n = n1 + n2;
    const int i1 = g1.v_i();
    ShuffleTerm t;
    t.sign = sign;
    RawGraph& r = t.graph;
    r.backbone = g1.backbone();
    r.parity = g1.parity();
    r.v_e = n;
    r.v_i = i1 + g2.v_i();
    auto index1 = [&](int x) { return x < n1 ? pos1[x] : n + (x - n1); };
    auto index2 = [&](int y) { return y < n2 ? pos2[y] : n + i1 + (y - n2); };
    for (const Edge& e : g1.edges()) r.edges.push_back(Edge{index1(e.u), index1(e.v), e.halves_swapped});
    for (const Edge& e : g2.edges()) r.edges.push_back(Edge{index2(e.u), index2(e.v), e.halves_swapped});

    if (r.parity == Parity::odd) {
        // g2's vertex labels are offset by the number of labelled vertices of g1
        const int offset = g1.vertex_count();
        r.labels.assign(r.vertex_count(), 0);
        for (int x = 0; x < g1.vertex_count(); ++x) r.labels[index1(x)] = x;
        for (int y = 0; y < g2.vertex_count(); ++y) r.labels[index2(y)] = offset + y;
    } else {
        r.labels.assign(n, 0);
        for (int x = 0; x < n1; ++x) r.labels[pos1[x]] = x;
        for (int y = 0; y < n2; ++y) r.labels[pos2[y]] = n1 + y;
    }
    t.second_positions = pos2;
    std::sort(t.second_positions.begin(), t.second_positions.end());
    return t;
}

}  // namespace

int shuffle_sign_exponent(const CanonicalGraph& g1, const CanonicalGraph& g2)
{
    return g1.parity() == Parity::even ? g2.v_e() * g1.edge_count() : 0;
}

std::vector<ShuffleTerm> raw_shuffle_terms(const CanonicalGraph& g1, const CanonicalGraph& g2)
{
    require_same_kind(g1, g2);
    const int n1 = g1.v_e(), n2 = g2.v_e(), n = n1 + n2;
    const int sign = parity_sign(shuffle_sign_exponent(g1, g2));
    std::vector<ShuffleTerm> out;

    auto complement = [&](const std::vector<int>& taken, int from) {
        std::vector<int> rest;
        std::vector<char> used(n, 0);
        for (int p : taken) used[p] = 1;
        for (int p = from; p < n; ++p)
            if (!used[p]) rest.push_back(p);
        return rest;
    };

    if (g1.backbone() == Backbone::line || n1 == 0 || n2 == 0) {
        for_each_combination(0, n, n2, [&](const std::vector<int>& s) {
            out.push_back(build_term(g1, g2, complement(s, 0), s, sign));
        });
        return out;
    }

    for_each_combination(1, n, n2, [&](const std::vector<int>& s) {
        std::vector<int> pos1{0};
        for (int p : complement(s, 1)) pos1.push_back(p);
        std::vector<int> pos2(n2);
        for (int r = 0; r < n2; ++r) {
            for (int t = 0; t < n2; ++t) pos2[(r + t) % n2] = s[t];
            out.push_back(build_term(g1, g2, pos1, pos2, sign));
        }
    });
    return out;
}

Chain shuffle_product(const CanonicalGraph& g1, const CanonicalGraph& g2)
{
    Chain out;
    for (const ShuffleTerm& t : raw_shuffle_terms(g1, g2)) out.add(canonicalize(t.graph), t.sign);
    return out;
}

Chain shuffle_product(const Chain& a, const Chain& b)
{
    Chain out;
    for (const auto& [ga, ca] : a)
        for (const auto& [gb, cb] : b) out.add(shuffle_product(ga, gb), ca * cb);
    return out;
}

TensorChain coproduct(const CanonicalGraph& g)
{
    require_line(g);
    RawGraph raw = g.raw();
    const std::vector<FactorBlock> blocks = factor_blocks(raw);
    const int r = static_cast<int>(blocks.size());

    // Renumber so that every label of a factor is smaller than every label of
    // the next one; g = base * (renumbered g).
    int base = 1;
    std::vector<int> block_of(raw.vertex_count(), 0);
    for (int b = 0; b < r; ++b) {
        for (int x = blocks[b].first_external; x <= blocks[b].last_external; ++x) block_of[x] = b;
        for (int x : blocks[b].internal_vertices) block_of[x] = b;
    }
    if (raw.parity == Parity::odd) {
        std::vector<int> labels(raw.vertex_count());
        int next = 0;
        for (const FactorBlock& b : blocks) {
            for (int x = b.first_external; x <= b.last_external; ++x) labels[x] = next++;
            for (int x : b.internal_vertices) labels[x] = next++;
        }
        base = permutation_sign(labels);
        raw.labels = std::move(labels);
    } else {
        std::vector<int> order(raw.edges.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return block_of[raw.edges[a].u] < block_of[raw.edges[b].u]; });
        base = permutation_sign(order);
        std::vector<Edge> reordered;
        for (int idx : order) reordered.push_back(raw.edges[idx]);
        raw.edges = std::move(reordered);
    }

    TensorChain out;
    for (int s = 0; s <= r; ++s) {
        std::vector<int> ext_left, int_left, ext_right, int_right;
        for (int b = 0; b < r; ++b) {
            auto& ext = b < s ? ext_left : ext_right;
            auto& in = b < s ? int_left : int_right;
            for (int x = blocks[b].first_external; x <= blocks[b].last_external; ++x) ext.push_back(x);
            in.insert(in.end(), blocks[b].internal_vertices.begin(), blocks[b].internal_vertices.end());
        }
        const RawGraph left = subgraph(raw, ext_left, int_left);
        const RawGraph right = subgraph(raw, ext_right, int_right);
        const SignedGraph l = canonicalize(left);
        const SignedGraph rr = canonicalize(right);
        if (l.is_zero() || rr.is_zero()) continue;
        const long lambda = raw.parity == Parity::even ? static_cast<long>(right.v_e) * left.edges.size() : 0;
        const int sign = base * parity_sign(lambda) * l.sign() * rr.sign();
        out.add(TensorKey{l.graph(), rr.graph()}, sign);
    }
    return out;
}

TensorChain coproduct(const Chain& c)
{
    TensorChain out;
    for (const auto& [g, coefficient] : c) out.add(coproduct(g), coefficient);
    return out;
}

Rational counit(const Chain& c)
{
    if (c.is_zero()) return 0;
    return c.coefficient(CanonicalGraph::unit(*c.backbone(), *c.parity()));
}

const Chain& Antipode::operator()(const CanonicalGraph& g)
{
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    require_line(g);
    Chain s;
    if (g.is_unit()) {
        s.add(g, 1);
    } else {
        s.add(g, -1);
        for (const auto& [key, c] : coproduct(g)) {
            const auto& [left, right] = key;
            if (left.is_unit() || right.is_unit()) continue;
            const Chain left_image = (*this)(left);
            s.add(shuffle_product(left_image, Chain(right)), -c);
        }
    }
    return memo_.emplace(g, std::move(s)).first->second;
}

Chain Antipode::operator()(const Chain& c)
{
    Chain out;
    for (const auto& [g, coefficient] : c) out.add((*this)(g), coefficient);
    return out;
}

Chain antipode(const Chain& c)
{
    Antipode s;
    return s(c);
}

TensorChain tensor(const Chain& a, const Chain& b)
{
    TensorChain out;
    for (const auto& [ga, ca] : a)
        for (const auto& [gb, cb] : b) out.add(TensorKey{ga, gb}, ca * cb);
    return out;
}

TensorChain tensor_product(const TensorChain& a, const TensorChain& b)
{
    TensorChain out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            const int koszul = parity_sign(static_cast<long>(ka.second.label_degree()) * kb.first.label_degree());
            const Chain left = shuffle_product(ka.first, kb.first);
            const Chain right = shuffle_product(ka.second, kb.second);
            out.add(tensor(left, right), ca * cb * koszul);
        }
    }
    return out;
}

TensorChain delta(const TensorChain& t)
{
    TensorChain out;
    for (const auto& [key, c] : t) {
        const auto& [a, b] = key;
        out.add(tensor(delta(a), Chain(b)), c);
        out.add(tensor(Chain(a), delta(b)), c * parity_sign(a.label_degree()));
    }
    return out;
}

Chain multiply(const TensorChain& t)
{
    Chain out;
    for (const auto& [key, c] : t) out.add(shuffle_product(key.first, key.second), c);
    return out;
}

TripleTensorChain coproduct_left(const TensorChain& t)
{
    TripleTensorChain out;
    for (const auto& [key, c] : t)
        for (const auto& [inner, ci] : coproduct(key.first))
            out.add(TripleKey{inner.first, inner.second, key.second}, c * ci);
    return out;
}

TripleTensorChain coproduct_right(const TensorChain& t)
{
    TripleTensorChain out;
    for (const auto& [key, c] : t)
        for (const auto& [inner, ci] : coproduct(key.second))
            out.add(TripleKey{key.first, inner.first, inner.second}, c * ci);
    return out;
}

}  // namespace graphcoh
