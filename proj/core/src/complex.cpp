#include "graphcoh/complex.hpp"

#include <string>

namespace graphcoh {

namespace {

// Vertex rule for contracting something oriented from label a to label b
// (1-based).
int vertex_rule_sign(int a, int b)
{
    const int exponent = b > a ? b : a + 1;
    return exponent % 2 == 0 ? 1 : -1;
}

// Merge vertex `drop` into `keep` (keep < drop) and renumber; the edge at
// position `skip` (if any) is removed. For an arc contraction `arc_source` is
// the vertex the arc starts from, -1 otherwise.
RawGraph merge_vertices(const CanonicalGraph& g, int keep, int drop, int skip, bool drop_is_external, int arc_source)
{
    RawGraph out;
    out.backbone = g.backbone();
    out.parity = g.parity();
    out.v_e = g.v_e() - (drop_is_external ? 1 : 0);
    out.v_i = g.v_i() - (drop_is_external ? 0 : 1);
    auto remap = [&](int x) { return x == drop ? keep : (x > drop ? x - 1 : x); };
    const auto edges = g.edges();
    out.edges.reserve(edges.size());
    for (int idx = 0; idx < static_cast<int>(edges.size()); ++idx) {
        if (idx == skip) continue;
        const Edge& e = edges[idx];
        // a chord that turns into a loop gets the half-edge order of the
        // backbone: the half at the arc's source comes first
        const bool becomes_loop = !e.is_loop() && remap(e.u) == remap(e.v);
        const bool swapped = becomes_loop ? g.parity() == Parity::odd && e.u != arc_source : e.halves_swapped;
        out.edges.push_back(Edge{remap(e.u), remap(e.v), swapped});
    }
    return out;
}

SignedGraph with_sign(const SignedGraph& s, int sign) { return sign > 0 ? s : s.negated(); }

}  // namespace

int arc_count(const CanonicalGraph& g)
{
    if (g.v_e() < 2) return 0;
    return g.backbone() == Backbone::circle ? g.v_e() : g.v_e() - 1;
}

SignedGraph contract_arc(const CanonicalGraph& g, int i)
{
    if (g.v_e() < 2) throw ValidationError("arc contraction needs at least two external vertices");
    if (i < 0 || i >= arc_count(g))
        throw ValidationError("arc index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(arc_count(g)));
    const int j = (i + 1) % g.v_e();
    const int sign = vertex_rule_sign(i + 1, j + 1);
    const int keep = std::min(i, j);
    const int drop = std::max(i, j);
    return with_sign(canonicalize(merge_vertices(g, keep, drop, -1, true, i)), sign);
}

bool is_regular_edge(const CanonicalGraph& g, int edge)
{
    const Edge& e = g.edges()[edge];
    return e.u >= g.v_e() || e.v >= g.v_e();
}

SignedGraph contract_edge(const CanonicalGraph& g, int edge)
{
    if (edge < 0 || edge >= g.edge_count())
        throw ValidationError("edge index " + std::to_string(edge + 1) + " out of range");
    if (!is_regular_edge(g, edge))
        throw NotContractibleError("edge " + std::to_string(edge + 1) +
                                   " joins two external vertices and is not contractible");
    const Edge& e = g.edges()[edge];
    int sign = 0;
    if (g.parity() == Parity::odd) {
        sign = vertex_rule_sign(e.u + 1, e.v + 1);
    } else {
        const int alpha = edge + 1;
        sign = (alpha + 1 + g.v_e()) % 2 == 0 ? 1 : -1;
    }
    const int keep = std::min(e.u, e.v);
    const int drop = std::max(e.u, e.v);
    return with_sign(canonicalize(merge_vertices(g, keep, drop, edge, false, -1)), sign);
}

Chain delta(const CanonicalGraph& g)
{
    Chain out;
    for (int i = 0; i < arc_count(g); ++i) out.add(contract_arc(g, i), 1);
    for (int idx = 0; idx < g.edge_count(); ++idx)
        if (is_regular_edge(g, idx)) out.add(contract_edge(g, idx), 1);
    return out;
}

Chain delta(const Chain& c)
{
    if (!c.is_zero() && !c.homogeneous_grading())
        throw GradingError("delta needs a chain homogeneous in (k, m)");
    Chain out;
    for (const auto& [g, coefficient] : c) out.add(delta(g), coefficient);
    return out;
}

}  // namespace graphcoh
