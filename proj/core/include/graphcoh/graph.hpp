#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphcoh/types.hpp"

namespace graphcoh {

// Vertices are addressed by 0-based index. Indices [0, v_e) are the external
// vertices in backbone order, [v_e, v_e + v_i) are the internal ones.
struct Edge {
    int u = 0;
    int v = 0;
    // Odd parity loops only: the half-edge order is (u-half, v-half) unless
    // this is set, in which case the halves are swapped.
    bool halves_swapped = false;

    bool is_loop() const noexcept { return u == v; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A decorated graph in an arbitrary labelling.
//
// Odd parity: the edge direction is u -> v and `labels` (if non-empty) gives
// the vertex number of every vertex. Even parity: the position of an edge in
// `edges` is its label and `labels` (if non-empty) numbers the external
// vertices. An empty `labels` means the standard numbering (label == index),
// i.e. externals numbered along the backbone and then internals.
struct RawGraph {
    Backbone backbone = Backbone::circle;
    Parity parity = Parity::odd;
    int v_e = 0;
    int v_i = 0;
    std::vector<Edge> edges;
    std::vector<int> labels;

    int vertex_count() const noexcept { return v_e + v_i; }
    bool is_external(int x) const noexcept { return x < v_e; }
};

struct Grading {
    int k = 0;             // order, e - v_i
    int m = 0;             // degree, 2e - v_e - 3 v_i
    int label_degree = 0;  // total number of labels |G|
    friend bool operator==(const Grading&, const Grading&) = default;
};

// Structural checks only: index ranges, label permutations, decoration fields
// that exist for the parity. Throws ValidationError.
void check_well_formed(const RawGraph& g);

// Full invariant check: well-formed, valences, no internal loops, no double
// lines, every component of graph-minus-backbone touches the backbone.
void validate(const RawGraph& g);

Grading grading(const RawGraph& g);

class CanonicalGraph {
public:
    // The unit graph (no vertices, no edges).
    static CanonicalGraph unit(Backbone b, Parity p);

    Backbone backbone() const noexcept { return backbone_; }
    Parity parity() const noexcept { return parity_; }
    int v_e() const noexcept { return v_e_; }
    int v_i() const noexcept { return v_i_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    int vertex_count() const noexcept { return v_e_ + v_i_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    bool is_unit() const noexcept { return v_e_ == 0 && v_i_ == 0 && edges_.empty(); }

    Grading grading() const;
    int label_degree() const;

    // The graph in the standard numbering.
    RawGraph raw() const;

    friend auto operator<=>(const CanonicalGraph&, const CanonicalGraph&) = default;
    friend bool operator==(const CanonicalGraph&, const CanonicalGraph&) = default;

    // Equivalent to unit(circle, odd); present so the type is regular.
    CanonicalGraph() = default;

private:
    friend class Canonicalizer;

    Backbone backbone_ = Backbone::circle;
    Parity parity_ = Parity::odd;
    int v_e_ = 0;
    int v_i_ = 0;
    std::vector<Edge> edges_;
};

// Either zero or sign * graph.
class SignedGraph {
public:
    static SignedGraph zero() { return SignedGraph(); }
    SignedGraph(int sign, CanonicalGraph g) : sign_(sign), graph_(std::move(g)) {}

    bool is_zero() const noexcept { return !graph_.has_value(); }
    int sign() const noexcept { return graph_ ? sign_ : 0; }
    const CanonicalGraph& graph() const { return graph_.value(); }

    SignedGraph negated() const;

private:
    SignedGraph() = default;
    int sign_ = 0;
    std::optional<CanonicalGraph> graph_;
};

// Reduce a decorated graph modulo its decoration relations. Returns zero when
// a double line or internal loop is present, or when some allowed relabelling
// maps the graph to minus itself.
SignedGraph canonicalize(const RawGraph& g);

// Sign of a permutation given as an image vector of 0..n-1.
int permutation_sign(std::span<const int> perm);

// Primitive factors of a line graph, ordered left to right. The unit graph has
// no factors.
std::vector<CanonicalGraph> primitive_factors(const CanonicalGraph& g);

// Factor decomposition in terms of the vertex sets of g: external index
// ranges [first, last] and the internal vertices attached to each factor.
struct FactorBlock {
    int first_external = 0;
    int last_external = 0;
    std::vector<int> internal_vertices;
};
std::vector<FactorBlock> factor_blocks(const RawGraph& g);

// The subgraph spanned by the given external and internal vertices (each list
// in the order the vertices should take in the result). Edges keep their
// relative order; labels keep their relative order. Edges leaving the vertex
// set are dropped.
RawGraph subgraph(const RawGraph& g, std::span<const int> externals,
                  std::span<const int> internals);

}  // namespace graphcoh
