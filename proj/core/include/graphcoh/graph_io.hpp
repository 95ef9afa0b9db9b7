#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "graphcoh/chain.hpp"

namespace graphcoh {

// Graph text format, one graph per document, vertices numbered from 1
// (externals along the backbone first, then internals):
//
//   backbone=circle parity=odd v_e=3 v_i=1
//   edge 1 4
//   edge 2 4
//   edge 3 4
//
// Odd parity: `edge <src> <dst>`; a loop at an external vertex also needs
// `halforder a b` with (a, b) = (1, 2) for source half first or (2, 1).
// Even parity: `edge <label> <u> <v>` with labels a bijection onto 1..e.
// Blank lines and lines starting with '#' are ignored.
//
// Syntax errors throw ParseError with line and column; violated graph
// invariants throw ValidationError.
RawGraph parse_graph(std::string_view text);
std::string serialize(const RawGraph& g);
std::string serialize(const CanonicalGraph& g);

// Chain files hold graph blocks followed by term lines:
//
//   graph g1
//   backbone=circle parity=even v_e=4 v_i=0
//   edge 1 1 3
//   edge 2 2 4
//   end
//   1/4 g1
//
// A tensor term names two graphs: `<p/q> <id1> <id2>`.
struct ChainDocument {
    std::map<std::string, RawGraph> graphs;
    struct Term {
        Rational coefficient;
        std::vector<std::string> ids;
    };
    std::vector<Term> terms;
};

ChainDocument parse_chain_document(std::string_view text);
// Canonicalizes every referenced graph; terms must name exactly one graph.
Chain to_chain(const ChainDocument& doc);
// Terms must name exactly two graphs.
TensorChain to_tensor_chain(const ChainDocument& doc);

std::string write_chain(const Chain& c);
std::string write_tensor_chain(const TensorChain& t);

// Graphviz export: external vertices drawn in backbone order on a cycle
// (circle) or path (line), internal vertices unconstrained.
std::string to_dot(const CanonicalGraph& g, std::string_view name = "G");

}  // namespace graphcoh
