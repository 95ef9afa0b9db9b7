#pragma once

#include "graphcoh/chain.hpp"

namespace graphcoh {

// Contract the arc running from external vertex `i` (0-based) to its
// successor along the backbone. On the circle the arc from the last external
// vertex back to the first is included; on the line only arcs between
// consecutive external vertices exist.
//
// Sign: with 1-based labels a -> b, (-1)^b if b > a and (-1)^(a+1) otherwise.
// The merged vertex keeps the smaller label. A chord between the two merged
// vertices becomes an external loop whose half-edge order follows the
// backbone: the half that sat at vertex i comes first.
SignedGraph contract_arc(const CanonicalGraph& g, int i);

// Number of contractible arcs: v_e on the circle (when v_e >= 2), v_e - 1 on
// the line.
int arc_count(const CanonicalGraph& g);

// Contract the regular edge at position `edge` of g.edges(). Odd parity uses
// the vertex rule along the edge direction, even parity (-1)^(alpha + 1 + v_e)
// with alpha the 1-based edge label. Throws NotContractibleError if both
// endpoints are external.
SignedGraph contract_edge(const CanonicalGraph& g, int edge);

bool is_regular_edge(const CanonicalGraph& g, int edge);

// The coboundary. The chain must be homogeneous in (k, m); the result is
// homogeneous in (k, m + 1).
Chain delta(const Chain& c);
Chain delta(const CanonicalGraph& g);

}  // namespace graphcoh
