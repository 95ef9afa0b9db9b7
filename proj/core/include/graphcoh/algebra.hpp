#pragma once

#include <map>
#include <vector>

#include "graphcoh/chain.hpp"

namespace graphcoh {

// One (V1, V2)-shuffle of two graphs before reduction: the combined graph in
// the product numbering (g1's labels kept, g2's offset) and the global sign
// (-1)^lambda.
struct ShuffleTerm {
    RawGraph graph;
    int sign = 1;
    // backbone positions taken by g2's external vertices, ascending
    std::vector<int> second_positions;
};

// lambda(g1, g2) = v_e(g2) * e(g1) in even parity, 0 in odd parity.
int shuffle_sign_exponent(const CanonicalGraph& g1, const CanonicalGraph& g2);

// Every (V1, V2)-shuffle term. Line: all interleavings of the two linear
// orders. Circle: g1's first external vertex is fixed at the first position
// and g2's vertices are placed in every cyclically compatible way; each
// placement is a separate term.
std::vector<ShuffleTerm> raw_shuffle_terms(const CanonicalGraph& g1, const CanonicalGraph& g2);

Chain shuffle_product(const CanonicalGraph& g1, const CanonicalGraph& g2);
Chain shuffle_product(const Chain& a, const Chain& b);

// Coproduct on line graphs: signed sum over cuts between primitive factors.
TensorChain coproduct(const CanonicalGraph& g);
TensorChain coproduct(const Chain& c);

// Coefficient of the unit graph.
Rational counit(const Chain& c);

// Convolution inverse of the identity on line graphs.
class Antipode {
public:
    const Chain& operator()(const CanonicalGraph& g);
    Chain operator()(const Chain& c);

private:
    std::map<CanonicalGraph, Chain> memo_;
};
Chain antipode(const Chain& c);

// Tensor helpers used by the Hopf axioms.
TensorChain tensor(const Chain& a, const Chain& b);
// product on L (x) L with the Koszul sign (-1)^{|a2| |b1|}
TensorChain tensor_product(const TensorChain& a, const TensorChain& b);
// d(a (x) b) = da (x) b + (-1)^|a| a (x) db
TensorChain delta(const TensorChain& t);
// multiplication L (x) L -> L
Chain multiply(const TensorChain& t);
TripleTensorChain coproduct_left(const TensorChain& t);   // (Delta (x) id)
TripleTensorChain coproduct_right(const TensorChain& t);  // (id (x) Delta)

}  // namespace graphcoh
