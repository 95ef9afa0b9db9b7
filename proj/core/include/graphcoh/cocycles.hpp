#pragma once

#include <cstdint>
#include <vector>

#include "graphcoh/chain.hpp"

namespace graphcoh {

// Two crossing chords on the circle: v_e = 4, edges 1-3 and 2-4 (even parity).
RawGraph crossing_chords();

// l disjoint tripods on consecutive arcs of the circle (even parity): 3l
// external and l internal vertices, internal vertex j joined to the external
// vertices 3j-2, 3j-1, 3j. Edges are labelled tripod by tripod.
RawGraph gamma_raw(int l);
CanonicalGraph build_gamma_l(int l);

// 1/4 X - 1/3 T in D_e^{2,0}. The relative sign of the two terms depends on
// the chosen decorations; the sign that makes the chain closed is taken and
// any other outcome throws NontrivialityViolation.
Chain build_psi();

// Psi^l by iterated shuffle product (Psi^(l-1) * Psi).
Chain psi_power(int l);

// Coefficient of g in c, where g may be in any labelling.
Rational coefficient_of(const Chain& c, const RawGraph& g);
Rational coefficient_of(const Chain& c, const CanonicalGraph& g);

struct Prop4Entry {
    int l = 0;
    bool closed = false;  // delta(Psi^l) == 0
    Rational coefficient;  // of Gamma_l in Psi^l
    std::size_t terms = 0;  // graphs in Psi^l
    // raw shuffle terms of Gamma_{l-1} * Gamma_1 that reduce to +-Gamma_l,
    // and the number of distinct position sets among them
    std::size_t contributing_shuffles = 0;
    std::size_t contributing_patterns = 0;
    bool contributions_same_sign = false;
    // every Gamma_l contribution in the multinomial expansion of Psi^l
    // comes from the pure tripod product
    bool only_tripod_provenance = false;
    Rational tripod_product_coefficient;  // of Gamma_l in Gamma_1^l
    bool no_lower_degree = false;  // no graphs of grading (2l, -1)

    bool nontrivial() const { return closed && coefficient != 0 && no_lower_degree; }
};

struct Prop4Report {
    std::vector<Prop4Entry> entries;
    std::vector<Chain> powers;  // Psi^1 .. Psi^lmax
};

// Throws NontrivialityViolation if any level fails; `strict = false` returns
// the report instead.
Prop4Report prop4_report(int lmax, bool strict = true);

}  // namespace graphcoh
