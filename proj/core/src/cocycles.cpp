#include "graphcoh/cocycles.hpp"

#include <set>
#include <string>

#include "graphcoh/algebra.hpp"
#include "graphcoh/cohomology.hpp"
#include "graphcoh/complex.hpp"

namespace graphcoh {

RawGraph crossing_chords()
{
    RawGraph g;
    g.backbone = Backbone::circle;
    g.parity = Parity::even;
    g.v_e = 4;
    g.edges = {Edge{0, 2}, Edge{1, 3}};
    return g;
}

RawGraph gamma_raw(int l)
{
    if (l < 1) throw ValidationError("Gamma_l needs l >= 1, got " + std::to_string(l));
    RawGraph g;
    g.backbone = Backbone::circle;
    g.parity = Parity::even;
    g.v_e = 3 * l;
    g.v_i = l;
    for (int j = 0; j < l; ++j)
        for (int t = 0; t < 3; ++t) g.edges.push_back(Edge{3 * j + t, 3 * l + j});
    return g;
}

CanonicalGraph build_gamma_l(int l)
{
    const SignedGraph s = canonicalize(gamma_raw(l));
    if (s.is_zero()) throw NontrivialityViolation("Gamma_" + std::to_string(l) + " reduces to zero");
    return s.graph();
}

Chain build_psi()
{
    const SignedGraph x = canonicalize(crossing_chords());
    const SignedGraph t = canonicalize(gamma_raw(1));
    if (x.is_zero() || t.is_zero()) throw NontrivialityViolation("a building block of Psi reduces to zero");
    for (int relative : {1, -1}) {
        Chain psi;
        psi.add(x, make_rational(relative, 4));
        psi.add(t, make_rational(-1, 3));
        if (delta(psi).is_zero()) return psi;
    }
    throw NontrivialityViolation("no sign choice makes 1/4 X - 1/3 T closed");
}

Chain psi_power(int l)
{
    if (l < 1) throw ValidationError("psi_power needs l >= 1, got " + std::to_string(l));
    const Chain psi = build_psi();
    Chain power = psi;
    for (int i = 2; i <= l; ++i) power = shuffle_product(power, psi);
    return power;
}

Rational coefficient_of(const Chain& c, const RawGraph& g)
{
    const SignedGraph s = canonicalize(g);
    if (s.is_zero()) return 0;
    return c.coefficient(s.graph()) * s.sign();
}

Rational coefficient_of(const Chain& c, const CanonicalGraph& g) { return c.coefficient(g); }

namespace {

Prop4Entry analyse_level(int l, const Chain& power, const Chain& psi)
{
    Prop4Entry entry;
    entry.l = l;
    entry.closed = delta(power).is_zero();
    const CanonicalGraph target = build_gamma_l(l);
    entry.coefficient = coefficient_of(power, gamma_raw(l));
    entry.terms = power.size();
    entry.no_lower_degree = admissible_vertex_counts(2 * l, -1).empty();

    if (l >= 2) {
        std::set<std::vector<int>> patterns;
        std::set<int> signs;
        for (const ShuffleTerm& term : raw_shuffle_terms(build_gamma_l(l - 1), build_gamma_l(1))) {
            const SignedGraph s = canonicalize(term.graph);
            if (s.is_zero() || !(s.graph() == target)) continue;
            ++entry.contributing_shuffles;
            patterns.insert(term.second_positions);
            signs.insert(term.sign * s.sign());
        }
        entry.contributing_patterns = patterns.size();
        entry.contributions_same_sign = signs.size() == 1;
    } else {
        entry.contributing_shuffles = 1;
        entry.contributing_patterns = 1;
        entry.contributions_same_sign = true;
    }

    // multinomial expansion of Psi^l over words in {X, T}
    Chain x_part, t_part;
    for (const auto& [g, c] : psi) (g.v_i() == 0 ? x_part : t_part).add(g, c);
    Rational from_tripods = 0;
    bool others_vanish = true;
    for (unsigned word = 0; word < (1u << l); ++word) {
        Chain product;
        for (int i = 0; i < l; ++i) {
            const Chain& factor = (word >> i & 1u) ? x_part : t_part;
            product = i == 0 ? factor : shuffle_product(product, factor);
        }
        const Rational c = coefficient_of(product, target);
        if (word == 0) {
            from_tripods = c;
        } else if (c != 0) {
            others_vanish = false;
        }
    }
    entry.tripod_product_coefficient = from_tripods;
    entry.only_tripod_provenance = others_vanish && from_tripods == entry.coefficient;
    return entry;
}

}  // namespace

Prop4Report prop4_report(int lmax, bool strict)
{
    if (lmax < 1) throw ValidationError("prop4 needs lmax >= 1");
    Prop4Report report;
    const Chain psi = build_psi();
    Chain power = psi;
    for (int l = 1; l <= lmax; ++l) {
        if (l > 1) power = shuffle_product(power, psi);
        report.powers.push_back(power);
        report.entries.push_back(analyse_level(l, power, psi));
        const Prop4Entry& e = report.entries.back();
        if (strict && !e.nontrivial())
            throw NontrivialityViolation("Psi^" + std::to_string(l) + " fails: closed=" + (e.closed ? "yes" : "no") +
                                         " coefficient=" + e.coefficient.get_str());
    }
    return report;
}

}  // namespace graphcoh
