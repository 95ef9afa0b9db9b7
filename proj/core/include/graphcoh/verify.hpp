#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphcoh/cohomology.hpp"

namespace graphcoh {

// Outcome of one law checked over a family of inputs. `witness` is the
// serialization of the first failing input, empty if everything passed.
struct AxiomResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::string witness;

    bool ok() const noexcept { return checked == passed; }
};

inline constexpr std::uint64_t default_seed = 0x5eed2024;

// Every basis graph with order <= kmax (all degrees), ordered by (k, m) and
// then basis order.
std::vector<CanonicalGraph> graphs_up_to(Backbone b, Parity p, int kmax, const EnumerationOptions& options = {});

// Complex laws, checked on every basis graph (or pair, triple) with total
// order <= kmax.
AxiomResult check_delta_squared(Backbone b, Parity p, int kmax, int mmax, const EnumerationOptions& options = {});
AxiomResult check_delta_linearity(Backbone b, Parity p, int kmax, std::uint64_t seed, const EnumerationOptions& options = {});
AxiomResult check_leibniz(Backbone b, Parity p, int kmax, const EnumerationOptions& options = {});
AxiomResult check_commutativity(Backbone b, Parity p, int kmax, const EnumerationOptions& options = {});
AxiomResult check_associativity(Backbone b, Parity p, int kmax, const EnumerationOptions& options = {});
AxiomResult check_unit(Backbone b, Parity p, int kmax, const EnumerationOptions& options = {});
AxiomResult check_unit_in_degree_zero(Backbone b, Parity p, int kmax, const EnumerationOptions& options = {});
AxiomResult check_grading_congruence(Backbone b, Parity p, int kmax, const EnumerationOptions& options = {});

// Hopf laws on line graphs with order <= kmax and at most `max_factors`
// primitive factors.
AxiomResult check_coassociativity(Parity p, int kmax, int max_factors, const EnumerationOptions& options = {});
AxiomResult check_counit(Parity p, int kmax, int max_factors, const EnumerationOptions& options = {});
AxiomResult check_coproduct_delta(Parity p, int kmax, int max_factors, const EnumerationOptions& options = {});
AxiomResult check_antipode_left(Parity p, int kmax, int max_factors, const EnumerationOptions& options = {});
AxiomResult check_antipode_right(Parity p, int kmax, int max_factors, const EnumerationOptions& options = {});
// Pairs with at most `max_factors` primitive factors each and k1 + k2 <= kmax.
AxiomResult check_compatibility(Parity p, int kmax, int max_factors, const EnumerationOptions& options = {});

struct VerifyOptions {
    int kmax = 3;
    std::uint64_t seed = default_seed;
    EnumerationOptions enumeration;
};

// The whole battery over all four complexes (Hopf laws on the line only).
std::vector<AxiomResult> verify_axioms(const VerifyOptions& options);

}  // namespace graphcoh
