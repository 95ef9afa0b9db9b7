#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graphcoh/chain.hpp"
#include "graphcoh/sparse_matrix.hpp"

namespace graphcoh {

struct EnumerationOptions {
    Limits limits = Limits::from_environment();
    // Shuffle the edge-slot order (and hence the edge labels and the
    // discovery order) with this seed.
    std::optional<std::uint64_t> seed;
    // Keep graphs in discovery order instead of sorting them.
    bool keep_discovery_order = false;
};

// All canonical generators of D^{k,m} (circle) or L^{k,m} (line).
struct GradedBasis {
    Backbone backbone = Backbone::circle;
    Parity parity = Parity::odd;
    int k = 0;
    int m = 0;
    std::vector<CanonicalGraph> graphs;
    std::map<CanonicalGraph, std::size_t> index;
    // raw labelled graphs generated on the way
    std::uint64_t raw_count = 0;

    std::size_t size() const noexcept { return graphs.size(); }
    std::optional<std::size_t> find(const CanonicalGraph& g) const;
};

// Vertex counts (v_e, v_i) that can carry graphs of grading (k, m).
std::vector<std::pair<int, int>> admissible_vertex_counts(int k, int m);

// Throws ResourceLimitError once more than limits.max_raw_graphs labelled
// graphs have been generated.
GradedBasis enumerate_basis(Backbone b, Parity p, int k, int m, const EnumerationOptions& options = {});

// Column c holds the coordinates of delta(src.graphs[c]) in dst. Throws
// BasisIncompleteError if an image graph is not in dst.
SparseExactMatrix delta_matrix(const GradedBasis& src, const GradedBasis& dst, const Limits& limits = Limits::from_environment());

struct CohomologyEntry {
    int k = 0;
    int m = 0;
    std::size_t chains = 0;    // dim of the chain space at (k, m)
    std::size_t rank_out = 0;  // rank of delta_{k,m}
    std::size_t rank_in = 0;   // rank of delta_{k,m-1}
    std::size_t dim = 0;       // chains - rank_out - rank_in
};

std::size_t cohomology_dim(Backbone b, Parity p, int k, int m, const EnumerationOptions& options = {});

// Entries for 0 <= k <= kmax, 0 <= m <= mmax; bases are shared between
// neighbouring degrees.
std::vector<CohomologyEntry> cohomology_table(Backbone b, Parity p, int kmax, int mmax,
                                              const EnumerationOptions& options = {},
                                              PivotStrategy strategy = PivotStrategy::sparsest);

// Kernel basis of delta_{k,m} as chains with integer coefficients.
std::vector<Chain> cocycle_representatives(Backbone b, Parity p, int k, int m, const EnumerationOptions& options = {});

// Coordinates of a chain in a basis; throws BasisIncompleteError if a graph
// is missing.
std::vector<Rational> coordinates(const Chain& c, const GradedBasis& basis);

}  // namespace graphcoh
