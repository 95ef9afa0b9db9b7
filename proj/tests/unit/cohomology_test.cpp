#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "graphcoh/cocycles.hpp"
#include "graphcoh/cohomology.hpp"
#include "oracles.hpp"

using namespace graphcoh;

namespace {

RawGraph make(Backbone b, Parity p, int v_e, int v_i, std::vector<Edge> edges)
{
    return RawGraph{b, p, v_e, v_i, std::move(edges), {}};
}

std::set<CanonicalGraph> oracle_basis(Backbone b, Parity p, int k, int m)
{
    std::set<CanonicalGraph> out;
    for (const RawGraph& g : oracle::raw_graphs(b, p, k, m)) {
        const SignedGraph s = canonicalize(g);
        if (!s.is_zero()) out.insert(s.graph());
    }
    return out;
}

struct SizeGolden {
    Backbone b;
    Parity p;
    int k;
    std::vector<std::size_t> sizes;  // m = 0, 1, ...
};

// chain-space dimensions, checked against the exhaustive generator below
const SizeGolden size_goldens[] = {
    {Backbone::circle, Parity::odd, 1, {1, 1}},
    {Backbone::circle, Parity::odd, 2, {3, 2, 1}},
    {Backbone::circle, Parity::odd, 3, {10, 16, 13, 7}},
    {Backbone::circle, Parity::even, 1, {0, 1}},
    {Backbone::circle, Parity::even, 2, {2, 2, 2}},
    {Backbone::circle, Parity::even, 3, {10, 17, 13, 7}},
    {Backbone::line, Parity::odd, 1, {1, 1}},
    {Backbone::line, Parity::odd, 2, {4, 6, 3}},
    {Backbone::line, Parity::odd, 3, {30, 68, 54, 17}},
    {Backbone::line, Parity::even, 1, {1, 1}},
    {Backbone::line, Parity::even, 2, {4, 6, 3}},
    {Backbone::line, Parity::even, 3, {30, 68, 54, 17}},
};

struct DimGolden {
    Backbone b;
    Parity p;
    std::vector<std::vector<std::size_t>> dims;  // [k][m], k <= 3, m <= 2
};

const DimGolden dim_goldens[] = {
    {Backbone::circle, Parity::odd, {{1, 0, 0}, {0, 0, 0}, {1, 0, 1}, {1, 0, 0}}},
    {Backbone::circle, Parity::even, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}}},
    {Backbone::line, Parity::odd, {{1, 0, 0}, {0, 0, 0}, {1, 0, 0}, {1, 1, 0}}},
    {Backbone::line, Parity::even, {{1, 0, 0}, {0, 0, 0}, {1, 0, 0}, {1, 1, 0}}},
};

}  // namespace

TEST_CASE("degree (0, 0) holds only the unit")
{
    for (Backbone b : {Backbone::circle, Backbone::line})
        for (Parity p : {Parity::odd, Parity::even}) {
            const GradedBasis basis = enumerate_basis(b, p, 0, 0);
            REQUIRE(basis.size() == 1);
            CHECK(basis.graphs[0].is_unit());
        }
}

TEST_CASE("the odd circle in order 1, degree 0 is spanned by the chord")
{
    const GradedBasis basis = enumerate_basis(Backbone::circle, Parity::odd, 1, 0);
    REQUIRE(basis.size() == 1);
    CHECK(basis.graphs[0] == canonicalize(make(Backbone::circle, Parity::odd, 2, 0, {{0, 1}})).graph());
}

TEST_CASE("the even circle in order 2, degree 0 is spanned by crossing chords and the tripod")
{
    const GradedBasis basis = enumerate_basis(Backbone::circle, Parity::even, 2, 0);
    const std::set<CanonicalGraph> got(basis.graphs.begin(), basis.graphs.end());
    const std::set<CanonicalGraph> expected{canonicalize(crossing_chords()).graph(), build_gamma_l(1)};
    CHECK(got == expected);
}

TEST_CASE("enumeration matches the exhaustive generator")
{
    for (Backbone b : {Backbone::circle, Backbone::line})
        for (Parity p : {Parity::odd, Parity::even})
            for (int k = 0; k <= 3; ++k)
                for (int m = 0; m <= 3; ++m) {
                    const GradedBasis basis = enumerate_basis(b, p, k, m);
                    const std::set<CanonicalGraph> got(basis.graphs.begin(), basis.graphs.end());
                    CHECK(got.size() == basis.size());
                    CHECK(got == oracle_basis(b, p, k, m));
                    for (const CanonicalGraph& g : basis.graphs) {
                        CHECK(g.grading().k == k);
                        CHECK(g.grading().m == m);
                    }
                }
}

TEST_CASE("chain-space dimensions")
{
    for (const SizeGolden& g : size_goldens)
        for (std::size_t m = 0; m < g.sizes.size(); ++m) {
            CAPTURE(to_string(g.b));
            CAPTURE(to_string(g.p));
            CAPTURE(g.k);
            CAPTURE(m);
            CHECK(enumerate_basis(g.b, g.p, g.k, static_cast<int>(m)).size() == g.sizes[m]);
        }
}

TEST_CASE("bases are sorted and indexed")
{
    const GradedBasis basis = enumerate_basis(Backbone::line, Parity::odd, 3, 1);
    CHECK(std::is_sorted(basis.graphs.begin(), basis.graphs.end()));
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis.find(basis.graphs[i]) == i);
}

TEST_CASE("admissible vertex counts")
{
    using V = std::vector<std::pair<int, int>>;
    CHECK(admissible_vertex_counts(0, 0) == V{{0, 0}});
    CHECK(admissible_vertex_counts(2, 0) == V{{4, 0}, {3, 1}, {2, 2}, {1, 3}});
    CHECK(admissible_vertex_counts(4, -1).empty());
}

TEST_CASE("delta matrices of the smallest degrees")
{
    const GradedBasis unit = enumerate_basis(Backbone::circle, Parity::odd, 0, 0);
    const GradedBasis above_unit = enumerate_basis(Backbone::circle, Parity::odd, 0, 1);
    const SparseExactMatrix z = delta_matrix(unit, above_unit);
    CHECK(z.cols() == 1);
    CHECK(z.is_zero());

    // delta(chord) = 2 * loop, from the two arc contractions
    const GradedBasis src = enumerate_basis(Backbone::circle, Parity::odd, 1, 0);
    const GradedBasis dst = enumerate_basis(Backbone::circle, Parity::odd, 1, 1);
    const SparseExactMatrix d = delta_matrix(src, dst);
    REQUIRE(d.rows() == 1);
    REQUIRE(d.cols() == 1);
    CHECK(d.at(0, 0) == 2);
}

TEST_CASE("consecutive delta matrices compose to zero")
{
    for (Backbone b : {Backbone::circle, Backbone::line})
        for (Parity p : {Parity::odd, Parity::even})
            for (int k = 1; k <= 3; ++k) {
                const GradedBasis b0 = enumerate_basis(b, p, k, 0);
                const GradedBasis b1 = enumerate_basis(b, p, k, 1);
                const GradedBasis b2 = enumerate_basis(b, p, k, 2);
                CHECK((delta_matrix(b1, b2) * delta_matrix(b0, b1)).is_zero());
            }
}

TEST_CASE("cohomology dimensions")
{
    for (const DimGolden& g : dim_goldens) {
        const auto table = cohomology_table(g.b, g.p, 3, 2);
        for (const CohomologyEntry& e : table) {
            CAPTURE(to_string(g.b));
            CAPTURE(to_string(g.p));
            CAPTURE(e.k);
            CAPTURE(e.m);
            CHECK(e.dim == g.dims[e.k][e.m]);
            CHECK(e.dim == e.chains - e.rank_out - e.rank_in);
        }
    }
}

TEST_CASE("cohomology dimensions from dense ranks")
{
    for (const DimGolden& g : dim_goldens)
        for (int k = 0; k <= 3; ++k) {
            std::vector<GradedBasis> bases;
            for (int m = 0; m <= 3; ++m) bases.push_back(enumerate_basis(g.b, g.p, k, m));
            for (int m = 0; m <= 2; ++m) {
                const std::size_t out = oracle::dense_rank(delta_matrix(bases[m], bases[m + 1]));
                const std::size_t in = m == 0 ? 0 : oracle::dense_rank(delta_matrix(bases[m - 1], bases[m]));
                CHECK(bases[m].size() - out - in == g.dims[k][m]);
            }
        }
}

TEST_CASE("dimensions do not depend on the enumeration order")
{
    for (const DimGolden& g : dim_goldens)
        for (std::uint64_t seed : {1u, 77u, 4242u}) {
            EnumerationOptions options;
            options.seed = seed;
            options.keep_discovery_order = true;
            for (const CohomologyEntry& e : cohomology_table(g.b, g.p, 3, 2, options))
                CHECK(e.dim == g.dims[e.k][e.m]);
        }
}

TEST_CASE("the kernel in order 2, degree 0 of the even circle contains Psi")
{
    const std::vector<Chain> kernel = cocycle_representatives(Backbone::circle, Parity::even, 2, 0);
    REQUIRE(kernel.size() == 1);
    const Chain psi = build_psi();
    const CanonicalGraph x = canonicalize(crossing_chords()).graph();
    const Rational scale = psi.coefficient(x) / kernel[0].coefficient(x);
    CHECK(kernel[0].scaled(scale) == psi);
}

TEST_CASE("coordinates")
{
    const GradedBasis basis = enumerate_basis(Backbone::circle, Parity::even, 2, 0);
    const Chain psi = build_psi();
    const std::vector<Rational> xs = coordinates(psi, basis);
    REQUIRE(xs.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(xs[i] == psi.coefficient(basis.graphs[i]));

    const GradedBasis other = enumerate_basis(Backbone::circle, Parity::even, 2, 1);
    CHECK_THROWS_AS(coordinates(psi, other), BasisIncompleteError);
}

TEST_CASE("resource guards")
{
    EnumerationOptions tight;
    tight.limits.max_raw_graphs = 10;
    CHECK_THROWS_AS(enumerate_basis(Backbone::line, Parity::odd, 3, 1, tight), ResourceLimitError);

    EnumerationOptions few_internal;
    few_internal.limits.max_internal_vertices = 1;
    CHECK_THROWS_AS(enumerate_basis(Backbone::circle, Parity::odd, 3, 0, few_internal), ResourceLimitError);

    Limits small;
    small.max_matrix_dim = 5;
    const GradedBasis src = enumerate_basis(Backbone::line, Parity::odd, 3, 0);
    const GradedBasis dst = enumerate_basis(Backbone::line, Parity::odd, 3, 1);
    CHECK_THROWS_AS(delta_matrix(src, dst, small), ResourceLimitError);

    CHECK_THROWS_AS(enumerate_basis(Backbone::line, Parity::odd, -1, 0), ValidationError);
}

TEST_CASE("raw-graph limit is read from the environment")
{
    ::setenv("GRAPHCOH_MAX_RAW_GRAPHS", "7", 1);
    ::setenv("GRAPHCOH_MAX_MATRIX_DIM", "9", 1);
    const Limits l = Limits::from_environment();
    ::unsetenv("GRAPHCOH_MAX_RAW_GRAPHS");
    ::unsetenv("GRAPHCOH_MAX_MATRIX_DIM");
    CHECK(l.max_raw_graphs == 7);
    CHECK(l.max_matrix_dim == 9);
}
