#include <doctest.h>

#include <random>
#include <sstream>

#include "graphcoh/sparse_matrix.hpp"
#include "oracles.hpp"

using namespace graphcoh;

namespace {

constexpr PivotStrategy strategies[] = {PivotStrategy::sparsest, PivotStrategy::column_order,
                                        PivotStrategy::reverse_column_order};

// Mostly-zero integer matrix with a planted rank deficiency: the last
// `dependent` columns are combinations of the others.
SparseExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t dependent)
{
    std::uniform_int_distribution<int> value(-4, 4), coin(0, 2);
    std::vector<std::vector<long>> dense(rows, std::vector<long>(cols, 0));
    const std::size_t free_cols = cols > dependent ? cols - dependent : 0;
    for (std::size_t c = 0; c < free_cols; ++c)
        for (std::size_t r = 0; r < rows; ++r)
            if (coin(rng) == 0) dense[r][c] = value(rng);
    for (std::size_t c = free_cols; c < cols && free_cols > 0; ++c)
        for (std::size_t src = 0; src < free_cols; ++src) {
            const long f = coin(rng) == 0 ? value(rng) : 0;
            for (std::size_t r = 0; r < rows; ++r) dense[r][c] += f * dense[r][src];
        }
    SparseExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (dense[r][c] != 0) m.add(r, c, dense[r][c]);
    return m;
}

bool annihilates(const SparseExactMatrix& m, const std::vector<Integer>& v)
{
    std::vector<Integer> out(m.rows(), 0);
    for (const Triplet& t : m.triplets()) out[t.row] += t.value * v[t.col];
    for (const Integer& x : out)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("identity and zero matrices")
{
    SparseExactMatrix id(5, 5);
    for (std::size_t i = 0; i < 5; ++i) id.add(i, i, 1);
    for (PivotStrategy s : strategies) {
        const RankKernel rk = rank_kernel(id, s);
        CHECK(rk.rank == 5);
        CHECK(rk.kernel.empty());
    }
    const SparseExactMatrix zero(3, 4);
    const RankKernel rk = rank_kernel(zero);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.size() == 4);
}

TEST_CASE("entries cancel to zero and are not stored")
{
    SparseExactMatrix m(2, 2);
    m.add(0, 1, 3);
    m.add(0, 1, -3);
    CHECK(m.nonzeros() == 0);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.is_zero());
}

TEST_CASE("triplet text format")
{
    SparseExactMatrix m(2, 3);
    m.add(1, 0, -2);
    m.add(0, 2, 5);
    std::ostringstream os;
    m.write_triplets(os);
    CHECK(os.str() == "2 3 2\n1 0 -2\n0 2 5\n");
}

TEST_CASE("matrix product")
{
    SparseExactMatrix a(2, 2), b(2, 1);
    a.add(0, 0, 1);
    a.add(0, 1, 2);
    a.add(1, 1, 3);
    b.add(0, 0, 4);
    b.add(1, 0, 5);
    const SparseExactMatrix c = a * b;
    CHECK(c.at(0, 0) == 14);
    CHECK(c.at(1, 0) == 15);
}

TEST_CASE("rank and kernel of random matrices agree with dense elimination")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 12), dep(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const SparseExactMatrix m = random_matrix(rng, rows, cols, dep(rng));
        const std::size_t expected = oracle::dense_rank(m);
        for (PivotStrategy s : strategies) {
            const RankKernel rk = rank_kernel(m, s);
            REQUIRE(rk.rank == expected);
            REQUIRE(rk.kernel.size() == cols - expected);
            SparseExactMatrix basis(cols, rk.kernel.size());
            for (std::size_t j = 0; j < rk.kernel.size(); ++j) {
                const std::vector<Integer>& v = rk.kernel[j];
                CHECK(annihilates(m, v));
                Integer content = 0;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[i].get_mpz_t());
                    if (v[i] != 0) basis.add(i, j, v[i]);
                }
                CHECK(content == 1);
            }
            CHECK(oracle::dense_rank(basis) == rk.kernel.size());
        }
    }
}

TEST_CASE("large entries stay exact")
{
    // Hilbert-like integer matrix: rows (i + j + 1)^-1 scaled by the lcm
    const std::size_t n = 7;
    SparseExactMatrix m(n, n);
    Integer l = 1;
    for (unsigned d = 1; d <= 2 * n; ++d) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.add(i, j, Integer(l / Integer(static_cast<unsigned long>(i + j + 1))));
    for (PivotStrategy s : strategies) CHECK(rank(m, s) == n);
}
