#include "graphcoh/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "graphcoh/complex.hpp"

namespace graphcoh {

std::optional<std::size_t> GradedBasis::find(const CanonicalGraph& g) const
{
    auto it = index.find(g);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, int>> admissible_vertex_counts(int k, int m)
{
    std::vector<std::pair<int, int>> out;
    if (k < 0 || m < 0) return out;
    // e = k + v_i and v_e = 2k - v_i - m; a graph without external vertices
    // has no vertices at all, which forces the unit graph
    for (int v_i = 0; 2 * k - v_i - m >= 0; ++v_i) {
        const int v_e = 2 * k - v_i - m;
        if (v_e == 0 && !(v_i == 0 && k == 0)) continue;
        out.emplace_back(v_e, v_i);
    }
    return out;
}

namespace {

class Enumerator {
public:
    Enumerator(Backbone b, Parity p, int v_e, int v_i, int e, const EnumerationOptions& options,
               std::uint64_t& raw_count)
        : backbone_(b), parity_(p), v_e_(v_e), v_i_(v_i), e_(e), options_(options), raw_count_(raw_count)
    {
        const int n = v_e + v_i;
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v)
                if (u != v || u < v_e) slots_.emplace_back(u, v);
        if (options.seed) {
            std::mt19937_64 rng(*options.seed ^ (static_cast<std::uint64_t>(v_e) << 32) ^ static_cast<std::uint64_t>(v_i));
            std::shuffle(slots_.begin(), slots_.end(), rng);
        }
        degree_.assign(n, 0);
    }

    template <class Sink>
    void run(Sink&& sink)
    {
        chosen_.clear();
        recurse(0, sink);
    }

private:
    int min_degree(int x) const { return x < v_e_ ? 1 : 3; }

    bool feasible(std::size_t next_slot) const
    {
        const int remaining = e_ - static_cast<int>(chosen_.size());
        if (static_cast<std::size_t>(remaining) > slots_.size() - next_slot) return false;
        int deficit = 0;
        for (int x = 0; x < static_cast<int>(degree_.size()); ++x) deficit += std::max(0, min_degree(x) - degree_[x]);
        return deficit <= 2 * remaining;
    }

    bool attached_to_backbone() const
    {
        const int n = v_e_ + v_i_;
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t s : chosen_) parent[find(slots_[s].first)] = find(slots_[s].second);
        std::vector<char> has_external(n, 0);
        for (int x = 0; x < v_e_; ++x) has_external[find(x)] = 1;
        for (int x = v_e_; x < n; ++x)
            if (!has_external[find(x)]) return false;
        return true;
    }

    template <class Sink>
    void recurse(std::size_t next_slot, Sink& sink)
    {
        if (static_cast<int>(chosen_.size()) == e_) {
            for (int x = 0; x < static_cast<int>(degree_.size()); ++x)
                if (degree_[x] < min_degree(x)) return;
            if (!attached_to_backbone()) return;
            if (++raw_count_ > options_.limits.max_raw_graphs)
                throw ResourceLimitError("enumeration exceeded " + std::to_string(options_.limits.max_raw_graphs) +
                                         " raw graphs");
            RawGraph g;
            g.backbone = backbone_;
            g.parity = parity_;
            g.v_e = v_e_;
            g.v_i = v_i_;
            for (std::size_t s : chosen_) g.edges.push_back(Edge{slots_[s].first, slots_[s].second, false});
            sink(g);
            return;
        }
        if (!feasible(next_slot)) return;
        const auto [u, v] = slots_[next_slot];
        chosen_.push_back(next_slot);
        ++degree_[u];
        ++degree_[v];
        recurse(next_slot + 1, sink);
        --degree_[u];
        --degree_[v];
        chosen_.pop_back();
        recurse(next_slot + 1, sink);
    }

    Backbone backbone_;
    Parity parity_;
    int v_e_, v_i_, e_;
    const EnumerationOptions& options_;
    std::uint64_t& raw_count_;
    std::vector<std::pair<int, int>> slots_;
    std::vector<int> degree_;
    std::vector<std::size_t> chosen_;
};

void check_matrix_dim(std::size_t rows, std::size_t cols, const Limits& limits)
{
    if (rows > limits.max_matrix_dim || cols > limits.max_matrix_dim)
        throw ResourceLimitError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " exceeds the " +
                                 std::to_string(limits.max_matrix_dim) + " dimension limit");
}

}  // namespace

GradedBasis enumerate_basis(Backbone b, Parity p, int k, int m, const EnumerationOptions& options)
{
    if (k < 0 || m < 0) throw ValidationError("basis grading needs k, m >= 0");
    GradedBasis basis;
    basis.backbone = b;
    basis.parity = p;
    basis.k = k;
    basis.m = m;
    std::vector<CanonicalGraph> found;
    for (const auto& [v_e, v_i] : admissible_vertex_counts(k, m)) {
        if (v_i > options.limits.max_internal_vertices)
            throw ResourceLimitError("basis needs " + std::to_string(v_i) + " internal vertices, limit is " +
                                     std::to_string(options.limits.max_internal_vertices));
        Enumerator en(b, p, v_e, v_i, k + v_i, options, basis.raw_count);
        en.run([&](const RawGraph& g) {
            const SignedGraph s = canonicalize(g);
            if (s.is_zero()) return;
            if (basis.index.emplace(s.graph(), found.size()).second) found.push_back(s.graph());
        });
    }
    if (!options.keep_discovery_order) std::sort(found.begin(), found.end());
    basis.graphs = std::move(found);
    for (std::size_t i = 0; i < basis.graphs.size(); ++i) basis.index[basis.graphs[i]] = i;
    return basis;
}

std::vector<Rational> coordinates(const Chain& c, const GradedBasis& basis)
{
    std::vector<Rational> out(basis.size());
    for (const auto& [g, coefficient] : c) {
        const auto pos = basis.find(g);
        if (!pos)
            throw BasisIncompleteError("graph of grading (" + std::to_string(g.grading().k) + ", " +
                                       std::to_string(g.grading().m) + ") missing from the basis at (" +
                                       std::to_string(basis.k) + ", " + std::to_string(basis.m) + ")");
        out[*pos] = coefficient;
    }
    return out;
}

SparseExactMatrix delta_matrix(const GradedBasis& src, const GradedBasis& dst, const Limits& limits)
{
    if (src.backbone != dst.backbone || src.parity != dst.parity || src.k != dst.k || dst.m != src.m + 1)
        throw ValidationError("delta_matrix needs bases at (k, m) and (k, m + 1) of the same complex");
    check_matrix_dim(dst.size(), src.size(), limits);
    SparseExactMatrix out(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        for (const auto& [g, coefficient] : delta(src.graphs[c])) {
            const auto row = dst.find(g);
            if (!row)
                throw BasisIncompleteError("delta of basis graph " + std::to_string(c) +
                                           " leaves the enumerated basis at (" + std::to_string(dst.k) + ", " +
                                           std::to_string(dst.m) + ")");
            // coefficients of delta of a single graph are integers
            out.add(*row, c, coefficient.get_num());
        }
    }
    return out;
}

std::vector<CohomologyEntry> cohomology_table(Backbone b, Parity p, int kmax, int mmax, const EnumerationOptions& options,
                                              PivotStrategy strategy)
{
    std::vector<CohomologyEntry> out;
    for (int k = 0; k <= kmax; ++k) {
        GradedBasis current = enumerate_basis(b, p, k, 0, options);
        std::size_t rank_in = 0;
        for (int m = 0; m <= mmax; ++m) {
            GradedBasis next = enumerate_basis(b, p, k, m + 1, options);
            const std::size_t rank_out = rank(delta_matrix(current, next, options.limits), strategy);
            out.push_back(CohomologyEntry{k, m, current.size(), rank_out, rank_in, current.size() - rank_out - rank_in});
            rank_in = rank_out;
            current = std::move(next);
        }
    }
    return out;
}

std::size_t cohomology_dim(Backbone b, Parity p, int k, int m, const EnumerationOptions& options)
{
    const GradedBasis here = enumerate_basis(b, p, k, m, options);
    const GradedBasis above = enumerate_basis(b, p, k, m + 1, options);
    const std::size_t rank_out = rank(delta_matrix(here, above, options.limits));
    std::size_t rank_in = 0;
    if (m > 0) {
        const GradedBasis below = enumerate_basis(b, p, k, m - 1, options);
        rank_in = rank(delta_matrix(below, here, options.limits));
    }
    return here.size() - rank_out - rank_in;
}

std::vector<Chain> cocycle_representatives(Backbone b, Parity p, int k, int m, const EnumerationOptions& options)
{
    const GradedBasis here = enumerate_basis(b, p, k, m, options);
    const GradedBasis above = enumerate_basis(b, p, k, m + 1, options);
    const RankKernel rk = rank_kernel(delta_matrix(here, above, options.limits));
    std::vector<Chain> out;
    for (const auto& vector : rk.kernel) {
        Chain c;
        for (std::size_t i = 0; i < vector.size(); ++i)
            if (vector[i] != 0) c.add(here.graphs[i], Rational(vector[i]));
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace graphcoh
