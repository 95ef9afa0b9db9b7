#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace oracle {

int inversion_sign(const std::vector<int>& perm)
{
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

bool attached(const RawGraph& g)
{
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adjacent(n);
    for (const Edge& e : g.edges) {
        adjacent[e.u].push_back(e.v);
        adjacent[e.v].push_back(e.u);
    }
    std::vector<char> reached(n, 0);
    std::queue<int> queue;
    for (int x = 0; x < g.v_e; ++x) {
        reached[x] = 1;
        queue.push(x);
    }
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop();
        for (int y : adjacent[x])
            if (!reached[y]) {
                reached[y] = 1;
                queue.push(y);
            }
    }
    return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

}  // namespace

std::vector<RawGraph> raw_graphs(Backbone b, Parity p, int k, int m)
{
    std::vector<RawGraph> out;
    for (int v_i = 0; v_i <= 2 * k; ++v_i) {
        const int e = k + v_i;
        const int v_e = 2 * e - m - 3 * v_i;
        if (v_e < 0) continue;
        const int n = v_e + v_i;
        if (n == 0) {
            if (e == 0) out.push_back(RawGraph{b, p, 0, 0, {}, {}});
            continue;
        }
        std::vector<std::pair<int, int>> slots;
        for (int x = 0; x < v_e; ++x) slots.emplace_back(x, x);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);

        std::vector<int> degree(n, 0);
        std::vector<int> picked;
        auto need = [&](int x) { return x < v_e ? 1 : 3; };
        std::function<void(std::size_t)> go = [&](std::size_t next) {
            const int left = e - static_cast<int>(picked.size());
            int missing = 0;
            for (int x = 0; x < n; ++x) missing += std::max(0, need(x) - degree[x]);
            if (missing > 2 * left) return;
            if (left == 0) {
                RawGraph g{b, p, v_e, v_i, {}, {}};
                for (int s : picked) g.edges.push_back(Edge{slots[s].first, slots[s].second, false});
                if (attached(g)) out.push_back(std::move(g));
                return;
            }
            if (slots.size() - next < static_cast<std::size_t>(left)) return;
            for (std::size_t s = next; s < slots.size(); ++s) {
                picked.push_back(static_cast<int>(s));
                ++degree[slots[s].first];
                ++degree[slots[s].second];
                go(s + 1);
                --degree[slots[s].first];
                --degree[slots[s].second];
                picked.pop_back();
            }
        };
        go(0);
    }
    return out;
}

bool is_zero_by_automorphism(const RawGraph& g)
{
    const int n = g.vertex_count();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& a = g.edges[i];
        if (a.is_loop() && a.u >= g.v_e) return true;
        for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
            const Edge& c = g.edges[j];
            if (std::minmax(a.u, a.v) == std::minmax(c.u, c.v)) return true;
        }
    }
    auto find_edge = [&](int u, int v) -> int {
        for (std::size_t j = 0; j < g.edges.size(); ++j)
            if (std::minmax(g.edges[j].u, g.edges[j].v) == std::minmax(u, v)) return static_cast<int>(j);
        return -1;
    };
    const int rotations = g.backbone == Backbone::circle ? std::max(g.v_e, 1) : 1;
    std::vector<int> internal(g.v_i);
    std::iota(internal.begin(), internal.end(), 0);
    do {
        for (int r = 0; r < rotations; ++r) {
            std::vector<int> phi(n);
            for (int x = 0; x < g.v_e; ++x) phi[x] = (x + r) % g.v_e;
            for (int j = 0; j < g.v_i; ++j) phi[g.v_e + j] = g.v_e + internal[j];
            std::vector<int> edge_map(g.edges.size());
            int sign = 1;
            bool automorphism = true;
            for (std::size_t i = 0; i < g.edges.size() && automorphism; ++i) {
                const Edge& e = g.edges[i];
                const int j = find_edge(phi[e.u], phi[e.v]);
                if (j < 0) {
                    automorphism = false;
                    break;
                }
                edge_map[i] = j;
                if (g.parity == Parity::odd) {
                    const Edge& image = g.edges[j];
                    if (e.is_loop()) {
                        if (image.halves_swapped != e.halves_swapped) sign = -sign;
                    } else if (image.u != phi[e.u]) {
                        sign = -sign;
                    }
                }
            }
            if (!automorphism) continue;
            if (g.parity == Parity::odd) {
                sign *= inversion_sign(phi);
            } else {
                sign *= inversion_sign(std::vector<int>(phi.begin(), phi.begin() + g.v_e));
                sign *= inversion_sign(edge_map);
            }
            if (sign < 0) return true;
        }
    } while (std::next_permutation(internal.begin(), internal.end()));
    return false;
}

Relabelled random_symmetry(const CanonicalGraph& g, std::mt19937_64& rng)
{
    const RawGraph base = g.raw();
    const int n = base.vertex_count();
    std::vector<int> phi(n);
    const int r = (g.backbone() == Backbone::circle && g.v_e() > 0)
                      ? std::uniform_int_distribution<int>(0, g.v_e() - 1)(rng)
                      : 0;
    for (int x = 0; x < g.v_e(); ++x) phi[x] = (x + r) % g.v_e();
    std::vector<int> internal(g.v_i());
    std::iota(internal.begin(), internal.end(), 0);
    std::shuffle(internal.begin(), internal.end(), rng);
    for (int j = 0; j < g.v_i(); ++j) phi[g.v_e() + j] = g.v_e() + internal[j];

    Relabelled out;
    out.graph = RawGraph{base.backbone, base.parity, base.v_e, base.v_i, {}, {}};
    std::bernoulli_distribution coin(0.5);
    if (g.parity() == Parity::odd) {
        out.sign = inversion_sign(phi);
        for (const Edge& e : base.edges) {
            Edge image{phi[e.u], phi[e.v], e.halves_swapped};
            if (coin(rng)) {
                if (e.is_loop()) {
                    image.halves_swapped = !image.halves_swapped;
                } else {
                    std::swap(image.u, image.v);
                }
                out.sign = -out.sign;
            }
            out.graph.edges.push_back(image);
        }
        std::shuffle(out.graph.edges.begin(), out.graph.edges.end(), rng);
    } else {
        out.sign = inversion_sign(std::vector<int>(phi.begin(), phi.begin() + g.v_e()));
        std::vector<int> tau(base.edges.size());
        std::iota(tau.begin(), tau.end(), 0);
        std::shuffle(tau.begin(), tau.end(), rng);
        out.sign *= inversion_sign(tau);
        out.graph.edges.resize(base.edges.size());
        for (std::size_t i = 0; i < base.edges.size(); ++i) {
            Edge image{phi[base.edges[i].u], phi[base.edges[i].v], false};
            if (coin(rng)) std::swap(image.u, image.v);
            out.graph.edges[tau[i]] = image;
        }
    }
    return out;
}

ShuffleOracle shuffle(const CanonicalGraph& g1, const CanonicalGraph& g2)
{
    const int n1 = g1.v_e(), n2 = g2.v_e(), n = n1 + n2;
    const int i1 = g1.v_i(), i2 = g2.v_i();
    const int v1 = g1.vertex_count();
    const bool circle = g1.backbone() == Backbone::circle;
    const bool even = g1.parity() == Parity::even;
    const int lambda_sign = (even && (n2 * g1.edge_count()) % 2 != 0) ? -1 : 1;

    ShuffleOracle out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != n2) continue;
        std::vector<int> first, second;
        for (int pos = 0; pos < n; ++pos) ((mask >> pos) & 1u ? second : first).push_back(pos);
        const int turns1 = circle ? std::max(n1, 1) : 1;
        const int turns2 = circle ? std::max(n2, 1) : 1;
        for (int r1 = 0; r1 < turns1; ++r1)
            for (int r2 = 0; r2 < turns2; ++r2) {
                std::vector<int> pos1(n1), pos2(n2);
                for (int t = 0; t < n1; ++t) pos1[t] = first[(t + r1) % n1];
                for (int t = 0; t < n2; ++t) pos2[t] = second[(t + r2) % n2];
                if (circle) {
                    // quotient by rotating the whole picture
                    if (n1 > 0 && pos1[0] != 0) continue;
                    if (n1 == 0 && n2 > 0 && pos2[0] != 0) continue;
                }
                ++out.arrangements;
                RawGraph h{g1.backbone(), g1.parity(), n, i1 + i2, {}, {}};
                auto at1 = [&](int x) { return x < n1 ? pos1[x] : n + (x - n1); };
                auto at2 = [&](int y) { return y < n2 ? pos2[y] : n + i1 + (y - n2); };
                for (const Edge& e : g1.edges()) h.edges.push_back(Edge{at1(e.u), at1(e.v), e.halves_swapped});
                for (const Edge& e : g2.edges()) h.edges.push_back(Edge{at2(e.u), at2(e.v), e.halves_swapped});

                // the product numbering, read off in the standard numbering of h
                std::vector<int> label(even ? n : n + i1 + i2);
                for (int t = 0; t < n1; ++t) label[pos1[t]] = t;
                for (int t = 0; t < n2; ++t) label[pos2[t]] = (even ? n1 : v1) + t;
                if (!even) {
                    for (int j = 0; j < i1; ++j) label[n + j] = n1 + j;
                    for (int j = 0; j < i2; ++j) label[n + i1 + j] = v1 + n2 + j;
                }
                const SignedGraph s = canonicalize(h);
                if (s.is_zero()) continue;
                out.product.add(s.graph(), lambda_sign * inversion_sign(label) * s.sign());
            }
    }
    return out;
}

Chain shuffle(const Chain& a, const Chain& b)
{
    Chain out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add(shuffle(x, y).product, cx * cy);
    return out;
}

std::size_t dense_rank(const SparseExactMatrix& m)
{
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (const Triplet& t : m.triplets()) a[t.row][t.col] = t.value;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
