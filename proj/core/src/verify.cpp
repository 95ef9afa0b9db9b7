#include "graphcoh/verify.hpp"

#include <random>

#include "graphcoh/algebra.hpp"
#include "graphcoh/complex.hpp"
#include "graphcoh/graph_io.hpp"

namespace graphcoh {

namespace {

std::string family(Backbone b, Parity p)
{
    return "[" + std::string(to_string(b)) + "/" + std::string(to_string(p)) + "]";
}

class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    template <class... Graphs>
    void record(bool ok, const Graphs&... witness)
    {
        ++result_.checked;
        if (ok) {
            ++result_.passed;
        } else if (result_.witness.empty()) {
            ((result_.witness += serialize(witness) + "---\n"), ...);
        }
    }

    AxiomResult result() && { return std::move(result_); }

private:
    AxiomResult result_;
};

int sign_of(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::vector<CanonicalGraph> line_graphs(Parity p, int kmax, int max_factors, const EnumerationOptions& options)
{
    std::vector<CanonicalGraph> out;
    for (const CanonicalGraph& g : graphs_up_to(Backbone::line, p, kmax, options))
        if (static_cast<int>(primitive_factors(g).size()) <= max_factors) out.push_back(g);
    return out;
}

// (f (x) id) and (id (x) f) for a degree-0 linear map f
template <class F>
TensorChain apply_left(const TensorChain& t, F&& f)
{
    TensorChain out;
    for (const auto& [key, c] : t) out.add(tensor(f(key.first), Chain(key.second)), c);
    return out;
}

template <class F>
TensorChain apply_right(const TensorChain& t, F&& f)
{
    TensorChain out;
    for (const auto& [key, c] : t) out.add(tensor(Chain(key.first), f(key.second)), c);
    return out;
}

Chain unit_chain(Backbone b, Parity p, const Rational& c)
{
    Chain out;
    out.add(CanonicalGraph::unit(b, p), c);
    return out;
}

}  // namespace

std::vector<CanonicalGraph> graphs_up_to(Backbone b, Parity p, int kmax, const EnumerationOptions& options)
{
    std::vector<CanonicalGraph> out;
    for (int k = 0; k <= kmax; ++k)
        for (int m = 0; m <= 2 * k; ++m) {
            const GradedBasis basis = enumerate_basis(b, p, k, m, options);
            out.insert(out.end(), basis.graphs.begin(), basis.graphs.end());
        }
    return out;
}

AxiomResult check_delta_squared(Backbone b, Parity p, int kmax, int mmax, const EnumerationOptions& options)
{
    Tally t("delta_squared" + family(b, p));
    for (int k = 0; k <= kmax; ++k)
        for (int m = 0; m <= mmax; ++m)
            for (const CanonicalGraph& g : enumerate_basis(b, p, k, m, options).graphs)
                t.record(delta(delta(g)).is_zero(), g);
    return std::move(t).result();
}

AxiomResult check_delta_linearity(Backbone b, Parity p, int kmax, std::uint64_t seed, const EnumerationOptions& options)
{
    Tally t("delta_linearity" + family(b, p));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numerator(-9, 9), denominator(1, 9);
    for (int k = 0; k <= kmax; ++k)
        for (int m = 0; m <= 2 * k; ++m) {
            const GradedBasis basis = enumerate_basis(b, p, k, m, options);
            if (basis.size() == 0) continue;
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            for (int sample = 0; sample < 10; ++sample) {
                const CanonicalGraph& x = basis.graphs[pick(rng)];
                const CanonicalGraph& y = basis.graphs[pick(rng)];
                const Rational a = make_rational(numerator(rng), denominator(rng));
                const Rational c = make_rational(numerator(rng), denominator(rng));
                Chain combo;
                combo.add(x, a);
                combo.add(y, c);
                Chain expected = delta(x).scaled(a);
                expected.add(delta(y), c);
                t.record(delta(combo) == expected, x, y);
            }
        }
    return std::move(t).result();
}

AxiomResult check_leibniz(Backbone b, Parity p, int kmax, const EnumerationOptions& options)
{
    Tally t("leibniz" + family(b, p));
    const std::vector<CanonicalGraph> graphs = graphs_up_to(b, p, kmax, options);
    for (const CanonicalGraph& x : graphs)
        for (const CanonicalGraph& y : graphs) {
            if (x.grading().k + y.grading().k > kmax) continue;
            Chain rhs = shuffle_product(delta(x), Chain(y));
            rhs.add(shuffle_product(Chain(x), delta(y)), sign_of(x.label_degree()));
            t.record(delta(shuffle_product(x, y)) == rhs, x, y);
        }
    return std::move(t).result();
}

AxiomResult check_commutativity(Backbone b, Parity p, int kmax, const EnumerationOptions& options)
{
    Tally t("graded_commutativity" + family(b, p));
    const std::vector<CanonicalGraph> graphs = graphs_up_to(b, p, kmax, options);
    for (const CanonicalGraph& x : graphs)
        for (const CanonicalGraph& y : graphs) {
            if (x.grading().k + y.grading().k > kmax) continue;
            const int sign = sign_of(static_cast<long>(x.label_degree()) * y.label_degree());
            t.record(shuffle_product(x, y) == shuffle_product(y, x).scaled(sign), x, y);
        }
    return std::move(t).result();
}

AxiomResult check_associativity(Backbone b, Parity p, int kmax, const EnumerationOptions& options)
{
    Tally t("associativity" + family(b, p));
    const std::vector<CanonicalGraph> graphs = graphs_up_to(b, p, kmax, options);
    for (const CanonicalGraph& x : graphs) {
        if (x.is_unit()) continue;
        for (const CanonicalGraph& y : graphs) {
            if (y.is_unit() || x.grading().k + y.grading().k > kmax) continue;
            const Chain xy = shuffle_product(x, y);
            for (const CanonicalGraph& z : graphs) {
                if (z.is_unit() || x.grading().k + y.grading().k + z.grading().k > kmax) continue;
                const Chain left = shuffle_product(xy, Chain(z));
                const Chain right = shuffle_product(Chain(x), shuffle_product(y, z));
                t.record(left == right, x, y, z);
            }
        }
    }
    return std::move(t).result();
}

AxiomResult check_unit(Backbone b, Parity p, int kmax, const EnumerationOptions& options)
{
    Tally t("unit" + family(b, p));
    const CanonicalGraph one = CanonicalGraph::unit(b, p);
    for (const CanonicalGraph& g : graphs_up_to(b, p, kmax, options))
        t.record(shuffle_product(one, g) == Chain(g) && shuffle_product(g, one) == Chain(g), g);
    return std::move(t).result();
}

AxiomResult check_unit_in_degree_zero(Backbone b, Parity p, int kmax, const EnumerationOptions& options)
{
    Tally t("unit_in_degree_zero" + family(b, p));
    for (const CanonicalGraph& g : graphs_up_to(b, p, kmax, options))
        t.record((g.label_degree() == 0) == g.is_unit(), g);
    return std::move(t).result();
}

AxiomResult check_grading_congruence(Backbone b, Parity p, int kmax, const EnumerationOptions& options)
{
    Tally t("grading_congruence" + family(b, p));
    for (const CanonicalGraph& g : graphs_up_to(b, p, kmax, options)) {
        const Grading gr = g.grading();
        const int expected = p == Parity::even ? gr.k + gr.m : gr.m;
        t.record((gr.label_degree - expected) % 2 == 0, g);
    }
    return std::move(t).result();
}

AxiomResult check_coassociativity(Parity p, int kmax, int max_factors, const EnumerationOptions& options)
{
    Tally t("coassociativity" + family(Backbone::line, p));
    for (const CanonicalGraph& g : line_graphs(p, kmax, max_factors, options)) {
        const TensorChain d = coproduct(g);
        t.record(coproduct_left(d) == coproduct_right(d), g);
    }
    return std::move(t).result();
}

AxiomResult check_counit(Parity p, int kmax, int max_factors, const EnumerationOptions& options)
{
    Tally t("counit" + family(Backbone::line, p));
    for (const CanonicalGraph& g : line_graphs(p, kmax, max_factors, options)) {
        Chain left, right;
        for (const auto& [key, c] : coproduct(g)) {
            if (key.first.is_unit()) left.add(key.second, c);
            if (key.second.is_unit()) right.add(key.first, c);
        }
        t.record(left == Chain(g) && right == Chain(g), g);
    }
    return std::move(t).result();
}

AxiomResult check_coproduct_delta(Parity p, int kmax, int max_factors, const EnumerationOptions& options)
{
    Tally t("coproduct_delta" + family(Backbone::line, p));
    for (const CanonicalGraph& g : line_graphs(p, kmax, max_factors, options))
        t.record(coproduct(delta(g)) == delta(coproduct(g)), g);
    return std::move(t).result();
}

AxiomResult check_antipode_left(Parity p, int kmax, int max_factors, const EnumerationOptions& options)
{
    Tally t("antipode_left" + family(Backbone::line, p));
    Antipode s;
    for (const CanonicalGraph& g : line_graphs(p, kmax, max_factors, options)) {
        const Chain lhs = multiply(apply_left(coproduct(g), [&](const CanonicalGraph& x) { return s(x); }));
        t.record(lhs == unit_chain(Backbone::line, p, counit(Chain(g))), g);
    }
    return std::move(t).result();
}

AxiomResult check_antipode_right(Parity p, int kmax, int max_factors, const EnumerationOptions& options)
{
    Tally t("antipode_right" + family(Backbone::line, p));
    Antipode s;
    for (const CanonicalGraph& g : line_graphs(p, kmax, max_factors, options)) {
        const Chain lhs = multiply(apply_right(coproduct(g), [&](const CanonicalGraph& x) { return s(x); }));
        t.record(lhs == unit_chain(Backbone::line, p, counit(Chain(g))), g);
    }
    return std::move(t).result();
}

AxiomResult check_compatibility(Parity p, int kmax, int max_factors, const EnumerationOptions& options)
{
    Tally t("compatibility" + family(Backbone::line, p));
    const std::vector<CanonicalGraph> graphs = line_graphs(p, kmax, max_factors, options);
    for (const CanonicalGraph& x : graphs)
        for (const CanonicalGraph& y : graphs) {
            if (x.grading().k + y.grading().k > kmax) continue;
            t.record(coproduct(shuffle_product(x, y)) == tensor_product(coproduct(x), coproduct(y)), x, y);
        }
    return std::move(t).result();
}

std::vector<AxiomResult> verify_axioms(const VerifyOptions& options)
{
    const int kmax = options.kmax;
    const EnumerationOptions& en = options.enumeration;
    std::vector<AxiomResult> out;
    for (Backbone b : {Backbone::circle, Backbone::line})
        for (Parity p : {Parity::odd, Parity::even}) {
            out.push_back(check_delta_squared(b, p, kmax, 2 * kmax, en));
            out.push_back(check_delta_linearity(b, p, kmax, options.seed, en));
            out.push_back(check_leibniz(b, p, kmax, en));
            out.push_back(check_commutativity(b, p, kmax, en));
            out.push_back(check_associativity(b, p, kmax, en));
            out.push_back(check_unit(b, p, kmax, en));
            out.push_back(check_unit_in_degree_zero(b, p, kmax, en));
            out.push_back(check_grading_congruence(b, p, kmax, en));
        }
    for (Parity p : {Parity::odd, Parity::even}) {
        out.push_back(check_coassociativity(p, kmax, 3, en));
        out.push_back(check_counit(p, kmax, 3, en));
        out.push_back(check_compatibility(p, kmax, 2, en));
        out.push_back(check_coproduct_delta(p, kmax, 3, en));
        out.push_back(check_antipode_left(p, kmax, 3, en));
        out.push_back(check_antipode_right(p, kmax, 3, en));
    }
    return out;
}

}  // namespace graphcoh
