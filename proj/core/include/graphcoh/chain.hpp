#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "graphcoh/graph.hpp"

namespace graphcoh {

// A finite formal linear combination with exact rational coefficients. Zero
// coefficients are never stored.
template <class Key>
class LinearCombination {
public:
    using map_type = std::map<Key, Rational>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;

    void add(const Key& key, const Rational& coefficient)
    {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const LinearCombination& other, const Rational& scale = 1)
    {
        for (const auto& [key, c] : other.terms_) add(key, c * scale);
    }

    Rational coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LinearCombination scaled(const Rational& s) const
    {
        LinearCombination out;
        if (s == 0) return out;
        for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * s);
        return out;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b)
    {
        a.add(b);
        return a;
    }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b)
    {
        a.add(b, Rational(-1));
        return a;
    }
    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    map_type terms_;
};

// Chains keep every graph on one backbone and parity; the first inserted graph
// fixes them.
class Chain {
public:
    Chain() = default;
    explicit Chain(const CanonicalGraph& g, const Rational& c = 1) { add(g, c); }

    void add(const CanonicalGraph& g, const Rational& c);
    void add(const SignedGraph& g, const Rational& c);
    void add(const Chain& other, const Rational& scale = 1);

    Rational coefficient(const CanonicalGraph& g) const { return terms_.coefficient(g); }
    Chain scaled(const Rational& s) const;

    bool is_zero() const noexcept { return terms_.is_zero(); }
    std::size_t size() const noexcept { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    std::optional<Backbone> backbone() const noexcept { return backbone_; }
    std::optional<Parity> parity() const noexcept { return parity_; }

    // (k, m) shared by every graph, if the chain is homogeneous and nonzero.
    std::optional<std::pair<int, int>> homogeneous_grading() const;

    friend Chain operator+(Chain a, const Chain& b)
    {
        a.add(b);
        return a;
    }
    friend Chain operator-(Chain a, const Chain& b)
    {
        a.add(b, Rational(-1));
        return a;
    }
    friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

private:
    void check_kind(const CanonicalGraph& g);

    LinearCombination<CanonicalGraph> terms_;
    std::optional<Backbone> backbone_;
    std::optional<Parity> parity_;
};

using TensorKey = std::pair<CanonicalGraph, CanonicalGraph>;
using TensorChain = LinearCombination<TensorKey>;
using TripleKey = std::tuple<CanonicalGraph, CanonicalGraph, CanonicalGraph>;
using TripleTensorChain = LinearCombination<TripleKey>;

}  // namespace graphcoh
