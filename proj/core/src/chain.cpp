#include "graphcoh/chain.hpp"

namespace graphcoh {

void Chain::check_kind(const CanonicalGraph& g)
{
    if (!backbone_) {
        backbone_ = g.backbone();
        parity_ = g.parity();
        return;
    }
    if (*backbone_ != g.backbone() || *parity_ != g.parity())
        throw ValidationError("chain mixes backbones or parities (" + std::string(to_string(*backbone_)) + "/" +
                              std::string(to_string(*parity_)) + " vs " + std::string(to_string(g.backbone())) +
                              "/" + std::string(to_string(g.parity())) + ")");
}

void Chain::add(const CanonicalGraph& g, const Rational& c)
{
    if (c == 0) return;
    check_kind(g);
    terms_.add(g, c);
}

void Chain::add(const SignedGraph& g, const Rational& c)
{
    if (g.is_zero()) return;
    add(g.graph(), g.sign() > 0 ? c : Rational(-c));
}

void Chain::add(const Chain& other, const Rational& scale)
{
    for (const auto& [g, c] : other) add(g, c * scale);
}

Chain Chain::scaled(const Rational& s) const
{
    Chain out;
    out.add(*this, s);
    return out;
}

std::optional<std::pair<int, int>> Chain::homogeneous_grading() const
{
    std::optional<std::pair<int, int>> km;
    for (const auto& [g, c] : terms_) {
        const Grading gr = g.grading();
        const std::pair<int, int> here{gr.k, gr.m};
        if (!km) km = here;
        else if (*km != here) return std::nullopt;
    }
    return km;
}

}  // namespace graphcoh
