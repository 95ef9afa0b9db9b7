#include "graphcoh/version.hpp"

#include <openssl/evp.h>

#include <cstdio>

#ifndef GRAPHCOH_VERSION_STRING
#define GRAPHCOH_VERSION_STRING "unknown"
#endif

namespace graphcoh {

std::string_view version() { return GRAPHCOH_VERSION_STRING; }

std::string_view sign_conventions()
{
    return "relabel: cyclic rotation of externals and permutation of odd internal labels signed by the permutation\n"
           "relabel: even non-cyclic renumbering of externals signed by the permutation\n"
           "relabel: even edge-label permutation signed; even internal vertices unlabelled\n"
           "orientation: odd edge reversal -1; odd external loop half-edge swap -1\n"
           "delta: vertex rule (-1)^j if j>i else (-1)^(i+1) for arcs and odd edges\n"
           "delta: even edge rule (-1)^(alpha+1+v_e)\n"
           "delta: merged vertex keeps min label; labels above max shift down by one\n"
           "delta: chord turned loop by an arc contraction takes its half at the arc source first\n"
           "product: (-1)^(v_e(g2) e(g1)) in even parity, 1 in odd parity\n"
           "product: g2 vertex labels offset by g1 vertex count (odd), g2 edge labels by e(g1) (even)\n"
           "product: circle shuffles fix g1's first external vertex, every rotation of g2 separate\n"
           "coproduct: labels renumbered block by block (signed), cut sign (-1)^(v_e(right) e(left)) in even parity\n"
           "tensor: product Koszul sign (-1)^(|a2||b1|); delta(a x b) = da x b + (-1)^|a| a x db\n";
}

std::string sign_convention_hash()
{
    const std::string_view text = sign_conventions();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr);
    std::string hex;
    hex.reserve(2 * length);
    char buf[3];
    for (unsigned int i = 0; i < length; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

}  // namespace graphcoh
