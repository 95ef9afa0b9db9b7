#include <doctest.h>

#include <set>

#include "graphcoh/verify.hpp"
#include "graphcoh/version.hpp"

using namespace graphcoh;

TEST_CASE("the full battery passes at order 3")
{
    VerifyOptions options;
    options.kmax = 3;
    const std::vector<AxiomResult> results = verify_axioms(options);
    std::set<std::string> names;
    for (const AxiomResult& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.witness);
        CHECK(r.ok());
        CHECK(r.checked > 0);
        CHECK(r.witness.empty());
        names.insert(r.name);
    }
    CHECK(names.size() == results.size());
    CHECK(names.count("leibniz[circle/odd]") == 1);
    CHECK(names.count("antipode_right[line/even]") == 1);
}

TEST_CASE("graphs_up_to covers every degree")
{
    std::size_t total = 0;
    for (int k = 0; k <= 2; ++k)
        for (int m = 0; m <= 2 * k; ++m) total += enumerate_basis(Backbone::line, Parity::odd, k, m).size();
    CHECK(graphs_up_to(Backbone::line, Parity::odd, 2).size() == total);
}

TEST_CASE("linearity checks are reproducible from the seed")
{
    const AxiomResult a = check_delta_linearity(Backbone::circle, Parity::even, 3, 99);
    const AxiomResult b = check_delta_linearity(Backbone::circle, Parity::even, 3, 99);
    CHECK(a.ok());
    CHECK(a.checked == b.checked);
}

TEST_CASE("sign convention fingerprint")
{
    const std::string h = sign_convention_hash();
    CHECK(h.size() == 64);
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(h == sign_convention_hash());
    CHECK_FALSE(sign_conventions().empty());
    CHECK_FALSE(version().empty());
}
