#include <doctest.h>

#include <lhom/detect.hpp>
#include <lhom/errors.hpp>
#include <lhom/hm_chain.hpp>
#include <lhom/selftest.hpp>

#include "test_helpers.hpp"

using namespace lhom;

TEST_CASE("tables must be conservative")
{
    CHECK_THROWS_AS(TernaryOpTable(2, std::vector<int>(8, 0)), internal_error);
    CHECK_THROWS_AS(TernaryOpTable(2, {0, 0}), input_error);
    TernaryOpTable projection(2, {0, 0, 0, 0, 1, 1, 1, 1});
    CHECK(projection.at(0, 1, 1) == 0);
}

TEST_CASE("chain for the single arc")
{
    auto h = test::h_arc();
    auto chain = build_hm_chain(h);
    REQUIRE(chain.has_value());
    REQUIRE(chain->size() == 1);
    const auto & f = chain->front();
    CHECK(f.at(0, 1, 1) == 0);
    CHECK(f.at(1, 0, 0) == 1);
    CHECK(f.at(0, 0, 1) == 1);
    CHECK(f.at(1, 1, 0) == 0);
    CHECK(verify_hm_identities(*chain).ok());
    CHECK(verify_polymorphism(h, f).ok());
}

TEST_CASE("no chain under a circular N, unless forced")
{
    auto c4 = test::h_c4r();
    CHECK(! build_hm_chain(c4).has_value());
    HmChainOptions force;
    force.force_construct = true;
    auto chain = build_hm_chain(c4, force);
    REQUIRE(chain.has_value());
    bool clean = verify_hm_identities(*chain).ok();
    for (const auto & f : *chain)
        clean = clean && verify_polymorphism(c4, f).ok();
    CHECK(! clean);
}

TEST_CASE("one-vertex template")
{
    auto chain = build_hm_chain(Digraph(1, {{0, 0}}));
    REQUIRE(chain.has_value());
    CHECK(chain->size() == 1);
    CHECK(verify_hm_identities(*chain).ok());
}

TEST_CASE("identity verification pinpoints violations")
{
    CHECK_THROWS_AS(verify_hm_identities({}), input_error);

    // constant-first-argument table: f(a,b,c) = a fails f_k(x,x,y) = y at (0,1)
    TernaryOpTable projection(2, {0, 0, 0, 0, 1, 1, 1, 1});
    auto report = verify_hm_identities({projection});
    REQUIRE(! report.ok());
    CHECK(std::find(report.violations.begin(), report.violations.end(),
              IdentityViolation{3, 1, 0, 1}) != report.violations.end());
    for (const auto & v : report.violations)
        CHECK(v.identity == 3);
}

TEST_CASE("projections are polymorphisms")
{
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + rng.below(4);
        Digraph h = random_digraph(rng, n, 0.5);
        std::vector<int> values(n * n * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    values[(a * n + b) * n + c] = a;
        CHECK(verify_polymorphism(h, TernaryOpTable(n, std::move(values))).ok());
    }
}

TEST_CASE("polymorphism violations are concrete")
{
    // with arcs 0->0, 0->1, 1->0 the arc columns ((0,1),(1,0),(1,0)) force the
    // image pair (f(0,1,1), f(1,0,0)); bending f(0,1,1) to 1 lands on the
    // missing arc 1->1
    Digraph h(2, {{0, 0}, {0, 1}, {1, 0}});
    std::vector<int> values(8);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                values[(a * 2 + b) * 2 + c] = a;
    values[(0 * 2 + 1) * 2 + 1] = 1;
    auto report = verify_polymorphism(h, TernaryOpTable(2, std::move(values)));
    REQUIRE(! report.ok());
    for (const auto & v : report.violations)
        CHECK(! h.has_arc(v.image_from, v.image_to));
    bool found = false;
    for (const auto & v : report.violations)
        found = found || (v.image_from == 1 && v.image_to == 1);
    CHECK(found);
}

TEST_CASE("distinguisher examples")
{
    auto h = test::h_arc();
    PairStructure ps(h);
    CHECK(is_distinguisher(h, ps, 1, 0, 1, 1));  // zero-length witness, mu(0,1) = 1
    CHECK(! is_distinguisher(h, ps, 1, 0, 0, 1));
    CHECK_THROWS_AS(is_distinguisher(h, ps, 0, 0, 0, 1), input_error);
}

TEST_CASE("constructed tables respect the mu regions")
{
    Rng rng(8);
    int built = 0;
    for (int trial = 0; trial < 120 && built < 40; ++trial) {
        int n = 2 + rng.below(3);
        Digraph h = random_digraph(rng, n, rng.chance(0.5) ? 0.2 : 0.5);
        auto chain = build_hm_chain(h);
        if (! chain)
            continue;
        ++built;
        PairStructure ps(h);
        if (n >= 2)
            CHECK(static_cast<int>(chain->size()) == ps.max_mu());
        for (int i = 1; i <= static_cast<int>(chain->size()); ++i) {
            const auto & f = (*chain)[i - 1];
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (ps.mu(x, y) > i)
                        CHECK(f.at(x, x, y) == x);
                    if (ps.mu(x, y) <= i)
                        CHECK(f.at(x, x, y) == y);
                    if (ps.mu(x, y) < i)
                        CHECK(f.at(x, y, y) == y);
                    if (ps.mu(x, y) >= i)
                        CHECK(f.at(x, y, y) == x);
                }
        }
        CHECK(verify_hm_identities(*chain).ok());
    }
    CHECK(built >= 20);
}

TEST_CASE("chain existence matches the detector on all tiny templates")
{
    for (int n = 1; n <= 2; ++n)
        for (const auto & h : enumerate_digraphs(n)) {
            bool cn = find_circular_n(h).has_value();
            auto chain = build_hm_chain(h);
            CHECK(cn == ! chain.has_value());
            if (chain) {
                CHECK(verify_hm_identities(*chain).ok());
                for (const auto & f : *chain)
                    CHECK(verify_polymorphism(h, f).ok());
            }
        }
}
