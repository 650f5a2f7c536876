#include <doctest.h>

#include <lhom/detect.hpp>
#include <lhom/errors.hpp>
#include <lhom/pair_structure.hpp>
#include <lhom/selftest.hpp>

#include "test_helpers.hpp"

#include <deque>

using namespace lhom;

TEST_CASE("single-arc template pair digraph")
{
    PairStructure ps(test::h_arc());
    CHECK(ps.pair_count() == 2);
    CHECK(ps.arcs().empty());
    CHECK(ps.component_count() == 2);
    CHECK(ps.max_mu() == 1);
    CHECK(ps.mu(0, 1) == 1);
    CHECK(ps.mu(1, 0) == 1);
    CHECK(ps.processing_order() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
    CHECK(! ps.is_invertible(0, 1));
    CHECK_THROWS_AS(ps.is_invertible(1, 1), input_error);
}

TEST_CASE("one-vertex template has an empty pair digraph")
{
    PairStructure ps(Digraph(1, {{0, 0}}));
    CHECK(ps.pair_count() == 0);
    CHECK(ps.processing_order().empty());
    CHECK(ps.max_mu() == 0);
}

TEST_CASE("the N yields a single pair arc")
{
    auto h = test::h_n();
    PairStructure ps(h);
    int from = ps.pair_id(0, 2), to = ps.pair_id(1, 3);
    bool found = false;
    for (const auto & arc : ps.arcs())
        if (arc.from == from && arc.to == to) {
            found = true;
            CHECK(! arc.is_double);
        }
    CHECK(found);
    CHECK(ps.max_mu() == 2);
}

TEST_CASE("mu convention and accessors")
{
    PairStructure ps(test::h_n());
    for (int v = 0; v < 4; ++v)
        CHECK(ps.mu(v, v) == 0);
    CHECK_THROWS_AS(ps.mu(4, 4), input_error);
    CHECK_THROWS_AS(ps.pair_id(1, 1), input_error);
}

TEST_CASE("invertible pairs on the reflexive 4-cycle")
{
    PairStructure ps(test::h_c4r());
    CHECK(ps.is_invertible(0, 2));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if (x != y)
                CHECK(ps.is_invertible(x, y) == ps.is_invertible(y, x));
}

TEST_CASE("k-goodness")
{
    PairStructure ps(test::h_n());
    std::vector<std::vector<int>> lists{{0, 1, 2, 3}, {0, 2}};
    CHECK(ps.is_k_good(lists, ps.pair_count()));
    CHECK(ps.is_k_good({{2}, {}, {1}}, 0));
    auto last = ps.processing_order().back();
    std::vector<std::vector<int>> bad{{std::min(last.first, last.second),
        std::max(last.first, last.second)}};
    CHECK(! ps.is_k_good(bad, ps.pair_count() - 1));
}

TEST_CASE("pair digraph structural properties, randomized")
{
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng.below(4);
        Digraph h = random_digraph(rng, n, rng.chance(0.5) ? 0.2 : 0.5);
        PairStructure ps(h);

        // the skew property is asserted during construction; spot-check anyway
        for (const auto & arc : ps.arcs()) {
            auto [x, y] = ps.pair_of(arc.from);
            auto [x2, y2] = ps.pair_of(arc.to);
            CHECK(ps.has_pair_arc(ps.pair_id(y2, x2), ps.pair_id(y, x)));
            CHECK(ps.mu(x, y) <= ps.mu(x2, y2));
            // arcs never point into an earlier component
            CHECK(ps.component(x, y) <= ps.component(x2, y2));
        }

        bool circular_free = ! find_circular_n(h).has_value();
        if (circular_free)
            for (const auto & arc : ps.arcs()) {
                auto [x, y] = ps.pair_of(arc.from);
                auto [x2, y2] = ps.pair_of(arc.to);
                if (! arc.is_double) {
                    CHECK(ps.position(x, y) < ps.position(x2, y2));
                    CHECK(ps.component(x, y) != ps.component(x2, y2));
                    CHECK(ps.mu(x, y) < ps.mu(x2, y2));
                }
            }

        // components are closed under pair reversal
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int x2 = 0; x2 < n; ++x2)
                    for (int y2 = 0; y2 < n; ++y2)
                        if (x != y && x2 != y2)
                            CHECK((ps.component(x, y) == ps.component(x2, y2)) ==
                                (ps.component(y, x) == ps.component(y2, x2)));

        // equal mu plus reachability forces one strong component
        int slots = n * n;
        for (int p = 0; p < slots; ++p) {
            auto [x, y] = ps.pair_of(p);
            if (x == y)
                continue;
            std::vector<char> seen(slots, 0);
            std::deque<int> queue{p};
            seen[p] = 1;
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (const auto & arc : ps.arcs())
                    if (arc.from == u && ! seen[arc.to]) {
                        seen[arc.to] = 1;
                        queue.push_back(arc.to);
                    }
            }
            for (int q = 0; q < slots; ++q) {
                auto [x2, y2] = ps.pair_of(q);
                if (x2 == y2 || ! seen[q])
                    continue;
                if (ps.mu(x, y) == ps.mu(x2, y2))
                    CHECK(ps.component(x, y) == ps.component(x2, y2));
            }
        }
    }
}

TEST_CASE("processing order is deterministic")
{
    auto h = test::h_p4r();
    PairStructure a(h), b(h);
    CHECK(a.processing_order() == b.processing_order());
}
