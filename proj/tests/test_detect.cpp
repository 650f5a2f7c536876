#include <doctest.h>

#include <lhom/detect.hpp>
#include <lhom/errors.hpp>
#include <lhom/hm_chain.hpp>
#include <lhom/selftest.hpp>

#include "test_helpers.hpp"

using namespace lhom;
using test::fwd;

TEST_CASE("coloured triple digraph basics")
{
    ColouredTripleDigraph trivial(Digraph(1, {}));
    CHECK(trivial.arc_count() == 0);

    ColouredTripleDigraph arc(test::h_arc());
    CHECK(arc.arc_count() == 0);

    ColouredTripleDigraph c4(test::h_c4r());
    bool found = false;
    for (const auto & a : c4.arcs_from(c4.triple_id(0, 1, 1)))
        if (a.to == c4.triple_id(1, 2, 2) && a.dir == Direction::forward) {
            found = true;
            CHECK(a.colour == ArcColour::blue);  // only 0->2 missing
        }
    CHECK(found);
}

TEST_CASE("circular N on the fixtures")
{
    CHECK(! find_circular_n(test::h_arc()).has_value());
    CHECK(! find_circular_n(test::h_n()).has_value());

    auto c4 = test::h_c4r();
    auto w = find_circular_n(c4);
    REQUIRE(w.has_value());
    CHECK(validate_circular_n(c4, *w));

    // the explicit witness walks on the reflexive 4-cycle validate
    CircularNWitness explicit_w{fwd(0, {1, 2, 3, 0}), fwd(1, {2, 3, 0, 1}), fwd(1, {2, 2, 3, 0})};
    CHECK(validate_circular_n(c4, explicit_w));

    auto p4 = test::h_p4r();
    auto wp = find_circular_n(p4);
    REQUIRE(wp.has_value());
    CHECK(validate_circular_n(p4, *wp));
}

TEST_CASE("circular N detection is deterministic")
{
    auto a = find_circular_n(test::h_c4r());
    auto b = find_circular_n(test::h_c4r());
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->x == b->x);
    CHECK(a->y == b->y);
    CHECK(a->z == b->z);
}

TEST_CASE("independent edges")
{
    CHECK(! has_independent_edges(test::h_arc()).has_value());

    Digraph two_arcs(4, {{0, 1}, {2, 3}});
    auto w = has_independent_edges(two_arcs);
    REQUIRE(w.has_value());
    CHECK(! has_edge(two_arcs, w->first.first, w->second.second, w->dir));
    CHECK(! has_edge(two_arcs, w->second.first, w->first.second, w->dir));

    std::vector<std::pair<int, int>> complete;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            complete.emplace_back(u, v);
    CHECK(! has_independent_edges(Digraph(3, complete)).has_value());
}

TEST_CASE("bicycles")
{
    CHECK(! find_bicycle(test::h_arc()).has_value());
    auto b = find_bicycle(test::h_c4r());
    REQUIRE(b.has_value());
    CHECK(avoids(test::h_c4r(), b->x, b->y));
}

TEST_CASE("DATs")
{
    CHECK(! find_dat(test::h_arc()).has_value());
    CHECK(! find_dat(Digraph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})).has_value());
    CHECK(find_dat(test::h_c4r()).has_value());
    CHECK(! find_dat(test::h_p4r()).has_value());
}

TEST_CASE("classification of the fixtures")
{
    auto arc = classify(test::h_arc());
    CHECK(arc.verdict == Verdict::fo_definable);
    CHECK(arc.hm_chain_length == 1);

    auto p4 = classify(test::h_p4r());
    CHECK(p4.verdict == Verdict::p_nl_hard);
    CHECK(p4.circular_n.has_value());
    CHECK(! p4.dat.has_value());
    CHECK(! p4.hm_chain_length.has_value());

    auto c4 = classify(test::h_c4r());
    CHECK(c4.circular_n.has_value());
    CHECK(c4.dat.has_value());
    CHECK(c4.verdict == Verdict::np_complete);
    CHECK(c4.bicycle.has_value());

    auto empty = classify(Digraph(3, {}));
    CHECK(empty.verdict == Verdict::fo_definable);
}

TEST_CASE("detector monotonicity, randomized")
{
    Rng rng(1234);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + rng.below(4);
        Digraph h = random_digraph(rng, n, rng.chance(0.5) ? 0.2 : 0.5);
        bool dat = find_dat(h).has_value();
        bool cn = find_circular_n(h).has_value();
        bool bicycle = find_bicycle(h).has_value();
        bool indep = has_independent_edges(h).has_value();
        if (dat)
            CHECK(cn);
        if (cn)
            CHECK((bicycle || indep));
        if (bicycle)
            CHECK(cn);
    }
}

TEST_CASE("every found witness is validated against the walk calculus")
{
    Rng rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        Digraph h = random_digraph(rng, 2 + rng.below(3), 0.5);
        if (auto w = find_circular_n(h))
            CHECK(validate_circular_n(h, *w));
        if (auto b = find_bicycle(h)) {
            CHECK(avoids(h, b->x, b->y));
            for (int i = 0; i < b->x.length(); ++i)
                CHECK(h.has_arc(b->y.vertex(i), b->x.vertex(i + 1)));
        }
    }
}
