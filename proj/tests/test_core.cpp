#include <doctest.h>

#include <lhom/digraph.hpp>
#include <lhom/errors.hpp>
#include <lhom/selftest.hpp>
#include <lhom/walk.hpp>

#include "test_helpers.hpp"

using namespace lhom;
using test::fwd;

TEST_CASE("digraph construction and arcs")
{
    auto h = test::h_n();
    CHECK(h.vertex_count() == 4);
    CHECK(h.arc_count() == 3);
    CHECK(h.has_arc(0, 1));
    CHECK(! h.has_arc(1, 0));
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), input_error);
    CHECK_THROWS_AS(Digraph(2, {{0, 5}}), input_error);
    CHECK_THROWS_AS(h.has_arc(0, 9), input_error);
}

TEST_CASE("digraph text format")
{
    auto h = parse_digraph("2\n0 1\n");
    CHECK(h == test::h_arc());
    CHECK(parse_digraph("# comment\n 2 \n0 1 # trailing\n") == test::h_arc());
    CHECK_THROWS_AS(parse_digraph("2\n0 1\n0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_digraph("2\n0 5\n"), parse_error);
    CHECK_THROWS_AS(parse_digraph("# only a comment\n"), parse_error);
    CHECK(parse_digraph(format_digraph(test::h_c4r())) == test::h_c4r());
}

TEST_CASE("has_edge reads both directions")
{
    auto h = test::h_n();
    CHECK(has_edge(h, 0, 1, Direction::forward));
    CHECK(has_edge(h, 1, 0, Direction::backward));
    CHECK(! has_edge(h, 0, 3, Direction::forward));
    CHECK_THROWS_AS(has_edge(h, 0, 7, Direction::forward), input_error);
}

TEST_CASE("walk validation")
{
    auto h = test::h_n();
    CHECK(validate_walk(h, fwd(0, {1})));
    CHECK(! validate_walk(h, fwd(0, {3})));
    CHECK(validate_walk(h, Walk{1, {}}));
    CHECK(validate_walk(h, Walk{1, {{Direction::backward, 0}}}));
    CHECK(! validate_walk(h, Walk{9, {}}));
}

TEST_CASE("congruence is the step pattern")
{
    CHECK(congruent(fwd(0, {1}), fwd(2, {3})));
    CHECK(! congruent(fwd(0, {1}), Walk{1, {{Direction::backward, 0}}}));
    CHECK(congruent(Walk{0, {}}, Walk{3, {}}));
}

TEST_CASE("walk reversal")
{
    Walk w = fwd(0, {1});
    Walk r = reverse_walk(w);
    CHECK(r == Walk{1, {{Direction::backward, 0}}});
    CHECK(reverse_walk(Walk{5, {}}) == Walk{5, {}});

    Rng rng(99);
    auto h = test::h_c4r();
    for (int trial = 0; trial < 200; ++trial) {
        Walk x = test::random_walk(rng, h, rng.below(6));
        REQUIRE(validate_walk(h, x));
        CHECK(validate_walk(h, reverse_walk(x)));
        CHECK(reverse_walk(reverse_walk(x)) == x);
    }
}

TEST_CASE("avoids on the N template")
{
    auto h = test::h_n();
    Walk x = fwd(0, {1}), y = fwd(2, {3});
    CHECK(avoids(h, x, y));
    CHECK(! avoids(h, y, x));  // 2 -> 1 is faithful
    CHECK(avoids(h, Walk{0, {}}, Walk{2, {}}));
    CHECK_THROWS_AS(avoids(h, x, Walk{0, {}}), input_error);
}

TEST_CASE("avoids agrees with reversal")
{
    Rng rng(3);
    auto h = test::h_c4r();
    int seen = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int len = rng.below(5);
        Walk x = test::random_walk(rng, h, len);
        Walk y = test::random_walk(rng, h, len);
        if (! congruent(x, y))
            continue;
        ++seen;
        CHECK(avoids(h, x, y) == avoids(h, reverse_walk(y), reverse_walk(x)));
        // mutual avoidance keeps nonempty walks pointwise disjoint
        if (x.length() >= 1 && avoids(h, x, y) && avoids(h, y, x))
            for (int i = 0; i <= x.length(); ++i)
                CHECK(x.vertex(i) != y.vertex(i));
    }
    CHECK(seen > 50);
}

TEST_CASE("protects by first/last faithful index")
{
    auto h = test::h_c4r();
    // a,b,c,d,a / b,c,d,a,b / b,c,c,d,a on the reflexive 4-cycle
    Walk x = fwd(0, {1, 2, 3, 0});
    Walk y = fwd(1, {2, 3, 0, 1});
    Walk z = fwd(1, {2, 2, 3, 0});
    REQUIRE(validate_walk(h, x));
    REQUIRE(validate_walk(h, y));
    REQUIRE(validate_walk(h, z));
    CHECK(avoids(h, x, y));
    CHECK(protects(h, z, y, x));
    CHECK_THROWS_AS(protects(h, z, y, fwd(0, {1})), input_error);
}

TEST_CASE("protects without faithful x->z edges is vacuous")
{
    auto h = test::h_n();
    Walk x = fwd(0, {1}), y = fwd(2, {3});
    // no faithful edge from x to y, so y protects anything congruent from x
    CHECK(protects(h, y, y, x));
}

TEST_CASE("protects matches the split formulation")
{
    Rng rng(17);
    auto h = test::h_p4r();
    auto prefix = [](const Walk & w, int upto) {
        Walk p{w.start, {}};
        for (int i = 0; i < upto; ++i)
            p.steps.push_back(w.steps[i]);
        return p;
    };
    auto suffix = [](const Walk & w, int from) {
        Walk p{w.vertex(from), {}};
        for (int i = from; i < w.length(); ++i)
            p.steps.push_back(w.steps[i]);
        return p;
    };
    int seen = 0;
    for (int trial = 0; trial < 800; ++trial) {
        int len = rng.below(5);
        Walk x = test::random_walk(rng, h, len);
        Walk y = test::random_walk(rng, h, len);
        Walk z = test::random_walk(rng, h, len);
        if (! congruent(x, y) || ! congruent(x, z))
            continue;
        ++seen;
        bool split_exists = false;
        for (int s = 0; s <= x.length() && ! split_exists; ++s)
            split_exists = avoids(h, prefix(x, s), prefix(z, s)) &&
                avoids(h, suffix(z, std::min(s + 1, x.length())),
                    suffix(y, std::min(s + 1, x.length())));
        CHECK(protects(h, z, y, x) == split_exists);
    }
    CHECK(seen > 100);
}
