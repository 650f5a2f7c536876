#ifndef LHOM_TEST_HELPERS_HPP
#define LHOM_TEST_HELPERS_HPP

#include <lhom/digraph.hpp>
#include <lhom/selftest.hpp>
#include <lhom/walk.hpp>

#include <vector>

namespace lhom::test
{
    inline Digraph h_arc()
    {
        return Digraph(2, {{0, 1}});
    }

    inline Digraph h_n()
    {
        return Digraph(4, {{0, 1}, {2, 3}, {2, 1}});
    }

    inline Digraph reflexive_symmetric(int n, std::vector<std::pair<int, int>> edges)
    {
        std::vector<std::pair<int, int>> arcs;
        for (int v = 0; v < n; ++v)
            arcs.emplace_back(v, v);
        for (auto [u, v] : edges) {
            arcs.emplace_back(u, v);
            arcs.emplace_back(v, u);
        }
        return Digraph(n, std::move(arcs));
    }

    inline Digraph h_c4r()
    {
        return reflexive_symmetric(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    }

    inline Digraph h_p4r()
    {
        return reflexive_symmetric(4, {{0, 1}, {1, 2}, {2, 3}});
    }

    inline Walk fwd(int start, std::vector<int> vertices)
    {
        Walk w;
        w.start = start;
        for (int v : vertices)
            w.steps.push_back(Step{Direction::forward, v});
        return w;
    }

    /// A uniformly random valid walk of the given length, or length 0 if the
    /// start is isolated somewhere along the way.
    inline Walk random_walk(Rng & rng, const Digraph & d, int length)
    {
        Walk w;
        w.start = rng.below(d.vertex_count());
        int cur = w.start;
        for (int i = 0; i < length; ++i) {
            std::vector<Step> options;
            for (int v : d.out_neighbours(cur))
                options.push_back(Step{Direction::forward, v});
            for (int v : d.in_neighbours(cur))
                options.push_back(Step{Direction::backward, v});
            if (options.empty())
                break;
            w.steps.push_back(options[rng.below(static_cast<int>(options.size()))]);
            cur = w.steps.back().to;
        }
        return w;
    }
}

#endif
