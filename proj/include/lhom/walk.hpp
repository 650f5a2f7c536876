#ifndef LHOM_WALK_HPP
#define LHOM_WALK_HPP

#include <lhom/digraph.hpp>

#include <vector>

namespace lhom
{
    struct Step
    {
        Direction dir;
        int to;

        bool operator==(const Step &) const = default;
    };

    /// A walk is a start vertex plus direction-tagged steps. The step pattern is
    /// part of the walk, so congruence is pure sequence comparison.
    struct Walk
    {
        int start = 0;
        std::vector<Step> steps;

        int length() const { return static_cast<int>(steps.size()); }
        int vertex(int i) const { return i == 0 ? start : steps[i - 1].to; }
        int end() const { return vertex(length()); }

        bool operator==(const Walk &) const = default;
    };

    bool validate_walk(const Digraph & d, const Walk & w);
    bool congruent(const Walk & a, const Walk & b);
    Walk reverse_walk(const Walk & w);

    /// Is x_i y_{i+1} an edge of d in the direction of step i+1?
    bool faithful_edge(const Digraph & d, const Walk & from, const Walk & to, int i);

    /// No faithful edge from x to y anywhere. Pre: congruent(x, y).
    bool avoids(const Digraph & d, const Walk & x, const Walk & y);

    /// Every faithful x->z edge index i and faithful z->y edge index j satisfy
    /// j <= i. Pre: x, y, z pairwise congruent.
    bool protects(const Digraph & d, const Walk & z, const Walk & y, const Walk & x);
}

#endif
