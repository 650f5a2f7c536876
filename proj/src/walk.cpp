#include <lhom/errors.hpp>
#include <lhom/walk.hpp>

#include <algorithm>

namespace lhom
{
    bool validate_walk(const Digraph & d, const Walk & w)
    {
        if (w.start < 0 || w.start >= d.vertex_count())
            return false;
        int cur = w.start;
        for (auto [dir, to] : w.steps) {
            if (to < 0 || to >= d.vertex_count())
                return false;
            if (! has_edge(d, cur, to, dir))
                return false;
            cur = to;
        }
        return true;
    }

    bool congruent(const Walk & a, const Walk & b)
    {
        return a.length() == b.length() &&
            std::equal(a.steps.begin(), a.steps.end(), b.steps.begin(),
                [](const Step & s, const Step & t) { return s.dir == t.dir; });
    }

    Walk reverse_walk(const Walk & w)
    {
        Walk r;
        r.start = w.end();
        for (int i = w.length(); i >= 1; --i)
            r.steps.push_back(Step{reversed(w.steps[i - 1].dir), w.vertex(i - 1)});
        return r;
    }

    bool faithful_edge(const Digraph & d, const Walk & from, const Walk & to, int i)
    {
        return has_edge(d, from.vertex(i), to.vertex(i + 1), from.steps[i].dir);
    }

    bool avoids(const Digraph & d, const Walk & x, const Walk & y)
    {
        if (! congruent(x, y))
            throw input_error("avoids: walks are not congruent");
        for (int i = 0; i < x.length(); ++i)
            if (faithful_edge(d, x, y, i))
                return false;
        return true;
    }

    bool protects(const Digraph & d, const Walk & z, const Walk & y, const Walk & x)
    {
        if (! congruent(x, y) || ! congruent(x, z))
            throw input_error("protects: walks are not pairwise congruent");
        int n = x.length();
        int first_xz = n;
        for (int i = 0; i < n; ++i)
            if (faithful_edge(d, x, z, i)) {
                first_xz = i;
                break;
            }
        int last_zy = -1;
        for (int j = 0; j < n; ++j)
            if (faithful_edge(d, z, y, j))
                last_zy = j;
        return last_zy <= first_xz;
    }
}
