#include <lhom/detect.hpp>
#include <lhom/errors.hpp>
#include <lhom/hm_chain.hpp>
#include <lhom/pair_structure.hpp>

#include <algorithm>
#include <deque>
#include <limits>

namespace lhom
{
    ColouredTripleDigraph::ColouredTripleDigraph(const Digraph & h) :
        n_(h.vertex_count())
    {
        adj_.assign(triple_count(), {});
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    for (Direction d : {Direction::forward, Direction::backward})
                        for (int a2 = 0; a2 < n_; ++a2) {
                            if (! has_edge(h, a, a2, d))
                                continue;
                            for (int b2 = 0; b2 < n_; ++b2) {
                                if (! has_edge(h, b, b2, d))
                                    continue;
                                for (int c2 = 0; c2 < n_; ++c2) {
                                    if (! has_edge(h, c, c2, d) || has_edge(h, a, c2, d))
                                        continue;
                                    bool ab = has_edge(h, a, b2, d);
                                    bool bc = has_edge(h, b, c2, d);
                                    if (ab && bc)
                                        continue;
                                    ArcColour colour = ! ab && ! bc ? ArcColour::green
                                        : ! ab ? ArcColour::blue
                                               : ArcColour::brown;
                                    adj_[triple_id(a, b, c)].push_back(
                                        Arc{triple_id(a2, b2, c2), d, colour});
                                }
                            }
                        }
    }

    long ColouredTripleDigraph::arc_count() const
    {
        long total = 0;
        for (const auto & row : adj_)
            total += static_cast<long>(row.size());
        return total;
    }

    bool validate_circular_n(const Digraph & h, const CircularNWitness & w)
    {
        if (! validate_walk(h, w.x) || ! validate_walk(h, w.y) || ! validate_walk(h, w.z))
            return false;
        if (! congruent(w.x, w.y) || ! congruent(w.x, w.z))
            return false;
        int x = w.x.start, y = w.y.start;
        if (x == y)
            return false;
        if (w.x.end() != x || w.y.end() != y)
            return false;
        if (w.z.start != y || w.z.end() != x)
            return false;
        return avoids(h, w.x, w.y) && protects(h, w.z, w.y, w.x);
    }

    namespace
    {
        struct TripleStep
        {
            int to;
            Direction dir;
        };

        // Steps where both the x->z and z->y chasing edges are present. Such a
        // step is never an arc of the coloured triple digraph, but it is legal
        // exactly once in a witness: at the split index of the protection
        // condition, which neither the prefix nor the suffix clause constrains.
        std::vector<std::vector<TripleStep>> split_steps(const Digraph & h)
        {
            int n = h.vertex_count();
            std::vector<std::vector<TripleStep>> adj(n * n * n);
            auto id = [n](int a, int b, int c) { return (a * n + b) * n + c; };
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (Direction d : {Direction::forward, Direction::backward})
                            for (int a2 = 0; a2 < n; ++a2) {
                                if (! has_edge(h, a, a2, d))
                                    continue;
                                for (int b2 = 0; b2 < n; ++b2) {
                                    if (! has_edge(h, b, b2, d) || ! has_edge(h, a, b2, d))
                                        continue;
                                    for (int c2 = 0; c2 < n; ++c2) {
                                        if (! has_edge(h, c, c2, d) || has_edge(h, a, c2, d))
                                            continue;
                                        if (! has_edge(h, b, c2, d))
                                            continue;
                                        adj[id(a, b, c)].push_back(TripleStep{id(a2, b2, c2), d});
                                    }
                                }
                            }
            return adj;
        }
    }

    std::optional<CircularNWitness> find_circular_n(const Digraph & h)
    {
        int n = h.vertex_count();
        if (n < 2)
            return std::nullopt;
        ColouredTripleDigraph hpp(h);
        int t_count = hpp.triple_count();
        auto bridges = split_steps(h);

        // reverse adjacency restricted to non-blue arcs, for the backward half
        std::vector<std::vector<TripleStep>> rev_nonblue(t_count);
        for (int u = 0; u < t_count; ++u)
            for (const auto & arc : hpp.arcs_from(u))
                if (arc.colour != ArcColour::blue)
                    rev_nonblue[arc.to].push_back(TripleStep{u, arc.dir});

        std::vector<int> parent(t_count), parent_dir(t_count);
        std::vector<int> next(t_count), next_dir(t_count);

        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y)
                    continue;
                int start = hpp.triple_id(x, y, y);
                int target = hpp.triple_id(x, x, y);

                // triples reachable from (x,y,y) using no brown arc
                std::fill(parent.begin(), parent.end(), -2);
                parent[start] = -1;
                std::deque<int> queue{start};
                while (! queue.empty()) {
                    int u = queue.front();
                    queue.pop_front();
                    for (const auto & arc : hpp.arcs_from(u))
                        if (arc.colour != ArcColour::brown && parent[arc.to] == -2) {
                            parent[arc.to] = u;
                            parent_dir[arc.to] = static_cast<int>(arc.dir);
                            queue.push_back(arc.to);
                        }
                }

                // triples that reach (x,x,y) using no blue arc
                std::fill(next.begin(), next.end(), -2);
                next[target] = -1;
                queue.assign(1, target);
                while (! queue.empty()) {
                    int u = queue.front();
                    queue.pop_front();
                    for (const auto & step : rev_nonblue[u])
                        if (next[step.to] == -2) {
                            next[step.to] = u;
                            next_dir[step.to] = static_cast<int>(step.dir);
                            queue.push_back(step.to);
                        }
                }

                int meet = -1;
                for (int t = 0; t < t_count; ++t)
                    if (parent[t] != -2 && next[t] != -2) {
                        meet = t;
                        break;
                    }
                int bridge_from = -1, bridge_to = -1;
                Direction bridge_dir = Direction::forward;
                if (meet == -1) {
                    for (int u = 0; u < t_count && bridge_from == -1; ++u) {
                        if (parent[u] == -2)
                            continue;
                        int best_to = std::numeric_limits<int>::max();
                        Direction best_dir = Direction::forward;
                        for (const auto & step : bridges[u])
                            if (next[step.to] != -2 && (step.to < best_to ||
                                    (step.to == best_to && step.dir == Direction::forward))) {
                                best_to = step.to;
                                best_dir = step.dir;
                            }
                        if (best_to != std::numeric_limits<int>::max()) {
                            bridge_from = u;
                            bridge_to = best_to;
                            bridge_dir = best_dir;
                        }
                    }
                    if (bridge_from == -1)
                        continue;
                }

                // decode the triple path into the three walks
                std::vector<std::pair<int, Direction>> path;  // (triple, dir of step into it)
                auto prepend_half = [&](int t) {
                    std::vector<std::pair<int, Direction>> up;
                    while (parent[t] != -1) {
                        up.emplace_back(t, static_cast<Direction>(parent_dir[t]));
                        t = parent[t];
                    }
                    std::reverse(up.begin(), up.end());
                    return up;
                };
                int tail_from;
                if (meet != -1) {
                    path = prepend_half(meet);
                    tail_from = meet;
                }
                else {
                    path = prepend_half(bridge_from);
                    path.emplace_back(bridge_to, bridge_dir);
                    tail_from = bridge_to;
                }
                while (next[tail_from] != -1) {
                    path.emplace_back(next[tail_from], static_cast<Direction>(next_dir[tail_from]));
                    tail_from = next[tail_from];
                }

                CircularNWitness w;
                w.x.start = x;
                w.z.start = y;
                w.y.start = y;
                for (auto [t, d] : path) {
                    auto [a, b, c] = hpp.triple_of(t);
                    w.x.steps.push_back(Step{d, a});
                    w.z.steps.push_back(Step{d, b});
                    w.y.steps.push_back(Step{d, c});
                }
                if (! validate_circular_n(h, w))
                    throw internal_error("decoded circular-N witness failed validation");
                return w;
            }
        return std::nullopt;
    }

    std::optional<IndependentEdges> has_independent_edges(const Digraph & h)
    {
        for (Direction d : {Direction::forward, Direction::backward})
            for (auto [u1, v1] : h.arcs())
                for (auto [u2, v2] : h.arcs()) {
                    int a = d == Direction::forward ? u1 : v1;
                    int b = d == Direction::forward ? v1 : u1;
                    int c = d == Direction::forward ? u2 : v2;
                    int e = d == Direction::forward ? v2 : u2;
                    if (! has_edge(h, a, e, d) && ! has_edge(h, c, b, d))
                        return IndependentEdges{{a, b}, {c, e}, d};
                }
        return std::nullopt;
    }

    std::optional<Bicycle> find_bicycle(const Digraph & h)
    {
        int n = h.vertex_count();
        std::vector<int> pairs;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y)
                    pairs.push_back(x * n + y);
        std::vector<std::vector<int>> adj(n * n);
        for (int p : pairs) {
            int x = p / n, y = p % n;
            for (int q : pairs) {
                int x2 = q / n, y2 = q % n;
                if (h.has_arc(x, x2) && h.has_arc(y, y2) && h.has_arc(y, x2) && ! h.has_arc(x, y2))
                    adj[p].push_back(q);
            }
        }
        for (int s : pairs) {
            // shortest directed cycle through s
            std::vector<int> parent(n * n, -2);
            std::deque<int> queue;
            for (int q : adj[s])
                if (parent[q] == -2) {
                    parent[q] = s;
                    queue.push_back(q);
                }
            while (! queue.empty() && parent[s] == -2) {
                int u = queue.front();
                queue.pop_front();
                for (int q : adj[u])
                    if (parent[q] == -2) {
                        parent[q] = u;
                        queue.push_back(q);
                    }
            }
            if (parent[s] == -2)
                continue;
            std::vector<int> cycle{s};
            int u = parent[s];
            while (u != s) {
                cycle.push_back(u);
                u = parent[u];
            }
            cycle.push_back(s);
            std::reverse(cycle.begin(), cycle.end());
            Bicycle b;
            b.x.start = cycle.front() / n;
            b.y.start = cycle.front() % n;
            for (std::size_t i = 1; i < cycle.size(); ++i) {
                b.x.steps.push_back(Step{Direction::forward, cycle[i] / n});
                b.y.steps.push_back(Step{Direction::forward, cycle[i] % n});
            }
            if (! validate_walk(h, b.x) || ! validate_walk(h, b.y) ||
                    b.x.end() != b.x.start || b.y.end() != b.y.start ||
                    ! avoids(h, b.x, b.y))
                throw internal_error("decoded bicycle failed validation");
            for (int i = 0; i < b.x.length(); ++i)
                if (! h.has_arc(b.y.vertex(i), b.x.vertex(i + 1)))
                    throw internal_error("decoded bicycle missing a y_i x_{i+1} arc");
            return b;
        }
        return std::nullopt;
    }

    std::optional<DatWitness> find_dat(const Digraph & h)
    {
        int n = h.vertex_count();
        if (n < 3)
            return std::nullopt;
        PairStructure ps(h);

        // arcs where the first walk avoids both companions
        int t_count = n * n * n;
        auto id = [n](int a, int b, int c) { return (a * n + b) * n + c; };
        std::vector<std::vector<int>> adj(t_count);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (Direction d : {Direction::forward, Direction::backward})
                        for (int a2 = 0; a2 < n; ++a2) {
                            if (! has_edge(h, a, a2, d))
                                continue;
                            for (int b2 = 0; b2 < n; ++b2) {
                                if (! has_edge(h, b, b2, d) || has_edge(h, a, b2, d))
                                    continue;
                                for (int c2 = 0; c2 < n; ++c2) {
                                    if (! has_edge(h, c, c2, d) || has_edge(h, a, c2, d))
                                        continue;
                                    adj[id(a, b, c)].push_back(id(a2, b2, c2));
                                }
                            }
                        }

        auto probe = [&](int x, int y, int z) -> std::optional<std::pair<int, int>> {
            int start = id(x, y, z);
            std::vector<char> seen(t_count, 0);
            seen[start] = 1;
            std::deque<int> queue{start};
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : adj[u])
                    if (! seen[v]) {
                        seen[v] = 1;
                        queue.push_back(v);
                    }
            }
            for (int t = 0; t < t_count; ++t) {
                if (! seen[t])
                    continue;
                int p = t / (n * n), q = t / n % n, r = t % n;
                if (q == r && p != q && ps.is_invertible(p, q))
                    return std::make_pair(p, q);
            }
            return std::nullopt;
        };

        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                for (int w = v + 1; w < n; ++w) {
                    DatWitness wit;
                    wit.vertices = {u, v, w};
                    bool ok = true;
                    const std::array<std::array<int, 3>, 3> starts{{{u, v, w}, {v, u, w}, {w, u, v}}};
                    for (int i = 0; i < 3 && ok; ++i) {
                        auto r = probe(starts[i][0], starts[i][1], starts[i][2]);
                        if (! r)
                            ok = false;
                        else
                            wit.sb[i] = *r;
                    }
                    if (ok)
                        return wit;
                }
        return std::nullopt;
    }

    std::string verdict_name(Verdict v)
    {
        switch (v) {
        case Verdict::np_complete: return "NP-complete";
        case Verdict::p_nl_hard: return "P∩NL-hard";
        case Verdict::l_hard: return "L∩L-hard";
        case Verdict::fo_definable: return "FO-definable";
        }
        throw internal_error("unknown verdict");
    }

    Classification classify(const Digraph & h)
    {
        Classification result;
        result.dat = find_dat(h);
        result.circular_n = find_circular_n(h);
        result.bicycle = find_bicycle(h);
        result.independent_edges = has_independent_edges(h);
        if (result.dat)
            result.verdict = Verdict::np_complete;
        else if (result.circular_n)
            result.verdict = Verdict::p_nl_hard;
        else if (result.bicycle || result.independent_edges)
            result.verdict = Verdict::l_hard;
        else
            result.verdict = Verdict::fo_definable;
        if (! result.circular_n)
            result.hm_chain_length = hm_chain_length(h);
        return result;
    }
}
