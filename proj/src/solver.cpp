#include <lhom/detect.hpp>
#include <lhom/errors.hpp>
#include <lhom/solver.hpp>

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>
#include <unordered_map>

namespace lhom
{
    void normalize_instance(Instance & inst)
    {
        for (auto & list : inst.lists) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    void validate_instance(const Digraph & h, const Instance & inst)
    {
        if (static_cast<int>(inst.lists.size()) != inst.g.vertex_count())
            throw input_error("instance needs one list per vertex");
        for (const auto & list : inst.lists) {
            if (! std::is_sorted(list.begin(), list.end()))
                throw input_error("lists must be sorted");
            if (std::adjacent_find(list.begin(), list.end()) != list.end())
                throw input_error("lists must not repeat values");
            for (int v : list)
                if (v < 0 || v >= h.vertex_count())
                    throw input_error("list value outside the template");
        }
    }

    bool validate_homomorphism(const Digraph & h, const Instance & inst,
        const Homomorphism & f)
    {
        if (static_cast<int>(f.size()) != inst.g.vertex_count())
            return false;
        for (int v = 0; v < inst.g.vertex_count(); ++v) {
            const auto & list = inst.lists[v];
            if (! std::binary_search(list.begin(), list.end(), f[v]))
                return false;
        }
        for (auto [u, v] : inst.g.arcs())
            if (! h.has_arc(f[u], f[v]))
                return false;
        return true;
    }

    namespace
    {
        using Mask = std::uint64_t;

        // backtracking with forward checking over bitmask domains
        bool oracle_search(const Digraph & h, const Instance & inst,
            const std::function<bool(const Homomorphism &)> & fn)
        {
            int hn = h.vertex_count();
            if (hn > 64)
                throw input_error("oracle supports templates with at most 64 vertices");
            int gn = inst.g.vertex_count();
            std::vector<Mask> succ_mask(hn, 0), pred_mask(hn, 0);
            for (auto [u, v] : h.arcs()) {
                succ_mask[u] |= Mask{1} << v;
                pred_mask[v] |= Mask{1} << u;
            }
            std::vector<Mask> domain(gn, 0);
            for (int v = 0; v < gn; ++v)
                for (int c : inst.lists[v])
                    domain[v] |= Mask{1} << c;

            Homomorphism f(gn, -1);
            std::vector<std::pair<int, Mask>> undo;

            std::function<bool(int)> descend = [&](int v) -> bool {
                if (v == gn)
                    return ! fn(f);
                Mask dom = domain[v];
                while (dom) {
                    int val = std::countr_zero(dom);
                    dom &= dom - 1;
                    if (inst.g.has_arc(v, v) && ! h.has_arc(val, val))
                        continue;
                    std::size_t undo_mark = undo.size();
                    bool dead = false;
                    auto prune = [&](int w, Mask allowed) {
                        Mask next = domain[w] & allowed;
                        if (next != domain[w]) {
                            undo.emplace_back(w, domain[w]);
                            domain[w] = next;
                        }
                        if (next == 0)
                            dead = true;
                    };
                    for (int w : inst.g.out_neighbours(v))
                        if (w > v && ! dead)
                            prune(w, succ_mask[val]);
                    for (int w : inst.g.in_neighbours(v))
                        if (w > v && ! dead)
                            prune(w, pred_mask[val]);
                    if (! dead) {
                        f[v] = val;
                        if (descend(v + 1))
                            return true;
                        f[v] = -1;
                    }
                    while (undo.size() > undo_mark) {
                        domain[undo.back().first] = undo.back().second;
                        undo.pop_back();
                    }
                }
                return false;
            };
            return descend(0);
        }
    }

    std::optional<Homomorphism> oracle_solve(const Digraph & h, const Instance & inst)
    {
        validate_instance(h, inst);
        std::optional<Homomorphism> found;
        oracle_search(h, inst, [&](const Homomorphism & f) {
            found = f;
            return false;
        });
        return found;
    }

    void oracle_for_each(const Digraph & h, const Instance & inst,
        const std::function<bool(const Homomorphism &)> & fn)
    {
        validate_instance(h, inst);
        oracle_search(h, inst, fn);
    }

    int TripleDigraph::id(int y, int c, int d) const
    {
        if (y < 0 || y >= g_size || c < 0 || c >= h_size || d < 0 || d >= h_size)
            return -1;
        return index[(y * h_size + c) * h_size + d];
    }

    bool TripleDigraph::weakly_connected(int y1, int c1, int d1, int y2, int c2, int d2) const
    {
        int t1 = id(y1, c1, d1), t2 = id(y2, c2, d2);
        return t1 != -1 && t2 != -1 && weak_component[t1] == weak_component[t2];
    }

    TripleDigraph build_triple_digraph(const Digraph & h, const Instance & inst)
    {
        TripleDigraph tr;
        tr.g_size = inst.g.vertex_count();
        tr.h_size = h.vertex_count();
        tr.index.assign(static_cast<std::size_t>(tr.g_size) * tr.h_size * tr.h_size, -1);
        for (int y = 0; y < tr.g_size; ++y)
            for (int c : inst.lists[y])
                for (int d : inst.lists[y])
                    if (c != d) {
                        tr.index[(y * tr.h_size + c) * tr.h_size + d] =
                            static_cast<int>(tr.triples.size());
                        tr.triples.push_back({y, c, d});
                    }
        int count = static_cast<int>(tr.triples.size());
        tr.adj.assign(count, {});
        tr.weak_component.assign(count, -1);

        std::vector<std::vector<int>> undirected(count);
        for (auto [y, y2] : inst.g.arcs())
            for (int c : inst.lists[y])
                for (int d : inst.lists[y]) {
                    if (c == d)
                        continue;
                    int from = tr.id(y, c, d);
                    for (int c2 : inst.lists[y2]) {
                        if (! h.has_arc(c, c2) || h.has_arc(d, c2))
                            continue;
                        for (int d2 : inst.lists[y2]) {
                            if (c2 == d2 || ! h.has_arc(d, d2) || h.has_arc(c, d2))
                                continue;
                            int to = tr.id(y2, c2, d2);
                            tr.adj[from].push_back(to);
                            undirected[from].push_back(to);
                            undirected[to].push_back(from);
                        }
                    }
                }

        for (int s = 0; s < count; ++s) {
            if (tr.weak_component[s] != -1)
                continue;
            int comp = tr.weak_component_count++;
            std::vector<int> stack{s};
            tr.weak_component[s] = comp;
            while (! stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : undirected[u])
                    if (tr.weak_component[v] == -1) {
                        tr.weak_component[v] = comp;
                        stack.push_back(v);
                    }
            }
        }
        return tr;
    }

    namespace
    {
        struct SolveContext
        {
            const Digraph & h;
            const PairStructure & ps;
            TransducerObserver observer;
            std::unordered_map<std::string, bool> memo;
        };

        std::string instance_key(const Instance & inst)
        {
            std::string key;
            auto put = [&key](int v) {
                key.append(reinterpret_cast<const char *>(&v), sizeof v);
            };
            put(inst.g.vertex_count());
            for (auto [u, v] : inst.g.arcs()) {
                put(u);
                put(v);
            }
            put(-1);
            for (const auto & list : inst.lists) {
                put(static_cast<int>(list.size()));
                for (int v : list)
                    put(v);
            }
            return key;
        }

        int max_list_size(const Instance & inst)
        {
            int best = 0;
            for (const auto & list : inst.lists)
                best = std::max(best, static_cast<int>(list.size()));
            return best;
        }

        bool solve_rec_impl(SolveContext & ctx, const Instance & inst, int depth);

        bool ab_test_impl(SolveContext & ctx, const Instance & inst,
            const TripleDigraph & tr, int x, int a, int b, int depth)
        {
            int root = tr.id(x, a, b);
            if (root == -1)
                throw internal_error("ab-test root triple missing");
            int comp = tr.weak_component[root];

            int gn = inst.g.vertex_count();
            std::vector<char> in_sub(gn, 0);
            for (int t = 0; t < static_cast<int>(tr.triples.size()); ++t)
                if (tr.weak_component[t] == comp)
                    in_sub[tr.triples[t][0]] = 1;

            std::vector<int> sub_vertices;
            for (int y = 0; y < gn; ++y)
                if (in_sub[y])
                    sub_vertices.push_back(y);

            // every candidate value, x's included, must pass all three filters
            auto keeps = [&](int y, int c) {
                bool has_pair = false;
                for (int d : inst.lists[y])
                    if (d != c && tr.id(y, c, d) != -1 &&
                            tr.weak_component[tr.id(y, c, d)] == comp) {
                        has_pair = true;
                        break;
                    }
                if (! has_pair)
                    return false;
                for (int e : inst.lists[y])
                    if (e != c && tr.id(y, e, c) != -1 &&
                            tr.weak_component[tr.id(y, e, c)] == comp)
                        return false;
                for (int z : inst.g.in_neighbours(y)) {
                    if (in_sub[z])
                        continue;
                    bool supported = false;
                    for (int t : inst.lists[z])
                        if (ctx.h.has_arc(t, c)) {
                            supported = true;
                            break;
                        }
                    if (! supported)
                        return false;
                }
                for (int z : inst.g.out_neighbours(y)) {
                    if (in_sub[z])
                        continue;
                    bool supported = false;
                    for (int t : inst.lists[z])
                        if (ctx.h.has_arc(c, t)) {
                            supported = true;
                            break;
                        }
                    if (! supported)
                        return false;
                }
                return true;
            };

            Instance sub;
            std::vector<int> remap(gn, -1);
            for (std::size_t i = 0; i < sub_vertices.size(); ++i)
                remap[sub_vertices[i]] = static_cast<int>(i);
            std::vector<std::pair<int, int>> sub_arcs;
            for (auto [u, v] : inst.g.arcs())
                if (remap[u] != -1 && remap[v] != -1)
                    sub_arcs.emplace_back(remap[u], remap[v]);
            sub.g = Digraph(static_cast<int>(sub_vertices.size()), std::move(sub_arcs));
            sub.lists.resize(sub_vertices.size());
            for (int y : sub_vertices) {
                std::vector<int> kept;
                for (int c : inst.lists[y])
                    if ((y != x || c == a) && keeps(y, c))
                        kept.push_back(c);
                if (static_cast<int>(kept.size()) > static_cast<int>(inst.lists[y].size()) - 1)
                    throw internal_error("ab-test sublists failed to shrink");
                sub.lists[remap[y]] = std::move(kept);
            }
            return solve_rec_impl(ctx, sub, depth + 1);
        }

        bool accepts_singletons(const SolveContext & ctx, const Instance & inst)
        {
            for (const auto & list : inst.lists) {
                if (list.empty())
                    return false;
                if (list.size() > 1)
                    throw internal_error("acceptance check on non-singleton lists");
            }
            for (auto [u, v] : inst.g.arcs())
                if (! ctx.h.has_arc(inst.lists[u][0], inst.lists[v][0]))
                    return false;
            return true;
        }

        Instance apply_transducer_impl(SolveContext & ctx, const Instance & inst,
            int k, int depth)
        {
            if (k < 1 || k > ctx.ps.pair_count())
                throw input_error("transducer index out of range");
            if (! ctx.ps.is_k_good(inst.lists, k))
                throw input_error("transducer input lists are not k-good");
            auto [a, b] = ctx.ps.processing_order()[k - 1];

            std::vector<int> relevant;
            for (int x = 0; x < inst.g.vertex_count(); ++x) {
                const auto & list = inst.lists[x];
                if (std::binary_search(list.begin(), list.end(), a) &&
                        std::binary_search(list.begin(), list.end(), b))
                    relevant.push_back(x);
            }

            Instance out = inst;
            if (! relevant.empty()) {
                TripleDigraph tr = build_triple_digraph(ctx.h, inst);
                std::vector<int> test_result(inst.g.vertex_count(), -1);
                auto test = [&](int x) {
                    if (test_result[x] == -1)
                        test_result[x] = ab_test_impl(ctx, inst, tr, x, a, b, depth) ? 1 : 0;
                    return test_result[x] == 1;
                };
                auto drop = [](std::vector<int> list, int value) {
                    list.erase(std::remove(list.begin(), list.end(), value), list.end());
                    return list;
                };
                auto grouped_with = [&](int x, int rep) {
                    for (int c : inst.lists[x])
                        if (c != a && tr.weakly_connected(x, c, a, rep, a, b))
                            return true;
                    return false;
                };

                std::vector<int> successful_reps;
                for (std::size_t i = 0; i < relevant.size(); ++i) {
                    int xi = relevant[i];
                    bool in_previous_group = false;
                    for (int xj : successful_reps)
                        if (grouped_with(xi, xj)) {
                            in_previous_group = true;
                            break;
                        }
                    if (in_previous_group)
                        continue;
                    if (test(xi)) {
                        out.lists[xi] = drop(inst.lists[xi], b);
                        for (std::size_t l = i + 1; l < relevant.size(); ++l) {
                            int xl = relevant[l];
                            bool joins = false;
                            for (int c : inst.lists[xl]) {
                                if (c == a || ! tr.weakly_connected(xl, c, a, xi, a, b))
                                    continue;
                                bool claimed_earlier = false;
                                for (int xj : successful_reps)
                                    if (tr.weakly_connected(xl, c, a, xj, a, b)) {
                                        claimed_earlier = true;
                                        break;
                                    }
                                if (! claimed_earlier) {
                                    joins = true;
                                    break;
                                }
                            }
                            if (joins)
                                out.lists[xl] = drop(inst.lists[xl], a);
                        }
                        successful_reps.push_back(xi);
                    }
                    else
                        out.lists[xi] = drop(inst.lists[xi], a);
                }
            }

            for (int x : relevant) {
                const auto & list = out.lists[x];
                bool has_a = std::binary_search(list.begin(), list.end(), a);
                bool has_b = std::binary_search(list.begin(), list.end(), b);
                if (has_a == has_b)
                    throw internal_error("transducer must remove exactly one of the pair");
            }
            if (! ctx.ps.is_k_good(out.lists, k - 1))
                throw internal_error("transducer output lists are not (k-1)-good");

            if (ctx.observer)
                ctx.observer(TransducerEvent{k, a, b, depth, inst, out, relevant});
            return out;
        }

        Instance run_chain(SolveContext & ctx, Instance inst, int depth)
        {
            if (max_list_size(inst) <= 1)
                return inst;
            for (int k = ctx.ps.pair_count(); k >= 1; --k)
                inst = apply_transducer_impl(ctx, inst, k, depth);
            return inst;
        }

        bool solve_rec_impl(SolveContext & ctx, const Instance & inst, int depth)
        {
            if (depth > ctx.h.vertex_count())
                throw internal_error("list-size recursion exceeded the template size");
            std::string key = instance_key(inst);
            if (auto it = ctx.memo.find(key); it != ctx.memo.end())
                return it->second;
            bool accepted = accepts_singletons(ctx, run_chain(ctx, inst, depth));
            ctx.memo.emplace(std::move(key), accepted);
            return accepted;
        }
    }

    bool ab_test(const Digraph & h, const PairStructure & ps, const Instance & inst,
        int x, int a, int b)
    {
        validate_instance(h, inst);
        if (x < 0 || x >= inst.g.vertex_count())
            throw input_error("vertex out of range");
        if (a == b)
            throw input_error("ab-test needs distinct template vertices");
        const auto & list = inst.lists[x];
        if (! std::binary_search(list.begin(), list.end(), a) ||
                ! std::binary_search(list.begin(), list.end(), b))
            throw input_error("ab-test needs both values in the vertex list");
        SolveContext ctx{h, ps, {}, {}};
        TripleDigraph tr = build_triple_digraph(h, inst);
        return ab_test_impl(ctx, inst, tr, x, a, b, 0);
    }

    Instance apply_transducer(const Digraph & h, const PairStructure & ps,
        const Instance & inst, int k, const TransducerObserver & observer)
    {
        validate_instance(h, inst);
        SolveContext ctx{h, ps, observer, {}};
        return apply_transducer_impl(ctx, inst, k, 0);
    }

    bool solve_rec(const Digraph & h, const PairStructure & ps, const Instance & inst,
        int depth)
    {
        validate_instance(h, inst);
        SolveContext ctx{h, ps, {}, {}};
        return solve_rec_impl(ctx, inst, depth);
    }

    std::optional<Homomorphism> solve(const Digraph & h, const Instance & inst,
        const SolveOptions & options)
    {
        validate_instance(h, inst);
        if (! options.force && ! options.skip_circular_n_check && find_circular_n(h))
            throw input_error("template contains a circular N, so the transducer chain "
                "carries no guarantee; use oracle mode, or force at your own risk");
        PairStructure ps(h);
        SolveContext ctx{h, ps, options.observer, {}};
        Instance reduced = run_chain(ctx, inst, 0);
        if (! accepts_singletons(ctx, reduced))
            return std::nullopt;
        Homomorphism f(reduced.g.vertex_count());
        for (int v = 0; v < reduced.g.vertex_count(); ++v)
            f[v] = reduced.lists[v][0];
        if (! validate_homomorphism(h, inst, f))
            throw internal_error("assembled map failed homomorphism validation");
        return f;
    }
}
