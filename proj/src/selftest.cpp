#include <lhom/detect.hpp>
#include <lhom/errors.hpp>
#include <lhom/gadget.hpp>
#include <lhom/hm_chain.hpp>
#include <lhom/selftest.hpp>
#include <lhom/solver.hpp>

#include <algorithm>
#include <deque>
#include <sstream>

namespace lhom
{
    Digraph random_digraph(Rng & rng, int n, double p)
    {
        std::vector<std::pair<int, int>> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng.chance(p))
                    arcs.emplace_back(u, v);
        return Digraph(n, std::move(arcs));
    }

    std::vector<Digraph> enumerate_digraphs(int n)
    {
        std::vector<std::pair<int, int>> cells;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                cells.emplace_back(u, v);
        std::vector<Digraph> all;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
            std::vector<std::pair<int, int>> arcs;
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (mask >> i & 1)
                    arcs.push_back(cells[i]);
            all.emplace_back(n, std::move(arcs));
        }
        return all;
    }

    std::string describe_digraph(const Digraph & d)
    {
        std::ostringstream out;
        out << "n=" << d.vertex_count() << " arcs=";
        bool first = true;
        for (auto [u, v] : d.arcs()) {
            if (! first)
                out << ",";
            first = false;
            out << u << ">" << v;
        }
        return out.str();
    }

    namespace
    {
        Digraph reflexive_symmetric(int n, const std::vector<std::pair<int, int>> & edges)
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

        std::vector<int> random_list(Rng & rng, int hn, double p)
        {
            std::vector<int> list;
            for (int v = 0; v < hn; ++v)
                if (rng.chance(p))
                    list.push_back(v);
            return list;
        }

        bool has_directed_path(const Digraph & d, int s, int t)
        {
            std::vector<char> seen(d.vertex_count(), 0);
            std::deque<int> queue{s};
            seen[s] = 1;
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                if (u == t)
                    return true;
                for (int v : d.out_neighbours(u))
                    if (! seen[v]) {
                        seen[v] = 1;
                        queue.push_back(v);
                    }
            }
            return false;
        }

        struct Suites
        {
            SelftestReport & report;

            void fail(const std::string & suite, const std::string & detail)
            {
                report.violations.push_back(suite + ": " + detail);
            }

            void bump(const std::string & counter, long by = 1)
            {
                report.counters[counter] += by;
            }
        };

        // equivalence of the detector with chain construction, plus the pair
        // digraph structure checks that hold for chain-admitting templates
        void suite_equivalence(Suites & s, const std::vector<Digraph> & digraphs)
        {
            for (const auto & h : digraphs) {
                s.bump("a.digraphs");
                auto witness = find_circular_n(h);
                auto chain = build_hm_chain(h);
                if (witness && chain) {
                    s.fail("a", "chain built despite circular N on " + describe_digraph(h));
                    continue;
                }
                if (! witness && ! chain) {
                    s.fail("a", "no chain for circular-N-free " + describe_digraph(h));
                    continue;
                }
                PairStructure ps(h);
                if (witness) {
                    if (! validate_circular_n(h, *witness))
                        s.fail("a", "invalid witness on " + describe_digraph(h));
                    continue;
                }
                s.bump("a.chains");
                if (! verify_hm_identities(*chain).ok())
                    s.fail("a", "identity violation on " + describe_digraph(h));
                for (const auto & f : *chain)
                    if (! verify_polymorphism(h, f).ok())
                        s.fail("a", "polymorphism violation on " + describe_digraph(h));
                if (h.vertex_count() >= 2 &&
                        static_cast<int>(chain->size()) != ps.max_mu())
                    s.fail("a", "chain length mismatch on " + describe_digraph(h));

                for (const auto & arc : ps.arcs()) {
                    auto [x, y] = ps.pair_of(arc.from);
                    auto [x2, y2] = ps.pair_of(arc.to);
                    bool same_component = ps.component(x, y) == ps.component(x2, y2);
                    if (same_component && ! arc.is_double)
                        s.fail("a", "single intra-component pair arc on " + describe_digraph(h));
                    if (! arc.is_double && ps.mu(x, y) >= ps.mu(x2, y2))
                        s.fail("a", "single pair arc without mu increase on " + describe_digraph(h));
                    if (ps.mu(x, y) > ps.mu(x2, y2))
                        s.fail("a", "mu not monotone along pair arc on " + describe_digraph(h));
                }
                if (h.vertex_count() <= 4) {
                    // property (*): a one-sided chasing edge forces a later component
                    int n = h.vertex_count();
                    for (Direction d : {Direction::forward, Direction::backward})
                        for (int ai = 0; ai < n; ++ai)
                            for (int bi = 0; bi < n; ++bi)
                                for (int aj = 0; aj < n; ++aj)
                                    for (int bj = 0; bj < n; ++bj) {
                                        if (ai == bi || aj == bj)
                                            continue;
                                        if (has_edge(h, ai, aj, d) && has_edge(h, bi, bj, d) &&
                                                has_edge(h, bi, aj, d) && ! has_edge(h, ai, bj, d) &&
                                                ps.component(ai, bi) >= ps.component(aj, bj))
                                            s.fail("a", "component order violation on " +
                                                describe_digraph(h));
                                    }
                }
            }
        }

        void suite_monotonicity(Suites & s, const std::vector<Digraph> & digraphs)
        {
            for (const auto & h : digraphs) {
                s.bump("b.digraphs");
                bool dat = find_dat(h).has_value();
                bool cn = find_circular_n(h).has_value();
                bool bicycle = find_bicycle(h).has_value();
                bool indep = has_independent_edges(h).has_value();
                if (dat && ! cn)
                    s.fail("b", "DAT without circular N on " + describe_digraph(h));
                if (cn && ! bicycle && ! indep)
                    s.fail("b", "circular N without bicycle or independent edges on " +
                        describe_digraph(h));
                if (bicycle && ! cn)
                    s.fail("b", "bicycle without circular N on " + describe_digraph(h));
            }
        }

        void suite_solver(Suites & s, Rng & rng, const std::vector<Digraph> & chain_templates,
            int trials)
        {
            if (chain_templates.empty())
                return;
            for (int trial = 0; trial < trials; ++trial) {
                const Digraph & h = chain_templates[rng.below(
                    static_cast<int>(chain_templates.size()))];
                PairStructure ps(h);
                Instance inst;
                int gn = rng.below(8);
                inst.g = random_digraph(rng, gn, rng.chance(0.5) ? 0.2 : 0.5);
                for (int v = 0; v < gn; ++v)
                    inst.lists.push_back(random_list(rng, h.vertex_count(),
                        rng.chance(0.5) ? 0.5 : 0.8));
                s.bump("c.instances");

                long applications = 0;
                bool transducer_bad = false;
                SolveOptions options;
                options.skip_circular_n_check = true;
                options.observer = [&](const TransducerEvent & event) {
                    ++applications;
                    bool changed = false;
                    for (int v = 0; v < event.before.g.vertex_count(); ++v) {
                        bool relevant = std::find(event.relevant.begin(), event.relevant.end(),
                            v) != event.relevant.end();
                        if (! relevant && event.before.lists[v] != event.after.lists[v])
                            transducer_bad = true;
                        if (event.before.lists[v] != event.after.lists[v])
                            changed = true;
                    }
                    if (changed) {
                        s.bump("d.oracle_checks");
                        bool pre = oracle_solve(h, event.before).has_value();
                        bool post = oracle_solve(h, event.after).has_value();
                        if (pre != post)
                            transducer_bad = true;
                    }
                };
                auto got = solve(h, inst, options);
                s.bump("d.applications", applications);
                if (transducer_bad)
                    s.fail("d", "transducer violation on " + describe_digraph(h) +
                        " with " + describe_digraph(inst.g));
                auto want = oracle_solve(h, inst);
                if (got.has_value() != want.has_value())
                    s.fail("c", "solver/oracle disagreement on " + describe_digraph(h) +
                        " with " + describe_digraph(inst.g));
                if (got && ! validate_homomorphism(h, inst, *got))
                    s.fail("c", "solver returned an invalid map on " + describe_digraph(h));
            }
        }

        void suite_gadget(Suites & s, Rng & rng,
            const std::vector<Digraph> & circular_templates, int trials)
        {
            std::vector<std::pair<Digraph, CircularNWitness>> prepared;
            for (const auto & h : circular_templates)
                prepared.emplace_back(h, *find_circular_n(h));
            for (int trial = 0; trial < trials; ++trial) {
                int nv = 2 + rng.below(7);
                Digraph st = random_digraph(rng, nv, rng.chance(0.5) ? 0.2 : 0.4);
                for (const auto & [h, witness] : prepared) {
                    s.bump("e.cases");
                    auto gadget = build_gadget(h, witness, st, 0, 1);
                    bool solvable = oracle_solve(h, gadget.instance).has_value();
                    bool path = has_directed_path(st, 0, 1);
                    if (solvable == path)
                        s.fail("e", "reduction mismatch on " + describe_digraph(h) +
                            " with st " + describe_digraph(st));
                }
            }
        }
    }

    std::string SelftestReport::to_string() const
    {
        std::ostringstream out;
        for (const auto & [name, value] : counters)
            out << name << " = " << value << "\n";
        for (const auto & violation : violations)
            out << "VIOLATION " << violation << "\n";
        out << (ok() ? "selftest: PASS" : "selftest: FAIL") << "\n";
        return out.str();
    }

    nlohmann::json SelftestReport::to_json() const
    {
        return nlohmann::json{
            {"ok", ok()},
            {"counters", counters},
            {"violations", violations}};
    }

    SelftestReport run_selftest(const SelftestOptions & options)
    {
        SelftestReport report;
        Suites suites{report};
        Rng rng(options.seed);

        std::vector<Digraph> digraphs;
        for (int n = 1; n <= std::min(options.max_n, 3); ++n)
            for (auto & d : enumerate_digraphs(n))
                digraphs.push_back(std::move(d));
        if (options.max_n >= 4)
            for (int i = 0; i < options.samples; ++i) {
                int n = 4 + rng.below(options.max_n - 3);
                digraphs.push_back(random_digraph(rng, n, rng.chance(0.5) ? 0.2 : 0.5));
            }

        suite_equivalence(suites, digraphs);
        suite_monotonicity(suites, digraphs);

        std::vector<Digraph> chain_templates, circular_templates;
        for (const auto & h : digraphs) {
            if (h.vertex_count() < 2)
                continue;
            if (find_circular_n(h))
                circular_templates.push_back(h);
            else
                chain_templates.push_back(h);
        }
        suite_solver(suites, rng, chain_templates, 250);

        std::vector<Digraph> gadget_templates;
        for (int i = 0; i < 10 && ! circular_templates.empty(); ++i)
            gadget_templates.push_back(circular_templates[rng.below(
                static_cast<int>(circular_templates.size()))]);
        gadget_templates.push_back(reflexive_symmetric(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
        suite_gadget(suites, rng, gadget_templates, 30);

        std::sort(report.violations.begin(), report.violations.end());
        return report;
    }
}
