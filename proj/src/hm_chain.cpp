#include <lhom/detect.hpp>
#include <lhom/errors.hpp>
#include <lhom/hm_chain.hpp>

#include <algorithm>
#include <deque>

namespace lhom
{
    TernaryOpTable::TernaryOpTable(int n, std::vector<int> values) :
        n_(n),
        values_(std::move(values))
    {
        if (static_cast<int>(values_.size()) != n_ * n_ * n_)
            throw input_error("ternary table has wrong size");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c) {
                    int v = at(a, b, c);
                    if (v != a && v != b && v != c)
                        throw internal_error("ternary table is not conservative");
                }
    }

    namespace
    {
        // reversed arcs of the triple digraph whose steps keep walks from the
        // second and third coordinates avoiding the first
        std::vector<std::vector<int>> distinguisher_reverse_adj(const Digraph & h)
        {
            int n = h.vertex_count();
            auto id = [n](int a, int b, int c) { return (a * n + b) * n + c; };
            std::vector<std::vector<int>> radj(n * n * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (Direction d : {Direction::forward, Direction::backward})
                            for (int a2 = 0; a2 < n; ++a2) {
                                if (! has_edge(h, a, a2, d))
                                    continue;
                                if (has_edge(h, b, a2, d) || has_edge(h, c, a2, d))
                                    continue;
                                for (int b2 = 0; b2 < n; ++b2) {
                                    if (! has_edge(h, b, b2, d))
                                        continue;
                                    for (int c2 = 0; c2 < n; ++c2) {
                                        if (! has_edge(h, c, c2, d))
                                            continue;
                                        radj[id(a2, b2, c2)].push_back(id(a, b, c));
                                    }
                                }
                            }
            return radj;
        }

        // level[t] = largest i such that t reaches some (x,y,y) with mu(x,y) >= i
        std::vector<int> distinguisher_levels(const Digraph & h, const PairStructure & ps)
        {
            int n = h.vertex_count();
            auto radj = distinguisher_reverse_adj(h);
            std::vector<int> level(n * n * n, 0);
            int k = ps.max_mu();
            for (int i = 1; i <= k; ++i) {
                std::deque<int> queue;
                std::vector<char> seen(n * n * n, 0);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if (x != y && ps.mu(x, y) >= i) {
                            int t = (x * n + y) * n + y;
                            seen[t] = 1;
                            queue.push_back(t);
                        }
                while (! queue.empty()) {
                    int t = queue.front();
                    queue.pop_front();
                    level[t] = std::max(level[t], i);
                    for (int s : radj[t])
                        if (! seen[s]) {
                            seen[s] = 1;
                            queue.push_back(s);
                        }
                }
            }
            return level;
        }

        std::vector<TernaryOpTable> construct_chain(const Digraph & h, const PairStructure & ps)
        {
            int n = h.vertex_count();
            if (n <= 1)
                return {TernaryOpTable(n, std::vector<int>(n * n * n, 0))};
            int k = ps.max_mu();
            auto level = distinguisher_levels(h, ps);
            std::vector<TernaryOpTable> chain;
            chain.reserve(k);
            for (int i = 1; i <= k; ++i) {
                std::vector<int> values(n * n * n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        for (int c = 0; c < n; ++c) {
                            int mbc = ps.mu(b, c), mab = ps.mu(a, b), mac = ps.mu(a, c);
                            bool di = level[(a * n + b) * n + c] >= i;
                            int v;
                            if (mbc > i)
                                v = mab < i ? b : a;
                            else if (mbc == i)
                                v = (mac < i || (mac == i && ! di)) ? c : a;
                            else
                                v = mac < i ? c : a;
                            values[(a * n + b) * n + c] = v;
                        }
                chain.emplace_back(n, std::move(values));
            }
            return chain;
        }
    }

    bool is_distinguisher(const Digraph & h, const PairStructure & ps,
        int i, int a, int b, int c)
    {
        if (i < 1)
            throw input_error("distinguisher index must be positive");
        int n = h.vertex_count();
        if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
            throw input_error("vertex out of range");
        if (i > ps.max_mu())
            return false;
        auto level = distinguisher_levels(h, ps);
        return level[(a * n + b) * n + c] >= i;
    }

    int hm_chain_length(const PairStructure & ps)
    {
        return ps.template_size() <= 1 ? 1 : ps.max_mu();
    }

    int hm_chain_length(const Digraph & h)
    {
        return hm_chain_length(PairStructure(h));
    }

    std::optional<std::vector<TernaryOpTable>> build_hm_chain(const Digraph & h,
        const HmChainOptions & options)
    {
        if (! options.force_construct && find_circular_n(h))
            return std::nullopt;
        return construct_chain(h, PairStructure(h));
    }

    IdentityReport verify_hm_identities(const std::vector<TernaryOpTable> & chain)
    {
        if (chain.empty())
            throw input_error("empty chain");
        int n = chain.front().domain_size();
        for (const auto & f : chain)
            if (f.domain_size() != n)
                throw input_error("chain tables have mixed domain sizes");
        int k = static_cast<int>(chain.size());
        IdentityReport report;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (chain.front().at(x, y, y) != x)
                    report.violations.push_back({1, 1, x, y});
                for (int i = 0; i + 1 < k; ++i)
                    if (chain[i].at(x, x, y) != chain[i + 1].at(x, y, y))
                        report.violations.push_back({2, i + 1, x, y});
                if (chain.back().at(x, x, y) != y)
                    report.violations.push_back({3, k, x, y});
            }
        return report;
    }

    PolymorphismReport verify_polymorphism(const Digraph & h, const TernaryOpTable & f)
    {
        PolymorphismReport report;
        for (auto arc_a : h.arcs())
            for (auto arc_b : h.arcs())
                for (auto arc_c : h.arcs()) {
                    int from = f.at(arc_a.first, arc_b.first, arc_c.first);
                    int to = f.at(arc_a.second, arc_b.second, arc_c.second);
                    if (! h.has_arc(from, to))
                        report.violations.push_back({arc_a, arc_b, arc_c, from, to});
                }
        return report;
    }
}
