#include <lhom/errors.hpp>
#include <lhom/pair_structure.hpp>

#include <algorithm>
#include <queue>
#include <set>

namespace lhom
{
    namespace
    {
        // Iterative Tarjan over an adjacency-list digraph restricted to `valid` ids.
        std::vector<int> strong_components(const std::vector<std::vector<int>> & adj,
            const std::vector<char> & valid, int & count)
        {
            int n = static_cast<int>(adj.size());
            std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
            std::vector<char> on_stack(n, 0);
            std::vector<int> stack;
            int next_index = 0;
            count = 0;
            struct Frame { int v; std::size_t child; };
            for (int root = 0; root < n; ++root) {
                if (! valid[root] || index[root] != -1)
                    continue;
                std::vector<Frame> work{{root, 0}};
                index[root] = low[root] = next_index++;
                stack.push_back(root);
                on_stack[root] = 1;
                while (! work.empty()) {
                    auto & [v, child] = work.back();
                    if (child < adj[v].size()) {
                        int w = adj[v][child++];
                        if (index[w] == -1) {
                            index[w] = low[w] = next_index++;
                            stack.push_back(w);
                            on_stack[w] = 1;
                            work.push_back({w, 0});
                        }
                        else if (on_stack[w])
                            low[v] = std::min(low[v], index[w]);
                    }
                    else {
                        if (low[v] == index[v]) {
                            while (true) {
                                int w = stack.back();
                                stack.pop_back();
                                on_stack[w] = 0;
                                comp[w] = count;
                                if (w == v)
                                    break;
                            }
                            ++count;
                        }
                        int finished = v;
                        work.pop_back();
                        if (! work.empty())
                            low[work.back().v] = std::min(low[work.back().v], low[finished]);
                    }
                }
            }
            return comp;
        }
    }

    PairStructure::PairStructure(const Digraph & h) :
        n_(h.vertex_count())
    {
        int slots = n_ * n_;
        std::vector<char> valid(std::max(slots, 1), 0);
        std::vector<int> pair_ids;
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (x != y) {
                    valid[x * n_ + y] = 1;
                    pair_ids.push_back(x * n_ + y);
                }
        m_ = static_cast<int>(pair_ids.size());
        adj_.assign(slots, {});
        std::set<std::pair<int, int>> arc_set;
        for (int p : pair_ids) {
            auto [x, y] = pair_of(p);
            for (int q : pair_ids) {
                auto [x2, y2] = pair_of(q);
                bool fwd = h.has_arc(x, x2) && h.has_arc(y, y2) && ! h.has_arc(x, y2);
                bool bwd = h.has_arc(x2, x) && h.has_arc(y2, y) && ! h.has_arc(y2, x);
                if (fwd || bwd) {
                    adj_[p].push_back(q);
                    arc_set.emplace(p, q);
                }
            }
        }
        // skew property: (x,y)(x',y') an arc forces (y',x')(y,x)
        for (auto [p, q] : arc_set) {
            auto [x2, y2] = pair_of(q);
            auto [x, y] = pair_of(p);
            if (! arc_set.count({y2 * n_ + x2, y * n_ + x}))
                throw internal_error("pair digraph skew property violated");
        }

        int raw_count = 0;
        auto raw_comp = strong_components(adj_, valid, raw_count);
        component_count_ = raw_count;

        // condensation + deterministic topological order: arcs go from earlier
        // to later components, ties broken by the smallest pair id inside
        std::vector<std::set<int>> succ(raw_count), pred(raw_count);
        for (auto [p, q] : arc_set)
            if (raw_comp[p] != raw_comp[q]) {
                succ[raw_comp[p]].insert(raw_comp[q]);
                pred[raw_comp[q]].insert(raw_comp[p]);
            }
        std::vector<int> smallest(raw_count, slots);
        for (int p : pair_ids)
            smallest[raw_comp[p]] = std::min(smallest[raw_comp[p]], p);
        std::vector<int> indegree(raw_count);
        using Entry = std::pair<int, int>;  // (smallest pair id, raw comp)
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
        for (int c = 0; c < raw_count; ++c) {
            indegree[c] = static_cast<int>(pred[c].size());
            if (indegree[c] == 0)
                ready.emplace(smallest[c], c);
        }
        std::vector<int> topo;
        std::vector<int> new_id(raw_count, -1);
        while (! ready.empty()) {
            auto [key, c] = ready.top();
            ready.pop();
            new_id[c] = static_cast<int>(topo.size());
            topo.push_back(c);
            for (int d : succ[c])
                if (--indegree[d] == 0)
                    ready.emplace(smallest[d], d);
        }
        if (static_cast<int>(topo.size()) != raw_count)
            throw internal_error("condensation is not acyclic");

        comp_.assign(slots, -1);
        for (int p : pair_ids)
            comp_[p] = new_id[raw_comp[p]];

        comp_mu_.assign(raw_count, 0);
        for (int c : topo) {
            int best = 0;
            for (int d : pred[c])
                best = std::max(best, comp_mu_[new_id[d]]);
            comp_mu_[new_id[c]] = best + 1;
        }
        max_mu_ = 0;
        for (int c = 0; c < raw_count; ++c)
            max_mu_ = std::max(max_mu_, comp_mu_[c]);

        std::vector<std::vector<int>> members(raw_count);
        for (int p : pair_ids)
            members[comp_[p]].push_back(p);
        pos_.assign(slots, 0);
        for (int c = 0; c < raw_count; ++c) {
            std::sort(members[c].begin(), members[c].end());
            for (int p : members[c]) {
                order_.push_back(pair_of(p));
                pos_[p] = static_cast<int>(order_.size());
            }
        }

        for (auto [p, q] : arc_set)
            arcs_.push_back(Arc{p, q, arc_set.count({q, p}) > 0});
    }

    int PairStructure::checked_id(int x, int y) const
    {
        if (x < 0 || x >= n_ || y < 0 || y >= n_)
            throw input_error("pair coordinate out of range");
        if (x == y)
            throw input_error("pair coordinates must be distinct");
        return x * n_ + y;
    }

    int PairStructure::pair_id(int x, int y) const
    {
        return checked_id(x, y);
    }

    int PairStructure::position(int x, int y) const
    {
        return pos_[checked_id(x, y)];
    }

    int PairStructure::component(int x, int y) const
    {
        return comp_[checked_id(x, y)];
    }

    int PairStructure::mu(int x, int y) const
    {
        if (x == y) {
            if (x < 0 || x >= n_)
                throw input_error("pair coordinate out of range");
            return 0;
        }
        return comp_mu_[comp_[checked_id(x, y)]];
    }

    bool PairStructure::is_invertible(int x, int y) const
    {
        return comp_[checked_id(x, y)] == comp_[checked_id(y, x)];
    }

    bool PairStructure::is_k_good(const std::vector<std::vector<int>> & lists, int k) const
    {
        for (const auto & list : lists)
            for (int u : list)
                for (int v : list)
                    if (u < v)
                        if (position(u, v) > k || position(v, u) > k)
                            return false;
        return true;
    }

    bool PairStructure::has_pair_arc(int from_id, int to_id) const
    {
        const auto & row = adj_[from_id];
        return std::find(row.begin(), row.end(), to_id) != row.end();
    }
}
