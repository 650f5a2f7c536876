#include <lhom/errors.hpp>
#include <lhom/gadget.hpp>

#include <algorithm>

namespace lhom
{
    GadgetOutput build_gadget(const Digraph & h, const CircularNWitness & witness,
        const Digraph & st_graph, int s, int t)
    {
        if (! validate_circular_n(h, witness))
            throw input_error("gadget needs a valid circular-N witness");
        int nv = st_graph.vertex_count();
        if (s < 0 || s >= nv || t < 0 || t >= nv)
            throw input_error("s or t out of range");
        if (s == t)
            throw input_error("s and t must be distinct");

        int len = witness.x.length();
        int x0 = witness.x.start;
        int y0 = witness.y.start;

        GadgetOutput out;
        std::vector<std::pair<int, int>> arcs;
        // every path-copy endpoint list is {x_0,y_0,z_0} = {x_n,y_n,z_n} = {x,y}
        out.instance.lists.assign(nv, y0 < x0 ? std::vector<int>{y0, x0}
                                              : std::vector<int>{x0, y0});
        out.provenance.resize(nv);
        for (int v = 0; v < nv; ++v)
            out.provenance[v] = GadgetOrigin{true, v, {-1, -1}, -1};

        int next_vertex = nv;
        for (auto [u, v] : st_graph.arcs()) {
            std::vector<int> chain(len + 1);
            chain[0] = u;
            chain[len] = v;
            for (int i = 1; i < len; ++i) {
                chain[i] = next_vertex++;
                std::vector<int> list{witness.x.vertex(i), witness.y.vertex(i),
                    witness.z.vertex(i)};
                std::sort(list.begin(), list.end());
                list.erase(std::unique(list.begin(), list.end()), list.end());
                out.instance.lists.push_back(std::move(list));
                out.provenance.push_back(GadgetOrigin{false, -1, {u, v}, i});
            }
            for (int i = 0; i < len; ++i) {
                if (witness.x.steps[i].dir == Direction::forward)
                    arcs.emplace_back(chain[i], chain[i + 1]);
                else
                    arcs.emplace_back(chain[i + 1], chain[i]);
            }
        }

        auto intersect_with = [&](int vertex, int value) {
            auto & list = out.instance.lists[vertex];
            if (std::binary_search(list.begin(), list.end(), value))
                list = {value};
            else
                list.clear();
        };
        intersect_with(s, x0);
        intersect_with(t, y0);

        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        out.instance.g = Digraph(next_vertex, std::move(arcs));
        return out;
    }
}
