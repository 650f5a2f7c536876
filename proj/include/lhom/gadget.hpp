#ifndef LHOM_GADGET_HPP
#define LHOM_GADGET_HPP

#include <lhom/detect.hpp>
#include <lhom/solver.hpp>

#include <utility>
#include <vector>

namespace lhom
{
    /// Where a gadget vertex came from: an original st-graph vertex, or
    /// position `position` on the path copy replacing `arc`.
    struct GadgetOrigin
    {
        bool is_original = true;
        int vertex = -1;
        std::pair<int, int> arc{-1, -1};
        int position = -1;

        bool operator==(const GadgetOrigin &) const = default;
    };

    struct GadgetOutput
    {
        Instance instance;
        std::vector<GadgetOrigin> provenance;
    };

    /// Replace every arc of the st-graph by a fresh copy of the witness path,
    /// identify copy endpoints with the arc endpoints, intersect lists where
    /// copies meet, then pin s to x and t to y.
    GadgetOutput build_gadget(const Digraph & h, const CircularNWitness & witness,
        const Digraph & st_graph, int s, int t);
}

#endif
