#ifndef LHOM_SOLVER_HPP
#define LHOM_SOLVER_HPP

#include <lhom/digraph.hpp>
#include <lhom/pair_structure.hpp>

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace lhom
{
    /// An input digraph plus one template-vertex list per vertex.
    struct Instance
    {
        Digraph g;
        std::vector<std::vector<int>> lists;

        bool operator==(const Instance &) const = default;
    };

    /// Sort and dedupe every list.
    void normalize_instance(Instance & inst);

    /// Lists must match the vertex count and stay inside the template.
    void validate_instance(const Digraph & h, const Instance & inst);

    using Homomorphism = std::vector<int>;

    bool validate_homomorphism(const Digraph & h, const Instance & inst,
        const Homomorphism & f);

    /// Exhaustive backtracking with forward checking; returns the
    /// lexicographically first homomorphism in vertex order.
    std::optional<Homomorphism> oracle_solve(const Digraph & h, const Instance & inst);

    /// Enumerate every homomorphism in lexicographic order; the callback
    /// returns false to stop early.
    void oracle_for_each(const Digraph & h, const Instance & inst,
        const std::function<bool(const Homomorphism &)> & fn);

    /// Triples (y,c,d) with c,d distinct members of L(y); arcs demand a G-step
    /// and synchronized mutually avoiding template steps.
    struct TripleDigraph
    {
        int g_size = 0, h_size = 0;
        std::vector<std::array<int, 3>> triples;
        std::vector<int> index;               // y*h^2 + c*h + d -> triple index or -1
        std::vector<std::vector<int>> adj;    // directed arcs
        std::vector<int> weak_component;
        int weak_component_count = 0;

        int id(int y, int c, int d) const;
        bool weakly_connected(int y1, int c1, int d1, int y2, int c2, int d2) const;
    };

    TripleDigraph build_triple_digraph(const Digraph & h, const Instance & inst);

    /// One list-reduction pass for the k-th pair of the processing order,
    /// removing exactly one of {a_k, b_k} from every list containing both.
    struct TransducerEvent
    {
        int k;
        int a, b;
        int depth;
        const Instance & before;
        const Instance & after;
        const std::vector<int> & relevant;
    };

    using TransducerObserver = std::function<void(const TransducerEvent &)>;

    struct SolveOptions
    {
        /// Run the transducer chain even when the template has a circular N.
        bool force = false;
        /// Skip the circular-N precheck (the caller already knows).
        bool skip_circular_n_check = false;
        TransducerObserver observer;
    };

    /// The test deciding whether x can keep value a when the pair {a,b} is
    /// split: restrict to the weak component of (x,a,b), filter lists, recurse.
    bool ab_test(const Digraph & h, const PairStructure & ps, const Instance & inst,
        int x, int a, int b);

    Instance apply_transducer(const Digraph & h, const PairStructure & ps,
        const Instance & inst, int k, const TransducerObserver & observer = {});

    /// Chain-then-check acceptance, as used in the recursion.
    bool solve_rec(const Digraph & h, const PairStructure & ps, const Instance & inst,
        int depth);

    /// The full pipeline: transducers for k = m..1, then the singleton check;
    /// accepted maps are re-validated before being returned.
    std::optional<Homomorphism> solve(const Digraph & h, const Instance & inst,
        const SolveOptions & options = {});
}

#endif
