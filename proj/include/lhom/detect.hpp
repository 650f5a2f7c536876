#ifndef LHOM_DETECT_HPP
#define LHOM_DETECT_HPP

#include <lhom/digraph.hpp>
#include <lhom/walk.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lhom
{
    enum class ArcColour : std::uint8_t { green, blue, brown };

    /// The coloured triple digraph: vertices are all triples (a,b,c) of template
    /// vertices, ordered as (X-position, Z-position, Y-position). A labelled arc
    /// (a,b,c)->(a',b',c') in direction d requires edges aa', bb', cc', no edge
    /// ac', and at least one of ab', bc' missing; the colour records which.
    class ColouredTripleDigraph
    {
    public:
        struct Arc
        {
            int to;
            Direction dir;
            ArcColour colour;
        };

        explicit ColouredTripleDigraph(const Digraph & h);

        int template_size() const { return n_; }
        int triple_count() const { return n_ * n_ * n_; }
        int triple_id(int a, int b, int c) const { return (a * n_ + b) * n_ + c; }
        std::array<int, 3> triple_of(int id) const
        {
            return {id / (n_ * n_), id / n_ % n_, id % n_};
        }

        const std::vector<Arc> & arcs_from(int id) const { return adj_[id]; }
        long arc_count() const;

    private:
        int n_;
        std::vector<std::vector<Arc>> adj_;
    };

    /// Closed congruent walks x (at x), y (at y) plus z from y to x, with
    /// avoids(x,y) and protects(z,y,x).
    struct CircularNWitness
    {
        Walk x, y, z;
    };

    bool validate_circular_n(const Digraph & h, const CircularNWitness & w);

    std::optional<CircularNWitness> find_circular_n(const Digraph & h);

    struct IndependentEdges
    {
        std::pair<int, int> first, second;  // edges, both read in `dir`
        Direction dir;
    };

    std::optional<IndependentEdges> has_independent_edges(const Digraph & h);

    /// Closed all-forward walks x, y with avoids(x,y) and every y_i x_{i+1} an arc.
    struct Bicycle
    {
        Walk x, y;
    };

    std::optional<Bicycle> find_bicycle(const Digraph & h);

    struct DatWitness
    {
        std::array<int, 3> vertices;               // u < v < w
        std::array<std::pair<int, int>, 3> sb;     // (s, b) per vertex
    };

    std::optional<DatWitness> find_dat(const Digraph & h);

    enum class Verdict { np_complete, p_nl_hard, l_hard, fo_definable };

    std::string verdict_name(Verdict v);

    struct Classification
    {
        std::optional<DatWitness> dat;
        std::optional<CircularNWitness> circular_n;
        std::optional<Bicycle> bicycle;
        std::optional<IndependentEdges> independent_edges;
        Verdict verdict = Verdict::fo_definable;
        std::optional<int> hm_chain_length;
    };

    Classification classify(const Digraph & h);
}

#endif
