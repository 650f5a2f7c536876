#ifndef LHOM_DIGRAPH_HPP
#define LHOM_DIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lhom
{
    enum class Direction : std::uint8_t { forward, backward };

    constexpr Direction reversed(Direction d)
    {
        return d == Direction::forward ? Direction::backward : Direction::forward;
    }

    /// A finite digraph on vertices 0..n-1. Loops allowed, arc set duplicate-free.
    /// Immutable after construction.
    class Digraph
    {
    public:
        Digraph() = default;
        Digraph(int n, std::vector<std::pair<int, int>> arcs);

        int vertex_count() const { return n_; }
        int arc_count() const { return static_cast<int>(arcs_.size()); }
        const std::vector<std::pair<int, int>> & arcs() const { return arcs_; }

        bool has_arc(int u, int v) const;
        const std::vector<int> & out_neighbours(int u) const;
        const std::vector<int> & in_neighbours(int u) const;

        bool operator==(const Digraph & other) const
        {
            return n_ == other.n_ && arcs_ == other.arcs_;
        }

    private:
        int n_ = 0;
        std::vector<std::pair<int, int>> arcs_;
        std::vector<bool> adj_;
        std::vector<std::vector<int>> out_, in_;

        void check_vertex(int v) const;
    };

    /// Forward: (u,v) is an arc. Backward: (v,u) is an arc.
    bool has_edge(const Digraph & d, int u, int v, Direction dir);

    /// The .dg text format: first non-comment line is the vertex count, then one
    /// `u v` arc per line; `#` starts a comment. Duplicate arcs are an error.
    Digraph parse_digraph(std::istream & in);
    Digraph parse_digraph(const std::string & text);
    Digraph load_digraph(const std::string & path);
    std::string format_digraph(const Digraph & d);
}

#endif
