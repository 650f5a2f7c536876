#ifndef LHOM_PAIR_STRUCTURE_HPP
#define LHOM_PAIR_STRUCTURE_HPP

#include <lhom/digraph.hpp>

#include <utility>
#include <vector>

namespace lhom
{
    /// The pair digraph of a template: vertices are ordered pairs (x,y) of
    /// distinct template vertices, arcs encode single-step one-sided avoidance.
    /// Carries strong components, a deterministic sink-safe processing order
    /// p_1..p_m, and per-component mu values.
    class PairStructure
    {
    public:
        struct Arc
        {
            int from, to;     // raw pair ids
            bool is_double;   // the reverse arc to->from also exists
        };

        explicit PairStructure(const Digraph & h);

        int template_size() const { return n_; }
        int pair_count() const { return m_; }

        /// Raw id x*n+y; x == y or out of range is an input error.
        int pair_id(int x, int y) const;
        std::pair<int, int> pair_of(int id) const { return {id / n_, id % n_}; }

        /// p_1..p_m: grouped by strong component, components in an order where
        /// arcs only go from earlier to later, lexicographic tie-breaks.
        const std::vector<std::pair<int, int>> & processing_order() const { return order_; }

        /// 1-based position of (x,y) in the processing order.
        int position(int x, int y) const;

        int component(int x, int y) const;
        int component_count() const { return component_count_; }

        /// mu(x,x) = 0 by convention; otherwise the component's longest-path value.
        int mu(int x, int y) const;
        int max_mu() const { return max_mu_; }

        /// (x,y) and (y,x) lie in one strong component.
        bool is_invertible(int x, int y) const;

        /// Every unordered pair inside every list has both its ordered versions
        /// at position <= k.
        bool is_k_good(const std::vector<std::vector<int>> & lists, int k) const;

        const std::vector<Arc> & arcs() const { return arcs_; }
        bool has_pair_arc(int from_id, int to_id) const;

    private:
        int n_ = 0;
        int m_ = 0;
        int component_count_ = 0;
        int max_mu_ = 0;
        std::vector<std::vector<int>> adj_;          // raw id -> raw ids
        std::vector<Arc> arcs_;
        std::vector<int> comp_;                      // raw id -> component (order index)
        std::vector<int> comp_mu_;
        std::vector<std::pair<int, int>> order_;
        std::vector<int> pos_;                       // raw id -> 1-based position

        int checked_id(int x, int y) const;
    };
}

#endif
