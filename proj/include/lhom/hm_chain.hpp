#ifndef LHOM_HM_CHAIN_HPP
#define LHOM_HM_CHAIN_HPP

#include <lhom/digraph.hpp>
#include <lhom/pair_structure.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace lhom
{
    /// A conservative ternary operation on template vertices, stored as a total
    /// n^3 value table.
    class TernaryOpTable
    {
    public:
        TernaryOpTable(int n, std::vector<int> values);

        int domain_size() const { return n_; }
        int at(int a, int b, int c) const { return values_[(a * n_ + b) * n_ + c]; }
        const std::vector<int> & values() const { return values_; }

    private:
        int n_;
        std::vector<int> values_;
    };

    /// True iff some triple (x,y,y) with mu(x,y) >= i is reachable from (a,b,c)
    /// in the digraph whose steps keep both companion walks avoiding the first
    /// (edges aa', bb', cc' with ba', ca' both absent, per direction). The
    /// zero-length case b = c with mu(a,b) >= i counts.
    bool is_distinguisher(const Digraph & h, const PairStructure & ps,
        int i, int a, int b, int c);

    /// Length of the chain the construction produces: max mu over pairs, and 1
    /// for templates with fewer than two vertices.
    int hm_chain_length(const Digraph & h);
    int hm_chain_length(const PairStructure & ps);

    struct HmChainOptions
    {
        /// Build the case table even when a circular N exists, so tests can
        /// watch verification fail.
        bool force_construct = false;
    };

    std::optional<std::vector<TernaryOpTable>> build_hm_chain(const Digraph & h,
        const HmChainOptions & options = {});

    struct IdentityViolation
    {
        int identity;  // 1: f_1(x,y,y)=x, 2: f_i(x,x,y)=f_{i+1}(x,y,y), 3: f_k(x,x,y)=y
        int index;     // 1-based chain position
        int x, y;

        bool operator==(const IdentityViolation &) const = default;
    };

    struct IdentityReport
    {
        std::vector<IdentityViolation> violations;
        bool ok() const { return violations.empty(); }
    };

    IdentityReport verify_hm_identities(const std::vector<TernaryOpTable> & chain);

    struct PolymorphismViolation
    {
        std::pair<int, int> arc_a, arc_b, arc_c;
        int image_from, image_to;

        bool operator==(const PolymorphismViolation &) const = default;
    };

    struct PolymorphismReport
    {
        std::vector<PolymorphismViolation> violations;
        bool ok() const { return violations.empty(); }
    };

    PolymorphismReport verify_polymorphism(const Digraph & h, const TernaryOpTable & f);
}

#endif
