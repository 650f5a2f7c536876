#ifndef LHOM_SELFTEST_HPP
#define LHOM_SELFTEST_HPP

#include <lhom/digraph.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace lhom
{
    /// All randomness below flows from one mt19937_64 seed; draws use modulo
    /// reduction and a 53-bit mantissa so runs are reproducible everywhere.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        std::uint64_t next() { return engine_(); }
        int below(int n) { return n <= 0 ? 0 : static_cast<int>(next() % n); }
        double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
        bool chance(double p) { return unit() < p; }

    private:
        std::mt19937_64 engine_;
    };

    /// Independent arc inclusion with probability p, loops included.
    Digraph random_digraph(Rng & rng, int n, double p);

    /// All 2^(n^2) digraphs on n vertices. Practical for n <= 3.
    std::vector<Digraph> enumerate_digraphs(int n);

    std::string describe_digraph(const Digraph & d);

    struct SelftestOptions
    {
        int max_n = 3;
        int samples = 0;
        std::uint64_t seed = 1;
    };

    struct SelftestReport
    {
        std::vector<std::string> violations;   // sorted before emission
        std::map<std::string, long> counters;

        bool ok() const { return violations.empty(); }
        std::string to_string() const;
        nlohmann::json to_json() const;
    };

    /// Suites: (a) detector/chain equivalence with structural invariants,
    /// (b) monotonicity, (c) solver vs oracle, (d) transducer soundness,
    /// (e) gadget reduction. Deterministic under the seed.
    SelftestReport run_selftest(const SelftestOptions & options);
}

#endif
