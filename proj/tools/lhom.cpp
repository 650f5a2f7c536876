#include <lhom/detect.hpp>
#include <lhom/errors.hpp>
#include <lhom/gadget.hpp>
#include <lhom/hm_chain.hpp>
#include <lhom/json_io.hpp>
#include <lhom/pair_structure.hpp>
#include <lhom/selftest.hpp>
#include <lhom/solver.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace
{
    using lhom::json;

    constexpr int exit_ok = 0;
    constexpr int exit_negative = 1;
    constexpr int exit_usage = 2;
    constexpr int exit_internal = 3;

    std::string walk_pretty(const lhom::Walk & w)
    {
        std::string out = std::to_string(w.start);
        for (const auto & step : w.steps) {
            out += step.dir == lhom::Direction::forward ? " >" : " <";
            out += std::to_string(step.to);
        }
        return out;
    }

    int run_analyze(const std::string & path, bool as_json)
    {
        auto h = lhom::load_digraph(path);
        auto classification = lhom::classify(h);
        lhom::PairStructure ps(h);
        if (as_json) {
            json j = lhom::classification_to_json(classification);
            json order = json::array();
            for (auto [x, y] : ps.processing_order())
                order.push_back(json::array({x, y}));
            j["pair_structure"] = json{
                {"m", ps.pair_count()},
                {"components", ps.component_count()},
                {"k", ps.max_mu()},
                {"order", order}};
            std::cout << j.dump(2) << "\n";
        }
        else {
            std::cout << "verdict: " << lhom::verdict_name(classification.verdict) << "\n";
            if (classification.circular_n) {
                std::cout << "circular N:\n";
                std::cout << "  X: " << walk_pretty(classification.circular_n->x) << "\n";
                std::cout << "  Y: " << walk_pretty(classification.circular_n->y) << "\n";
                std::cout << "  Z: " << walk_pretty(classification.circular_n->z) << "\n";
            }
            if (classification.dat) {
                const auto & d = *classification.dat;
                std::cout << "DAT: {" << d.vertices[0] << "," << d.vertices[1] << ","
                          << d.vertices[2] << "}";
                for (int i = 0; i < 3; ++i)
                    std::cout << " (s,b)(" << d.vertices[i] << ")=(" << d.sb[i].first
                              << "," << d.sb[i].second << ")";
                std::cout << "\n";
            }
            if (classification.bicycle)
                std::cout << "bicycle: X " << walk_pretty(classification.bicycle->x)
                          << "  Y " << walk_pretty(classification.bicycle->y) << "\n";
            if (classification.independent_edges) {
                const auto & e = *classification.independent_edges;
                std::cout << "independent edges: (" << e.first.first << "," << e.first.second
                          << ") (" << e.second.first << "," << e.second.second << ")"
                          << (e.dir == lhom::Direction::forward ? " forward" : " backward")
                          << "\n";
            }
            if (classification.hm_chain_length)
                std::cout << "hm chain length: " << *classification.hm_chain_length << "\n";
            std::cout << "pair digraph: m=" << ps.pair_count()
                      << " components=" << ps.component_count()
                      << " k=" << ps.max_mu() << "\n";
        }
        return exit_ok;
    }

    int report_solution(const lhom::Digraph & h, const lhom::Instance & inst,
        const std::optional<lhom::Homomorphism> & result, bool witness, bool as_json)
    {
        if (as_json) {
            json j;
            j["satisfiable"] = result.has_value();
            j["homomorphism"] = nullptr;
            if (result && witness)
                j["homomorphism"] = *result;
            std::cout << j.dump(2) << "\n";
        }
        else if (result) {
            std::cout << "homomorphism exists\n";
            if (witness)
                for (std::size_t v = 0; v < result->size(); ++v)
                    std::cout << "  " << v << " -> " << (*result)[v] << "\n";
        }
        else
            std::cout << "no homomorphism\n";
        if (result && ! lhom::validate_homomorphism(h, inst, *result))
            throw lhom::internal_error("reported map failed validation");
        return result ? exit_ok : exit_negative;
    }

    int run_solve(const std::string & h_path, const std::string & inst_path,
        bool witness, bool oracle, bool force, bool as_json)
    {
        auto h = lhom::load_digraph(h_path);
        auto inst = lhom::load_instance(inst_path);
        std::optional<lhom::Homomorphism> result;
        if (oracle)
            result = lhom::oracle_solve(h, inst);
        else {
            lhom::SolveOptions options;
            options.force = force;
            result = lhom::solve(h, inst, options);
        }
        return report_solution(h, inst, result, witness, as_json);
    }

    int run_hm_chain(const std::string & path, bool as_json)
    {
        auto h = lhom::load_digraph(path);
        auto chain = lhom::build_hm_chain(h);
        if (! chain) {
            if (as_json)
                std::cout << json{{"chain", nullptr},
                    {"reason", "template contains a circular N"}}.dump(2) << "\n";
            else
                std::cout << "no chain: template contains a circular N\n";
            return exit_negative;
        }
        auto identities = lhom::verify_hm_identities(*chain);
        bool polymorphisms_ok = true;
        json poly_violations = json::array();
        for (std::size_t i = 0; i < chain->size(); ++i) {
            auto report = lhom::verify_polymorphism(h, (*chain)[i]);
            if (! report.ok()) {
                polymorphisms_ok = false;
                for (const auto & v : report.violations)
                    poly_violations.push_back(json{
                        {"i", i + 1},
                        {"arcs", json::array({
                            json::array({v.arc_a.first, v.arc_a.second}),
                            json::array({v.arc_b.first, v.arc_b.second}),
                            json::array({v.arc_c.first, v.arc_c.second})})},
                        {"image", json::array({v.image_from, v.image_to})}});
            }
        }
        if (as_json) {
            json tables = json::array();
            for (const auto & f : *chain)
                tables.push_back(f.values());
            json identity_violations = json::array();
            for (const auto & v : identities.violations)
                identity_violations.push_back(json{{"identity", v.identity},
                    {"i", v.index}, {"x", v.x}, {"y", v.y}});
            std::cout << json{
                {"k", chain->size()},
                {"tables", tables},
                {"identity_violations", identity_violations},
                {"polymorphism_violations", poly_violations}}.dump(2) << "\n";
        }
        else {
            std::cout << "chain length " << chain->size()
                      << (identities.ok() && polymorphisms_ok ? ", verified clean"
                                                              : ", VERIFICATION FAILED")
                      << "\n";
        }
        return identities.ok() && polymorphisms_ok ? exit_ok : exit_negative;
    }

    int run_gadget(const std::string & h_path, const std::string & st_path,
        int s, int t, const std::string & out_path, bool as_json)
    {
        auto h = lhom::load_digraph(h_path);
        auto st = lhom::load_digraph(st_path);
        auto witness = lhom::find_circular_n(h);
        if (! witness) {
            std::cerr << "template has no circular N; the hardness gadget does not apply\n";
            return exit_negative;
        }
        auto gadget = lhom::build_gadget(h, *witness, st, s, t);
        json j = lhom::gadget_to_json(gadget);
        std::ofstream out(out_path);
        if (! out)
            throw lhom::input_error("cannot write '" + out_path + "'");
        out << j.dump(2) << "\n";
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << "wrote " << gadget.instance.g.vertex_count() << " vertices, "
                      << gadget.instance.g.arc_count() << " arcs to " << out_path << "\n";
        return exit_ok;
    }

    int run_selftest_cmd(int max_n, int samples, std::uint64_t seed, bool as_json)
    {
        lhom::SelftestOptions options;
        options.max_n = max_n;
        options.samples = samples;
        options.seed = seed;
        auto report = lhom::run_selftest(options);
        if (as_json)
            std::cout << report.to_json().dump(2) << "\n";
        else
            std::cout << report.to_string();
        return report.ok() ? exit_ok : exit_negative;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"classify, solve, and build witnesses for list homomorphism "
        "problems over digraph templates"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");

    std::string h_path, inst_path, st_path, out_path;
    bool witness = false, oracle = false, force = false;
    int s = 0, t = 0;
    int max_n = 3, samples = 0;
    std::uint64_t seed = 1;

    auto * analyze = app.add_subcommand("analyze", "classify a template digraph");
    analyze->add_option("template", h_path, "template .dg file")->required();

    auto * solve = app.add_subcommand("solve", "decide an instance with the transducer chain");
    solve->add_option("template", h_path, "template .dg file")->required();
    solve->add_option("instance", inst_path, "instance .json file")->required();
    solve->add_flag("--witness", witness, "print the homomorphism");
    solve->add_flag("--oracle", oracle, "use the brute-force oracle instead");
    solve->add_flag("--force", force, "run the chain even on circular-N templates");

    auto * hm = app.add_subcommand("hm-chain", "construct and verify the polymorphism chain");
    hm->add_option("template", h_path, "template .dg file")->required();

    auto * gadget = app.add_subcommand("gadget", "build the reachability hardness instance");
    gadget->add_option("template", h_path, "template .dg file")->required();
    gadget->add_option("stgraph", st_path, "st-graph .dg file")->required();
    gadget->add_option("--s", s, "source vertex")->required();
    gadget->add_option("--t", t, "target vertex")->required();
    gadget->add_option("-o,--output", out_path, "output instance file")->required();

    auto * oracle_cmd = app.add_subcommand("oracle", "decide an instance by brute force");
    oracle_cmd->add_option("template", h_path, "template .dg file")->required();
    oracle_cmd->add_option("instance", inst_path, "instance .json file")->required();
    oracle_cmd->add_flag("--witness", witness, "print the homomorphism");

    auto * selftest = app.add_subcommand("selftest", "run the exhaustive and randomized suites");
    selftest->add_option("--max-n", max_n, "largest template size");
    selftest->add_option("--samples", samples, "random digraphs beyond the enumeration");
    selftest->add_option("--seed", seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(h_path, as_json);
        if (app.got_subcommand(solve))
            return run_solve(h_path, inst_path, witness, oracle, force, as_json);
        if (app.got_subcommand(hm))
            return run_hm_chain(h_path, as_json);
        if (app.got_subcommand(gadget))
            return run_gadget(h_path, st_path, s, t, out_path, as_json);
        if (app.got_subcommand(oracle_cmd))
            return run_solve(h_path, inst_path, witness, true, false, as_json);
        if (app.got_subcommand(selftest))
            return run_selftest_cmd(max_n, samples, seed, as_json);
    }
    catch (const lhom::input_error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const lhom::internal_error & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}
