#include <lhom/errors.hpp>
#include <lhom/json_io.hpp>

#include <fstream>

namespace lhom
{
    json walk_to_json(const Walk & w)
    {
        json steps = json::array();
        for (const auto & step : w.steps)
            steps.push_back(json::array(
                {step.dir == Direction::forward ? "F" : "B", step.to}));
        return json{{"start", w.start}, {"steps", steps}};
    }

    Walk walk_from_json(const json & j)
    {
        Walk w;
        w.start = j.at("start").get<int>();
        for (const auto & step : j.at("steps")) {
            std::string dir = step.at(0).get<std::string>();
            if (dir != "F" && dir != "B")
                throw input_error("walk step direction must be \"F\" or \"B\"");
            w.steps.push_back(Step{dir == "F" ? Direction::forward : Direction::backward,
                step.at(1).get<int>()});
        }
        return w;
    }

    json instance_to_json(const Instance & inst)
    {
        json arcs = json::array();
        for (auto [u, v] : inst.g.arcs())
            arcs.push_back(json::array({u, v}));
        return json{
            {"g", json{{"n", inst.g.vertex_count()}, {"arcs", arcs}}},
            {"lists", inst.lists}};
    }

    Instance instance_from_json(const json & j)
    {
        Instance inst;
        const auto & g = j.at("g");
        std::vector<std::pair<int, int>> arcs;
        for (const auto & arc : g.at("arcs"))
            arcs.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());
        inst.g = Digraph(g.at("n").get<int>(), std::move(arcs));
        inst.lists = j.at("lists").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(inst.lists.size()) != inst.g.vertex_count())
            throw input_error("instance needs one list per vertex");
        normalize_instance(inst);
        return inst;
    }

    Instance load_instance(const std::string & path)
    {
        std::ifstream in(path);
        if (! in)
            throw input_error("cannot open '" + path + "'");
        json j;
        try {
            in >> j;
        }
        catch (const json::exception & e) {
            throw input_error("bad instance JSON: " + std::string(e.what()));
        }
        return instance_from_json(j);
    }

    json classification_to_json(const Classification & c)
    {
        json j;
        j["verdict"] = verdict_name(c.verdict);
        j["circular_n"] = nullptr;
        if (c.circular_n)
            j["circular_n"] = json{
                {"x", walk_to_json(c.circular_n->x)},
                {"y", walk_to_json(c.circular_n->y)},
                {"z", walk_to_json(c.circular_n->z)}};
        j["dat"] = nullptr;
        if (c.dat) {
            json s = json::array(), b = json::array();
            for (auto [sv, bv] : c.dat->sb) {
                s.push_back(sv);
                b.push_back(bv);
            }
            j["dat"] = json{
                {"vertices", c.dat->vertices},
                {"s", s},
                {"b", b}};
        }
        j["bicycle"] = nullptr;
        if (c.bicycle)
            j["bicycle"] = json{
                {"x", walk_to_json(c.bicycle->x)},
                {"y", walk_to_json(c.bicycle->y)}};
        j["independent_edges"] = nullptr;
        if (c.independent_edges)
            j["independent_edges"] = json::array({
                json::array({c.independent_edges->first.first, c.independent_edges->first.second}),
                json::array({c.independent_edges->second.first, c.independent_edges->second.second})});
        j["hm_chain_length"] = nullptr;
        if (c.hm_chain_length)
            j["hm_chain_length"] = *c.hm_chain_length;
        return j;
    }

    Classification classification_from_json(const json & j)
    {
        Classification c;
        std::string verdict = j.at("verdict").get<std::string>();
        bool known = false;
        for (Verdict v : {Verdict::np_complete, Verdict::p_nl_hard, Verdict::l_hard,
                 Verdict::fo_definable})
            if (verdict_name(v) == verdict) {
                c.verdict = v;
                known = true;
            }
        if (! known)
            throw input_error("unknown verdict '" + verdict + "'");
        if (! j.at("circular_n").is_null()) {
            const auto & w = j.at("circular_n");
            c.circular_n = CircularNWitness{
                walk_from_json(w.at("x")),
                walk_from_json(w.at("y")),
                walk_from_json(w.at("z"))};
        }
        if (! j.at("dat").is_null()) {
            const auto & d = j.at("dat");
            DatWitness wit;
            for (int i = 0; i < 3; ++i) {
                wit.vertices[i] = d.at("vertices").at(i).get<int>();
                wit.sb[i] = {d.at("s").at(i).get<int>(), d.at("b").at(i).get<int>()};
            }
            c.dat = wit;
        }
        if (! j.at("bicycle").is_null())
            c.bicycle = Bicycle{
                walk_from_json(j.at("bicycle").at("x")),
                walk_from_json(j.at("bicycle").at("y"))};
        if (! j.at("independent_edges").is_null()) {
            const auto & e = j.at("independent_edges");
            c.independent_edges = IndependentEdges{
                {e.at(0).at(0).get<int>(), e.at(0).at(1).get<int>()},
                {e.at(1).at(0).get<int>(), e.at(1).at(1).get<int>()},
                Direction::forward};
        }
        if (! j.at("hm_chain_length").is_null())
            c.hm_chain_length = j.at("hm_chain_length").get<int>();
        return c;
    }

    json gadget_to_json(const GadgetOutput & g)
    {
        json provenance = json::array();
        for (const auto & origin : g.provenance) {
            if (origin.is_original)
                provenance.push_back(json{{"vertex", origin.vertex}});
            else
                provenance.push_back(json{
                    {"arc", json::array({origin.arc.first, origin.arc.second})},
                    {"position", origin.position}});
        }
        return json{
            {"instance", instance_to_json(g.instance)},
            {"provenance", provenance}};
    }
}
