#ifndef LHOM_JSON_IO_HPP
#define LHOM_JSON_IO_HPP

#include <lhom/detect.hpp>
#include <lhom/gadget.hpp>
#include <lhom/solver.hpp>

#include <json.hpp>

namespace lhom
{
    using json = nlohmann::json;

    json walk_to_json(const Walk & w);
    Walk walk_from_json(const json & j);

    json instance_to_json(const Instance & inst);
    Instance instance_from_json(const json & j);
    Instance load_instance(const std::string & path);

    json classification_to_json(const Classification & c);
    Classification classification_from_json(const json & j);

    json gadget_to_json(const GadgetOutput & g);
}

#endif
