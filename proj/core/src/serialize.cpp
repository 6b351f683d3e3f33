#include "flc/serialize.hpp"

#include <stdexcept>

namespace flc {

namespace {

Json name_to_json(const VertexName& name)
{
    struct Visitor {
        Json operator()(std::size_t index) const { return index; }
        Json operator()(const ProductCoord& c) const { return Json{{"outer", c.outer}, {"inner", c.inner}}; }
        Json operator()(const CopyCoord& c) const { return Json{{"copy", c.copy}, {"position", c.position}}; }
    };
    return std::visit(Visitor{}, name);
}

VertexName name_from_json(const Json& j)
{
    if (j.is_number_unsigned()) {
        return j.get<std::size_t>();
    }
    if (j.is_object() && j.contains("outer") && j.contains("inner")) {
        return ProductCoord{j.at("outer").get<std::size_t>(), j.at("inner").get<std::size_t>()};
    }
    if (j.is_object() && j.contains("copy") && j.contains("position")) {
        return CopyCoord{j.at("copy").get<std::size_t>(), j.at("position").get<std::size_t>()};
    }
    throw std::invalid_argument("unrecognised vertex name: " + j.dump());
}

template <class Fn>
auto translate_json_errors(Fn&& fn)
{
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON document: ") + e.what());
    }
}

} // namespace

Json graph_to_json(const Graph& g)
{
    Json names = Json::array();
    for (const VertexName& name : g.names()) {
        names.push_back(name_to_json(name));
    }
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back(Json::array({u, v}));
    }
    return Json{{"order", g.order()}, {"names", std::move(names)}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j)
{
    return translate_json_errors([&] {
        const auto order = j.at("order").get<std::size_t>();
        std::vector<Graph::Edge> edges;
        for (const Json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("edge must be a pair: " + e.dump());
            }
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        std::vector<VertexName> names;
        if (j.contains("names")) {
            for (const Json& n : j.at("names")) {
                names.push_back(name_from_json(n));
            }
        }
        return Graph(order, std::move(edges), std::move(names));
    });
}

Json labeling_to_json(const VertexLabeling& f, std::uint64_t p, const InitialPair& pair)
{
    const EdgeLabelSummary summary = evaluate(f, p, pair);
    return Json{{"graph", graph_to_json(f.graph())},
                {"assignment", f.assignment()},
                {"p", p},
                {"a", pair.a()},
                {"b", pair.b()},
                {"e0", summary.e0},
                {"e1", summary.e1},
                {"cordial", summary.cordial()}};
}

LabelingDocument labeling_from_json(const Json& j)
{
    return translate_json_errors([&] {
        Graph graph = graph_from_json(j.at("graph"));
        auto assignment = j.at("assignment").get<std::vector<std::uint64_t>>();
        VertexLabeling labeling(std::move(graph), std::move(assignment));
        const auto p = j.at("p").get<std::uint64_t>();
        const InitialPair pair(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>());
        EdgeLabelSummary summary;
        if (j.contains("e0") && j.contains("e1")) {
            summary = {j.at("e0").get<std::uint64_t>(), j.at("e1").get<std::uint64_t>()};
        }
        return LabelingDocument{std::move(labeling), p, pair, summary};
    });
}

} // namespace flc
