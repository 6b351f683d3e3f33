#pragma once

// JSON forms of graphs and labelings:
//   graph:    {"order": n, "names": [...], "edges": [[u, v], ...]}
//   labeling: {"graph": {...}, "assignment": [...], "p": p, "a": a, "b": b,
//              "e0": e0, "e1": e1, "cordial": bool}
// Names are integers, {"outer": x, "inner": y} or {"copy": j, "position": i}.

#include "flc/graph.hpp"
#include "flc/labeling.hpp"

#include <json.hpp>

namespace flc {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);

/// "names" is optional. Throws std::invalid_argument on malformed input.
Graph graph_from_json(const Json& j);

struct LabelingDocument {
    VertexLabeling labeling;
    std::uint64_t p;
    InitialPair pair;
    EdgeLabelSummary summary;
};

/// Evaluates the labeling and serializes it with its summary.
Json labeling_to_json(const VertexLabeling& f, std::uint64_t p, const InitialPair& pair);

/// Parses a labeling document. The stored e0/e1 are read back as written; use
/// evaluate() to recompute them.
LabelingDocument labeling_from_json(const Json& j);

} // namespace flc
