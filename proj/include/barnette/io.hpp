#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "barnette/colorizer.hpp"
#include "barnette/embed.hpp"
#include "barnette/stein.hpp"
#include "barnette/treesplit.hpp"

namespace barnette {

using Json = nlohmann::json;

/// Reads and parses a JSON file; IoError or ParseError.
Json read_json_file(const std::string& path);

/// {"n": n, "rotation": [[...], ...]}. ParseError on a malformed document,
/// embedding errors propagate from EmbeddedGraph::build.
EmbeddedGraph embedded_from_json(const Json& j);
Json to_json(const EmbeddedGraph& g);

/// {"n": n, "edges": [[u, v], ...]} or an embedded graph document.
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

/// {"0": 1, "3": 2, ...}; colours must be 1 or 2.
TwoColoring coloring_from_json(const Json& j, int n, ColoringDomain domain);
Json to_json(const TwoColoring& c);

Json to_json(const TreePartition& p);
Json to_json(const HamiltonCycle& h);

/// One embedded graph per non-empty line.
std::vector<EmbeddedGraph> load_catalog(const std::string& path);

/// FNV-1a over the compact serialization, as 16 hex digits.
std::string digest(const Json& j);

}  // namespace barnette
