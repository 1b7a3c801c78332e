#include "barnette/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "barnette/error.hpp"

namespace barnette {

namespace {

[[noreturn]] void parse_error(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

int read_order(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) parse_error("missing integer field n");
  const int n = j["n"].get<int>();
  if (n < 0) parse_error("n must be non-negative");
  return n;
}

Vertex read_vertex(const Json& j, int n) {
  if (!j.is_number_integer()) parse_error("vertex ids must be integers");
  const int v = j.get<int>();
  if (v < 0 || v >= n) parse_error("vertex " + std::to_string(v) + " out of range");
  return v;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

EmbeddedGraph embedded_from_json(const Json& j) {
  const int n = read_order(j);
  if (!j.contains("rotation") || !j["rotation"].is_array()) parse_error("missing array field rotation");
  const Json& rot = j["rotation"];
  if (static_cast<int>(rot.size()) != n) parse_error("rotation must list every vertex");
  std::vector<std::vector<Vertex>> out;
  for (const Json& r : rot) {
    if (!r.is_array()) parse_error("each rotation must be an array");
    auto& row = out.emplace_back();
    for (const Json& u : r) row.push_back(read_vertex(u, n));
  }
  return EmbeddedGraph::build(std::move(out));
}

Json to_json(const EmbeddedGraph& g) { return Json{{"n", g.order()}, {"rotation", g.rotations()}}; }

Graph graph_from_json(const Json& j) {
  if (j.is_object() && j.contains("rotation")) return embedded_from_json(j).graph();
  const int n = read_order(j);
  if (!j.contains("edges") || !j["edges"].is_array()) parse_error("missing array field edges");
  Graph g(n);
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) parse_error("each edge must be a pair");
    g.add_edge(read_vertex(e[0], n), read_vertex(e[1], n));
  }
  return g;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.order()}, {"edges", edges}};
}

TwoColoring coloring_from_json(const Json& j, int n, ColoringDomain domain) {
  if (!j.is_object()) parse_error("a colouring must be an object");
  TwoColoring c(n, domain);
  for (const auto& [key, value] : j.items()) {
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= n) parse_error("bad vertex key '" + key + "'");
    if (!value.is_number_integer() || (value.get<int>() != 1 && value.get<int>() != 2))
      parse_error("colours must be 1 or 2");
    c.set(v, value.get<int>());
  }
  return c;
}

Json to_json(const TwoColoring& c) {
  Json out = Json::object();
  for (Vertex v = 0; v < c.size(); ++v)
    if (c.has(v)) out[std::to_string(v)] = c[v];
  return out;
}

Json to_json(const TreePartition& p) { return Json{{"S", p.s}, {"T", p.t}}; }

Json to_json(const HamiltonCycle& h) { return h.vertices; }

std::vector<EmbeddedGraph> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::vector<EmbeddedGraph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      parse_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(embedded_from_json(j));
  }
  return out;
}

std::string digest(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace barnette
