#include "barnette/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "barnette/error.hpp"
#include "barnette/gen.hpp"
#include "barnette/io.hpp"
#include "barnette/stein.hpp"
#include "barnette/structure.hpp"
#include "barnette/treesplit.hpp"

namespace barnette {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

struct Options {
  std::string path;
  std::string family;
  std::string pin;
  std::string avoid_edge;
  std::string together;
  bool face_sparse = false;
  bool thm24 = false;
  bool timing = false;
  int n = 0;
  int n_max = 0;
  int size = 16;
  int count = 0;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::size_t cap = 0;
};

// One report under construction.
struct Report {
  Json body;
  bool pass = true;

  explicit Report(const std::string& command) { body = Json{{"command", command}, {"invariants", Json::array()}}; }

  void check(const std::string& name, bool ok, Json witness = nullptr) {
    Json item{{"name", name}, {"pass", ok}};
    if (!witness.is_null()) item["witness"] = std::move(witness);
    body["invariants"].push_back(std::move(item));
    pass = pass && ok;
  }
};

std::pair<Vertex, Vertex> parse_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t a = 0, b = 0;
    const int u = std::stoi(s.substr(0, comma), &a);
    const int v = std::stoi(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument(s);
    return {u, v};
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, std::string(what) + " must look like u,v");
  }
}

Json cycle_witness(const std::vector<Vertex>& c) { return c; }

// --- check ---------------------------------------------------------------

void cmd_check(const Options& o, Report& r) {
  const Json doc = read_json_file(o.path);
  r.body["input_digest"] = digest(doc);
  r.body["family"] = o.family;
  if (o.family == "multi4") {
    const Graph g = graph_from_json(doc);
    const auto bad = find_non_multi4_cycle(g, o.cap ? o.cap : kDefaultCycleCap);
    r.check("every cycle has length 0 mod 4", !bad, bad ? cycle_witness(*bad) : Json());
    return;
  }
  const EmbeddedGraph g = embedded_from_json(doc);
  Json odd = Json::array();
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2) odd.push_back(v);
  r.check("triangulation", is_triangulation(g));
  r.check("even degrees", odd.empty(), odd.empty() ? Json() : odd);
  if (o.family == "even-tri" || !r.pass) return;
  const TriPartition tp = tri_partition(g);
  const BigSmall bs = classify_big_small(g, tp);
  const HypothesisGraph h = hypothesis_graph(g, tp, bs);
  std::optional<std::vector<Vertex>> bad = find_non_multi4_cycle(h.graph(), o.cap ? o.cap : kDefaultCycleCap);
  if (bad)
    for (Vertex& u : *bad) u = h.sub.to_parent[ix(u)];
  r.check("H in the multi-4-cycle family", !bad, bad ? cycle_witness(*bad) : Json());
  const Components comps = connected_components(h.graph());
  Json weak = nullptr;
  for (int c = 0; c < comps.count && weak.is_null(); ++c) {
    const VertexSet m = comps.members(c);
    if (!is_two_connected(induced_subgraph(h.graph(), m).graph)) {
      weak = Json::array();
      for (Vertex u : m) weak.push_back(h.sub.to_parent[ix(u)]);
    }
  }
  r.check("H components 2-connected", weak.is_null(), weak);
  r.body["result"] = Json{{"big", bs.big_set}, {"B3", bs.B(3)}};
}

// --- color ---------------------------------------------------------------

void cmd_color(const Options& o, Report& r) {
  const Json doc = read_json_file(o.path);
  r.body["input_digest"] = digest(doc);
  const Graph g = graph_from_json(doc);
  if (!doc.contains("a")) throw Error(ErrorKind::ParseError, "input needs an alpha colouring \"a\"");
  const TwoColoring a = coloring_from_json(doc["a"], g.order(), ColoringDomain::Alpha);
  TypedBipartition bp = bipartition_typed(g);
  // Types follow the vertices that carry a colour.
  const Components comps = connected_components(g);
  for (int c = 0; c < comps.count; ++c) {
    const VertexSet m = comps.members(c);
    const bool flip = std::any_of(m.begin(), m.end(), [&](Vertex v) { return a.has(v) && bp.is_beta(v); });
    if (flip)
      for (Vertex v : m) bp.type_of[ix(v)] = bp.is_alpha(v) ? VertexType::Beta : VertexType::Alpha;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (a.has(v) && bp.is_beta(v)) throw Error(ErrorKind::ParseError, "\"a\" colours both sides of an edge");
  Vertex pin = -1;
  int colour = 1;
  if (!o.pin.empty()) {
    const auto eq = o.pin.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument(o.pin);
      pin = std::stoi(o.pin.substr(0, eq));
      colour = std::stoi(o.pin.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "--pin must look like v=1 or v=2");
    }
    if (pin < 0 || pin >= g.order() || (colour != 1 && colour != 2))
      throw Error(ErrorKind::ParseError, "--pin out of range");
    if (!bp.is_beta(pin)) throw Error(ErrorKind::ParseError, "pinned vertex must be of type beta");
  }
  // Without --pin the lowest beta vertex gets colour 1.
  if (pin < 0 && !bp.beta().empty()) pin = bp.beta().front();
  const TwoColoring b = pin >= 0 ? color_beta(g, bp, a, pin, colour) : TwoColoring(g.order(), ColoringDomain::Beta);
  ColoringConditions cond;
  if (pin >= 0) cond.pin = std::make_pair(pin, colour);
  const ColoringReport rep = verify_coloring(g, bp, combine(a, b), cond);
  r.check("no monochromatic cycle", rep.cycles_ok, rep.cycles_ok ? Json() : cycle_witness(rep.cycle_witness));
  r.check("beta threads alternate", rep.alternation_ok,
          rep.alternation_ok ? Json() : cycle_witness(rep.path_witness));
  r.check("pin respected", rep.pin_ok);
  r.body["result"] = Json{{"b", to_json(b)}};
}

// --- partition -------------------------------------------------------------

const char* t24_route(const T24Result& t) {
  if (t.searched) return "search";
  return t.repaired_steps.empty() ? "construction" : "repaired";
}

void cmd_partition(const Options& o, Report& r) {
  const Json doc = read_json_file(o.path);
  r.body["input_digest"] = digest(doc);
  const EmbeddedGraph g = embedded_from_json(doc);
  TreePartition p;
  Json result;
  if (!o.together.empty()) {
    const auto [v, w] = parse_pair(o.together, "--together");
    const T23Result t = theorem_2_3_partition(g, v, w);
    p = t.partition;
    result["case"] = t.case_no;
    const bool same = std::binary_search(p.s.begin(), p.s.end(), v) == std::binary_search(p.s.begin(), p.s.end(), w);
    r.check("v and w on one side", same);
  } else if (o.thm24) {
    const T24Result t = theorem_2_4_partition(g);
    p = t.partition;
    result["cases"] = t.cases;
    result["route"] = t24_route(t);
    const bool all = std::all_of(t.report.begin(), t.report.end(), [](const VertexReport& x) { return x.holds; });
    r.check("B3 implications hold", all);
  } else {
    p = tree_partition_solve(g, PartitionConstraint{}, o.cap ? o.cap : kDefaultSolverCap, SeedCheck::Basic);
  }
  const PartitionCheck pc = verify_tree_partition(g.graph(), p);
  r.check("both sides induce trees", pc.ok, pc.ok ? Json() : Json(pc.reason));
  result["partition"] = to_json(p);
  r.body["result"] = std::move(result);
}

// --- hamilton --------------------------------------------------------------

const char* pattern_name(AvoidancePattern p) {
  switch (p) {
    case AvoidancePattern::EverySecond: return "every-second";
    case AvoidancePattern::AtMostTwo: return "at-most-two";
    case AvoidancePattern::Violation: return "violation";
  }
  return "?";
}

Json to_json(const std::vector<FaceAvoidance>& report) {
  Json out = Json::array();
  for (const FaceAvoidance& f : report)
    out.push_back({{"face", f.face}, {"size", f.size}, {"avoided", f.avoided}, {"pattern", pattern_name(f.pattern)}});
  return out;
}

void cmd_hamilton(const Options& o, Report& r) {
  const Json doc = read_json_file(o.path);
  r.body["input_digest"] = digest(doc);
  const EmbeddedGraph g = embedded_from_json(doc);
  if (!is_even_triangulation(g)) throw Error(ErrorKind::NotEvenTriangulation, "input is not an even triangulation");
  const Graph dg = dual_graph(dual(g));
  HamiltonCycle cycle;
  Json result;
  if (!o.avoid_edge.empty()) {
    auto [v, w] = parse_pair(o.avoid_edge, "--avoid-edge");
    const TriPartition tp = tri_partition(g);
    const BigSmall bs = classify_big_small(g, tp);
    auto in_b3 = [&](Vertex u) { return u >= 0 && u < g.order() && bs.is_big(u) && tp[u] == 3; };
    if (!in_b3(v) && in_b3(w)) std::swap(v, w);
    const AvoidanceResult a = hamilton_avoiding_edge(g, v, w);
    cycle = a.cycle;
    result["avoided_dual_edge"] = {a.avoided_edge.first, a.avoided_edge.second};
    result["case"] = a.partition.case_no;
    r.check("dual edge avoided", !cycle.uses(a.avoided_edge.first, a.avoided_edge.second));
  } else if (o.face_sparse) {
    const FaceSparseResult f = hamilton_face_sparse(g);
    cycle = f.cycle;
    Json bad = Json::array();
    for (const FaceAvoidance& x : f.report)
      if (x.pattern == AvoidancePattern::Violation) bad.push_back(x.face);
    result["report"] = to_json(f.report);
    result["route"] = t24_route(f.partition);
    r.check("colour-3 faces sparse", bad.empty(), bad.empty() ? Json() : bad);
  } else {
    throw Error(ErrorKind::ParseError, "hamilton needs --avoid-edge or --face-sparse");
  }
  r.check("Hamilton cycle of the dual", is_hamilton_cycle(dg, cycle.vertices));
  result["cycle"] = to_json(cycle);
  r.body["result"] = std::move(result);
}

// --- survey ----------------------------------------------------------------

// Runs `task` over 0..count-1 on `jobs` threads, results in index order.
std::vector<Json> run_parallel(int count, int jobs, const std::function<Json(int)>& task) {
  std::vector<Json> out(ix(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) out[ix(i)] = task(i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

Json guarded(const std::function<Json()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return Json{{"pass", false}, {"error", std::string(to_string(e.kind()))}, {"detail", e.what()}};
  }
}

Json stein_iff(const EmbeddedGraph& g) {
  const DualGraph d = dual(g);
  const Graph dg = dual_graph(d);
  const int n = g.order();
  long long checked = 0, mismatches = 0, trees = 0;
  for (std::uint64_t mask = 1; mask < (1ULL << n); mask += 2) {
    TreePartition p;
    for (Vertex v = 0; v < n; ++v) ((mask >> v) & 1 ? p.s : p.t).push_back(v);
    const bool tree = verify_tree_partition(g.graph(), p).ok;
    std::vector<Edge> cut;
    for (std::size_t e = 0; e < d.primal_edges.size(); ++e) {
      const Edge pe = d.primal_edges[e];
      if (((mask >> pe.u) & 1) != ((mask >> pe.v) & 1)) cut.push_back({d.edge_faces[e].first, d.edge_faces[e].second});
    }
    const bool ham = cycle_from_edges(dg, cut).has_value();
    ++checked;
    if (tree != ham) ++mismatches;
    if (tree) {
      ++trees;
      if (stein_backward(g, stein_forward(g, p)) != p) ++mismatches;
    }
  }
  return Json{{"pass", mismatches == 0}, {"bipartitions", checked}, {"tree_partitions", trees},
              {"mismatches", mismatches}};
}

Json multi4_soundness(int size, std::uint64_t seed) {
  const Graph g = gen_multi4(size, seed);
  const TypedBipartition bp = bipartition_typed(g);
  std::mt19937_64 rng(seed);
  TwoColoring a(g.order(), ColoringDomain::Alpha);
  for (Vertex v : bp.alpha()) a.set(v, std::uniform_int_distribution<int>(1, 2)(rng));
  int runs = 0, failures = 0;
  for (Vertex v : bp.beta())
    for (int c = 1; c <= 2; ++c) {
      const TwoColoring b = color_beta(g, bp, a, v, c);
      ColoringConditions cond;
      cond.pin = std::make_pair(v, c);
      ++runs;
      if (!verify_coloring(g, bp, combine(a, b), cond).ok()) ++failures;
    }
  return Json{{"pass", failures == 0}, {"order", g.order()}, {"runs", runs}, {"failures", failures}};
}

Json thm23_instance(const EmbeddedGraph& g) {
  const TriPartition tp = tri_partition(g);
  const BigSmall bs = classify_big_small(g, tp);
  const Graph dg = dual_graph(dual(g));
  int edges = 0, failures = 0;
  for (Vertex v : bs.B(3))
    for (Vertex w : g.rotation(v)) {
      ++edges;
      const AvoidanceResult a = hamilton_avoiding_edge(g, v, w);
      if (!is_hamilton_cycle(dg, a.cycle.vertices) || a.cycle.uses(a.avoided_edge.first, a.avoided_edge.second))
        ++failures;
    }
  return Json{{"pass", failures == 0}, {"edges", edges}, {"failures", failures}};
}

Json thm24_instance(const EmbeddedGraph& g) {
  const FaceSparseResult f = hamilton_face_sparse(g);
  const bool ham = is_hamilton_cycle(dual_graph(dual(g)), f.cycle.vertices);
  const bool sparse = std::none_of(f.report.begin(), f.report.end(),
                                   [](const FaceAvoidance& x) { return x.pattern == AvoidancePattern::Violation; });
  return Json{{"pass", ham && sparse},
              {"faces", f.report.size()},
              {"route", t24_route(f.partition)},
              {"report", to_json(f.report)}};
}

int cmd_survey(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<Json> inputs;
  std::function<Json(int)> task;
  std::vector<EmbeddedGraph> graphs;
  if (o.family == "even-tri") {
    const int n_max = o.n_max ? o.n_max : 10;
    for (int n = 6; n <= std::min(n_max, kMaxEvenTriangulationOrder); ++n)
      for (EmbeddedGraph& g : gen_even_triangulations(n)) graphs.push_back(std::move(g));
    task = [&](int i) { return guarded([&] { return stein_iff(graphs[ix(i)]); }); };
  } else if (o.family == "multi4") {
    const int count = o.count ? o.count : 200;
    for (int i = 0; i < count; ++i) inputs.push_back(Json{{"seed", o.seed + static_cast<std::uint64_t>(i)}});
    task = [&](int i) { return guarded([&] { return multi4_soundness(o.size, inputs[ix(i)]["seed"]); }); };
  } else if (o.family == "thm23-valid") {
    const int n_max = o.n_max ? o.n_max : 12;
    for (int n = 6; n <= std::min(n_max, kMaxEvenTriangulationOrder); ++n)
      for (EmbeddedGraph& g : gen_even_triangulations(n))
        if (meets_thm23_hypothesis(g)) graphs.push_back(std::move(g));
    task = [&](int i) { return guarded([&] { return thm23_instance(graphs[ix(i)]); }); };
  } else if (o.family == "thm24-valid") {
    graphs = gen_thm24_instances(o.n_max ? o.n_max : 12, o.seed, o.count);
    task = [&](int i) { return guarded([&] { return thm24_instance(graphs[ix(i)]); }); };
  } else {
    throw Error(ErrorKind::ParseError, "unknown survey family " + o.family);
  }
  const int count = graphs.empty() ? static_cast<int>(inputs.size()) : static_cast<int>(graphs.size());
  const auto start = std::chrono::steady_clock::now();
  std::vector<Json> results = run_parallel(count, o.jobs, task);
  int passed = 0;
  bool halted = false;
  for (int i = 0; i < count && !halted; ++i) {
    Json line = results[ix(i)];
    line["command"] = "survey";
    line["family"] = o.family;
    line["instance"] = i;
    const Json input = graphs.empty() ? inputs[ix(i)] : to_json(graphs[ix(i)]);
    line["input_digest"] = digest(input);
    if (line["pass"].get<bool>()) {
      ++passed;
    } else {
      line["input"] = input;
      halted = true;
    }
    out << line.dump() << '\n';
  }
  Json summary{{"command", "survey"}, {"family", o.family}, {"instances", count}, {"passed", passed},
               {"status", halted ? "fail" : "pass"}};
  if (o.timing)
    summary["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  out << summary.dump() << '\n';
  err << "survey " << o.family << ": " << passed << "/" << count << " passed" << (halted ? ", halted on failure" : "")
      << '\n';
  return halted ? kExitFail : kExitPass;
}

// --- gen -------------------------------------------------------------------

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<Json> docs;
  if (o.family == "bipyramid") {
    docs.push_back(to_json(gen_bipyramid(o.n ? o.n : 3)));
  } else if (o.family == "even-tri") {
    for (const EmbeddedGraph& g : gen_even_triangulations(o.n ? o.n : 10)) docs.push_back(to_json(g));
  } else if (o.family == "multi4" || o.family == "multi4-2c") {
    for (int i = 0; i < std::max(1, o.count); ++i) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
      const Graph g = o.family == "multi4" ? gen_multi4(o.size, seed) : gen_multi4_two_connected(o.size, seed);
      docs.push_back(to_json(g));
    }
  } else if (o.family == "thm24-valid") {
    for (const EmbeddedGraph& g : gen_thm24_instances(o.n_max ? o.n_max : 12, o.seed, o.count))
      docs.push_back(to_json(g));
  } else {
    throw Error(ErrorKind::ParseError, "unknown gen family " + o.family);
  }
  for (const Json& d : docs) out << d.dump() << '\n';
  err << "gen " << o.family << ": " << docs.size() << " graphs\n";
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton cycles in duals of even plane triangulations"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timing", o.timing, "Add wall-clock time to reports");

  auto* check = app.add_subcommand("check", "Certify a graph against a family");
  check->add_option("path", o.path, "JSON graph")->required();
  check->add_option("--family", o.family, "Family to certify")
      ->required()
      ->check(CLI::IsMember({"even-tri", "multi4", "barnette-hypothesis"}));
  check->add_option("--cap", o.cap, "Cycle enumeration cap");

  auto* color = app.add_subcommand("color", "2-colour the beta vertices of a multi-4-cycle graph");
  color->add_option("path", o.path, "JSON graph with an alpha colouring \"a\"")->required();
  color->add_option("--pin", o.pin, "Pinned beta vertex, as v=1 or v=2");

  auto* partition = app.add_subcommand("partition", "Split a triangulation into two induced trees");
  partition->add_option("path", o.path, "JSON embedded graph")->required();
  auto* together = partition->add_option("--together", o.together, "Big class-3 vertex v and neighbour w, as v,w");
  partition->add_flag("--thm24", o.thm24, "Use the face-sparse construction")->excludes(together);
  partition->add_option("--cap", o.cap, "Search node cap");

  auto* hamilton = app.add_subcommand("hamilton", "Hamilton cycle of the dual");
  hamilton->add_option("path", o.path, "JSON embedded graph")->required();
  auto* avoid = hamilton->add_option("--avoid-edge", o.avoid_edge, "Primal edge whose dual is avoided, as u,v");
  hamilton->add_flag("--face-sparse", o.face_sparse, "Sparse on every colour-3 face")->excludes(avoid);

  auto* survey = app.add_subcommand("survey", "Run a pipeline over generated instances");
  survey->add_option("--family", o.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"even-tri", "multi4", "thm23-valid", "thm24-valid"}));
  survey->add_option("--n-max", o.n_max, "Largest triangulation order");
  survey->add_option("--size", o.size, "Graph size for multi4");
  survey->add_option("--count", o.count, "Instances (multi4) or random extras (thm24-valid)");
  survey->add_option("--seed", o.seed, "First seed");
  survey->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Generate instances as JSON lines");
  gen->add_option("--family", o.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"bipyramid", "even-tri", "multi4", "multi4-2c", "thm24-valid"}));
  gen->add_option("--n", o.n, "Half cycle length (bipyramid) or order (even-tri)");
  gen->add_option("--n-max", o.n_max, "Largest order (thm24-valid)");
  gen->add_option("--size", o.size, "Graph size (multi4)");
  gen->add_option("--count", o.count, "Number of graphs or random extras");
  gen->add_option("--seed", o.seed, "First seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Report r(command);
  try {
    if (command == "survey") return cmd_survey(o, out, err);
    if (command == "gen") return cmd_gen(o, out, err);
    if (command == "check") cmd_check(o, r);
    if (command == "color") cmd_color(o, r);
    if (command == "partition") cmd_partition(o, r);
    if (command == "hamilton") cmd_hamilton(o, r);
  } catch (const Error& e) {
    Json line{{"command", command}, {"status", "error"}, {"error", std::string(to_string(e.kind()))},
              {"detail", e.what()}};
    out << line.dump() << '\n';
    err << command << ": " << e.what() << '\n';
    return kExitError;
  }
  r.body["status"] = r.pass ? "pass" : "fail";
  if (o.timing)
    r.body["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  out << r.body.dump() << '\n';
  err << command << ": " << (r.pass ? "pass" : "fail") << '\n';
  return r.pass ? kExitPass : kExitFail;
}

}  // namespace barnette
