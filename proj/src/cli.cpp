#include "mincover/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "mincover/countable.hpp"
#include "mincover/covers.hpp"
#include "mincover/error.hpp"
#include "mincover/io.hpp"
#include "mincover/structured.hpp"

namespace mincover::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunReport {
  std::string command;
  std::vector<std::string> argv;
  std::optional<std::string> digest;
  json result = json::object();
  std::vector<std::string> lines;
  std::string verdict;
  int exit_code = kOk;

  void emit(std::ostream& out, bool as_json) const {
    if (as_json) {
      json doc = {{"command", command},
                  {"argv", argv},
                  {"input_digest", digest ? json(*digest) : json(nullptr)},
                  {"result", result},
                  {"verdict", verdict},
                  {"exit_code", exit_code}};
      out << doc.dump(2) << '\n';
      return;
    }
    out << "command: " << command << '\n';
    if (digest) out << "input: " << *digest << '\n';
    for (const auto& l : lines) out << l << '\n';
    out << "verdict: " << verdict << '\n';
  }
};

struct Input {
  std::string text;
  FiniteHypergraph hypergraph;
};

Input load(const std::string& path, std::istream& in) {
  Input input;
  if (path == "-") {
    input.text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path);
    input.text.assign(std::istreambuf_iterator<char>(file), {});
  }
  input.hypergraph = parse_hypergraph(input.text);
  return input;
}

IndexSet parse_indices(const std::string& text, const FiniteHypergraph& h) {
  IndexSet out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || item[0] == '-') throw UsageError("bad edge index '" + item + "'");
    if (value >= h.size()) {
      throw UsageError("edge index " + item + " out of range (" + std::to_string(h.size()) +
                       " edges)");
    }
    out.push_back(static_cast<EdgeIndex>(value));
  }
  return out;
}

std::string join(const IndexSet& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s.empty() ? "(none)" : s;
}

json labels_json(const FiniteHypergraph& h, const VertexSet& vs) {
  json arr = json::array();
  for (Vertex v : vs) arr.push_back(h.label(v));
  return arr;
}

std::string labels_text(const FiniteHypergraph& h, const VertexSet& vs) {
  std::string s = "{";
  bool first = true;
  for (Vertex v : vs) {
    if (!first) s += ' ';
    s += h.label(v);
    first = false;
  }
  return s + "}";
}

// Selected indices plus private vertices, shared by every cover-producing command.
void describe_cover(RunReport& r, const Cover& c) {
  const auto& h = c.host();
  const MinimalityReport m = is_minimal_cover(c);
  r.result["selected"] = c.selected();
  json priv = json::object();
  for (const auto& [e, v] : m.private_vertex) priv[std::to_string(e)] = h.label(v);
  r.result["private_vertex"] = priv;
  r.result["minimal"] = m.minimal;
  r.lines.push_back("selected: " + join(c.selected()));
  for (const auto& [e, v] : m.private_vertex) {
    r.lines.push_back("  edge " + std::to_string(e) + " " + labels_text(h, h.edge(e)) +
                      " private " + h.label(v));
  }
  r.verdict = m.minimal ? "minimal-cover" : "not-minimal";
  r.exit_code = m.minimal ? kOk : kNegative;
}

json trace_json(const FiniteHypergraph& h, const ConstructionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json traces = json::array();
    for (const auto& e : s.local.traces.edges()) traces.push_back(labels_json(h, e));
    steps.push_back({{"n", s.n},
                     {"remaining", labels_json(h, s.remaining)},
                     {"pivot", h.label(s.pivot)},
                     {"earlier_pivots", labels_json(h, s.earlier_pivots)},
                     {"pivot_family", s.pivot_family},
                     {"local_universe", labels_json(h, s.local_universe)},
                     {"local_traces", traces},
                     {"local_cover", s.local_cover},
                     {"lifted", s.lifted}});
  }
  return steps;
}

struct Options {
  bool json_out = false;
  std::string file = "-";
  std::string indices;
  bool indices_given = false;
  std::string algorithm = "greedy";
  std::size_t max_edges = 20;
  std::size_t depth = 0;
  std::size_t n = 2;
  std::size_t m = 2;
  std::size_t edge = 0;
  std::optional<std::size_t> bound;
  std::string generator;
  std::size_t count = 0;
  std::int64_t radius = 1;
  std::uint64_t seed = 1;
  std::size_t vertices = 20;
  std::size_t width = 6;
};

RunReport cmd_check_cover(const Options& o, const Input& in) {
  const auto& h = in.hypergraph;
  RunReport r;
  Cover c(h, parse_indices(o.indices, h));
  const VertexSet missing = h.vertices() - c.covered();
  r.result["edges"] = h.size();
  r.result["is_cover"] = missing.empty();
  r.result["uncovered"] = labels_json(h, missing);
  if (!missing.empty()) {
    r.result["selected"] = c.selected();
    r.result["minimal"] = false;
    r.result["violating_edge"] = nullptr;
    r.lines.push_back("selected: " + join(c.selected()));
    r.lines.push_back("cover: no, uncovered " + labels_text(h, missing));
    r.verdict = "not-a-cover";
    r.exit_code = kNegative;
    return r;
  }
  r.lines.push_back("cover: yes");
  describe_cover(r, c);
  const MinimalityReport m = is_minimal_cover(c);
  r.result["violating_edge"] = m.violating_edge ? json(*m.violating_edge) : json(nullptr);
  if (m.violating_edge) {
    r.lines.push_back("redundant edge: " + std::to_string(*m.violating_edge));
  }
  return r;
}

RunReport cmd_minimalize(const Options& o, const Input& in) {
  const auto& h = in.hypergraph;
  RunReport r;
  r.result["algorithm"] = o.algorithm;
  if (o.indices_given && o.algorithm != "greedy") {
    throw UsageError("--indices only applies to the greedy algorithm");
  }
  try {
    if (o.algorithm == "greedy") {
      const Cover start = o.indices_given ? Cover(h, parse_indices(o.indices, h)) : full_cover(h);
      describe_cover(r, greedy_minimalize(start));
    } else if (o.algorithm == "point-finite") {
      describe_cover(r, point_finite_cover(h));
    } else if (o.algorithm == "bounded-width") {
      describe_cover(r, bounded_width_cover(h));
    } else if (o.algorithm == "local") {
      const LocalConstruction lc = local_construction(h);
      describe_cover(r, lc.cover);
      r.result["trace"] = trace_json(h, lc.trace);
      for (const auto& s : lc.trace.steps) {
        r.lines.push_back("step " + std::to_string(s.n) + ": pivot " + h.label(s.pivot) +
                          ", remaining " + labels_text(h, s.remaining) + ", universe " +
                          labels_text(h, s.local_universe) + ", lifted " + join(s.lifted));
      }
    } else {
      throw UsageError("unknown algorithm " + o.algorithm);
    }
  } catch (const NotACover& e) {
    r.result["error"] = e.what();
    r.verdict = "precondition-failed";
    r.exit_code = kNegative;
  } catch (const InvariantViolation& e) {
    r.result["error"] = e.what();
    r.verdict = "invariant-violation";
    r.exit_code = kNegative;
  }
  return r;
}

RunReport cmd_delete_lift(const Options& o, const Input& in) {
  const auto& h = in.hypergraph;
  if (o.edge >= h.size()) throw UsageError("--edge out of range");
  RunReport r;
  r.result["edge"] = o.edge;
  describe_cover(r, delete_and_lift(h, o.edge));
  return r;
}

RunReport cmd_enumerate(const Options& o, const Input& in) {
  const auto& h = in.hypergraph;
  RunReport r;
  try {
    MinimalCoverEnumerator it(h, CoverLimits{o.max_edges});
    json covers = json::array();
    while (auto c = it.next()) {
      covers.push_back(c->selected());
      r.lines.push_back("cover: " + join(c->selected()));
    }
    r.result["covers"] = covers;
    r.result["count"] = covers.size();
    r.verdict = std::to_string(covers.size()) + " minimal covers";
  } catch (const SizeLimit& e) {
    r.result["error"] = e.what();
    r.verdict = "size-limit";
    r.exit_code = kNegative;
  }
  return r;
}

RunReport cmd_check_nm(const Options& o, const Input& in) {
  const auto& h = in.hypergraph;
  if (o.n == 0 || o.m == 0) throw UsageError("-n and -m must be positive");
  RunReport r;
  r.result["n"] = o.n;
  r.result["m"] = o.m;
  try {
    const NmResult res = check_nm(h, {o.n, o.m});
    r.result["holds"] = res.holds;
    r.result["subfamily"] = res.subfamily ? json(*res.subfamily) : json(nullptr);
    r.result["intersection"] = labels_json(h, res.intersection);
    if (res.subfamily) {
      r.lines.push_back("violating subfamily: " + join(*res.subfamily) + " sharing " +
                        labels_text(h, res.intersection));
    }
    r.verdict = res.holds ? "holds" : "violated";
    r.exit_code = res.holds ? kOk : kNegative;
  } catch (const SizeLimit& e) {
    r.result["error"] = e.what();
    r.verdict = "size-limit";
    r.exit_code = kNegative;
  }
  return r;
}

RunReport cmd_find_omega(const Options& o, const Input& in) {
  const auto& h = in.hypergraph;
  RunReport r;
  r.result["depth"] = o.depth;
  const auto w = find_omega_witness(h, o.depth);
  r.result["found"] = w.has_value();
  if (!w) {
    r.result["omega"] = nullptr;
    r.result["edge_indices"] = nullptr;
    r.lines.push_back("witness: none");
    r.verdict = "none";
    r.exit_code = kNegative;
    return r;
  }
  json omega = json::array();
  std::string vs;
  for (Vertex v : w->omega) {
    omega.push_back(h.label(v));
    vs += (vs.empty() ? "" : " ") + h.label(v);
  }
  r.result["omega"] = omega;
  r.result["edge_indices"] = w->edge_indices;
  r.lines.push_back("omega: " + vs);
  std::string es;
  for (EdgeIndex e : w->edge_indices) es += (es.empty() ? "" : " ") + std::to_string(e);
  r.lines.push_back("edges: " + es);
  const std::string problem = validate_witness(h, *w);
  r.verdict = problem.empty() ? "witness" : "invalid-witness: " + problem;
  r.exit_code = problem.empty() ? kOk : kNegative;
  return r;
}

RunReport cmd_stats(const Options& o, const Input& in) {
  const auto& h = in.hypergraph;
  RunReport r;
  const DegreeReport deg = check_point_finite(h, o.bound.value_or(SIZE_MAX));
  r.result["vertices"] = h.vertices().size();
  r.result["edges"] = h.size();
  r.result["distinct_edges"] = h.distinct_count();
  r.result["width"] = h.width();
  r.result["max_degree"] = deg.max_degree;
  r.result["max_degree_vertex"] = deg.max_vertex ? json(h.label(*deg.max_vertex)) : json(nullptr);
  r.result["maximal_edges"] = maximal_edges(h);
  r.result["maximal_disjoint"] = maximal_disjoint_subfamily(h);
  r.lines.push_back("vertices: " + std::to_string(h.vertices().size()));
  r.lines.push_back("edges: " + std::to_string(h.size()) + " (" +
                    std::to_string(h.distinct_count()) + " distinct)");
  r.lines.push_back("width: " + std::to_string(h.width()));
  r.lines.push_back("max degree: " + std::to_string(deg.max_degree) +
                    (deg.max_vertex ? " at " + h.label(*deg.max_vertex) : ""));
  r.lines.push_back("maximal edges: " + join(maximal_edges(h)));
  if (o.bound) {
    r.result["degree_bound"] = *o.bound;
    r.result["within_bound"] = deg.holds;
    r.verdict = deg.holds ? "within-bound" : "exceeds-bound";
    r.exit_code = deg.holds ? kOk : kNegative;
  } else {
    r.verdict = "ok";
  }
  return r;
}

int cmd_gen(const Options& o, std::ostream& out, const std::vector<std::string>& argv) {
  std::optional<LazyHypergraph> lazy;
  std::size_t count = o.count;
  if (o.generator == "omega") {
    lazy = gen_omega();
  } else if (o.generator == "domotor") {
    lazy = gen_domotor();
  } else if (o.generator == "lines") {
    if (o.radius < 1) throw UsageError("--radius must be positive");
    try {
      lazy = gen_lattice_lines(o.radius);
    } catch (const SizeLimit& e) {
      throw UsageError(e.what());
    }
    count = *lazy->edge_count();
  } else if (o.generator == "random") {
    if (o.count == 0 || o.vertices == 0 || o.width == 0) {
      throw UsageError("random needs positive --count, --vertices and --width");
    }
    std::mt19937_64 rng(o.seed);
    const FiniteHypergraph h = random_hypergraph(rng, {o.count, o.count, o.vertices, o.width});
    auto edges = std::make_shared<std::vector<Edge>>(h.edges());
    LazyMetadata meta;
    meta.provenance = "seed " + std::to_string(o.seed);
    lazy = LazyHypergraph("random", [edges](std::size_t i) { return (*edges)[i]; }, meta,
                          edges->size());
  } else {
    throw UsageError("unknown generator " + o.generator);
  }
  const Truncation t = truncate(*lazy, count);
  std::ostringstream text;
  write_truncation(text, *lazy, t);
  if (!o.json_out) {
    out << text.str();
    return kOk;
  }
  RunReport r;
  r.command = "gen";
  r.argv = argv;
  r.result["generator"] = o.generator;
  r.result["edges"] = t.hypergraph.size();
  r.result["text"] = text.str();
  r.verdict = "generated";
  r.emit(out, true);
  return kOk;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    s += kHex[md[i] >> 4];
    s += kHex[md[i] & 0xF];
  }
  return s;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Minimal covers of finite hypergraphs", "mincover"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_out, "Emit one JSON document instead of text");

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Hypergraph file, '-' for standard input");
  };

  auto* check = app.add_subcommand("check-cover", "Check that selected edges form a minimal cover");
  add_file(check);
  check->add_option("--indices", o.indices, "Comma separated edge indices")->required();

  auto* minimalize = app.add_subcommand("minimalize", "Compute a minimal cover");
  add_file(minimalize);
  minimalize->add_option("--algorithm", o.algorithm)
      ->check(CLI::IsMember({"greedy", "point-finite", "bounded-width", "local"}));
  auto* start = minimalize->add_option("--indices", o.indices, "Starting selection for greedy");

  auto* lift = app.add_subcommand("delete-lift", "Minimal cover through the trace off one edge");
  add_file(lift);
  lift->add_option("--edge", o.edge)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every minimal cover");
  add_file(enumerate);
  enumerate->add_option("--max-edges", o.max_edges, "Bound on distinct edges");

  auto* nm = app.add_subcommand("check-nm", "Every n distinct edges share fewer than m vertices");
  add_file(nm);
  nm->add_option("-n", o.n, "Subfamily size");
  nm->add_option("-m", o.m, "Intersection bound");

  auto* omega = app.add_subcommand("find-omega", "Search for a staircase witness");
  add_file(omega);
  omega->add_option("--depth", o.depth)->required();

  auto* stats = app.add_subcommand("stats", "Sizes, degrees and maximal edges");
  add_file(stats);
  stats->add_option("--bound", o.bound, "Fail when some vertex lies in more edges");

  auto* gen = app.add_subcommand("gen", "Write a generated hypergraph");
  gen->add_option("name", o.generator, "omega | domotor | lines | random")->required();
  gen->add_option("--count", o.count, "Number of edges");
  gen->add_option("--radius", o.radius, "Grid radius for lines");
  gen->add_option("--seed", o.seed, "Seed for random");
  gen->add_option("--vertices", o.vertices, "Vertex pool for random");
  gen->add_option("--width", o.width, "Edge size cap for random");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.indices_given = start->count() > 0;

  try {
    if (gen->parsed()) return cmd_gen(o, out, args);

    const Input input = load(o.file, in);
    RunReport r;
    if (check->parsed()) {
      r = cmd_check_cover(o, input);
      r.command = "check-cover";
    } else if (minimalize->parsed()) {
      r = cmd_minimalize(o, input);
      r.command = "minimalize";
    } else if (lift->parsed()) {
      r = cmd_delete_lift(o, input);
      r.command = "delete-lift";
    } else if (enumerate->parsed()) {
      r = cmd_enumerate(o, input);
      r.command = "enumerate";
    } else if (nm->parsed()) {
      r = cmd_check_nm(o, input);
      r.command = "check-nm";
    } else if (omega->parsed()) {
      if (o.depth == 0) throw UsageError("--depth must be at least 1");
      r = cmd_find_omega(o, input);
      r.command = "find-omega";
    } else {
      r = cmd_stats(o, input);
      r.command = "stats";
    }
    r.argv = args;
    r.digest = "sha256:" + sha256_hex(input.text);
    r.emit(out, o.json_out);
    return r.exit_code;
  } catch (const ParseError& e) {
    err << "mincover: parse error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "mincover: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "mincover: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace mincover::cli
