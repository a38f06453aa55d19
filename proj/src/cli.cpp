#include "lchord/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lchord/generators.hpp"
#include "lchord/json_io.hpp"

namespace lchord {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format;
  std::string fixture;
  std::string gen;
  std::string partition;
  std::string cover;
  std::uint64_t budget = IndexOptions{}.budget;
  std::size_t max_holes = HoleLimits{}.max_hole_count;
  std::optional<std::uint64_t> seed;
  bool json = false;
  bool greedy = false;
  std::string join;
  int chromatic_max = ReportOptions{}.chromatic_max_order;
  // oracle
  std::string op;
  std::string lists;
  std::string correspondence;
  std::string cliques;
  int k = 0;
  int t = 0;
};

std::string read_stream(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return read_stream(f);
}

/// Inline JSON, or @path to read it from a file.
std::string json_argument(const std::string& value) {
  return !value.empty() && value.front() == '@' ? read_file(value.substr(1)) : value;
}

std::pair<int, int> parse_join(const std::string& text) {
  const std::size_t comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("--join expects m,n");
  }
}

GraphFormat input_format(const Options& o, std::string_view text) {
  if (!o.format.empty()) {
    auto f = parse_format_name(o.format);
    if (!f || *f == GraphFormat::dot) throw UsageError("--format must be edgelist or json");
    return *f;
  }
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{' ? GraphFormat::json : GraphFormat::edgelist;
}

GeneratorSpec generator_spec(const Options& o) {
  GeneratorSpec spec = o.gen.front() == '@' ? parse_generator_spec_json(read_file(o.gen.substr(1)))
                                            : parse_generator_spec(o.gen);
  if (spec.kind == "random" && spec.params.size() == 2) {
    spec.params.push_back(static_cast<double>(o.seed.value_or(0)));
  }
  return spec;
}

Graph load_graph(const Options& o, std::istream& in) {
  const int sources = !o.input.empty() + !o.fixture.empty() + !o.gen.empty();
  if (sources != 1) throw UsageError("exactly one of --input, --fixture, --gen is required");
  if (!o.fixture.empty()) {
    if (o.fixture != "paper_fig1" && o.fixture != "paper_fig5") {
      throw UsageError("unknown fixture '" + o.fixture + "' (paper_fig1, paper_fig5)");
    }
    return generate(GeneratorSpec{o.fixture, {}, {}});
  }
  if (!o.gen.empty()) return generate(generator_spec(o));
  const std::string text = o.input == "-" ? read_stream(in) : read_file(o.input);
  return parse_graph(text, input_format(o, text));
}

IndexOptions index_options(const Options& o) {
  IndexOptions opts;
  opts.budget = o.budget;
  opts.limits.max_hole_count = o.max_holes;
  return opts;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "graph file, or - for stdin");
  sub->add_option("--format", o.format, "input format: edgelist or json (default: detected)");
  sub->add_option("--fixture", o.fixture, "built-in graph: paper_fig1 or paper_fig5");
  sub->add_option("--gen", o.gen, "generator spec, or @file for a JSON spec");
  sub->add_option("--seed", o.seed, "seed for random:n,p");
  sub->add_option("--budget", o.budget, "search node budget")->check(CLI::PositiveNumber);
  sub->add_option("--max-holes", o.max_holes, "hole enumeration limit")->check(CLI::PositiveNumber);
  sub->add_flag("--json", o.json, "JSON output");
}

std::string names(const Graph& g, std::span<const Vertex> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + g.name(vs[i]);
  return out + "}";
}

std::string names(const Graph& g, const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + names(g, p.parts()[i]);
  return out + ")";
}

std::string cycle_names(const Graph& g, const Hole& h) {
  std::string out;
  for (std::size_t i = 0; i < h.length(); ++i) out += (i ? "-" : "") + g.name(h.cycle()[i]);
  return out;
}

std::string edge_names(const Graph& g, const EdgeSet& edges) {
  std::string out;
  for (const Edge& e : edges) out += (out.empty() ? "" : " ") + g.name(e.first) + "-" + g.name(e.second);
  return out.empty() ? "(none)" : out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// gen

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.gen.empty()) throw UsageError("gen needs --gen SPEC");
  GraphFormat format = GraphFormat::edgelist;
  if (!o.format.empty()) {
    auto f = parse_format_name(o.format);
    if (!f) throw UsageError("--format must be edgelist, json or dot");
    format = *f;
  }
  const Graph g = generate(generator_spec(o));
  out << serialize(g, format);
  if (format != GraphFormat::dot) out << '\n';
  return exit_ok;
}

// analyze

int cmd_analyze(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o, in);
  const IndexOptions opts = index_options(o);
  const HoleSet hs = enumerate_holes(g, opts.limits);
  if (!hs.complete()) throw Error(Errc::incomplete_holes, "hole enumeration stopped at --max-holes");
  const HoleComponents comps = hole_components(hs);
  const std::vector<char> flags = nc_vertex_flags(hs);
  std::vector<Vertex> nc_vertices;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (flags[v] && !hs.indices_through(v).empty()) nc_vertices.push_back(v);
  }
  const auto [cover, finished] = find_nc_cover(g, opts);
  const char* status = !finished ? "budget_exhausted" : !cover ? "none" : cover->empty() ? "chordal" : "found";

  if (o.json) {
    Json j;
    j["order"] = g.order();
    j["size"] = g.size();
    j["chordal"] = hs.empty();
    j["hole_count"] = hs.size();
    j["holes"] = to_json(hs);
    j["components"] = to_json(comps);
    j["nc_vertices"] = nc_vertices;
    j["nc_cover"] = cover ? Json(*cover) : Json(nullptr);
    j["nc_cover_status"] = status;
    j["labels"] = to_json(g).value("labels", Json::object());
    emit(out, j);
  } else {
    out << "order " << g.order() << ", size " << g.size() << ", " << hs.size() << " holes\n";
    for (const Hole& h : hs.holes()) out << "  hole " << cycle_names(g, h) << '\n';
    out << "Omega " << names(g, comps.omega) << '\n';
    for (const auto& c : comps.classes) out << "  component " << names(g, c) << '\n';
    out << "NC vertices " << names(g, nc_vertices) << '\n';
    out << "NC hole cover: " << status;
    if (cover && !cover->empty()) out << ' ' << names(g, *cover);
    out << '\n';
  }
  return finished ? exit_ok : exit_budget;
}

// chordalize

void emit_failure(const Options& o, const Error& e, std::ostream& out, std::ostream& err) {
  const auto* nc = dynamic_cast<const NcViolation*>(&e);
  if (o.json) {
    Json j;
    j["error"] = errc_name(e.code());
    j["message"] = e.what();
    if (nc) j["diagnostics"] = to_json(nc->diagnostics());
    emit(out, j);
  }
  err << "rejected: " << e.what() << '\n';
}

int cmd_chordalize(const Options& o, std::ostream& out, std::ostream& err, std::istream& in) {
  if (!o.partition.empty() && !o.cover.empty()) throw UsageError("give at most one of --partition and --cover");
  const Graph g = load_graph(o, in);
  const IndexOptions opts = index_options(o);
  std::optional<Partition> partition;
  int rc = exit_ok;
  if (!o.partition.empty()) {
    partition = parse_partition(g, json_argument(o.partition));
  } else if (!o.cover.empty()) {
    partition = Partition({parse_vertex_list(g, json_argument(o.cover))});
  } else {
    IndexResult r = exact_index(g, opts);
    partition = r.witness;
    if (!r.exact) rc = exit_budget;
  }

  ChainTrace trace;
  if (partition) {
    try {
      trace = run_chain(g, *partition, opts.limits);
    } catch (const NcViolation& e) {
      emit_failure(o, e, out, err);
      return exit_failure;
    } catch (const Error& e) {
      if (e.code() != Errc::not_a_hole_cover && e.code() != Errc::invalid_partition) throw;
      emit_failure(o, e, out, err);
      return exit_failure;
    }
  } else {
    // Chordal input: the chain is empty and the graph is its own completion.
    for (Vertex v = 0; v < g.order(); ++v) trace.base_vertices.push_back(v);
    trace.base = g;
    trace.final_graph = g;
  }
  const bool chordal = is_chordal(trace.final_graph);
  const bool minimal = is_minimal_completion(g, trace.final_graph).minimal;

  if (o.json) {
    Json j = to_json(trace);
    j["chordal"] = chordal;
    j["minimal"] = minimal;
    emit(out, j);
  } else {
    out << "partition " << names(g, trace.partition) << '\n';
    for (const StageRecord& s : trace.stages) {
      out << "stage " << s.index << ": part " << names(g, s.cover_part) << ", added " << edge_names(g, s.added)
          << '\n';
    }
    out << "fill " << trace.fill.size() << " edges: " << edge_names(g, trace.fill) << '\n';
    out << "chordal " << (chordal ? "yes" : "no") << ", minimal " << (minimal ? "yes" : "no") << '\n';
  }
  return rc;
}

// index

int cmd_index(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o, in);
  const IndexOptions opts = index_options(o);
  const IndexResult r = o.greedy ? greedy_index_upper_bound(g, opts) : exact_index(g, opts);
  if (o.json) {
    emit(out, to_json(r));
  } else {
    out << "i(G) " << (r.exact ? "= " : "<= ") << r.value << (r.exact ? " (exact)" : " (upper bound)") << '\n';
    if (r.witness) out << "witness " << names(g, *r.witness) << '\n';
    out << "search nodes " << r.stats.nodes << '\n';
  }
  return o.greedy || r.exact ? exit_ok : exit_budget;
}

// verify

int cmd_verify(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o, in);
  ReportOptions opts;
  opts.index = index_options(o);
  opts.exact_index = !o.greedy;
  opts.chromatic_max_order = o.chromatic_max;
  if (!o.join.empty()) opts.join = parse_join(o.join);
  const AnalysisReport r = bound_report(g, opts);
  if (o.json) {
    emit(out, to_json(r));
  } else {
    out << "n " << r.order << ", m " << r.size << ", omega " << r.omega << ", i "
        << (r.index.exact ? "" : "<= ") << r.index.value << '\n';
    for (const LedgerRow& row : r.ledger) {
      auto num = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string("?"); };
      out << row_status_name(row.status) << "  " << row.id << ": " << row.lhs_name << " " << row.op << " "
          << row.rhs_name << "  (" << num(row.lhs) << " " << row.op << " " << num(row.rhs) << ")";
      if (!row.note.empty()) out << "  " << row.note;
      out << '\n';
    }
  }
  return r.any_fail() ? exit_failure : exit_ok;
}

// oracle

std::vector<std::vector<Vertex>> parse_cliques(const Graph& g, const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(Errc::syntax, 1, 0, "--cliques: malformed JSON");
  if (!j.is_array()) throw UsageError("--cliques expects [[...], ...]");
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : j) out.push_back(parse_vertex_list(g, c.dump()));
  return out;
}

void print_text(std::ostream& out, const Json& j) {
  for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
}

int cmd_oracle(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o, in);
  Json j;
  int rc = exit_ok;
  const std::string& op = o.op;
  if (op == "chordal") {
    const EliminationOrdering eo = is_chordal_with_peo(g);
    j["chordal"] = eo.perfect;
    j["order"] = eo.order;
    j["hole"] = eo.hole ? to_json(*eo.hole) : Json(nullptr);
  } else if (op == "omega") {
    const std::vector<Vertex> clique = max_clique(g);
    j["omega"] = clique.size();
    j["clique"] = clique;
  } else if (op == "chromatic") {
    const int chi = chromatic_number(g, o.chromatic_max);
    j["chromatic"] = chi;
    j["coloring"] = *find_coloring(g, chi);
  } else if (op == "list") {
    if (o.lists.empty()) throw UsageError("oracle list needs --lists JSON");
    const ListColoringResult r = list_colorable(g, parse_list_assignment(g, json_argument(o.lists)));
    j["colorable"] = r.colorable;
    j["coloring"] = r.colorable ? Json(r.coloring) : Json(nullptr);
  } else if (op == "dp") {
    if (o.correspondence.empty() == (o.k == 0)) throw UsageError("oracle dp needs --correspondence JSON or --k N");
    const Correspondence c =
        o.k ? identity_cover(g, o.k) : parse_correspondence(g, json_argument(o.correspondence));
    const DpResult r = dp_colorable(g, c);
    j["k"] = c.k;
    j["colorable"] = r.colorable;
    j["coloring"] = r.colorable ? Json(r.coloring) : Json(nullptr);
  } else if (op == "dp_tiny") {
    const std::optional<int> dp = dp_chromatic_tiny(g, 3);
    j["chi_dp"] = dp ? Json(*dp) : Json(">3");
  } else if (op == "degeneracy") {
    const DegeneracyInfo d = degeneracy_and_cover_numbers(g, true);
    j["degeneracy"] = d.degeneracy;
    j["peel_order"] = d.peel_order;
    j["alpha"] = *d.alpha;
    j["beta"] = *d.beta;
  } else if (op == "join") {
    if (o.join.empty()) throw UsageError("oracle join needs --join m,n");
    const auto [m, n] = parse_join(o.join);
    const auto w = contains_join_subgraph(g, m, n);
    j["found"] = w.has_value();
    j["independent_side"] = w ? Json(w->independent_side) : Json(nullptr);
    j["clique_side"] = w ? Json(w->clique_side) : Json(nullptr);
  } else if (op == "minor") {
    if (o.t <= 0) throw UsageError("oracle minor needs --t N");
    const MinorResult r = has_clique_minor(g, o.t, o.budget);
    j["t"] = o.t;
    j["status"] = tri_name(r.status);
    j["branch_sets"] = r.branch_sets;
    j["nodes"] = r.nodes;
    if (r.status == Tri::indeterminate) rc = exit_budget;
  } else if (op == "efl") {
    if (o.cliques.empty()) throw UsageError("oracle efl needs --cliques JSON");
    const EflCertificate c = check_efl_instance(g, parse_cliques(g, json_argument(o.cliques)));
    j = to_json(c);
    if (c.certified == Tri::no) rc = exit_failure;
    if (c.certified == Tri::indeterminate) rc = exit_budget;
  } else if (op == "hole_cover") {
    const HoleSet hs = enumerate_holes(g, index_options(o).limits);
    if (hs.empty()) {
      j["cover"] = Json::array();
      j["optimal"] = true;
    } else {
      const HoleCoverResult r = min_hole_cover(hs, o.budget);
      j["cover"] = r.cover;
      j["optimal"] = r.optimal;
      if (!r.optimal) rc = exit_budget;
    }
  } else if (op == "nc") {
    if (o.cover.empty()) throw UsageError("oracle nc needs --cover JSON");
    const HoleSet hs = enumerate_holes(g, index_options(o).limits);
    const std::vector<Vertex> members = parse_vertex_list(g, json_argument(o.cover));
    const SetNc nc = set_satisfies_nc(hs, members);
    j = to_json(nc);
    j["hole_cover"] = is_hole_cover(hs, members);
    if (!nc.ok) j["message"] = nc.describe(&g);
  } else {
    throw UsageError("unknown oracle '" + op +
                     "' (chordal, omega, chromatic, list, dp, dp_tiny, degeneracy, join, minor, efl, "
                     "hole_cover, nc)");
  }
  if (o.json) {
    emit(out, j);
  } else {
    print_text(out, j);
  }
  return rc;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::limit_exceeded:
    case Errc::incomplete_holes:
      return exit_budget;
    case Errc::invalid_argument:
      return exit_usage;
    default:
      return exit_failure;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Local chordalization toolkit", "lchord"};
  app.require_subcommand(1);
  Options o;

  CLI::App* gen = app.add_subcommand("gen", "emit a generated graph");
  gen->add_option("--gen", o.gen, "generator spec, or @file for a JSON spec")->required();
  gen->add_option("--format", o.format, "output format: edgelist, json or dot");
  gen->add_option("--seed", o.seed, "seed for random:n,p");

  CLI::App* analyze = app.add_subcommand("analyze", "holes, hole components, NC vertices and NC covers");
  add_input(analyze, o);

  CLI::App* chordalize = app.add_subcommand("chordalize", "run a chordalization chain");
  add_input(chordalize, o);
  chordalize->add_option("--partition", o.partition, "partition JSON [[...], ...], or @file");
  chordalize->add_option("--cover", o.cover, "single-stage cover JSON [...], or @file");

  CLI::App* index = app.add_subcommand("index", "non-chordality index");
  add_input(index, o);
  index->add_flag("--greedy", o.greedy, "report the greedy upper bound only");

  CLI::App* verify = app.add_subcommand("verify", "bound ledger; exit 1 iff a row fails");
  add_input(verify, o);
  verify->add_flag("--greedy", o.greedy, "use the greedy index bound");
  verify->add_option("--join", o.join, "m,n for the I_m v K_n route");
  verify->add_option("--chromatic-max", o.chromatic_max, "largest order for exact chi");

  CLI::App* oracle = app.add_subcommand("oracle", "direct oracle access");
  add_input(oracle, o);
  oracle->add_option("op", o.op, "chordal, omega, chromatic, list, dp, dp_tiny, degeneracy, join, minor, efl, "
                                 "hole_cover, nc")
      ->required();
  oracle->add_option("--lists", o.lists, "list assignment JSON, or @file");
  oracle->add_option("--correspondence", o.correspondence, "correspondence cover JSON, or @file");
  oracle->add_option("--k", o.k, "identity cover with k colors");
  oracle->add_option("--join", o.join, "m,n");
  oracle->add_option("--t", o.t, "clique minor order");
  oracle->add_option("--cliques", o.cliques, "EFL clique list JSON, or @file");
  oracle->add_option("--cover", o.cover, "vertex set JSON, or @file");
  oracle->add_option("--chromatic-max", o.chromatic_max, "largest order for exact chi");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out, in);
    if (chordalize->parsed()) return cmd_chordalize(o, out, err, in);
    if (index->parsed()) return cmd_index(o, out, in);
    if (verify->parsed()) return cmd_verify(o, out, in);
    return cmd_oracle(o, out, in);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace lchord
