#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "odiam/acceptance.hpp"
#include "odiam/cli.hpp"
#include "odiam/driver.hpp"
#include "odiam/error.hpp"
#include "odiam/io.hpp"

namespace odiam {

namespace {

struct Flags {
  std::string input;
  std::string second;  // orientation file (verify) or output path (orient)
  std::string dot;
  std::string trace;
  std::string format = "edgelist";
  std::string force;
  std::string results_dir;
  std::int64_t budget = SearchBudget{}.max_nodes;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool seed_given = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

// A path to an edge list / graph6 file, or a family spec such as `cycle:9`.
Multigraph load_graph(const Flags& f) {
  if (std::filesystem::is_regular_file(f.input)) {
    std::string text = read_file(f.input);
    // An edge list header has two fields; a graph6 line has one.
    std::string first = text.substr(0, text.find('\n'));
    bool one_token = !first.empty() && first.find_first_of(" \t") == std::string::npos;
    if (f.format == "graph6" || one_token) return parse_graph6(text);
    return parse_edge_list(text);
  }
  try {
    return generate(parse_family_spec(f.input, f.seed));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, "'" + f.input + "' is neither a readable file nor a family spec (" + e.what() + ")");
  }
}

std::string analysis_text(const Multigraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  std::ostringstream out;
  const bool bridgeless = is_bridgeless(g);
  out << "n " << g.vertex_count() << " m " << g.edge_count() << '\n';
  out << "bridgeless: " << (bridgeless ? "true" : "false") << '\n';
  const int d = diameter(g);
  if (!bridgeless) {
    out << "d=" << d << '\n';
    return out.str();
  }
  WitnessEdge w = select_witness_edge(g);
  out << "d=" << d << " g=" << girth(g) << " g*=" << w.gstar << '\n';
  out << "witness edge " << w.edge << " (" << w.u << "," << w.v << ")\n";
  RegimeInfo info = classify_regime(g);
  out << "regime " << regime_name(info.regime);
  if (info.bound >= 0) out << " bound " << info.bound;
  if (!info.reason.empty()) out << " (" << info.reason << ")";
  out << '\n';
  if (d == 4 && w.gstar >= 6 && w.gstar <= 9) {
    FinePartition fine = partition_graph(g, w.gstar == 9 ? PartitionMode::kGirth9 : PartitionMode::kGirth678);
    out << "partition\n" << partition_dump(fine);
  }
  return out.str();
}

std::optional<Regime> forced_regime(const std::string& name) {
  for (Regime r : {Regime::kG2, Regime::kG3, Regime::kG9, Regime::kG678})
    if (regime_name(r) == name) return r;
  return std::nullopt;
}

int cmd_analyze(const Flags& f, std::ostream& out) {
  out << analysis_text(load_graph(f));
  return kExitOk;
}

int cmd_orient(const Flags& f, std::ostream& out, std::ostream& err) {
  Multigraph g = load_graph(f);
  PipelineOptions opts;
  if (f.seed_given) opts.completion_seed = f.seed;
  DispatchResult dr;
  try {
    dr = orient_dispatch(g, opts, forced_regime(f.force));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupported) throw;
    out << analysis_text(g);
    err << e.what() << "; `odiam exact` computes the optimum for small graphs\n";
    return kExitUnsupported;
  }
  const Digraph& d = dr.result.digraph;
  std::ostream& status = f.second.empty() ? err : out;
  if (f.second.empty())
    out << write_orientation(d);
  else
    write_file(f.second, write_orientation(d));
  if (!f.trace.empty()) write_file(f.trace, trace_to_text(dr.result.trace));
  if (!f.dot.empty()) write_file(f.dot, write_dot(d, dr.partition ? &*dr.partition : nullptr));
  status << "regime " << regime_name(forced_regime(f.force).value_or(dr.info.regime)) << " d=" << dr.info.diameter
         << " g*=" << dr.info.gstar << '\n';
  if (!is_strong(d)) {
    status << "NOT STRONG\n";
    return kExitViolation;
  }
  const int dd = directed_diameter(d);
  const int bound = dr.info.bound;
  status << "diameter " << dd;
  if (bound < 0) {
    status << " (no bound)\n";
    return kExitOk;
  }
  status << (dd < bound ? " <= " : dd == bound ? " = " : " > ") << "bound " << bound << '\n';
  return dd <= bound ? kExitOk : kExitViolation;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  Multigraph g = load_graph(f);
  Digraph d = parse_orientation(read_file(f.second), g);
  VerifyOutcome v = verify_orientation(g, d);
  out << verify_outcome_to_text(v);
  return v.ok() ? kExitOk : kExitViolation;
}

int cmd_exact(const Flags& f, std::ostream& out) {
  Multigraph g = load_graph(f);
  SearchReport rep = exact_oriented_diameter(g, SearchBudget{f.budget, f.jobs});
  out << search_report_to_text(rep);
  if (!f.dot.empty()) write_file(f.dot, write_dot(rep.witness));
  return rep.budget_exceeded ? kExitBudget : kExitOk;
}

int cmd_generate(const Flags& f, std::ostream& out) {
  Multigraph g = generate(parse_family_spec(f.input, f.seed));
  out << (f.format == "graph6" ? write_graph6(g) : write_edge_list(g));
  return kExitOk;
}

int cmd_export(const Flags& f, std::ostream& out) {
  Multigraph g = load_graph(f);
  std::optional<FinePartition> fine;
  if (is_bridgeless(g)) {
    RegimeInfo info = classify_regime(g);
    if (info.regime == Regime::kG9) fine = partition_graph(g, PartitionMode::kGirth9);
    if (info.regime == Regime::kG678) fine = partition_graph(g, PartitionMode::kGirth678);
  }
  std::string text = write_dot(g, fine ? &*fine : nullptr);
  if (f.dot.empty())
    out << text;
  else
    write_file(f.dot, text);
  return kExitOk;
}

int cmd_reproduce(const Flags& f, const CliHooks& hooks, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  AcceptanceOptions opt;
  opt.budget = SearchBudget{f.budget, f.jobs};
  opt.corrupt_constructions = hooks.corrupt_constructions;
  opt.only = hooks.only;
  opt.corpus_dir = (fs::path(f.results_dir) / "corpus").string();
  opt.log = [&err](const std::string& s) { err << s << '\n'; };
  fs::create_directories(f.results_dir);
  auto results = run_acceptance(opt);
  std::string summary = acceptance_summary(results);
  write_file((fs::path(f.results_dir) / "summary.txt").string(), summary);
  out << summary;
  for (const CriterionResult& r : results)
    if (!r.pass) return kExitViolation;
  return kExitOk;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kUnsupported: return kExitUnsupported;
    case ErrorCode::kBudgetExceeded: return kExitBudget;
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidSpec:
    case ErrorCode::kLoopEdge:
    case ErrorCode::kVertexOutOfRange:
    case ErrorCode::kDisconnected:
    case ErrorCode::kNotBridgeless:
    case ErrorCode::kBridgeEdge:
    case ErrorCode::kEndpointMismatch:
    case ErrorCode::kConflictingDirection:
    case ErrorCode::kIncompleteOrientation: return kExitInput;
    default: return kExitViolation;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  CLI::App app{"oriented diameter constructions and oracles", "odiam"};
  app.require_subcommand(1);
  Flags f;

  auto input = [&](CLI::App* s) { s->add_option("input", f.input, "edge list, graph6 file or family spec")->required(); };
  auto format = [&](CLI::App* s) {
    s->add_option("--format", f.format, "graph file format")->check(CLI::IsMember({"edgelist", "graph6"}));
  };
  auto seed = [&](CLI::App* s) { s->add_option("--seed", f.seed, "family / completion seed"); };
  auto budget = [&](CLI::App* s) {
    s->add_option("--budget", f.budget, "search node budget")->check(CLI::PositiveNumber);
    s->add_option("--jobs", f.jobs, "oracle worker threads")->check(CLI::Range(1, 256));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "print n, m, d, g, g* and the partition");
  input(analyze);
  format(analyze);
  seed(analyze);

  CLI::App* orient = app.add_subcommand("orient", "orient with the pipeline for the measured (d, g*)");
  input(orient);
  orient->add_option("output", f.second, "orientation file (stdout when omitted)");
  format(orient);
  seed(orient);
  orient->add_option("--dot", f.dot, "DOT file of the orientation");
  orient->add_option("--trace", f.trace, "construction trace file");
  orient->add_option("--force-pipeline", f.force, "run this pipeline regardless of (d, g*)")
      ->check(CLI::IsMember({"g2", "g3", "g9", "g678"}));

  CLI::App* verify = app.add_subcommand("verify", "audit an orientation file");
  input(verify);
  verify->add_option("orientation", f.second, "orientation file")->required();
  format(verify);
  seed(verify);

  CLI::App* exact = app.add_subcommand("exact", "exact oriented diameter by branch and bound");
  input(exact);
  format(exact);
  seed(exact);
  budget(exact);
  exact->add_option("--dot", f.dot, "DOT file of an optimal orientation");

  CLI::App* gen = app.add_subcommand("generate", "write a family member");
  gen->add_option("spec", f.input, "family spec")->required();
  format(gen);
  seed(gen);

  CLI::App* exp = app.add_subcommand("export", "DOT of the graph, coloured by class for d=4");
  input(exp);
  format(exp);
  seed(exp);
  exp->add_option("--dot", f.dot, "output path (stdout when omitted)");

  CLI::App* repro = app.add_subcommand("reproduce", "run the acceptance suite");
  repro->add_option("--paper-results", f.results_dir, "output directory")->required();
  budget(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  for (CLI::App* s : app.get_subcommands())
    if (auto* opt = s->get_option_no_throw("--seed"); opt && opt->count() > 0) f.seed_given = true;

  try {
    if (analyze->parsed()) return cmd_analyze(f, out);
    if (orient->parsed()) return cmd_orient(f, out, err);
    if (verify->parsed()) return cmd_verify(f, out);
    if (exact->parsed()) return cmd_exact(f, out);
    if (gen->parsed()) return cmd_generate(f, out);
    if (exp->parsed()) return cmd_export(f, out);
    return cmd_reproduce(f, hooks, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace odiam
