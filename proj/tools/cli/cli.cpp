#include "cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hrlb/behrend.hpp"
#include "hrlb/constructions.hpp"
#include "hrlb/counting.hpp"
#include "hrlb/error.hpp"
#include "hrlb/io.hpp"
#include "hrlb/structure.hpp"
#include "json.hpp"

#ifndef HRLB_VERSION
#define HRLB_VERSION "0.0.0"
#endif

namespace hrlb::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Config {
  std::string command;
  std::string input;
  std::uint32_t n = 40;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::uint64_t node_budget = 10'000'000'000ULL;
  unsigned retry_cap = 64;
  std::uint64_t oracle_cap = 2'000'000'000ULL;
  bool deterministic = false;
  std::vector<std::uint32_t> n_grid;
  std::int64_t m = 0;
  unsigned t = 3;
  bool verify = false;
  std::uint32_t amplify_to = 0;
};

struct Outcome {
  int code = kOk;
  std::string payload;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Everything that determines the payload, in a fixed order. The output path
// is deliberately left out.
std::string config_hash(const Config& c, std::string_view input_content) {
  std::ostringstream os;
  os << "command=" << c.command << ";n=" << c.n << ";seed=" << c.seed << ";format=" << c.format
     << ";node_budget=" << c.node_budget << ";retry_cap=" << c.retry_cap << ";oracle_cap=" << c.oracle_cap
     << ";deterministic=" << c.deterministic << ";m=" << c.m << ";t=" << c.t << ";verify=" << c.verify
     << ";amplify_to=" << c.amplify_to << ";n_grid=";
  for (auto n : c.n_grid) os << n << ',';
  os << ";input=" << hex64(fnv1a(input_content));
  return hex64(fnv1a(os.str()));
}

ojson envelope(std::string_view schema, const Config& c, std::string_view input_content) {
  ojson j;
  j["schema"] = schema;
  j["tool"] = "hrlb";
  j["version"] = tool_version();
  j["seed"] = c.seed;
  j["config_hash"] = config_hash(c, input_content);
  return j;
}

ojson graph_json(const KGraph& g) { return ojson::parse(to_json(g)); }

ojson witness_json(const Witness& w) {
  ojson j;
  if (auto* c = std::get_if<CycleWitness>(&w)) {
    j["type"] = "cycle";
    j["vertices"] = c->vertices;
    j["cycle"] = c->cycle;
  } else {
    const auto& k = std::get<CliqueWitness>(w);
    j["type"] = "clique";
    j["vertices"] = k.vertices;
    j["s"] = k.s;
  }
  return j;
}

// Core vertex -> vertex id in the file that was read.
std::vector<Vertex> core_in_input(const AnalysisReport& rep) {
  std::vector<Vertex> ids;
  for (Vertex v : rep.core.embedding.image) ids.push_back(rep.original_ids[v]);
  return ids;
}

long double power(std::uint32_t n, unsigned e) { return std::pow(static_cast<long double>(n), e); }

Outcome cmd_analyze(const Config& c, const std::string& content) {
  auto rep = analyze(parse_kgraph(content), SearchLimits{c.node_budget});
  auto j = envelope("hrlb.analysis/1", c, content);
  ojson in;
  in["k"] = rep.input.k();
  in["v"] = rep.input.num_vertices();
  in["edges"] = rep.input.num_edges();
  in["removed_isolated"] = rep.removed_isolated;
  j["input"] = std::move(in);
  j["k_partite"] = rep.partition.has_value();
  j["partition"] = rep.partition ? ojson(*rep.partition) : ojson(nullptr);
  ojson core;
  core["graph"] = graph_json(rep.core.core);
  core["is_core_already"] = rep.is_core_already;
  core["vertices_in_input"] = core_in_input(rep);
  j["core"] = std::move(core);
  j["witness"] = rep.witness ? witness_json(*rep.witness) : ojson(nullptr);
  j["path"] = !rep.witness ? "polynomial" : std::holds_alternative<CycleWitness>(*rep.witness) ? "cycle" : "clique";
  return {kOk, j.dump(2)};
}

Outcome cmd_core(const Config& c, const std::string& content) {
  const auto norm = normalize(parse_kgraph(content));
  auto res = core(norm.graph, SearchLimits{c.node_budget});
  auto j = envelope("hrlb.core/1", c, content);
  j["core"] = graph_json(res.core);
  ojson retr = ojson::object();
  for (Vertex v = 0; v < norm.graph.num_vertices(); ++v)
    retr[std::to_string(norm.original[v])] = res.retraction(v);
  j["retraction"] = std::move(retr);
  std::vector<Vertex> emb;
  for (Vertex v : res.embedding.image) emb.push_back(norm.original[v]);
  j["embedding"] = emb;
  j["removed_isolated"] = norm.removed;
  return {kOk, j.dump(2)};
}

Outcome cmd_behrend(const Config& c) {
  BehrendOptions opt;
  opt.verify_work_cap = c.oracle_cap;
  auto b = behrend_set(c.m, c.t, opt);
  auto j = envelope("hrlb.behrend/1", c, "");
  j["m"] = b.m;
  j["t"] = b.t;
  j["size"] = b.size();
  j["construction"] = to_string(b.construction);
  j["elements"] = b.elements;
  int code = kOk;
  if (c.verify) {
    auto chk = verify_solution_free(b.elements, c.t, c.m, c.oracle_cap);
    const char* status = chk.status == SolutionStatus::free       ? "free"
                         : chk.status == SolutionStatus::violated ? "violated"
                                                                  : "unverified";
    j["verified"] = chk.status == SolutionStatus::free;
    j["verification"] = {{"status", status}, {"counterexample", chk.counterexample}};
    if (chk.status == SolutionStatus::violated) code = kVerificationFailed;
    if (chk.status == SolutionStatus::unverified) code = kBudget;
  } else {
    j["verified"] = b.verified;
  }
  return {code, j.dump(2)};
}

Outcome cmd_construct(const Config& c, const std::string& content, std::ostream& err) {
  auto rep = analyze(parse_kgraph(content), SearchLimits{c.node_budget});
  if (rep.partition) {
    err << "construct: F is k-partite, so its removal lemma is polynomial and there is no hard instance\n";
    return {kUsage, {}};
  }
  HardInstanceOptions opt;
  opt.seed = c.seed;
  opt.retry_cap = c.retry_cap;
  opt.behrend.verify_work_cap = c.oracle_cap;
  opt.limits.node_budget = c.node_budget;
  auto inst = hard_instance(rep.core.core, *rep.witness, c.n, opt);
  if (c.amplify_to) {
    AmplifyOptions aopt;
    aopt.seed = c.seed;
    aopt.design.deterministic = c.deterministic;
    aopt.design.retry_cap = c.retry_cap;
    auto amp = amplify_blowup(inst, rep.core.core, c.amplify_to, aopt);
    auto j = envelope("hrlb.amplified/1", c, content);
    j["b"] = amp.b;
    j["graph"] = graph_json(amp.graph);
    std::vector<std::vector<Vertex>> copies;
    for (std::size_t i = 0; i < amp.copies.size(); ++i) copies.emplace_back(amp.copies[i].begin(), amp.copies[i].end());
    j["copies"] = std::move(copies);
    j["psi"] = amp.psi.image;
    j["phi_psi"] = amp.phi_psi.image;
    j["target"] = graph_json(rep.core.core);
    return {kOk, j.dump()};
  }
  auto j = envelope(kInstanceSchema, c, content);
  auto body = ojson::parse(to_json(inst));
  for (auto it = body.begin(); it != body.end(); ++it)
    if (it.key() != "schema") j[it.key()] = it.value();
  j["target_in_input"] = core_in_input(rep);
  return {kOk, j.dump()};
}

Outcome cmd_verify(const Config& c, const std::string& content) {
  auto inst = instance_from_json(content);
  const KGraph& f = inst.meta.target;
  auto j = envelope("hrlb.verify/1", c, content);

  const bool partite = inst.num_parts == f.num_vertices();
  bool placed_present = true;
  for (std::size_t i = 0; i < inst.placed.size() && placed_present; ++i)
    for (const auto& e : copy_edges(f, inst.placed[i]))
      if (!inst.graph.has_edge(e)) placed_present = false;
  auto disjoint = verify_edge_disjoint(f, inst.placed);
  const bool hom = partite && is_homomorphism(inst.graph, f, inst.part_collapse());
  bool level_ok = true;
  if (auto l = inst.placed.disjointness()) level_ok = verify_pairwise_disjoint(inst.placed, *l).ok;

  CountOptions copt;
  copt.node_budget = c.node_budget;
  auto total = count_copies(inst.graph, f, copt);
  auto canon = count_canonical_copies(inst, f, copt);
  const long double bound = power(inst.n, f.num_vertices() - 1);
  const bool within = static_cast<long double>(total.count) <= bound;

  ojson checks;
  checks["placed_present"] = placed_present;
  checks["placed_edge_disjoint"] = disjoint.ok;
  checks["edge_violation"] =
      disjoint.violation ? ojson::array({disjoint.violation->first, disjoint.violation->second}) : ojson(nullptr);
  checks["part_collapse_homomorphism"] = hom;
  checks["placed_disjointness_level"] = level_ok;
  j["checks"] = std::move(checks);
  auto count_json = [](const CountReport& r) {
    ojson o;
    o["mode"] = to_string(r.mode);
    o["count"] = r.count;
    o["labeled"] = r.labeled;
    o["automorphisms"] = r.automorphisms;
    o["nodes"] = r.nodes;
    o["exceeded"] = r.exceeded;
    return o;
  };
  j["placed"] = inst.placed.size();
  j["count"] = count_json(total);
  j["canonical"] = count_json(canon);
  j["bound"] = static_cast<double>(bound);
  j["within_bound"] = within;

  int code = kOk;
  std::string status = "pass";
  if (!placed_present || !disjoint.ok || !hom || !level_ok || (!total.exceeded && !within)) {
    code = kVerificationFailed;
    status = "fail";
  } else if (total.exceeded || canon.exceeded) {
    code = kBudget;
    status = "exceeded";
  }
  j["status"] = status;
  j["timing"] = {{"count_seconds", total.elapsed_seconds}, {"canonical_seconds", canon.elapsed_seconds}};
  return {code, j.dump(2)};
}

Outcome cmd_report(const Config& c, const std::string& content, std::ostream& err) {
  ReportConfig rc{c.n_grid, c.seed, c.node_budget, c.retry_cap};
  std::vector<ReportRow> rows;
  try {
    rows = run_report(parse_kgraph(content), rc);
  } catch (const PreconditionError& e) {
    err << "report: " << e.what() << '\n';
    return {kUsage, {}};
  }
  int code = kOk;
  for (const auto& r : rows) {
    if (r.status == "capped" && code == kOk) code = kBudget;
    if (r.status != "ok" && r.status != "capped") code = kVerificationFailed;
  }
  if (c.format == "csv") return {code, report_csv(rows)};
  auto j = envelope("hrlb.report/1", c, content);
  j["columns"] = ojson::array();
  std::string cols = kReportColumns;
  for (std::size_t pos = 0; pos <= cols.size();) {
    auto next = cols.find(',', pos);
    if (next == std::string::npos) next = cols.size();
    j["columns"].push_back(cols.substr(pos, next - pos));
    pos = next + 1;
  }
  ojson arr = ojson::array();
  for (const auto& r : rows) {
    ojson o;
    o["n"] = r.n;
    o["placed_edge_disjoint_count"] = r.placed;
    o["eps"] = r.eps;
    o["total_F_copies"] = r.total;
    o["delta"] = r.delta;
    o["bound"] = r.bound;
    o["status"] = r.status;
    arr.push_back(std::move(o));
  }
  j["rows"] = std::move(arr);
  return {code, j.dump(2)};
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--seed", c.seed, "Run seed")->envname("HRLB_SEED");
  sub->add_option("--out", c.out, "Write output to this file")->envname("HRLB_OUT");
  sub->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("HRLB_FORMAT");
  sub->add_option("--node-budget", c.node_budget, "Search-tree nodes per search")
      ->check(CLI::PositiveNumber)
      ->envname("HRLB_NODE_BUDGET");
  sub->add_option("--retry-cap", c.retry_cap, "Reseeds allowed for randomized constructions")
      ->check(CLI::PositiveNumber)
      ->envname("HRLB_RETRY_CAP");
  sub->add_option("--oracle-cap", c.oracle_cap, "Work bound for exhaustive verification")
      ->check(CLI::PositiveNumber)
      ->envname("HRLB_ORACLE_CAP");
  sub->add_flag("--deterministic-design", c.deterministic, "Use the algebraic k-disjoint family")
      ->envname("HRLB_DETERMINISTIC_DESIGN");
}

void write_payload(const Config& c, const std::string& payload, std::ostream& out) {
  if (payload.empty()) return;
  if (c.out.empty()) {
    out << payload << '\n';
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + c.out);
  f << payload << '\n';
}

}  // namespace

std::string tool_version() { return HRLB_VERSION; }

std::vector<ReportRow> run_report(const KGraph& f, const ReportConfig& cfg) {
  auto rep = analyze(f, SearchLimits{cfg.node_budget});
  if (rep.partition)
    throw PreconditionError("F is k-partite; k-partite hypergraphs have a polynomial removal lemma");
  const KGraph& core_f = rep.core.core;
  const unsigned k = core_f.k();
  const unsigned v = core_f.num_vertices();
  std::vector<ReportRow> rows;
  for (auto n : cfg.n_grid) {
    ReportRow row;
    row.n = n;
    row.bound = static_cast<double>(power(n, v - 1) / power(n, v));
    try {
      HardInstanceOptions opt;
      opt.seed = cfg.seed;
      opt.retry_cap = cfg.retry_cap;
      opt.limits.node_budget = cfg.node_budget;
      auto inst = hard_instance(core_f, *rep.witness, n, opt);
      row.placed = inst.placed.size();
      row.eps = static_cast<double>(row.placed / power(n, k));
      auto total = count_copies(inst.graph, core_f, CountOptions{cfg.node_budget, 1});
      row.total = total.count;
      row.capped = total.exceeded;
      row.delta = static_cast<double>(row.total / power(n, v));
      if (total.exceeded) row.status = "capped";
      else if (static_cast<long double>(row.total) <= power(n, v - 1)) row.status = "ok";
      else row.status = "bound_violated";
    } catch (const std::exception& e) {
      row.status = "construction_failed";
    }
    rows.push_back(row);
  }
  return rows;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << kReportColumns << '\n';
  for (const auto& r : rows)
    os << r.n << ',' << r.placed << ',' << number(r.eps) << ',' << r.total << ',' << number(r.delta) << ','
       << number(r.bound) << ',' << r.status << '\n';
  std::string s = os.str();
  s.pop_back();
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Hard instances for hypergraph removal lemmas: analysis, construction, verification"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Core, 2-shadow structure and witness of a k-graph");
  analyze_cmd->add_option("input", c.input, "Hypergraph file (text or JSON)")->required();
  add_common(analyze_cmd, c);

  auto* core_cmd = app.add_subcommand("core", "Compute the core of a k-graph");
  core_cmd->add_option("input", c.input, "Hypergraph file (text or JSON)")->required();
  add_common(core_cmd, c);

  auto* behrend_cmd = app.add_subcommand("behrend", "Dense set without non-trivial solutions");
  behrend_cmd->add_option("--m", c.m, "Range [1, m]")->required()->check(CLI::PositiveNumber)->envname("HRLB_M");
  behrend_cmd->add_option("--t", c.t, "Equation arity t >= 3")->check(CLI::Range(3u, 64u))->envname("HRLB_T");
  behrend_cmd->add_flag("--verify", c.verify, "Re-check exhaustively and report the status");
  add_common(behrend_cmd, c);

  auto* construct_cmd = app.add_subcommand("construct", "Build the hard instance for core(F)");
  construct_cmd->add_option("input", c.input, "Hypergraph file (text or JSON)")->required();
  construct_cmd->add_option("--n", c.n, "Part size")->check(CLI::PositiveNumber)->envname("HRLB_N");
  construct_cmd->add_option("--amplify-to", c.amplify_to, "Blow the instance up to about N vertices")
      ->check(CLI::PositiveNumber);
  add_common(construct_cmd, c);

  auto* verify_cmd = app.add_subcommand("verify", "Re-check an instance and count all copies");
  verify_cmd->add_option("input", c.input, "Instance JSON")->required();
  add_common(verify_cmd, c);

  auto* report_cmd = app.add_subcommand("report", "Copy counts over a grid of n");
  report_cmd->add_option("input", c.input, "Hypergraph file (text or JSON)")->required();
  report_cmd->add_option("--n-grid", c.n_grid, "Part sizes, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->envname("HRLB_N_GRID");
  add_common(report_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (c.format == "csv" && c.command != "report") {
    err << c.command << ": --format csv is only available for report\n";
    return kUsage;
  }

  try {
    const std::string content = c.input.empty() ? std::string() : read_file(c.input);
    Outcome o;
    if (c.command == "analyze") o = cmd_analyze(c, content);
    else if (c.command == "core") o = cmd_core(c, content);
    else if (c.command == "behrend") o = cmd_behrend(c);
    else if (c.command == "construct") o = cmd_construct(c, content, err);
    else if (c.command == "verify") o = cmd_verify(c, content);
    else o = cmd_report(c, content, err);
    write_payload(c, o.payload, out);
    return o.code;
  } catch (const ParseError& e) {
    err << c.command << ": " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    err << c.command << ": " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << c.command << ": " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << c.command << ": " << e.what() << '\n';
    return kBudget;
  } catch (const ConstructionError& e) {
    err << c.command << ": " << e.what() << '\n';
    return kBudget;
  } catch (const VerificationError& e) {
    err << c.command << ": verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace hrlb::cli
