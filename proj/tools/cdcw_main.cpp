// cdcw: command-line front end for the cycle double cover workbench.
//
// Exit codes: 0 success/pass, 1 usage or input error, 2 internal error,
// 3 findings (failed claims, failed covers, exhaustive-none).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cdcw/audit.hpp"
#include "cdcw/json_io.hpp"

namespace {

using namespace cdcw;

struct OutputMode {
  bool table = false;
  void print(const Json& j) const {
    if (table)
      std::cout << to_table(j);
    else
      std::cout << j.dump(2) << "\n";
  }
};

std::vector<EdgeId> parse_edge_list(const std::string& s) {
  std::vector<EdgeId> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  if (out.empty()) fail_input("empty edge list");
  return out;
}

CycleBody cycle_from_selector(const MultiGraph& g, const std::string& selector) {
  std::vector<EdgeId> edges = parse_edge_list(selector);
  for (EdgeId e : edges)
    if (!g.has_edge(e))
      fail_input("selector names unknown edge id " + std::to_string(e));
  if (!is_cycle_edge_set(g, edges))
    fail_input("selector edges do not form a cycle body");
  return cycle_body_from_edges(g, edges);
}

int cmd_analyze(const std::string& path, const OutputMode& out,
                std::size_t max_cycles) {
  MultiGraph g = load_mel_file(path);
  Json j;
  j["kind"] = "analyze";
  j["vertices"] = g.vertices();
  j["edges"] = g.edges();
  j["components"] = json_component_report(connected_components(g));
  j["bridges"] = bridges(g);
  auto cycles = enumerate_cycles(g, {max_cycles});
  j["cycle_count"] = cycles.size();
  CyclicCore core = cyclic_core(g, cycles);
  Json cj;
  cj["core_vertices"] = core.core.vertices();
  cj["core_edges"] = core.core.edges();
  Json degc;
  for (VertexId v : g.vertices()) degc[std::to_string(v)] = core.degc.at(v);
  cj["degc"] = degc;
  j["cyclic_core"] = cj;
  j["mel"] = write_mel(g);
  out.print(j);
  return 0;
}

int cmd_cdim(const std::string& path, const OutputMode& out, bool force_brute,
             std::size_t max_cycles, std::size_t incidence_cap) {
  MultiGraph g = load_mel_file(path);
  CdimCertificate cert = cdim(g, force_brute, incidence_cap, {max_cycles});
  Json j = json_cdim_certificate(cert, true);
  j["kind"] = "cdim";
  out.print(j);
  return 0;
}

int cmd_segments(const std::string& path, const OutputMode& out,
                 std::size_t max_cycles) {
  MultiGraph g = load_mel_file(path);
  SegmentAtlas atlas = build_atlas(g, {max_cycles});
  Json j = json_atlas(atlas);
  j["kind"] = "segments";
  out.print(j);
  return 0;
}

int cmd_goddyn(const std::string& path, const std::string& selector,
               const OutputMode& out, bool exhaustive, std::size_t max_cycles) {
  MultiGraph g = load_mel_file(path);
  CycleBody c = cycle_from_selector(g, selector);
  BuildOptions opts;
  opts.exhaustive = exhaustive;
  opts.enum_opts.max_cycles = max_cycles;
  GeneratorCertificate cert = goddyn_construct(g, c, opts);
  Json j;
  j["kind"] = "goddyn";
  j["generator"] = json_generator_certificate(cert);
  bool pass = false;
  if (cert.success) {
    CoverCertificate cover = assemble_cover(g, cert);
    j["cover"] = json_cover_certificate(cover);
    j["telescoping"] = telescoping_check(cert, cert.witness);
    pass = cover.pass;
  }
  out.print(j);
  return pass ? 0 : 3;
}

int cmd_oracle(const std::string& path, const std::string& selector,
               const OutputMode& out, std::size_t oracle_cap,
               std::size_t max_cycles) {
  MultiGraph g = load_mel_file(path);
  std::optional<CycleBody> required;
  if (!selector.empty()) required = cycle_from_selector(g, selector);
  CoverCertificate cert = oracle_cdc(g, required, {oracle_cap, {max_cycles}});
  Json j = json_cover_certificate(cert);
  j["kind"] = "oracle";
  out.print(j);
  return cert.pass ? 0 : 3;
}

int cmd_audit(int max_edges, bool include_named, const OutputMode& out,
              const AuditOptions& opts, const std::string& claims_csv) {
  AuditOptions o = opts;
  if (!claims_csv.empty()) {
    std::string cur;
    for (char c : claims_csv + ",") {
      if (c == ',') {
        if (!cur.empty()) o.only_claims.insert(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  Corpus corpus = corpus_generate(max_edges, include_named);
  AuditReport report = audit(corpus, o);
  out.print(report.to_json());
  return report.has_fail() ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cdcw: cycle double cover workbench"};
  app.require_subcommand(1);

  OutputMode out;
  app.add_flag("--table", out.table, "plain-text table output (default: JSON)");

  std::size_t max_cycles = 100000;
  app.add_option("--max-cycles", max_cycles, "cycle enumeration cap")
      ->envname("CDCW_MAX_CYCLES")
      ->check(CLI::PositiveNumber);
  std::size_t incidence_cap = 24;
  app.add_option("--incidence-cap", incidence_cap,
                 "brute-force cdim incidence cap")
      ->envname("CDCW_INCIDENCE_CAP")
      ->check(CLI::PositiveNumber);
  std::size_t oracle_cap = 60;
  app.add_option("--oracle-cap", oracle_cap, "oracle cycle-count cap")
      ->envname("CDCW_ORACLE_CAP")
      ->check(CLI::PositiveNumber);

  std::string path, selector;

  auto* analyze = app.add_subcommand("analyze", "components, bridges, cyclic core");
  analyze->add_option("file", path, "MEL input file")->required();

  auto* cdim_cmd = app.add_subcommand("cdim", "certified cyclic dimension");
  cdim_cmd->add_option("file", path, "MEL input file")->required();
  bool force_brute = false;
  cdim_cmd->add_flag("--brute", force_brute, "force brute-force confirmation");

  auto* segments = app.add_subcommand("segments", "segment atlas");
  segments->add_option("file", path, "MEL input file")->required();

  auto* goddyn = app.add_subcommand("goddyn", "constructive cover builder");
  goddyn->add_option("file", path, "MEL input file")->required();
  goddyn->add_option("--cycle", selector, "prescribed cycle as edge ids e1,e2,...")
      ->required();
  bool exhaustive = false;
  goddyn->add_flag("--exhaustive", exhaustive,
                   "branch over all segment/companion choices");

  auto* oracle = app.add_subcommand("oracle", "exhaustive cover search");
  oracle->add_option("file", path, "MEL input file")->required();
  oracle->add_option("--cycle", selector, "required cycle as edge ids");

  auto* audit_cmd = app.add_subcommand("audit", "proposition audit over a corpus");
  int max_edges = 6;
  bool no_named = false;
  int jobs = 1;
  std::string claims_csv;
  audit_cmd->add_option("--max-edges", max_edges, "exhaustive corpus tier bound");
  audit_cmd->add_flag("--no-named", no_named, "omit the named graph registry");
  audit_cmd->add_option("--jobs", jobs, "audit graphs in parallel");
  audit_cmd->add_option("--claims", claims_csv, "restrict to these claim ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, out, max_cycles);
    if (cdim_cmd->parsed())
      return cmd_cdim(path, out, force_brute, max_cycles, incidence_cap);
    if (segments->parsed()) return cmd_segments(path, out, max_cycles);
    if (goddyn->parsed())
      return cmd_goddyn(path, selector, out, exhaustive, max_cycles);
    if (oracle->parsed())
      return cmd_oracle(path, selector, out, oracle_cap, max_cycles);
    if (audit_cmd->parsed()) {
      AuditOptions opts;
      opts.jobs = jobs;
      opts.oracle_cycle_cap = oracle_cap;
      opts.incidence_cap = incidence_cap;
      opts.enum_opts.max_cycles = max_cycles;
      return cmd_audit(max_edges, !no_named, out, opts, claims_csv);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == Error::Kind::internal ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
