// splitgraph: exact invariants of edge ideals, splitting-graph enumeration,
// the sigma stretching operator, and inequality searches between a graph and
// its splitting graphs.
//
// Exit codes: 0 success, 1 usage/input error, 2 size-cap refusal,
// 3 internal invariant breach.

#include <exception>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "splitgraph/betti.hpp"
#include "splitgraph/errors.hpp"
#include "splitgraph/families.hpp"
#include "splitgraph/graph.hpp"
#include "splitgraph/io.hpp"
#include "splitgraph/monomial.hpp"
#include "splitgraph/search.hpp"
#include "splitgraph/splitting.hpp"
#include "splitgraph/version.hpp"

using namespace splitgraph;

namespace {

struct CommonFlags {
  std::string field = "gf2";
  std::string filter = "all";
  std::string format = "text";
  std::string out;
  int cap_n = 16;
  int cap_edges = 7;
  long long cap_splittings = 1'000'000;
  int cap_cg = 8;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--field", flags.field, "coefficient field: gf2 | q | gfp:<p>");
  cmd->add_option("--format", flags.format, "output format: text | json | csv");
  cmd->add_option("--out", flags.out, "write output to this path");
  cmd->add_option("--cap-n", flags.cap_n, "Betti size guard (vertices)");
  cmd->add_option("--cap-edges", flags.cap_edges, "splitting enumeration guard (edges)");
  cmd->add_option("--cap-splittings", flags.cap_splittings, "raw splitting-count guard");
  cmd->add_option("--cap-cg", flags.cap_cg, "C(G) labeling-sweep guard (n! with n <= cap)");
  cmd->add_option("--jobs", flags.jobs, "worker threads (0 = hardware)");
}

GuardCaps caps_of(const CommonFlags& flags) {
  GuardCaps caps;
  caps.betti_n = flags.cap_n;
  caps.split_edges = flags.cap_edges;
  caps.split_total = flags.cap_splittings;
  caps.cg_n = flags.cap_cg;
  return caps;
}

void emit(const CommonFlags& flags, const std::string& text) {
  if (flags.out.empty())
    std::cout << text;
  else
    write_file(flags.out, text);
}

Graph require_graph(const ParsedInput& input, const std::string& path) {
  if (input.graph) return *input.graph;
  if (input.splitting) return input.splitting->target;
  throw ParseError(path + ": expected a graph document");
}

int cmd_invariants(const std::string& path, const CommonFlags& flags) {
  Graph g = require_graph(load_input_file(path), path);
  FieldSpec field = FieldSpec::parse(flags.field);
  if (g.vertex_count() > flags.cap_n)
    throw CapExceededError("Betti computation capped at " + std::to_string(flags.cap_n) +
                           " vertices");
  BettiTable table = graded_betti_hochster(edge_ideal(g), field);
  InvariantReport report = invariants_from_table(g, table);
  std::ostringstream out;
  if (flags.format == "json") {
    nlohmann::json j = report_to_json(report);
    j["betti_ideal"] = betti_to_json(table.as_ideal());
    j["betti_quotient"] = betti_to_json(table);
    out << j.dump(2) << '\n';
  } else {
    out << render(report) << '\n'
        << table.as_ideal().render_total_degree() << '\n'
        << table.as_ideal().render_diagram();
  }
  emit(flags, out.str());
  return 0;
}

int cmd_split_enum(const std::string& path, const CommonFlags& flags, bool dedupe) {
  Graph g = require_graph(load_input_file(path), path);
  if (g.edge_count() > flags.cap_edges)
    throw CapExceededError("splitting enumeration capped at " + std::to_string(flags.cap_edges) +
                           " edges");
  SplitEnumOptions opt;
  opt.max_total = flags.cap_splittings;
  opt.dedupe_isomorphic = dedupe;
  SplitFilter filter = parse_filter(flags.filter);
  if (filter == SplitFilter::sigma)
    throw std::invalid_argument("split-enum filters: all | special1 | special2");
  if (filter == SplitFilter::special1) opt.filter = SplitEnumOptions::Filter::special1;
  if (filter == SplitFilter::special2) opt.filter = SplitEnumOptions::Filter::special2;
  std::ostringstream out;
  long long count = 0;
  for_each_splitting(g, opt, [&](const SplittingMap& s, const Specialness& sp) {
    ++count;
    if (flags.format == "json") {
      nlohmann::json j = splitting_to_json(s);
      j["special1"] = sp.condition1;
      j["special2"] = sp.condition2;
      j["components"] = component_count(s.source);
      out << j.dump() << '\n';
    } else {
      out << "n'=" << s.source.vertex_count() << " components=" << component_count(s.source)
          << " special1=" << sp.condition1 << " special2=" << sp.condition2 << '\n';
    }
    return true;
  });
  if (flags.format != "json") out << "total " << count << " splittings\n";
  emit(flags, out.str());
  return 0;
}

int cmd_check(const std::string& path, const CommonFlags& flags) {
  ParsedInput input = load_input_file(path);
  FieldSpec field = FieldSpec::parse(flags.field);
  GuardCaps caps = caps_of(flags);
  CheckSummary summary;
  std::ostringstream rows;
  if (input.splitting) {
    summary = check_splitting(*input.splitting, field, caps);
    Specialness sp = specialness(*input.splitting);
    ComparisonRecord rec = compare(*input.splitting, field, caps.betti_n);
    rows << comparison_to_json(*input.splitting, sp, rec).dump() << '\n';
  } else {
    Graph g = require_graph(input, path);
    summary = check_graph(g, parse_filter(flags.filter), field, caps, false, flags.jobs,
                          [&](const SplittingMap& s, const Specialness& sp,
                              const ComparisonRecord& rec) {
                            if (flags.format == "json")
                              rows << comparison_to_json(s, sp, rec).dump() << '\n';
                            else if (flags.format == "csv")
                              rows << comparison_csv_row(s, sp, rec) << '\n';
                          });
  }
  std::ostringstream out;
  if (flags.format == "csv") out << comparison_csv_header() << '\n';
  out << rows.str();
  if (flags.out.empty() && flags.format != "text") std::cout << out.str();
  std::cout << "splittings checked: " << summary.splittings << '\n';
  for (const char* tag : {"pd", "reg", "betti", "dim", "depth"}) {
    auto it = summary.violations.find(tag);
    std::cout << "violations[" << tag << "]: " << (it == summary.violations.end() ? 0 : it->second)
              << '\n';
  }
  for (const Witness& w : summary.witnesses) {
    nlohmann::json jw;
    jw["splitting"] = splitting_to_json(w.splitting);
    jw["violated"] = w.violated;
    jw["field"] = w.field.str();
    std::cout << "witness: " << jw.dump() << '\n';
  }
  if (!flags.out.empty()) write_file(flags.out, out.str());
  return 0;
}

int cmd_sigma(const std::string& path, int t, const CommonFlags& flags) {
  ParsedInput input = load_input_file(path);
  std::ostringstream out;
  if (input.ideal) {
    MonomialIdeal stretched = stretch_ideal(*input.ideal, t);
    if (flags.format == "json") {
      out << ideal_to_json(stretched).dump(2) << '\n';
    } else {
      out << "ambient n = " << stretched.ambient_n() << '\n';
      for (const Monomial& g : stretched.gens()) out << g.str() << '\n';
    }
  } else {
    Graph g = require_graph(input, path);
    SplittingMap s = sigma_graph(g, t);
    if (flags.format == "json") {
      out << splitting_to_json(s).dump(2) << '\n';
    } else {
      out << "stretched graph:\n" << write_edge_list(s.source);
      out << "components: " << component_count(s.source) << '\n';
      out << "splitting map json: " << splitting_to_json(s).dump() << '\n';
    }
  }
  emit(flags, out.str());
  return 0;
}

int cmd_cg(const std::string& path, const CommonFlags& flags) {
  Graph g = require_graph(load_input_file(path), path);
  CgReport report = cg_report(g, flags.cap_cg);
  std::ostringstream out;
  if (flags.format == "json") {
    nlohmann::json j;
    j["values"] = report.values;
    nlohmann::json wit = nlohmann::json::object();
    for (const auto& [value, labeling] : report.witnesses)
      wit[std::to_string(value)] = labeling.perm;
    j["witnesses"] = wit;
    out << j.dump(2) << '\n';
  } else {
    out << "C(G) = {";
    bool first = true;
    for (int v : report.values) {
      out << (first ? "" : ", ") << v;
      first = false;
    }
    out << "}\n";
    for (const auto& [value, labeling] : report.witnesses) {
      out << "gamma = " << value << " via labeling [";
      for (std::size_t i = 0; i < labeling.perm.size(); ++i)
        out << (i ? " " : "") << labeling.perm[i];
      out << "]\n";
    }
  }
  emit(flags, out.str());
  return 0;
}

int cmd_search(const std::string& config_path, const CommonFlags& flags) {
  SweepConfig cfg = SweepConfig::parse_kv(read_file(config_path));
  if (flags.jobs != 1) cfg.jobs = flags.jobs;
  std::string records;
  SearchResult result = run_search(cfg, cfg.out.empty() ? &records : nullptr);
  if (cfg.out.empty()) std::cout << records;
  std::cout << "graphs: " << result.graphs << '\n'
            << "splittings: " << result.splittings << '\n'
            << "witnesses: " << result.witness_count << '\n';
  for (const auto& [tag, count] : result.violations)
    std::cout << "violations[" << tag << "]: " << count << '\n';
  for (const std::string& f : result.outputs) std::cout << "wrote " << f << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge ideals of graphs and their splitting graphs"};
  app.set_version_flag("--version", kEngineVersion);
  app.require_subcommand(1);

  CommonFlags flags;
  std::string input_path;
  std::string config_path;
  int t = 1;

  CLI::App* inv = app.add_subcommand("invariants", "homological invariants of a graph's edge ideal");
  inv->add_option("graph", input_path, "edge-list or JSON graph file")->required();
  add_common(inv, flags);

  CLI::App* senum = app.add_subcommand("split-enum", "enumerate splitting graphs");
  senum->add_option("graph", input_path, "edge-list or JSON graph file")->required();
  bool dedupe = false;
  senum->add_flag("--dedupe", dedupe, "deduplicate up to isomorphism commuting with alpha");
  senum->add_option("--filter", flags.filter, "all | special1 | special2");
  add_common(senum, flags);

  CLI::App* check = app.add_subcommand("check", "compare a graph against its splitting graphs");
  check->add_option("input", input_path, "graph file, or a serialized splitting/witness to replay")
      ->required();
  check->add_option("--filter", flags.filter, "all | special1 | special2 | sigma");
  add_common(check, flags);

  CLI::App* sigma = app.add_subcommand("sigma", "apply the stretching operator");
  sigma->add_option("input", input_path, "ideal JSON, edge-list, or graph JSON file")->required();
  sigma->add_option("-t,--t", t, "stretch exponent (default 1)");
  add_common(sigma, flags);

  CLI::App* cg = app.add_subcommand("cg", "achievable component counts over all labelings");
  cg->add_option("graph", input_path, "edge-list or JSON graph file")->required();
  add_common(cg, flags);

  CLI::App* search = app.add_subcommand("search", "sweep a graph family from a config file");
  search->add_option("config", config_path, "key=value sweep configuration")->required();
  add_common(search, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return cmd_invariants(input_path, flags);
    if (senum->parsed()) return cmd_split_enum(input_path, flags, dedupe);
    if (check->parsed()) return cmd_check(input_path, flags);
    if (sigma->parsed()) return cmd_sigma(input_path, t, flags);
    if (cg->parsed()) return cmd_cg(input_path, flags);
    if (search->parsed()) return cmd_search(config_path, flags);
  } catch (const CapExceededError& ex) {
    std::cerr << "cap refused: " << ex.what() << '\n';
    return 2;
  } catch (const ParseError& ex) {
    std::cerr << "input error: " << ex.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "input error: " << ex.what() << '\n';
    return 1;
  } catch (const InternalError& ex) {
    std::cerr << "internal invariant breach: " << ex.what() << '\n';
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return 3;
  }
  return 1;
}
