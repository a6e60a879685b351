#include "splitgraph/io.hpp"

#include <fstream>
#include <sstream>

#include "splitgraph/errors.hpp"

namespace splitgraph {

using nlohmann::json;

nlohmann::json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what());
  }
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  json j;
  j["n"] = ideal.ambient_n();
  json gens = json::array();
  for (const Monomial& g : ideal.gens()) gens.push_back(g.str());
  j["gens"] = std::move(gens);
  return j;
}

MonomialIdeal ideal_from_json(const json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) gens.push_back(Monomial::parse(g.get<std::string>()));
    return MonomialIdeal(n, std::move(gens));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("ideal JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("ideal JSON: ") + ex.what());
  }
}

nlohmann::json betti_to_json(const BettiTable& t) {
  json j;
  j["convention"] = t.convention() == TableConvention::of_ideal ? "of_ideal" : "of_quotient";
  j["field"] = t.field().str();
  json entries = json::array();
  for (const auto& [key, v] : t.entries())
    entries.push_back(json::array({key.first, key.second, v}));
  j["entries"] = std::move(entries);
  return j;
}

nlohmann::json report_to_json(const InvariantReport& r) {
  json j;
  j["n"] = r.n;
  j["field"] = r.field.str();
  j["pd_quotient"] = r.pd_quotient;
  j["pd_ideal"] = r.pd_ideal;
  j["reg_ideal"] = r.reg_ideal;
  j["reg_quotient"] = r.reg_quotient;
  j["depth"] = r.depth;
  j["dim"] = r.dim;
  j["bight"] = r.bight;
  j["nu"] = r.nu;
  return j;
}

nlohmann::json splitting_to_json(const SplittingMap& s) {
  json j;
  j["target"] = graph_to_json(s.target);
  j["source"] = graph_to_json(s.source);
  j["alpha"] = s.alpha;
  return j;
}

SplittingMap splitting_from_json(const json& j) {
  try {
    SplittingMap s;
    s.target = graph_from_json(j.at("target"));
    s.source = graph_from_json(j.at("source"));
    s.alpha = j.at("alpha").get<std::vector<int>>();
    return s;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("splitting JSON: ") + ex.what());
  }
}

nlohmann::json comparison_to_json(const SplittingMap& s, const Specialness& sp,
                                  const ComparisonRecord& rec) {
  json j;
  j["target"] = graph_to_json(s.target);
  j["source"] = graph_to_json(s.source);
  j["alpha"] = s.alpha;
  j["special1"] = sp.condition1;
  j["special2"] = sp.condition2;
  j["verdicts"] = {{"pd", rec.pd_ok()},
                   {"reg", rec.reg_ok()},
                   {"betti", rec.betti_ok()},
                   {"dim", rec.dim_ok()},
                   {"depth", rec.depth_ok()}};
  j["deltas"] = {{"pd", rec.delta_pd()},         {"reg", rec.delta_reg()},
                 {"dim", rec.delta_dim()},       {"depth", rec.delta_depth()},
                 {"bight", rec.delta_bight()},   {"nu", rec.delta_nu()},
                 {"betti_min", rec.delta_betti_min()}};
  j["target_report"] = report_to_json(rec.target_report);
  j["source_report"] = report_to_json(rec.source_report);
  j["betti_totals"] = {{"target", rec.betti_totals_target}, {"source", rec.betti_totals_source}};
  return j;
}

std::string comparison_csv_header() {
  return "m,n_source,special1,special2,pd_ok,reg_ok,betti_ok,dim_ok,depth_ok,"
         "d_pd,d_reg,d_betti_min,d_dim,d_depth,d_bight,d_nu";
}

std::string comparison_csv_row(const SplittingMap& s, const Specialness& sp,
                               const ComparisonRecord& rec) {
  std::ostringstream out;
  out << s.target.edge_count() << ',' << s.source.vertex_count() << ',' << sp.condition1 << ','
      << sp.condition2 << ',' << rec.pd_ok() << ',' << rec.reg_ok() << ',' << rec.betti_ok() << ','
      << rec.dim_ok() << ',' << rec.depth_ok() << ',' << rec.delta_pd() << ',' << rec.delta_reg()
      << ',' << rec.delta_betti_min() << ',' << rec.delta_dim() << ',' << rec.delta_depth() << ','
      << rec.delta_bight() << ',' << rec.delta_nu();
  return out.str();
}

ParsedInput parse_input_text(const std::string& text) {
  ParsedInput out;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input document");
  if (text[first] != '{') {
    out.graph = parse_edge_list(text);
    return out;
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("input JSON: ") + ex.what());
  }
  if (j.contains("splitting")) j = j["splitting"];  // witness envelope
  if (j.contains("alpha")) {
    out.splitting = splitting_from_json(j);
  } else if (j.contains("gens")) {
    out.ideal = ideal_from_json(j);
  } else if (j.contains("edges")) {
    out.graph = graph_from_json(j);
  } else {
    throw ParseError("input JSON has none of the keys 'alpha', 'gens', 'edges'");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

ParsedInput load_input_file(const std::string& path) { return parse_input_text(read_file(path)); }

}  // namespace splitgraph
