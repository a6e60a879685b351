#ifndef SPLITGRAPH_IO_HPP
#define SPLITGRAPH_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "splitgraph/betti.hpp"
#include "splitgraph/graph.hpp"
#include "splitgraph/monomial.hpp"
#include "splitgraph/splitting.hpp"

namespace splitgraph {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json betti_to_json(const BettiTable& t);

nlohmann::json report_to_json(const InvariantReport& r);

nlohmann::json splitting_to_json(const SplittingMap& s);
SplittingMap splitting_from_json(const nlohmann::json& j);

nlohmann::json comparison_to_json(const SplittingMap& s, const Specialness& sp,
                                  const ComparisonRecord& rec);

std::string comparison_csv_header();
std::string comparison_csv_row(const SplittingMap& s, const Specialness& sp,
                               const ComparisonRecord& rec);

// Loaded content of an input file: either a graph (edge-list text or JSON),
// an ideal (JSON with "gens"), or a serialized splitting (JSON with "alpha",
// possibly nested inside a witness object under "splitting").
struct ParsedInput {
  std::optional<Graph> graph;
  std::optional<MonomialIdeal> ideal;
  std::optional<SplittingMap> splitting;
};

ParsedInput parse_input_text(const std::string& text);
ParsedInput load_input_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace splitgraph

#endif
