#ifndef SPLITGRAPH_SEARCH_HPP
#define SPLITGRAPH_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "splitgraph/field.hpp"
#include "splitgraph/graph.hpp"
#include "splitgraph/splitting.hpp"

namespace splitgraph {

struct GuardCaps {
  int betti_n = 16;                  // largest graph fed to the Betti engine
  int split_edges = 7;               // largest edge count for splitting enumeration
  long long split_total = 1'000'000; // raw splitting-count guard
  int cg_n = 8;                      // largest n for the n! labeling sweep
  int iso_n = 16;                    // isomorphism size guard
};

enum class SplitFilter { all, special1, special2, sigma };

SplitFilter parse_filter(const std::string& text);
std::string filter_name(SplitFilter f);

struct SweepConfig {
  enum class Family { file, paths, cycles, all_connected };
  Family family = Family::all_connected;
  std::string path;     // family = file
  int max_n = 6;        // paths / cycles
  int max_edges = 5;    // all_connected
  FieldSpec field = FieldSpec::gf(2);
  SplitFilter filter = SplitFilter::all;
  GuardCaps caps;
  bool dedupe = false;
  std::string format = "jsonl";  // "jsonl" or "csv"
  std::string out;               // output path; empty = stdout only
  int jobs = 0;                  // 0 = hardware concurrency

  // Flat key=value document, one pair per line; '#' starts a comment.
  static SweepConfig parse_kv(const std::string& text);
  std::string canonical_kv() const;
  std::uint64_t config_hash() const;  // FNV-1a of canonical_kv()
};

struct Witness {
  SplittingMap splitting;
  Specialness special;
  ComparisonRecord record;
  std::vector<std::string> violated;  // subset of pd, reg, betti, dim, depth
  FieldSpec field = FieldSpec::gf(2);
};

std::vector<std::string> violated_tags(const ComparisonRecord& rec);

struct CheckSummary {
  long long splittings = 0;
  std::map<std::string, long long> violations;  // tag -> count
  std::vector<Witness> witnesses;
};

// Compares g against its (filtered) splittings; the sink, when provided,
// receives every comparison in deterministic enumeration order.
CheckSummary check_graph(
    const Graph& g, SplitFilter filter, const FieldSpec& field, const GuardCaps& caps,
    bool dedupe = false, int jobs = 1,
    const std::function<void(const SplittingMap&, const Specialness&, const ComparisonRecord&)>&
        sink = nullptr);

// Checks one explicit splitting (a replayed witness).
CheckSummary check_splitting(const SplittingMap& s, const FieldSpec& field, const GuardCaps& caps);

struct SearchResult {
  long long graphs = 0;
  long long splittings = 0;
  std::map<std::string, long long> violations;
  long long witness_count = 0;
  std::vector<std::string> outputs;  // files written
};

std::vector<Graph> resolve_family(const SweepConfig& cfg);
SearchResult run_search(const SweepConfig& cfg, std::string* records_out = nullptr);

// Simple ordered parallel map: runs fn(0..count-1) on `jobs` workers.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace splitgraph

#endif
