#include "splitgraph/search.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "splitgraph/errors.hpp"
#include "splitgraph/families.hpp"
#include "splitgraph/io.hpp"
#include "splitgraph/version.hpp"

namespace splitgraph {

SplitFilter parse_filter(const std::string& text) {
  if (text == "all") return SplitFilter::all;
  if (text == "special1") return SplitFilter::special1;
  if (text == "special2") return SplitFilter::special2;
  if (text == "sigma") return SplitFilter::sigma;
  throw ParseError("unknown filter '" + text + "' (expected all, special1, special2, sigma)");
}

std::string filter_name(SplitFilter f) {
  switch (f) {
    case SplitFilter::all: return "all";
    case SplitFilter::special1: return "special1";
    case SplitFilter::special2: return "special2";
    case SplitFilter::sigma: return "sigma";
  }
  return "all";
}

SweepConfig SweepConfig::parse_kv(const std::string& text) {
  SweepConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t");
      std::size_t e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "family") {
        if (value == "file") cfg.family = Family::file;
        else if (value == "paths") cfg.family = Family::paths;
        else if (value == "cycles") cfg.family = Family::cycles;
        else if (value == "all_connected") cfg.family = Family::all_connected;
        else throw ParseError("unknown family '" + value + "'");
      } else if (key == "path") {
        cfg.path = value;
      } else if (key == "max_n") {
        cfg.max_n = std::stoi(value);
      } else if (key == "max_edges") {
        cfg.max_edges = std::stoi(value);
      } else if (key == "field") {
        cfg.field = FieldSpec::parse(value);
      } else if (key == "filter") {
        cfg.filter = parse_filter(value);
      } else if (key == "cap_n") {
        cfg.caps.betti_n = std::stoi(value);
      } else if (key == "cap_edges") {
        cfg.caps.split_edges = std::stoi(value);
      } else if (key == "cap_splittings") {
        cfg.caps.split_total = std::stoll(value);
      } else if (key == "cap_cg") {
        cfg.caps.cg_n = std::stoi(value);
      } else if (key == "dedupe") {
        cfg.dedupe = (value == "1" || value == "true");
      } else if (key == "format") {
        if (value != "jsonl" && value != "csv")
          throw ParseError("unknown format '" + value + "'");
        cfg.format = value;
      } else if (key == "out") {
        cfg.out = value;
      } else if (key == "jobs") {
        cfg.jobs = std::stoi(value);
      } else {
        throw ParseError("unknown config key '" + key + "'");
      }
    } catch (const std::invalid_argument& ex) {
      throw ParseError("config line " + std::to_string(line_no) + ": " + ex.what());
    } catch (const std::out_of_range&) {
      throw ParseError("config line " + std::to_string(line_no) + ": value out of range");
    }
  }
  if (cfg.family == Family::file && cfg.path.empty())
    throw ParseError("family=file requires a path");
  if (cfg.caps.betti_n <= 0 || cfg.caps.split_edges <= 0 || cfg.caps.split_total <= 0)
    throw ParseError("caps must be positive");
  return cfg;
}

std::string SweepConfig::canonical_kv() const {
  std::ostringstream out;
  out << "family=";
  switch (family) {
    case Family::file: out << "file"; break;
    case Family::paths: out << "paths"; break;
    case Family::cycles: out << "cycles"; break;
    case Family::all_connected: out << "all_connected"; break;
  }
  out << '\n';
  if (family == Family::file) out << "path=" << path << '\n';
  if (family == Family::paths || family == Family::cycles) out << "max_n=" << max_n << '\n';
  if (family == Family::all_connected) out << "max_edges=" << max_edges << '\n';
  out << "field=" << field.str() << '\n'
      << "filter=" << filter_name(filter) << '\n'
      << "cap_n=" << caps.betti_n << '\n'
      << "cap_edges=" << caps.split_edges << '\n'
      << "cap_splittings=" << caps.split_total << '\n'
      << "cap_cg=" << caps.cg_n << '\n'
      << "dedupe=" << (dedupe ? 1 : 0) << '\n'
      << "format=" << format << '\n';
  return out.str();
}

std::uint64_t SweepConfig::config_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : canonical_kv()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> violated_tags(const ComparisonRecord& rec) {
  std::vector<std::string> out;
  if (!rec.pd_ok()) out.push_back("pd");
  if (!rec.reg_ok()) out.push_back("reg");
  if (!rec.betti_ok()) out.push_back("betti");
  if (!rec.dim_ok()) out.push_back("dim");
  if (!rec.depth_ok()) out.push_back("depth");
  return out;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

struct WorkItem {
  SplittingMap splitting;
  Specialness special;
  ComparisonRecord record;
};

}  // namespace

CheckSummary check_graph(
    const Graph& g, SplitFilter filter, const FieldSpec& field, const GuardCaps& caps,
    bool dedupe, int jobs,
    const std::function<void(const SplittingMap&, const Specialness&, const ComparisonRecord&)>&
        sink) {
  if (g.edge_count() > caps.split_edges)
    throw CapExceededError("splitting enumeration capped at " + std::to_string(caps.split_edges) +
                           " edges (graph has " + std::to_string(g.edge_count()) + ")");
  std::vector<WorkItem> items;
  if (filter == SplitFilter::sigma) {
    SigmaStable st = sigma_stable(g);
    WorkItem item;
    item.splitting = st.splitting;
    item.special = specialness(item.splitting);
    items.push_back(std::move(item));
  } else {
    SplitEnumOptions opt;
    opt.max_total = caps.split_total;
    opt.dedupe_isomorphic = dedupe;
    if (filter == SplitFilter::special1) opt.filter = SplitEnumOptions::Filter::special1;
    if (filter == SplitFilter::special2) opt.filter = SplitEnumOptions::Filter::special2;
    for_each_splitting(g, opt, [&](const SplittingMap& s, const Specialness& sp) {
      WorkItem item;
      item.splitting = s;
      item.special = sp;
      items.push_back(std::move(item));
      return true;
    });
  }

  parallel_for(items.size(), jobs, [&](std::size_t i) {
    items[i].record = compare(items[i].splitting, field, caps.betti_n);
  });

  CheckSummary summary;
  summary.splittings = static_cast<long long>(items.size());
  for (const WorkItem& item : items) {
    std::vector<std::string> bad = violated_tags(item.record);
    for (const std::string& tag : bad) ++summary.violations[tag];
    if (!bad.empty()) {
      Witness w;
      w.splitting = item.splitting;
      w.special = item.special;
      w.record = item.record;
      w.violated = bad;
      w.field = field;
      summary.witnesses.push_back(std::move(w));
    }
    if (sink) sink(item.splitting, item.special, item.record);
  }
  return summary;
}

CheckSummary check_splitting(const SplittingMap& s, const FieldSpec& field, const GuardCaps& caps) {
  CheckSummary summary;
  summary.splittings = 1;
  Witness w;
  w.splitting = s;
  w.special = specialness(s);
  w.record = compare(s, field, caps.betti_n);
  w.violated = violated_tags(w.record);
  w.field = field;
  for (const std::string& tag : w.violated) ++summary.violations[tag];
  if (!w.violated.empty()) summary.witnesses.push_back(std::move(w));
  return summary;
}

std::vector<Graph> resolve_family(const SweepConfig& cfg) {
  std::vector<Graph> graphs;
  switch (cfg.family) {
    case SweepConfig::Family::paths:
      for (int n = 2; n <= cfg.max_n; ++n) graphs.push_back(path_graph(n));
      break;
    case SweepConfig::Family::cycles:
      for (int n = 3; n <= cfg.max_n; ++n) graphs.push_back(cycle_graph(n));
      break;
    case SweepConfig::Family::all_connected:
      graphs = connected_graphs_up_to_edges(cfg.max_edges);
      break;
    case SweepConfig::Family::file: {
      std::string text = read_file(cfg.path);
      // Either one edge-list document or JSON-lines of graph objects.
      std::size_t first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && text[first] == '{') {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
          std::size_t a = line.find_first_not_of(" \t\r");
          if (a == std::string::npos) continue;
          graphs.push_back(graph_from_json(nlohmann::json::parse(line)));
        }
      } else {
        graphs.push_back(parse_edge_list(text));
      }
      break;
    }
  }
  return graphs;
}

SearchResult run_search(const SweepConfig& cfg, std::string* records_out) {
  std::vector<Graph> graphs = resolve_family(cfg);
  SearchResult result;
  result.graphs = static_cast<long long>(graphs.size());

  std::ostringstream records;
  std::ostringstream witnesses;
  if (cfg.format == "csv") records << comparison_csv_header() << '\n';

  for (const Graph& g : graphs) {
    CheckSummary summary = check_graph(
        g, cfg.filter, cfg.field, cfg.caps, cfg.dedupe, cfg.jobs,
        [&](const SplittingMap& s, const Specialness& sp, const ComparisonRecord& rec) {
          if (cfg.format == "csv")
            records << comparison_csv_row(s, sp, rec) << '\n';
          else
            records << comparison_to_json(s, sp, rec).dump() << '\n';
        });
    result.splittings += summary.splittings;
    for (const auto& [tag, count] : summary.violations) result.violations[tag] += count;
    result.witness_count += static_cast<long long>(summary.witnesses.size());
    for (const Witness& w : summary.witnesses) {
      nlohmann::json jw;
      jw["splitting"] = splitting_to_json(w.splitting);
      jw["violated"] = w.violated;
      jw["field"] = w.field.str();
      jw["special1"] = w.special.condition1;
      jw["special2"] = w.special.condition2;
      jw["record"] = comparison_to_json(w.splitting, w.special, w.record);
      witnesses << jw.dump() << '\n';
    }
  }

  if (records_out) *records_out = records.str();
  if (!cfg.out.empty()) {
    write_file(cfg.out, records.str());
    result.outputs.push_back(cfg.out);
    std::string wpath = cfg.out + ".witnesses.jsonl";
    write_file(wpath, witnesses.str());
    result.outputs.push_back(wpath);

    nlohmann::json manifest;
    manifest["engine_version"] = kEngineVersion;
    std::ostringstream hash_hex;
    hash_hex << std::hex << cfg.config_hash();
    manifest["config_hash"] = "fnv1a:" + hash_hex.str();
    manifest["config"] = cfg.canonical_kv();
    manifest["field"] = cfg.field.str();
    manifest["outputs"] = result.outputs;
    manifest["summary"] = {{"graphs", result.graphs},
                           {"splittings", result.splittings},
                           {"witnesses", result.witness_count}};
    nlohmann::json violations = nlohmann::json::object();
    for (const auto& [tag, count] : result.violations) violations[tag] = count;
    manifest["summary"]["violations"] = violations;
    std::string mpath = cfg.out + ".manifest.json";
    write_file(mpath, manifest.dump(2) + "\n");
    result.outputs.push_back(mpath);
  }
  return result;
}

}  // namespace splitgraph
