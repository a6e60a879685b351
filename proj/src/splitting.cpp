#include "splitgraph/splitting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "splitgraph/errors.hpp"
#include "splitgraph/monomial.hpp"

namespace splitgraph {

SplitCheck verify_splitting(const SplittingMap& s) {
  const int n = s.target.vertex_count();
  const int ns = s.source.vertex_count();
  if (static_cast<int>(s.alpha.size()) != ns)
    return {false, "alpha must assign a target vertex to every source vertex"};
  for (int v = 1; v <= ns; ++v) {
    int a = s.alpha[static_cast<std::size_t>(v - 1)];
    if (a < 1 || a > n)
      return {false, "alpha(" + std::to_string(v) + ") = " + std::to_string(a) +
                         " is outside 1.." + std::to_string(n)};
  }
  std::uint64_t hit = 0;
  for (int a : s.alpha) hit |= vertex_bit(a);
  if (hit != s.target.full_mask()) {
    for (int v = 1; v <= n; ++v)
      if (!(hit & vertex_bit(v)))
        return {false, "alpha is not surjective: target vertex " + std::to_string(v) +
                           " has empty fiber"};
  }
  std::map<Edge, Edge> image;  // target edge -> first source edge mapping to it
  for (const Edge& e : s.source.edges()) {
    int a = s.alpha[static_cast<std::size_t>(e.u - 1)];
    int b = s.alpha[static_cast<std::size_t>(e.v - 1)];
    if (a == b)
      return {false, "source edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} collapses to the single vertex " + std::to_string(a)};
    Edge img(a, b);
    if (!s.target.has_edge(img.u, img.v))
      return {false, "source edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} maps to the non-edge {" + std::to_string(img.u) + "," +
                         std::to_string(img.v) + "}"};
    auto [it, fresh] = image.emplace(img, e);
    if (!fresh)
      return {false, "edge map is not injective: source edges {" + std::to_string(it->second.u) +
                         "," + std::to_string(it->second.v) + "} and {" + std::to_string(e.u) +
                         "," + std::to_string(e.v) + "} both map to {" + std::to_string(img.u) +
                         "," + std::to_string(img.v) + "}"};
  }
  if (static_cast<int>(image.size()) != s.target.edge_count())
    return {false, "edge map is not surjective: " + std::to_string(image.size()) + " of " +
                       std::to_string(s.target.edge_count()) + " target edges are hit"};
  return {};
}

Specialness specialness(const SplittingMap& s) {
  SplitCheck check = verify_splitting(s);
  if (!check.ok)
    throw std::invalid_argument("specialness of an invalid splitting: " + check.reason);
  const int n = s.target.vertex_count();
  const int ns = s.source.vertex_count();
  std::vector<std::vector<int>> fiber(static_cast<std::size_t>(n));
  for (int v = 1; v <= ns; ++v)
    fiber[static_cast<std::size_t>(s.alpha[static_cast<std::size_t>(v - 1)] - 1)].push_back(v);

  std::vector<int> comp(static_cast<std::size_t>(ns), 0);
  int c = 0;
  for (const auto& verts : connected_components(s.source)) {
    ++c;
    for (int v : verts) comp[static_cast<std::size_t>(v - 1)] = c;
  }

  Specialness out;
  out.condition1 = true;
  out.condition2 = true;
  for (const auto& f : fiber) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        int v = f[i], w = f[j];
        if (comp[static_cast<std::size_t>(v - 1)] == comp[static_cast<std::size_t>(w - 1)])
          out.condition2 = false;
        if (out.condition1) {
          std::uint64_t nv = s.source.neighbor_mask(v);
          std::uint64_t rest = nv;
          while (rest && out.condition1) {
            int a = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            std::uint64_t nw = s.source.neighbor_mask(w);
            if ((nw & ~s.source.neighbor_mask(a)) != 0) out.condition1 = false;
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of splittings by per-vertex set partitions of edge-ends.
// ---------------------------------------------------------------------------

namespace {

long long bell_number_capped(int n, long long cap) {
  // Bell triangle with saturation at cap.
  std::vector<long long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> next{row.back()};
    for (long long x : row) next.push_back(std::min(cap, next.back() + x));
    row = std::move(next);
  }
  return std::min(cap, row.front());
}

// All set partitions of {0..k-1} as restricted growth strings, lexicographic.
std::vector<std::vector<int>> set_partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(static_cast<std::size_t>(k), 0);
  if (k == 0) {
    out.push_back({});
    return out;
  }
  for (;;) {
    out.push_back(rgs);
    int i = k - 1;
    while (i > 0) {
      int max_prefix = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<std::size_t>(i)] <= max_prefix) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

struct VertexEnds {
  int vertex = 0;
  std::vector<int> edge_indices;                // ends incident to this vertex
  std::vector<std::vector<int>> partitions;     // RGS per partition
};

}  // namespace

long long splitting_count(const Graph& g) {
  long long total = 1;
  const long long cap = 4'000'000'000'000'000'000ll;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    long long b = bell_number_capped(g.degree(v), cap);
    if (total > cap / std::max(1ll, b)) return cap;
    total *= std::max(1ll, b);
  }
  return total;
}

void for_each_splitting(const Graph& g, const SplitEnumOptions& opt,
                        const std::function<bool(const SplittingMap&, const Specialness&)>& visit) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  if (opt.pad_isolated < 0 || (opt.pad_isolated > 0 && n == 0))
    throw std::invalid_argument("pad_isolated requires a nonempty target graph");

  long long total = splitting_count(g);
  if (opt.max_total > 0 && total > opt.max_total)
    throw CapExceededError("splitting enumeration would produce " + std::to_string(total) +
                           " raw candidates, above the cap " + std::to_string(opt.max_total));

  std::vector<VertexEnds> per_vertex(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) per_vertex[static_cast<std::size_t>(v - 1)].vertex = v;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    per_vertex[static_cast<std::size_t>(edges[e].u - 1)].edge_indices.push_back(static_cast<int>(e));
    per_vertex[static_cast<std::size_t>(edges[e].v - 1)].edge_indices.push_back(static_cast<int>(e));
  }
  for (auto& pv : per_vertex)
    pv.partitions = set_partitions(static_cast<int>(pv.edge_indices.size()));

  std::set<CanonicalForm> seen;  // dedupe store: colored canonical forms

  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  for (;;) {
    // Assemble the source graph: block b of the partition at vertex v becomes
    // source vertex (v, b); vertices are numbered in lexicographic (v, b) order.
    std::vector<int> block_base(static_cast<std::size_t>(n) + 1, 0);
    int ns = 0;
    for (int v = 1; v <= n; ++v) {
      const auto& pv = per_vertex[static_cast<std::size_t>(v - 1)];
      const auto& rgs = pv.partitions[choice[static_cast<std::size_t>(v - 1)]];
      int blocks = rgs.empty() ? 1 : *std::max_element(rgs.begin(), rgs.end()) + 1;
      block_base[static_cast<std::size_t>(v - 1)] = ns;
      ns += blocks;
    }
    block_base[static_cast<std::size_t>(n)] = ns;

    if ((opt.max_source_vertices == 0 || ns <= opt.max_source_vertices) &&
        ns + opt.pad_isolated <= 64) {
      std::vector<int> alpha;
      alpha.reserve(static_cast<std::size_t>(ns + opt.pad_isolated));
      for (int v = 1; v <= n; ++v) {
        int blocks = block_base[static_cast<std::size_t>(v)] - block_base[static_cast<std::size_t>(v - 1)];
        for (int b = 0; b < blocks; ++b) alpha.push_back(v);
      }
      std::vector<Edge> src_edges;
      src_edges.reserve(edges.size());
      for (std::size_t e = 0; e < edges.size(); ++e) {
        int endpoints[2] = {edges[e].u, edges[e].v};
        int mapped[2];
        for (int side = 0; side < 2; ++side) {
          int v = endpoints[side];
          const auto& pv = per_vertex[static_cast<std::size_t>(v - 1)];
          const auto& rgs = pv.partitions[choice[static_cast<std::size_t>(v - 1)]];
          std::size_t pos = static_cast<std::size_t>(
              std::find(pv.edge_indices.begin(), pv.edge_indices.end(), static_cast<int>(e)) -
              pv.edge_indices.begin());
          mapped[side] = block_base[static_cast<std::size_t>(v - 1)] + rgs[pos] + 1;
        }
        src_edges.emplace_back(mapped[0], mapped[1]);
      }
      // Padded isolated vertices carry no edge condition; map them to vertex 1.
      for (int k = 0; k < opt.pad_isolated; ++k) alpha.push_back(1);

      SplittingMap s;
      s.target = g;
      s.source = Graph(ns + opt.pad_isolated, std::move(src_edges));
      s.alpha = std::move(alpha);

      Specialness sp = specialness(s);
      bool keep = true;
      if (opt.filter == SplitEnumOptions::Filter::special1) keep = sp.condition1;
      if (opt.filter == SplitEnumOptions::Filter::special2) keep = sp.condition2;
      if (keep && opt.dedupe_isomorphic) {
        if (!seen.insert(canonical_form(s.source, s.alpha)).second) keep = false;
      }
      if (keep && !visit(s, sp)) return;
    }

    // Odometer step over the per-vertex partition choices.
    int v = n - 1;
    while (v >= 0) {
      if (++choice[static_cast<std::size_t>(v)] <
          per_vertex[static_cast<std::size_t>(v)].partitions.size())
        break;
      choice[static_cast<std::size_t>(v)] = 0;
      --v;
    }
    if (v < 0) break;
  }
}

std::vector<SplittingMap> enumerate_splittings(const Graph& g, const SplitEnumOptions& opt) {
  std::vector<SplittingMap> out;
  for_each_splitting(g, opt, [&](const SplittingMap& s, const Specialness&) {
    out.push_back(s);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// The sigma stretching of graphs.
// ---------------------------------------------------------------------------

namespace {

struct StretchedLabels {
  std::vector<long long> used;              // sorted raw labels
  std::vector<std::pair<long long, long long>> raw_edges;
  int rank_of(long long raw) const {
    return static_cast<int>(std::lower_bound(used.begin(), used.end(), raw) - used.begin()) + 1;
  }
};

StretchedLabels stretched_labels(const Graph& g, int t) {
  StretchedLabels out;
  std::set<long long> used;
  for (const Edge& e : g.edges()) {
    long long lo = e.u;
    long long hi = static_cast<long long>(e.v) + t;
    used.insert(lo);
    used.insert(hi);
    out.raw_edges.emplace_back(lo, hi);
  }
  out.used.assign(used.begin(), used.end());
  return out;
}

}  // namespace

Graph sigma_stretched_graph(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("stretch exponent t must be >= 1");
  StretchedLabels st = stretched_labels(g, t);
  std::vector<Edge> edges;
  std::set<Edge> dedupe;
  for (auto [lo, hi] : st.raw_edges) {
    Edge e(st.rank_of(lo), st.rank_of(hi));
    if (dedupe.insert(e).second) edges.push_back(e);
  }
  return Graph(static_cast<int>(st.used.size()), std::move(edges));
}

SplittingMap sigma_graph(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("stretch exponent t must be >= 1");
  if (g.has_isolated_vertex())
    throw std::invalid_argument("sigma_graph requires a graph without isolated vertices");
  std::set<long long> lowers, uppers;
  for (const Edge& e : g.edges()) {
    lowers.insert(e.u);
    uppers.insert(static_cast<long long>(e.v) + t);
  }
  for (long long lo : lowers)
    if (uppers.count(lo))
      throw std::invalid_argument(
          "sigma_graph: label collision at " + std::to_string(lo) +
          " (a lower endpoint equals a shifted upper endpoint); the canonical "
          "splitting map is undefined for t = " + std::to_string(t));
  StretchedLabels st = stretched_labels(g, t);
  std::vector<Edge> edges;
  for (auto [lo, hi] : st.raw_edges) edges.emplace_back(st.rank_of(lo), st.rank_of(hi));

  SplittingMap s;
  s.target = g;
  s.source = Graph(static_cast<int>(st.used.size()), std::move(edges));
  s.alpha.resize(st.used.size());
  for (std::size_t i = 0; i < st.used.size(); ++i) {
    long long raw = st.used[i];
    s.alpha[i] = lowers.count(raw) ? static_cast<int>(raw) : static_cast<int>(raw - t);
  }
  SplitCheck check = verify_splitting(s);
  if (!check.ok) throw InternalError("sigma_graph produced an invalid splitting: " + check.reason);
  return s;
}

SigmaStable sigma_stable(const Graph& g) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("sigma_stable requires a graph without isolated vertices");
  const int n = g.vertex_count();
  if (n == 0) {
    SigmaStable out;
    out.splitting = SplittingMap{g, g, {}};
    out.t0 = 1;
    return out;
  }
  Graph stable = sigma_stretched_graph(g, n);
  int t0 = n;
  for (int t = n - 1; t >= 1; --t) {
    Graph candidate = sigma_stretched_graph(g, t);
    if (candidate.vertex_count() != stable.vertex_count() ||
        !are_isomorphic(candidate, stable, 64)) {
      break;
    }
    t0 = t;
  }
  SigmaStable out;
  out.splitting = sigma_graph(g, t0);
  out.t0 = t0;
  return out;
}

int gamma(const Graph& g, const Labeling& l) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("gamma requires a graph without isolated vertices");
  Graph h = relabel(g, l);
  return component_count(sigma_stretched_graph(h, std::max(1, h.vertex_count())));
}

CgReport cg_report(const Graph& g, int factorial_cap) {
  const int n = g.vertex_count();
  if (n > factorial_cap)
    throw CapExceededError("C(G) enumerates " + std::to_string(n) +
                           "! labelings, above the cap " + std::to_string(factorial_cap) + "!");
  if (g.has_isolated_vertex())
    throw std::invalid_argument("C(G) requires a graph without isolated vertices");
  CgReport report;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    Labeling l(perm);
    int c = gamma(g, l);
    if (report.values.insert(c).second) report.witnesses.emplace(c, l);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return report;
}

std::set<int> cg_set(const Graph& g, int factorial_cap) {
  return cg_report(g, factorial_cap).values;
}

// ---------------------------------------------------------------------------
// Comparison records
// ---------------------------------------------------------------------------

bool ComparisonRecord::betti_ok() const {
  for (std::size_t i = 0; i < betti_totals_target.size(); ++i) {
    long long src = i < betti_totals_source.size() ? betti_totals_source[i] : 0;
    if (betti_totals_target[i] > src) return false;
  }
  return true;
}

long long ComparisonRecord::delta_betti_min() const {
  long long best = 0;
  bool any = false;
  for (std::size_t i = 0; i < std::max(betti_totals_target.size(), betti_totals_source.size());
       ++i) {
    long long tgt = i < betti_totals_target.size() ? betti_totals_target[i] : 0;
    long long src = i < betti_totals_source.size() ? betti_totals_source[i] : 0;
    long long d = src - tgt;
    best = any ? std::min(best, d) : d;
    any = true;
  }
  return best;
}

ComparisonRecord compare(const SplittingMap& s, const FieldSpec& field, int betti_cap) {
  SplitCheck check = verify_splitting(s);
  if (!check.ok) throw std::invalid_argument("compare on an invalid splitting: " + check.reason);
  if (s.source.vertex_count() > betti_cap || s.target.vertex_count() > betti_cap)
    throw CapExceededError("Betti computation capped at " + std::to_string(betti_cap) +
                           " vertices");
  ComparisonRecord rec;
  BettiTable target_table = graded_betti_hochster(edge_ideal(s.target), field);
  BettiTable source_table = graded_betti_hochster(edge_ideal(s.source), field);
  rec.target_report = invariants_from_table(s.target, target_table);
  rec.source_report = invariants_from_table(s.source, source_table);
  rec.betti_totals_target = target_table.as_ideal().totals();
  rec.betti_totals_source = source_table.as_ideal().totals();
  return rec;
}

}  // namespace splitgraph
