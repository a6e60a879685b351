#include "splitgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "splitgraph/errors.hpp"
#include "splitgraph/simplicial.hpp"

namespace splitgraph {

Graph::Graph(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("vertex count must be in 0..64");
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u == e.v)
      throw std::invalid_argument("loop edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    if (e.u < 1 || e.v > n_)
      throw std::invalid_argument("edge endpoint out of range 1.." + std::to_string(n_));
    if (i > 0 && edges[i - 1] == e)
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    adj_[e.u - 1] |= vertex_bit(e.v);
    adj_[e.v - 1] |= vertex_bit(e.u);
  }
  edges_ = std::move(edges);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
  return (adj_[u - 1] & vertex_bit(v)) != 0;
}

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

std::uint64_t Graph::neighbor_mask(int v) const { return adj_[v - 1]; }

std::uint64_t Graph::closed_neighbor_mask(int v) const { return adj_[v - 1] | vertex_bit(v); }

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 1; w <= n_; ++w)
    if (adj_[v - 1] & vertex_bit(w)) out.push_back(w);
  return out;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 1; v <= n_; ++v)
    if (adj_[v - 1] == 0) return true;
  return false;
}

std::uint64_t Graph::full_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Labeling::Labeling(std::vector<int> p) : perm(std::move(p)) {
  std::uint64_t seen = 0;
  const int n = static_cast<int>(perm.size());
  if (n > 64) throw std::invalid_argument("labeling too large");
  for (int x : perm) {
    if (x < 1 || x > n || (seen & vertex_bit(x)))
      throw std::invalid_argument("labeling is not a permutation of 1..n");
    seen |= vertex_bit(x);
  }
}

Labeling Labeling::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return Labeling(std::move(p));
}

Graph relabel(const Graph& g, const Labeling& l) {
  if (l.size() != g.vertex_count())
    throw std::invalid_argument("labeling size does not match vertex count");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(l.apply(e.u), l.apply(e.v));
  return Graph(g.vertex_count(), std::move(edges));
}

namespace {

int parse_int_token(const std::string& tok, int line_no, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": malformed " + what + " '" + tok + "'");
  return value;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": malformed header, expected 'n m'");
      n = parse_int_token(toks[0], line_no, "vertex count");
      m = parse_int_token(toks[1], line_no, "edge count");
      if (n < 0 || n > 64)
        throw ParseError("line " + std::to_string(line_no) + ": vertex count out of range 0..64");
      if (m < 0)
        throw ParseError("line " + std::to_string(line_no) + ": negative edge count");
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError("line " + std::to_string(line_no) + ": unexpected content after " +
                       std::to_string(m) + " edges");
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": malformed edge line, expected 'u v'");
    int u = parse_int_token(toks[0], line_no, "endpoint");
    int v = parse_int_token(toks[1], line_no, "endpoint");
    if (u == v)
      throw ParseError("line " + std::to_string(line_no) + ": loop edge {" + std::to_string(u) +
                       "," + std::to_string(v) + "}");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range 1.." +
                       std::to_string(n));
    Edge e(u, v);
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge {" +
                       std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("empty edge-list document");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("declared " + std::to_string(m) + " edges but found " +
                     std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::uint64_t unseen = g.full_mask();
  while (unseen) {
    int start = std::countr_zero(unseen) + 1;
    std::uint64_t comp = vertex_bit(start);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f) + 1;
        f &= f - 1;
        next |= g.neighbor_mask(v);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v)
      if (comp & vertex_bit(v)) verts.push_back(v);
    comps.push_back(std::move(verts));
    unseen &= ~comp;
  }
  return comps;
}

int component_count(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 1; u <= g.vertex_count(); ++u)
    for (int v = u + 1; v <= g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.vertex_count(), std::move(edges));
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 1; s <= n; ++s) {
    if (color[s - 1] != -1) continue;
    color[s - 1] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w - 1] == -1) {
          color[w - 1] = 1 - color[v - 1];
          stack.push_back(w);
        } else if (color[w - 1] == color[v - 1]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + component_count(g) == g.vertex_count();
}

bool is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::vector<int> seq;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v)
      if (!chosen[v - 1] && (best == -1 || weight[v - 1] > weight[best - 1])) best = v;
    chosen[best - 1] = true;
    seq.push_back(best);
    for (int w : g.neighbors(best))
      if (!chosen[w - 1]) ++weight[w - 1];
  }
  std::vector<int> peo(seq.rbegin(), seq.rend());
  std::vector<int> pos(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) pos[peo[i] - 1] = i;
  for (int i = 0; i < n; ++i) {
    int v = peo[i];
    std::uint64_t later = 0;
    int first = -1, first_pos = n;
    for (int w : g.neighbors(v)) {
      if (pos[w - 1] > i) {
        later |= vertex_bit(w);
        if (pos[w - 1] < first_pos) {
          first_pos = pos[w - 1];
          first = w;
        }
      }
    }
    if (first == -1) continue;
    std::uint64_t rest = later & ~vertex_bit(first);
    if ((rest & ~g.neighbor_mask(first)) != 0) return false;
  }
  return true;
}

namespace {

// Does the induced subgraph on `mask` form a single cycle?
bool induced_subgraph_is_cycle(const Graph& g, std::uint64_t mask) {
  std::uint64_t m = mask;
  while (m) {
    int v = std::countr_zero(m) + 1;
    m &= m - 1;
    if (std::popcount(g.neighbor_mask(v) & mask) != 2) return false;
  }
  // 2-regular and connected within mask.
  int start = std::countr_zero(mask) + 1;
  std::uint64_t comp = vertex_bit(start);
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f) + 1;
      f &= f - 1;
      next |= g.neighbor_mask(v) & mask;
    }
    frontier = next & ~comp;
    comp |= next;
  }
  return comp == mask;
}

}  // namespace

bool has_induced_long_cycle(const Graph& g, int min_len) {
  const std::uint64_t full = g.full_mask();
  for (std::uint64_t mask = 1; mask <= full && full; ++mask) {
    if (std::popcount(mask) < min_len) continue;
    if (induced_subgraph_is_cycle(g, mask)) return true;
    if (mask == full) break;
  }
  return false;
}

bool is_weakly_chordal(const Graph& g) {
  return !has_induced_long_cycle(g, 5) && !has_induced_long_cycle(complement(g), 5);
}

bool is_c5_free(const Graph& g) {
  const std::uint64_t full = g.full_mask();
  for (std::uint64_t mask = 1; mask <= full && full; ++mask) {
    if (std::popcount(mask) == 5 && induced_subgraph_is_cycle(g, mask)) return false;
    if (mask == full) break;
  }
  return true;
}

namespace {

int mis_size_rec(const Graph& g, std::uint64_t cand) {
  if (cand == 0) return 0;
  // Vertices isolated within the candidate set are always taken.
  std::uint64_t m = cand;
  while (m) {
    int v = std::countr_zero(m) + 1;
    m &= m - 1;
    if ((g.neighbor_mask(v) & cand) == 0)
      return 1 + mis_size_rec(g, cand & ~vertex_bit(v));
  }
  // Branch on a maximum-degree vertex.
  int best = -1, best_deg = -1;
  m = cand;
  while (m) {
    int v = std::countr_zero(m) + 1;
    m &= m - 1;
    int d = std::popcount(g.neighbor_mask(v) & cand);
    if (d > best_deg) {
      best_deg = d;
      best = v;
    }
  }
  int with = 1 + mis_size_rec(g, cand & ~g.closed_neighbor_mask(best));
  int without = mis_size_rec(g, cand & ~vertex_bit(best));
  return std::max(with, without);
}

}  // namespace

int independence_number(const Graph& g) { return mis_size_rec(g, g.full_mask()); }

int min_vertex_cover(const Graph& g) { return g.vertex_count() - independence_number(g); }

namespace {

void bron_kerbosch(const Graph& g, const std::vector<std::uint64_t>& nonadj, std::uint64_t r,
                   std::uint64_t p, std::uint64_t x, std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P|X covering most of P.
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  std::uint64_t m = px;
  while (m) {
    int v = std::countr_zero(m) + 1;
    m &= m - 1;
    int c = std::popcount(p & nonadj[v - 1]);
    if (c > best) {
      best = c;
      pivot = v;
    }
  }
  std::uint64_t ext = p & ~nonadj[pivot - 1];
  while (ext) {
    int v = std::countr_zero(ext) + 1;
    ext &= ext - 1;
    std::uint64_t vb = vertex_bit(v);
    bron_kerbosch(g, nonadj, r | vb, p & nonadj[v - 1], x & nonadj[v - 1], out);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace

std::vector<std::uint64_t> maximal_independent_sets(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {0};
  std::vector<std::uint64_t> nonadj(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v)
    nonadj[v - 1] = g.full_mask() & ~g.closed_neighbor_mask(v);
  std::vector<std::uint64_t> out;
  bron_kerbosch(g, nonadj, 0, g.full_mask(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> minimal_vertex_covers(const Graph& g) {
  std::vector<std::uint64_t> covers;
  for (std::uint64_t s : maximal_independent_sets(g)) covers.push_back(g.full_mask() & ~s);
  std::sort(covers.begin(), covers.end());
  return covers;
}

int bight(const Graph& g) {
  int best = 0;
  for (std::uint64_t c : minimal_vertex_covers(g)) best = std::max(best, std::popcount(c));
  return best;
}

bool is_unmixed(const Graph& g) {
  const std::vector<std::uint64_t> covers = minimal_vertex_covers(g);
  for (std::uint64_t c : covers)
    if (std::popcount(c) != std::popcount(covers.front())) return false;
  return true;
}

bool is_very_well_covered(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || n % 2 != 0 || g.has_isolated_vertex()) return false;
  for (std::uint64_t c : minimal_vertex_covers(g))
    if (2 * std::popcount(c) != n) return false;
  return true;
}

namespace {

int induced_matching_rec(const std::vector<std::uint64_t>& compat, std::uint64_t allowed) {
  if (allowed == 0) return 0;
  int e = std::countr_zero(allowed);
  std::uint64_t eb = std::uint64_t{1} << e;
  int with = 1 + induced_matching_rec(compat, allowed & compat[static_cast<std::size_t>(e)]);
  int without = induced_matching_rec(compat, allowed & ~eb);
  return std::max(with, without);
}

}  // namespace

int induced_matching_number(const Graph& g) {
  const auto& edges = g.edges();
  const int m = g.edge_count();
  if (m == 0) return 0;
  std::vector<std::uint64_t> compat(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Edge &e = edges[static_cast<std::size_t>(i)], &f = edges[static_cast<std::size_t>(j)];
      std::uint64_t em = vertex_bit(e.u) | vertex_bit(e.v);
      std::uint64_t fm = vertex_bit(f.u) | vertex_bit(f.v);
      if (em & fm) continue;
      bool joined = g.has_edge(e.u, f.u) || g.has_edge(e.u, f.v) || g.has_edge(e.v, f.u) ||
                    g.has_edge(e.v, f.v);
      if (!joined) compat[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
  }
  std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  return induced_matching_rec(compat, all);
}

// ---------------------------------------------------------------------------
// Canonical labeling.
// ---------------------------------------------------------------------------

namespace {

// Iterated color refinement. Colors are dense ranks of (previous color,
// sorted neighbor colors); initial colors come from the caller and are
// preserved as the coarsest distinction.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  if (n == 0) return colors;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> keyed(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      std::vector<int> key;
      key.push_back(colors[v - 1]);
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(colors[w - 1]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keyed[v - 1] = {std::move(key), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& kv : keyed) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      auto it = std::lower_bound(keys.begin(), keys.end(), keyed[v - 1].first);
      next[v - 1] = static_cast<int>(it - keys.begin());
    }
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> refined;            // refined color per vertex
  std::vector<int> target_color;       // required refined color at each position
  std::vector<std::uint64_t> best;     // best packed bits so far
  bool have_best = false;
  std::vector<int> best_order;
  std::vector<std::uint64_t> cur;
  std::vector<int> order;
  std::uint64_t placed_mask = 0;

  explicit CanonSearch(const Graph& graph, std::vector<int> refined_colors)
      : g(graph), n(graph.vertex_count()), refined(std::move(refined_colors)) {
    target_color = refined;
    std::sort(target_color.begin(), target_color.end());
    cur.assign((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64 + 1, 0);
  }

  // Bit b of the encoding lives in word b/64 at position 63 - b%64, so the
  // numeric order of the word sequence is the lexicographic order of bits.
  static std::uint64_t bit_mask(std::size_t b) { return std::uint64_t{1} << (63 - b % 64); }

  // Compares the current prefix of `nbits` bits against the best; the max
  // encoding is canonical, so 1 means the current branch beats the best.
  int compare_prefix(std::size_t nbits) const {
    std::size_t words = nbits / 64;
    for (std::size_t w = 0; w < words; ++w) {
      if (cur[w] != best[w]) return cur[w] > best[w] ? 1 : -1;
    }
    std::size_t rem = nbits % 64;
    if (rem) {
      std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
      std::uint64_t a = cur[words] & mask, b = best[words] & mask;
      if (a != b) return a > b ? 1 : -1;
    }
    return 0;
  }

  void place(int depth) {
    if (depth == n) {
      std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
      if (!have_best || compare_prefix(total) > 0) {
        best = cur;
        have_best = true;
        best_order = order;
      }
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (placed_mask & vertex_bit(v)) continue;
      if (refined[v - 1] != target_color[static_cast<std::size_t>(depth)]) continue;
      // Append adjacency bits of v against already placed vertices.
      std::size_t base = static_cast<std::size_t>(depth) * (depth - 1) / 2;
      for (int i = 0; i < depth; ++i) {
        std::size_t b = base + static_cast<std::size_t>(i);
        if (g.has_edge(order[static_cast<std::size_t>(i)], v))
          cur[b / 64] |= bit_mask(b);
        else
          cur[b / 64] &= ~bit_mask(b);
      }
      std::size_t nbits = base + static_cast<std::size_t>(depth);
      if (have_best && compare_prefix(nbits) < 0) continue;
      order.push_back(v);
      placed_mask |= vertex_bit(v);
      place(depth + 1);
      placed_mask &= ~vertex_bit(v);
      order.pop_back();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors) {
  const int n = g.vertex_count();
  std::vector<int> init = colors;
  if (init.empty()) init.assign(static_cast<std::size_t>(n), 0);
  if (static_cast<int>(init.size()) != n)
    throw std::invalid_argument("color vector size does not match vertex count");

  CanonicalForm form;
  form.n = n;
  std::size_t words = (static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64;
  if (n == 0) return form;

  // Fast path: edgeless or complete graphs with uniform colors.
  bool uniform = std::all_of(init.begin(), init.end(), [&](int c) { return c == init[0]; });
  long long full_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (uniform && (g.edge_count() == 0 || g.edge_count() == full_edges)) {
    form.colors = init;
    form.bits.assign(words, 0);
    if (g.edge_count() == full_edges) {
      for (std::size_t b = 0; b < static_cast<std::size_t>(full_edges); ++b)
        form.bits[b / 64] |= std::uint64_t{1} << (63 - b % 64);
    }
    return form;
  }

  std::vector<int> refined = refine_colors(g, init);
  CanonSearch search(g, refined);
  search.place(0);
  search.best.resize(words);
  form.bits = search.best;
  form.colors.reserve(static_cast<std::size_t>(n));
  for (int v : search.best_order) form.colors.push_back(init[v - 1]);
  return form;
}

bool are_isomorphic(const Graph& a, const Graph& b, int size_cap) {
  if (a.vertex_count() > size_cap || b.vertex_count() > size_cap)
    throw CapExceededError("isomorphism size cap " + std::to_string(size_cap) + " exceeded");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 1; v <= a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (int v = 1; v <= b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

ClassFlags classify(const Graph& g, int vertex_decomposable_cap) {
  ClassFlags f;
  f.bipartite = is_bipartite(g);
  f.forest = is_forest(g);
  f.chordal = is_chordal(g);
  f.weakly_chordal = is_weakly_chordal(g);
  f.c5_free = is_c5_free(g);
  f.unmixed = is_unmixed(g);
  f.very_well_covered = is_very_well_covered(g);
  if (g.vertex_count() <= vertex_decomposable_cap)
    f.vertex_decomposable = is_vertex_decomposable(independence_complex(g));
  return f;
}

}  // namespace splitgraph
