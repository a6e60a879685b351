#include "splitgraph/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace splitgraph {

namespace {

// Keep only inclusion-maximal masks, sorted.
std::vector<std::uint64_t> maximalize(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < masks.size() && !dominated; ++j)
      if (i != j && (masks[i] & ~masks[j]) == 0 && masks[i] != masks[j]) dominated = true;
    // Equal masks were deduplicated; a mask equal to another never survives twice.
    if (!dominated) out.push_back(masks[i]);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<std::uint64_t> facets) {
  if (n < 0 || n > 64) throw std::invalid_argument("ground set size must be in 0..64");
  SimplicialComplex c;
  c.n_ = n;
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t f : facets)
    if (f & ~full) throw std::invalid_argument("facet contains a vertex outside 1..n");
  c.facets_ = maximalize(std::move(facets));
  return c;
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return from_facets(n, {full});
}

SimplicialComplex SimplicialComplex::empty_complex(int n) { return from_facets(n, {0}); }

int SimplicialComplex::dim() const {
  if (is_void()) return -2;
  int d = -1;
  for (std::uint64_t f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

bool SimplicialComplex::has_face(std::uint64_t f) const {
  for (std::uint64_t g : facets_)
    if ((f & ~g) == 0) return true;
  return false;
}

std::uint64_t SimplicialComplex::support() const {
  std::uint64_t s = 0;
  for (std::uint64_t f : facets_) s |= f;
  return s;
}

std::vector<std::uint64_t> SimplicialComplex::all_faces() const {
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t f : facets_) {
    // All submasks of f.
    std::uint64_t s = f;
    for (;;) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::induced(std::uint64_t w) const {
  std::vector<std::uint64_t> cand;
  cand.reserve(facets_.size());
  for (std::uint64_t f : facets_) cand.push_back(f & w);
  SimplicialComplex c;
  c.n_ = n_;
  c.facets_ = maximalize(std::move(cand));
  return c;
}

SimplicialComplex SimplicialComplex::link(int v) const {
  std::uint64_t vb = vertex_bit(v);
  std::vector<std::uint64_t> cand;
  for (std::uint64_t f : facets_)
    if (f & vb) cand.push_back(f & ~vb);
  SimplicialComplex c;
  c.n_ = n_;
  c.facets_ = maximalize(std::move(cand));
  return c;
}

SimplicialComplex SimplicialComplex::deletion(int v) const {
  std::uint64_t vb = vertex_bit(v);
  std::vector<std::uint64_t> cand;
  for (std::uint64_t f : facets_) cand.push_back(f & ~vb);
  SimplicialComplex c;
  c.n_ = n_;
  c.facets_ = maximalize(std::move(cand));
  return c;
}

SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex::from_facets(g.vertex_count(), maximal_independent_sets(g));
}

namespace {

struct FacetsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

using VdMemo = std::unordered_map<std::vector<std::uint64_t>, bool, FacetsHash>;

bool vd_rec(const SimplicialComplex& c, VdMemo& memo) {
  if (c.is_simplex()) return true;  // void, {∅}, and genuine simplices
  auto it = memo.find(c.facets());
  if (it != memo.end()) return it->second;
  bool result = false;
  std::uint64_t sup = c.support();
  while (sup && !result) {
    int v = std::countr_zero(sup) + 1;
    sup &= sup - 1;
    SimplicialComplex del = c.deletion(v);
    SimplicialComplex lk = c.link(v);
    // Shedding: no facet of the link stays maximal in the deletion.
    bool shedding = true;
    for (std::uint64_t f : lk.facets()) {
      if (std::find(del.facets().begin(), del.facets().end(), f) != del.facets().end()) {
        shedding = false;
        break;
      }
    }
    if (shedding && vd_rec(del, memo) && vd_rec(lk, memo)) result = true;
  }
  memo.emplace(c.facets(), result);
  return result;
}

}  // namespace

bool is_vertex_decomposable(const SimplicialComplex& c) {
  VdMemo memo;
  return vd_rec(c, memo);
}

}  // namespace splitgraph
