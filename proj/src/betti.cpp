#include "splitgraph/betti.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "splitgraph/errors.hpp"
#include "splitgraph/linalg.hpp"

namespace splitgraph {

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  auto key = std::make_pair(i, j);
  entries_[key] += value;
  if (entries_[key] == 0) entries_.erase(key);
}

long long BettiTable::entry(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::pd() const {
  int best = -1;
  for (const auto& [key, v] : entries_) best = std::max(best, key.first);
  return best;
}

int BettiTable::reg() const {
  int best = -1;
  bool any = false;
  for (const auto& [key, v] : entries_) {
    best = any ? std::max(best, key.second - key.first) : key.second - key.first;
    any = true;
  }
  return any ? best : -1;
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> t(static_cast<std::size_t>(pd() + 1), 0);
  for (const auto& [key, v] : entries_) t[static_cast<std::size_t>(key.first)] += v;
  return t;
}

BettiTable BettiTable::as_ideal() const {
  if (convention_ == TableConvention::of_ideal) return *this;
  BettiTable t(TableConvention::of_ideal, field_);
  for (const auto& [key, v] : entries_) {
    if (key.first == 0) continue;  // the rank-one start of the quotient resolution
    t.add(key.first - 1, key.second, v);
  }
  return t;
}

BettiTable BettiTable::as_quotient() const {
  if (convention_ == TableConvention::of_quotient) return *this;
  BettiTable t(TableConvention::of_quotient, field_);
  t.add(0, 0, 1);
  for (const auto& [key, v] : entries_) t.add(key.first + 1, key.second, v);
  return t;
}

namespace {

std::string pad_to(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

}  // namespace

std::string BettiTable::render_total_degree() const {
  std::ostringstream out;
  out << (convention_ == TableConvention::of_ideal ? "betti(I)" : "betti(S/I)")
      << " over " << field_.str() << ", rows i, columns j\n";
  if (entries_.empty()) {
    out << "  (zero table)\n";
    return out.str();
  }
  int jmin = 1 << 30, jmax = -(1 << 30);
  for (const auto& [key, v] : entries_) {
    jmin = std::min(jmin, key.second);
    jmax = std::max(jmax, key.second);
  }
  int imax = pd();
  out << "      ";
  for (int j = jmin; j <= jmax; ++j) out << pad_to("j=" + std::to_string(j), 7);
  out << '\n';
  for (int i = 0; i <= imax; ++i) {
    out << pad_to("i=" + std::to_string(i), 6);
    for (int j = jmin; j <= jmax; ++j) {
      long long v = entry(i, j);
      out << pad_to(v == 0 ? "." : std::to_string(v), 7);
    }
    out << '\n';
  }
  return out.str();
}

std::string BettiTable::render_diagram() const {
  std::ostringstream out;
  out << (convention_ == TableConvention::of_ideal ? "betti(I)" : "betti(S/I)")
      << " over " << field_.str() << ", rows i, columns j-i\n";
  if (entries_.empty()) {
    out << "  (zero table)\n";
    return out.str();
  }
  int dmin = 1 << 30, dmax = -(1 << 30);
  for (const auto& [key, v] : entries_) {
    dmin = std::min(dmin, key.second - key.first);
    dmax = std::max(dmax, key.second - key.first);
  }
  int imax = pd();
  out << "      ";
  for (int d = dmin; d <= dmax; ++d) out << pad_to("d=" + std::to_string(d), 7);
  out << pad_to("total", 8) << '\n';
  std::vector<long long> t = totals();
  for (int i = 0; i <= imax; ++i) {
    out << pad_to("i=" + std::to_string(i), 6);
    for (int d = dmin; d <= dmax; ++d) {
      long long v = entry(i, i + d);
      out << pad_to(v == 0 ? "." : std::to_string(v), 7);
    }
    out << pad_to(std::to_string(t[static_cast<std::size_t>(i)]), 8) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Reduced homology
// ---------------------------------------------------------------------------

namespace detail {

std::vector<long long> homology_dims_of_faces(const std::vector<std::uint64_t>& faces,
                                              const FieldSpec& field) {
  if (faces.empty()) return {};
  int top = -1;
  for (std::uint64_t f : faces) top = std::max(top, std::popcount(f) - 1);
  // levels[k+1] = sorted k-faces.
  std::vector<std::vector<std::uint64_t>> levels(static_cast<std::size_t>(top) + 2);
  for (std::uint64_t f : faces) levels[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& lv : levels) std::sort(lv.begin(), lv.end());

  auto index_of = [](const std::vector<std::uint64_t>& lv, std::uint64_t f) {
    return static_cast<std::size_t>(
        std::lower_bound(lv.begin(), lv.end(), f) - lv.begin());
  };

  // ranks[k] = rank of the boundary map from k-faces to (k-1)-faces.
  std::vector<int> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 0; k <= top; ++k) {
    const auto& rows_faces = levels[static_cast<std::size_t>(k + 1)];
    const auto& col_faces = levels[static_cast<std::size_t>(k)];
    if (rows_faces.empty() || col_faces.empty()) continue;
    if (field.is_gf2()) {
      std::vector<std::vector<std::uint64_t>> rows(rows_faces.size());
      const std::size_t words = (col_faces.size() + 63) / 64;
      for (std::size_t r = 0; r < rows_faces.size(); ++r) {
        rows[r].assign(words, 0);
        std::uint64_t f = rows_faces[r];
        std::uint64_t rest = f;
        while (rest) {
          std::uint64_t low = rest & (~rest + 1);
          rest &= rest - 1;
          std::size_t c = index_of(col_faces, f & ~low);
          rows[r][c / 64] ^= std::uint64_t{1} << (c % 64);
        }
      }
      ranks[static_cast<std::size_t>(k)] = rank_gf2(std::move(rows), static_cast<int>(col_faces.size()));
    } else {
      std::vector<std::vector<std::int64_t>> rows(rows_faces.size());
      for (std::size_t r = 0; r < rows_faces.size(); ++r) {
        rows[r].assign(col_faces.size(), 0);
        std::uint64_t f = rows_faces[r];
        int pos = 0;
        std::uint64_t rest = f;
        while (rest) {
          std::uint64_t low = rest & (~rest + 1);
          rest &= rest - 1;
          std::size_t c = index_of(col_faces, f & ~low);
          rows[r][c] = (pos % 2 == 0) ? 1 : -1;
          ++pos;
        }
      }
      ranks[static_cast<std::size_t>(k)] = field.is_rationals()
                                               ? rank_rationals(rows)
                                               : rank_gfp(std::move(rows), field.p);
    }
  }

  std::vector<long long> dims(static_cast<std::size_t>(top) + 2, 0);
  for (int k = -1; k <= top; ++k) {
    long long nk = static_cast<long long>(levels[static_cast<std::size_t>(k + 1)].size());
    long long boundary_in = (k + 1 <= top) ? ranks[static_cast<std::size_t>(k + 1)] : 0;
    long long boundary_out = (k >= 0) ? ranks[static_cast<std::size_t>(k)] : 0;
    dims[static_cast<std::size_t>(k + 1)] = nk - boundary_in - boundary_out;
  }
  return dims;
}

}  // namespace detail

std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const FieldSpec& field) {
  if (complex.is_void()) return {};
  return detail::homology_dims_of_faces(complex.all_faces(), field);
}

// ---------------------------------------------------------------------------
// Hochster route
// ---------------------------------------------------------------------------

namespace {

struct SupportIndex {
  std::vector<std::vector<std::uint64_t>> with_vertex;  // supports containing v
  std::vector<std::uint64_t> pair_nbr;                  // quadratic fast path
  bool all_pairs = true;

  explicit SupportIndex(const MonomialIdeal& ideal) {
    const int n = ideal.ambient_n();
    with_vertex.assign(static_cast<std::size_t>(n), {});
    pair_nbr.assign(static_cast<std::size_t>(n), 0);
    for (const Monomial& g : ideal.gens()) {
      std::uint64_t s = g.support_mask();
      if (std::popcount(s) != 2) all_pairs = false;
      std::uint64_t rest = s;
      while (rest) {
        int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        with_vertex[static_cast<std::size_t>(v - 1)].push_back(s);
        pair_nbr[static_cast<std::size_t>(v - 1)] |= s & ~vertex_bit(v);
      }
    }
  }

  // Is current ∪ {v} still free of generator supports, assuming current is?
  bool extends_face(std::uint64_t current, int v) const {
    if (all_pairs) return (pair_nbr[static_cast<std::size_t>(v - 1)] & current) == 0;
    std::uint64_t next = current | vertex_bit(v);
    for (std::uint64_t s : with_vertex[static_cast<std::size_t>(v - 1)])
      if ((s & ~next) == 0) return false;
    return true;
  }

  // Does v belong to some support fully inside w?
  bool covered_in(std::uint64_t w, int v) const {
    if (all_pairs) return (pair_nbr[static_cast<std::size_t>(v - 1)] & w) != 0;
    for (std::uint64_t s : with_vertex[static_cast<std::size_t>(v - 1)])
      if ((s & ~w) == 0) return true;
    return false;
  }
};

// Depth-first enumeration of the downward-closed face family inside `w`:
// a subset is a face iff it contains no generator support.
void collect_faces(std::uint64_t current, std::uint64_t candidates, const SupportIndex& index,
                   std::vector<std::uint64_t>& out) {
  out.push_back(current);
  std::uint64_t rest = candidates;
  while (rest) {
    std::uint64_t low = rest & (~rest + 1);
    int v = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    if (index.extends_face(current, v)) collect_faces(current | low, rest, index, out);
  }
}

}  // namespace

BettiTable graded_betti_hochster(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("Hochster route requires a squarefree ideal; found non-squarefree generator");
  const int n = ideal.ambient_n();
  if (n > 30) throw CapExceededError("Hochster subset enumeration capped at 30 variables");
  SupportIndex index(ideal);

  BettiTable table(TableConvention::of_quotient, field);
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t w = 0;; ++w) {
    // Cone pruning: a vertex of w lying in no generator support inside w is
    // a cone point of the induced subcomplex, killing all reduced homology.
    bool cone = false;
    std::uint64_t rest = w;
    while (rest && !cone) {
      int v = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      if (!index.covered_in(w, v)) cone = true;
    }
    if (!cone) {
      std::vector<std::uint64_t> faces;
      collect_faces(0, w, index, faces);
      std::vector<long long> dims = detail::homology_dims_of_faces(faces, field);
      const int j = std::popcount(w);
      for (int k = -1; k + 1 < static_cast<int>(dims.size()); ++k) {
        long long h = dims[static_cast<std::size_t>(k + 1)];
        if (h != 0) table.add(j - k - 1, j, h);
      }
    }
    if (w == full) break;
  }
  return table;
}

// ---------------------------------------------------------------------------
// Upper Koszul route
// ---------------------------------------------------------------------------

BettiTable graded_betti_koszul(const MonomialIdeal& ideal, const FieldSpec& field) {
  BettiTable table(TableConvention::of_ideal, field);
  if (!ideal.is_zero()) {
    if (ideal.gens().size() > 20)
      throw CapExceededError("Koszul multidegree enumeration capped at 20 generators");
    // Candidate multidegrees: lcms of nonempty generator subsets.
    std::set<Monomial> degrees;
    for (const Monomial& g : ideal.gens()) {
      std::vector<Monomial> fresh;
      fresh.push_back(g);
      for (const Monomial& d : degrees) fresh.push_back(mono_lcm(d, g));
      degrees.insert(fresh.begin(), fresh.end());
    }
    for (const Monomial& a : degrees) {
      const std::uint64_t supp = a.support_mask();
      // Faces of the upper Koszul complex in multidegree a: squarefree
      // subsets u of supp(a) with x^a / x^u still inside the ideal. The
      // family is downward closed.
      std::vector<std::uint64_t> faces;
      std::uint64_t sub = supp;
      for (;;) {
        bool face = ideal.contains(a.erase_one_of_each(sub));
        if (face) faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & supp;
      }
      if (faces.empty()) continue;
      std::sort(faces.begin(), faces.end());
      std::vector<long long> dims = detail::homology_dims_of_faces(faces, field);
      for (int k = -1; k + 1 < static_cast<int>(dims.size()); ++k) {
        long long h = dims[static_cast<std::size_t>(k + 1)];
        if (h != 0) table.add(k + 1, a.degree(), h);
      }
    }
  }
  return table.as_quotient();
}

// ---------------------------------------------------------------------------
// Invariant reports
// ---------------------------------------------------------------------------

InvariantReport invariants_from_table(const Graph& g, const BettiTable& quotient_table) {
  if (quotient_table.convention() != TableConvention::of_quotient)
    throw std::invalid_argument("invariants_from_table expects a quotient table");
  InvariantReport r;
  r.n = g.vertex_count();
  r.field = quotient_table.field();
  r.pd_quotient = std::max(0, quotient_table.pd());
  r.reg_quotient = std::max(0, quotient_table.reg());
  const bool zero_ideal = g.edge_count() == 0;
  r.pd_ideal = zero_ideal ? 0 : r.pd_quotient - 1;
  r.reg_ideal = zero_ideal ? 0 : r.reg_quotient + 1;
  r.depth = r.n - r.pd_quotient;
  r.dim = r.n - min_vertex_cover(g);
  r.bight = bight(g);
  r.nu = induced_matching_number(g);
  if (r.depth + r.pd_quotient != r.n)
    throw InternalError("Auslander-Buchsbaum bookkeeping violated");
  return r;
}

InvariantReport invariants(const Graph& g, const FieldSpec& field, int betti_cap) {
  if (g.vertex_count() > betti_cap)
    throw CapExceededError("Betti computation capped at " + std::to_string(betti_cap) +
                           " vertices (requested " + std::to_string(g.vertex_count()) + ")");
  return invariants_from_table(g, graded_betti_hochster(edge_ideal(g), field));
}

std::string render(const InvariantReport& r) {
  std::ostringstream out;
  out << "n           " << r.n << '\n'
      << "field       " << r.field.str() << '\n'
      << "pd(S/I)     " << r.pd_quotient << '\n'
      << "pd(I)       " << r.pd_ideal << '\n'
      << "reg(I)      " << r.reg_ideal << '\n'
      << "reg(S/I)    " << r.reg_quotient << '\n'
      << "depth(S/I)  " << r.depth << '\n'
      << "dim(S/I)    " << r.dim << '\n'
      << "bight       " << r.bight << '\n'
      << "nu          " << r.nu << '\n';
  return out.str();
}

}  // namespace splitgraph
