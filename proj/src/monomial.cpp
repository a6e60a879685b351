#include "splitgraph/monomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "splitgraph/errors.hpp"

namespace splitgraph {

Monomial Monomial::from_pairs(std::vector<std::pair<int, int>> index_exponent) {
  std::sort(index_exponent.begin(), index_exponent.end());
  for (std::size_t i = 0; i < index_exponent.size(); ++i) {
    auto [idx, exp] = index_exponent[i];
    if (idx < 1) throw std::invalid_argument("variable index must be >= 1");
    if (exp < 1) throw std::invalid_argument("exponent must be >= 1");
    if (i > 0 && index_exponent[i - 1].first == idx)
      throw std::invalid_argument("repeated variable index " + std::to_string(idx));
  }
  Monomial m;
  m.terms_ = std::move(index_exponent);
  return m;
}

Monomial Monomial::variable(int index) { return from_pairs({{index, 1}}); }

Monomial Monomial::from_support(std::uint64_t mask) {
  std::vector<std::pair<int, int>> terms;
  while (mask) {
    int v = std::countr_zero(mask) + 1;
    mask &= mask - 1;
    terms.emplace_back(v, 1);
  }
  return from_pairs(std::move(terms));
}

Monomial Monomial::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "1") return Monomial();
  std::vector<std::pair<int, int>> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'x') throw ParseError("monomial '" + text + "': expected 'x' at position " + std::to_string(pos));
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("monomial '" + text + "': missing variable index");
    int idx = std::stoi(s.substr(start, pos - start));
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw ParseError("monomial '" + text + "': missing exponent");
      exp = std::stoi(s.substr(start, pos - start));
    }
    terms.emplace_back(idx, exp);
    if (pos < s.size()) {
      if (s[pos] != '*') throw ParseError("monomial '" + text + "': expected '*' between factors");
      ++pos;
      if (pos == s.size()) throw ParseError("monomial '" + text + "': trailing '*'");
    }
  }
  return from_pairs(std::move(terms));
}

std::string Monomial::str() const {
  if (terms_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (auto [idx, exp] : terms_) {
    if (!first) out << '*';
    first = false;
    out << 'x' << idx;
    if (exp != 1) out << '^' << exp;
  }
  return out.str();
}

int Monomial::degree() const {
  int d = 0;
  for (auto [idx, exp] : terms_) d += exp;
  return d;
}

bool Monomial::is_squarefree() const {
  for (auto [idx, exp] : terms_)
    if (exp > 1) return false;
  return true;
}

int Monomial::max_index() const { return terms_.empty() ? 0 : terms_.back().first; }

int Monomial::exponent(int index) const {
  for (auto [idx, exp] : terms_)
    if (idx == index) return exp;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  for (auto [idx, exp] : terms_)
    if (other.exponent(idx) < exp) return false;
  return true;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t m = 0;
  for (auto [idx, exp] : terms_) {
    if (idx > 64) throw std::invalid_argument("variable index beyond 64 has no support mask");
    m |= vertex_bit(idx);
  }
  return m;
}

Monomial Monomial::erase_one_of_each(std::uint64_t mask) const {
  std::vector<std::pair<int, int>> terms;
  std::uint64_t left = mask;
  for (auto [idx, exp] : terms_) {
    if (idx <= 64 && (mask & vertex_bit(idx))) {
      left &= ~vertex_bit(idx);
      if (exp > 1) terms.emplace_back(idx, exp - 1);
    } else {
      terms.emplace_back(idx, exp);
    }
  }
  if (left) throw std::invalid_argument("erase_one_of_each: a variable in the mask does not occur");
  Monomial m;
  m.terms_ = std::move(terms);
  return m;
}

std::vector<int> Monomial::expanded_indices() const {
  std::vector<int> out;
  for (auto [idx, exp] : terms_)
    for (int k = 0; k < exp; ++k) out.push_back(idx);
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<int, int>> terms;
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) {
      terms.push_back(ta[i++]);
    } else if (i == ta.size() || tb[j].first < ta[i].first) {
      terms.push_back(tb[j++]);
    } else {
      terms.emplace_back(ta[i].first, std::max(ta[i].second, tb[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial::from_pairs(std::move(terms));
}

Monomial stretch(const Monomial& u, int t) {
  if (t < 1) throw std::invalid_argument("stretch exponent t must be >= 1");
  std::vector<int> idx = u.expanded_indices();
  std::vector<std::pair<int, int>> terms;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    long long shifted = idx[k] + static_cast<long long>(t) * static_cast<long long>(k);
    if (shifted > 1'000'000'000)
      throw std::invalid_argument("stretched index overflows the supported range");
    // Consecutive shifted indices are strictly increasing, so the result is
    // squarefree and already sorted.
    terms.emplace_back(static_cast<int>(shifted), 1);
  }
  return Monomial::from_pairs(std::move(terms));
}

MonomialIdeal::MonomialIdeal(int ambient_n, std::vector<Monomial> gens) {
  if (ambient_n < 0) throw std::invalid_argument("ambient variable count must be >= 0");
  for (const Monomial& g : gens) {
    if (g.is_unit()) throw std::invalid_argument("the unit monomial cannot generate a proper ideal");
    if (g.max_index() > ambient_n)
      throw std::invalid_argument("generator " + g.str() + " uses a variable beyond ambient x" +
                                  std::to_string(ambient_n));
  }
  ambient_n_ = ambient_n;
  gens_ = minimal_generators(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  for (const Monomial& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    gens.push_back(Monomial::from_pairs({{e.u, 1}, {e.v, 1}}));
  return MonomialIdeal(g.vertex_count(), std::move(gens));
}

MonomialIdeal stretch_ideal(const MonomialIdeal& ideal, int t) {
  if (t < 1) throw std::invalid_argument("stretch exponent t must be >= 1");
  if (ideal.is_zero()) return ideal;
  std::vector<Monomial> gens;
  int r = 0;
  for (const Monomial& g : ideal.gens()) {
    Monomial s = stretch(g, t);
    r = std::max(r, s.max_index());
    gens.push_back(std::move(s));
  }
  return MonomialIdeal(r, std::move(gens));
}

MonomialIdeal colon_by_linear_difference(const Graph& g, int x, int y) {
  const int n = g.vertex_count();
  if (x < 1 || x > n || y < 1 || y > n || x == y)
    throw std::invalid_argument("colon_by_linear_difference: x and y must be distinct vertices");
  if (g.closed_neighbor_mask(x) & g.closed_neighbor_mask(y))
    throw std::invalid_argument(
        "colon_by_linear_difference: closed neighborhoods of x and y intersect");
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges()) gens.push_back(Monomial::from_pairs({{e.u, 1}, {e.v, 1}}));
  for (int z : g.neighbors(x))
    for (int w : g.neighbors(y)) gens.push_back(Monomial::from_pairs({{std::min(z, w), 1}, {std::max(z, w), 1}}));
  return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("Stanley-Reisner complex requires a squarefree ideal");
  const int n = ideal.ambient_n();
  if (n > 24) throw CapExceededError("Stanley-Reisner facet enumeration capped at 24 variables");
  std::vector<std::uint64_t> supports;
  for (const Monomial& g : ideal.gens()) supports.push_back(g.support_mask());
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  // A subset is a face iff it contains no generator support; collect the
  // maximal ones by scanning all subsets.
  std::vector<bool> face(static_cast<std::size_t>(full) + 1, false);
  std::vector<std::uint64_t> facets;
  for (std::uint64_t w = 0;; ++w) {
    bool ok = true;
    for (std::uint64_t s : supports)
      if ((s & ~w) == 0) {
        ok = false;
        break;
      }
    face[static_cast<std::size_t>(w)] = ok;
    if (w == full) break;
  }
  for (std::uint64_t w = 0;; ++w) {
    if (face[static_cast<std::size_t>(w)]) {
      bool maximal = true;
      for (int v = 1; v <= n && maximal; ++v)
        if (!(w & vertex_bit(v)) && face[static_cast<std::size_t>(w | vertex_bit(v))]) maximal = false;
      if (maximal) facets.push_back(w);
    }
    if (w == full) break;
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace splitgraph
