#ifndef SPLITGRAPH_FIELD_HPP
#define SPLITGRAPH_FIELD_HPP

#include <compare>
#include <string>

namespace splitgraph {

// Coefficient field for homological computations: the rationals or GF(p).
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::prime;
  long long p = 2;

  static FieldSpec gf(long long p);
  static FieldSpec rationals();
  static FieldSpec parse(const std::string& text);  // "gf2", "q", "gfp:7"

  bool is_rationals() const { return kind == Kind::rationals; }
  bool is_gf2() const { return kind == Kind::prime && p == 2; }
  std::string str() const;

  auto operator<=>(const FieldSpec&) const = default;
};

}  // namespace splitgraph

#endif
