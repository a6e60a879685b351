#include "splitgraph/field.hpp"

#include <stdexcept>

#include "splitgraph/errors.hpp"

namespace splitgraph {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::gf(long long p) {
  if (!is_prime(p) || p >= (1ll << 31))
    throw std::invalid_argument("GF(p) requires a prime p below 2^31");
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

FieldSpec FieldSpec::rationals() {
  FieldSpec f;
  f.kind = Kind::rationals;
  f.p = 0;
  return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "gf2") return gf(2);
  if (text.rfind("gfp:", 0) == 0) {
    try {
      return gf(std::stoll(text.substr(4)));
    } catch (const std::invalid_argument&) {
      throw ParseError("field '" + text + "': not a valid prime");
    } catch (const std::out_of_range&) {
      throw ParseError("field '" + text + "': prime out of range");
    }
  }
  throw ParseError("unknown field '" + text + "' (expected gf2, q, or gfp:<p>)");
}

std::string FieldSpec::str() const {
  if (kind == Kind::rationals) return "q";
  if (p == 2) return "gf2";
  return "gfp:" + std::to_string(p);
}

}  // namespace splitgraph
