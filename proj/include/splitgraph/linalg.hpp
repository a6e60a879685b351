#ifndef SPLITGRAPH_LINALG_HPP
#define SPLITGRAPH_LINALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "splitgraph/field.hpp"

namespace splitgraph {

// Signed arbitrary-precision integer, just big enough for fraction-free
// elimination: addition, subtraction, multiplication and exact division.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors integer use

  bool is_zero() const { return mag_.empty(); }
  int sign() const { return sign_; }
  BigInt operator-() const;
  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Exact quotient; throws InternalError if the division leaves a remainder.
  friend BigInt div_exact(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b);
  std::string str() const;

 private:
  int sign_ = 0;                     // -1, 0, +1
  std::vector<std::uint32_t> mag_;   // little-endian base 2^32, no leading zeros

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void trim();
};

// Exact matrix ranks. Rows are dense integer vectors; entries are expected
// to be small (boundary matrices have entries in {-1,0,1}).
int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int ncols);
int rank_gfp(std::vector<std::vector<std::int64_t>> rows, long long p);
// Fraction-free elimination over the integers; falls back to BigInt
// arithmetic when 128-bit intermediates would overflow.
int rank_rationals(const std::vector<std::vector<std::int64_t>>& rows);
// The same elimination forced through BigInt arithmetic; reference route.
int rank_rationals_bigint(const std::vector<std::vector<std::int64_t>>& rows);
// Dispatch on the field; for GF(2) the rows are packed into bitsets.
int rank_over(const std::vector<std::vector<std::int64_t>>& rows, const FieldSpec& field);

}  // namespace splitgraph

#endif
