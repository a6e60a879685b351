#include "splitgraph/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "splitgraph/errors.hpp"

namespace splitgraph {

// ---------------------------------------------------------------------------
// BigInt
// ---------------------------------------------------------------------------

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                               : ~static_cast<unsigned long long>(v) + 1ull;
  while (u) {
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffull));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
    carry = s >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += 0x100000000ll;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(d));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = a.sign_;
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      r.sign_ = b.sign_;
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
  for (std::size_t i = 0; i < a.mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.mag_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                          r.mag_[i + j] + carry;
      r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + b.mag_.size();
    while (carry) {
      std::uint64_t cur = r.mag_[k] + carry;
      r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

// Exact division via word-wise Jebelean quotient recovery: after shifting
// out common trailing zero bits, the divisor's low word is odd and hence
// invertible mod 2^32, so quotient words can be peeled from the bottom.
BigInt div_exact(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw InternalError("div_exact by zero");
  if (a.is_zero()) return BigInt();

  auto count_trailing_zero_bits = [](const std::vector<std::uint32_t>& m) {
    int bits = 0;
    for (std::uint32_t w : m) {
      if (w == 0) {
        bits += 32;
      } else {
        bits += std::countr_zero(w);
        break;
      }
    }
    return bits;
  };
  auto shift_right = [](std::vector<std::uint32_t> m, int bits) {
    int words = bits / 32, rem = bits % 32;
    if (words) m.erase(m.begin(), m.begin() + words);
    if (rem) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] >>= rem;
        if (i + 1 < m.size()) m[i] |= m[i + 1] << (32 - rem);
      }
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
  };

  int bshift = count_trailing_zero_bits(b.mag_);
  int ashift = count_trailing_zero_bits(a.mag_);
  if (ashift < bshift) throw InternalError("div_exact: division is not exact (2-adic valuation)");
  std::vector<std::uint32_t> d = shift_right(b.mag_, bshift);
  std::vector<std::uint32_t> r = shift_right(a.mag_, bshift);
  if (BigInt::cmp_mag(r, d) < 0) throw InternalError("div_exact: division is not exact (magnitude)");

  // Inverse of d[0] mod 2^32 by Newton iteration; d[0] is odd here.
  std::uint32_t inv = d[0];
  for (int it = 0; it < 5; ++it) inv *= 2u - d[0] * inv;

  std::size_t qlen = r.size() - d.size() + 1;
  std::vector<std::uint32_t> q(qlen, 0);
  for (std::size_t k = 0; k < qlen; ++k) {
    std::uint32_t qk = r[k] * inv;
    q[k] = qk;
    // r -= (d * qk) << (32*k); afterwards r[k] == 0 when the division is exact.
    std::uint64_t borrow = 0, carry = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::uint64_t prod = static_cast<std::uint64_t>(d[i]) * qk + carry;
      carry = prod >> 32;
      std::uint64_t sub = (prod & 0xffffffffull) + borrow;
      std::uint64_t cur = r[k + i];
      if (cur < sub) {
        r[k + i] = static_cast<std::uint32_t>(cur + 0x100000000ull - sub);
        borrow = 1;
      } else {
        r[k + i] = static_cast<std::uint32_t>(cur - sub);
        borrow = 0;
      }
    }
    std::uint64_t rem = carry + borrow;
    std::size_t pos = k + d.size();
    while (rem) {
      if (pos >= r.size()) throw InternalError("div_exact: division is not exact");
      std::uint64_t cur = r[pos];
      if (cur < rem) {
        r[pos] = static_cast<std::uint32_t>(cur + 0x100000000ull - rem);
        rem = 1;
      } else {
        r[pos] = static_cast<std::uint32_t>(cur - rem);
        rem = 0;
      }
      ++pos;
    }
  }
  for (std::uint32_t w : r)
    if (w != 0) throw InternalError("div_exact: nonzero remainder");

  BigInt out;
  out.mag_ = std::move(q);
  out.sign_ = a.sign_ * b.sign_;
  out.trim();
  return out;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::string BigInt::str() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<std::uint32_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + rem));
    while (!m.empty() && m.back() == 0) m.pop_back();
  }
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// ---------------------------------------------------------------------------
// Ranks
// ---------------------------------------------------------------------------

int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int ncols) {
  const std::size_t words = (static_cast<std::size_t>(ncols) + 63) / 64;
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < static_cast<std::size_t>(ncols) && row < rows.size(); ++col) {
    std::size_t w = col / 64;
    std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = row;
    while (pivot < rows.size() && (w >= rows[pivot].size() || !(rows[pivot][w] & bit))) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    rows[row].resize(words, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row) continue;
      if (w < rows[i].size() && (rows[i][w] & bit)) {
        rows[i].resize(words, 0);
        for (std::size_t k = 0; k < words; ++k) rows[i][k] ^= rows[row][k];
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

long long mod_pow(long long base, long long exp, long long p) {
  long long result = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) result = static_cast<long long>((__int128)result * base % p);
    base = static_cast<long long>((__int128)base * base % p);
    exp >>= 1;
  }
  return result;
}

}  // namespace

int rank_gfp(std::vector<std::vector<std::int64_t>> rows, long long p) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (auto& r : rows)
    for (auto& x : r) {
      x %= p;
      if (x < 0) x += p;
    }
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    long long inv = mod_pow(rows[row][col], p - 2, p);
    for (std::size_t j = col; j < ncols; ++j)
      rows[row][j] = static_cast<long long>((__int128)rows[row][j] * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row || rows[i][col] == 0) continue;
      long long f = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j) {
        rows[i][j] = (rows[i][j] - (__int128)f * rows[row][j]) % p;
        if (rows[i][j] < 0) rows[i][j] += p;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

struct Int128Overflow {};

// Fraction-free (Bareiss) elimination rank over a template integer type.
template <typename T>
struct BareissOps;

template <>
struct BareissOps<__int128> {
  static __int128 mul(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Int128Overflow{};
    return r;
  }
  static __int128 sub(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw Int128Overflow{};
    return r;
  }
  static __int128 div(__int128 a, __int128 b) { return a / b; }
  static bool zero(__int128 a) { return a == 0; }
};

template <>
struct BareissOps<BigInt> {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt div(const BigInt& a, const BigInt& b) { return div_exact(a, b); }
  static bool zero(const BigInt& a) { return a.is_zero(); }
};

template <typename T>
int bareiss_rank(std::vector<std::vector<T>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t nr = m.size(), nc = m[0].size();
  using Ops = BareissOps<T>;
  T prev = T(1);
  std::size_t k = 0;
  for (;; ++k) {
    // Find a pivot in the remaining submatrix.
    std::size_t pr = nr, pc = nc;
    for (std::size_t i = k; i < nr && pr == nr; ++i)
      for (std::size_t j = k; j < nc; ++j)
        if (!Ops::zero(m[i][j])) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == nr) break;
    std::swap(m[k], m[pr]);
    if (pc != k)
      for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][k], m[i][pc]);
    for (std::size_t i = k + 1; i < nr; ++i) {
      for (std::size_t j = k + 1; j < nc; ++j)
        m[i][j] = Ops::div(Ops::sub(Ops::mul(m[k][k], m[i][j]), Ops::mul(m[i][k], m[k][j])), prev);
      m[i][k] = T(0);
    }
    prev = m[k][k];
    if (k + 1 >= nr || k + 1 >= nc) {
      ++k;
      break;
    }
  }
  return static_cast<int>(k);
}

}  // namespace

int rank_rationals(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  try {
    std::vector<std::vector<__int128>> m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      m[i].assign(rows[i].begin(), rows[i].end());
    return bareiss_rank(std::move(m));
  } catch (const Int128Overflow&) {
    return rank_rationals_bigint(rows);
  }
}

int rank_rationals_bigint(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  std::vector<std::vector<BigInt>> m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m[i].reserve(rows[i].size());
    for (std::int64_t x : rows[i]) m[i].emplace_back(x);
  }
  return bareiss_rank(std::move(m));
}

int rank_over(const std::vector<std::vector<std::int64_t>>& rows, const FieldSpec& field) {
  if (rows.empty() || rows[0].empty()) return 0;
  if (field.is_rationals()) return rank_rationals(rows);
  if (field.is_gf2()) {
    const std::size_t ncols = rows[0].size();
    std::vector<std::vector<std::uint64_t>> packed(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      packed[i].assign((ncols + 63) / 64, 0);
      for (std::size_t j = 0; j < ncols; ++j)
        if (rows[i][j] & 1) packed[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return rank_gf2(std::move(packed), static_cast<int>(ncols));
  }
  return rank_gfp(rows, field.p);
}

}  // namespace splitgraph
