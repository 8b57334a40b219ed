#pragma once

// Exact arithmetic in GF(2^m), m <= 24, in a polynomial basis.

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/errors.hpp"

namespace qtwist {

inline constexpr int kMaxFieldDegree = 24;

namespace gf2x {

// Polynomials over GF(2) packed into machine words, bit i = coefficient of x^i.

inline int degree(std::uint64_t f) { return f == 0 ? -1 : 63 - std::countl_zero(f); }

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t f) {
  const int df = degree(f);
  for (int d = degree(a); d >= df; d = degree(a)) a ^= f << (d - df);
  return a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  return mod(clmul(a, b), f);
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

/// Rabin's test: f of degree m is irreducible iff x^(2^m) = x mod f and
/// gcd(x^(2^(m/p)) - x, f) = 1 for every prime p | m.
inline bool is_irreducible(std::uint64_t f) {
  const int m = degree(f);
  if (m < 1) return false;
  if (m == 1) return true;
  std::vector<std::uint64_t> frob(static_cast<std::size_t>(m) + 1);
  frob[0] = mod(2, f);  // x mod f
  for (int i = 1; i <= m; ++i) frob[i] = mulmod(frob[i - 1], frob[i - 1], f);
  if (frob[m] != mod(2, f)) return false;
  int rest = m;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (gcd(f, frob[m / p] ^ mod(2, f)) != 1) return false;
  }
  return true;
}

inline std::uint64_t smallest_irreducible(int m) {
  for (std::uint64_t f = std::uint64_t{1} << m; f < (std::uint64_t{2} << m); ++f)
    if (is_irreducible(f)) return f;
  throw ConsistencyError("no irreducible polynomial of degree " + std::to_string(m));
}

}  // namespace gf2x

class FieldCtx;

/// Element of GF(2^m). Holds a non-owning pointer to its context; contexts
/// come from the process-wide registry and live until exit.
struct FieldElt {
  const FieldCtx* ctx = nullptr;
  std::uint32_t bits = 0;

  bool is_zero() const { return bits == 0; }
  bool is_one() const { return bits == 1; }
  friend bool operator==(const FieldElt& a, const FieldElt& b) {
    return a.ctx == b.ctx && a.bits == b.bits;
  }
  friend auto operator<=>(const FieldElt& a, const FieldElt& b) { return a.bits <=> b.bits; }
};

class FieldCtx {
 public:
  FieldCtx(int m, std::uint64_t modulus) : m_(m), modulus_(modulus) {
    require(m >= 1 && m <= kMaxFieldDegree,
            "field degree must be in [1, " + std::to_string(kMaxFieldDegree) + "], got " +
                std::to_string(m));
    require(gf2x::degree(modulus) == m, "modulus degree does not match m");
    require(gf2x::is_irreducible(modulus), "modulus is not irreducible over GF(2)");
    for (int i = 0; i < m; ++i) {
      // trace(x^i) via the defining sum; trace is GF(2)-linear so the mask
      // determines it everywhere
      std::uint32_t a = 1U << i, acc = 0;
      for (int k = 0; k < m; ++k) {
        acc ^= a;
        a = sqr_raw(a);
      }
      if (acc == 1) trace_mask_ |= 1U << i;
      else if (acc != 0) throw ConsistencyError("trace left GF(2)");
    }
    build_wp_solver();
  }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  int degree() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << m_; }

  FieldElt zero() const { return {this, 0}; }
  FieldElt one() const { return {this, 1}; }
  FieldElt elt(std::uint64_t bits) const {
    require(bits < size(), "element bits exceed field size");
    return {this, static_cast<std::uint32_t>(bits)};
  }
  /// The class of x in GF(2)[x]/(modulus); a generator only when primitive.
  FieldElt gen() const { return {this, static_cast<std::uint32_t>(gf2x::mod(2, modulus_))}; }

  // Raw kernels on bit vectors, used by the enumeration loops.
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(gf2x::mulmod(a, b, modulus_));
  }
  std::uint32_t sqr_raw(std::uint32_t a) const { return mul_raw(a, a); }
  int trace_raw(std::uint32_t a) const { return std::popcount(a & trace_mask_) & 1; }
  std::uint32_t trace_mask() const { return trace_mask_; }

  /// One solution of z^2 + z = a, or nullopt when trace(a) = 1.
  std::optional<std::uint32_t> solve_wp_raw(std::uint32_t a) const {
    std::uint32_t z = 0;
    for (int b = m_ - 1; b >= 0; --b) {
      if (((a >> b) & 1U) == 0) continue;
      if (wp_rows_[b].image == 0) return std::nullopt;
      a ^= wp_rows_[b].image;
      z ^= wp_rows_[b].preimage;
    }
    if (a != 0) return std::nullopt;
    return z & ~1U;  // canonical representative: the solution with bit 0 clear
  }

  std::string describe() const {
    std::ostringstream os;
    os << m_ << ":" << std::hex << modulus_;
    return os.str();
  }

 private:
  struct WpRow {
    std::uint32_t image = 0;
    std::uint32_t preimage = 0;
  };

  // Row-reduce the images of the basis vectors under z -> z^2 + z, keyed by
  // leading bit, tracking preimages. Solving is then one elimination pass.
  void build_wp_solver() {
    for (int i = 0; i < m_; ++i) {
      std::uint32_t pre = 1U << i;
      std::uint32_t img = sqr_raw(pre) ^ pre;
      while (img != 0) {
        const int hb = 31 - std::countl_zero(img);
        if (wp_rows_[hb].image == 0) {
          wp_rows_[hb] = {img, pre};
          break;
        }
        img ^= wp_rows_[hb].image;
        pre ^= wp_rows_[hb].preimage;
      }
    }
  }

  int m_;
  std::uint64_t modulus_;
  std::uint32_t trace_mask_ = 0;
  std::array<WpRow, kMaxFieldDegree> wp_rows_{};
};

/// Registry lookup. With no modulus the default (numerically smallest
/// irreducible of degree m) is used. Equal (m, modulus) pairs share a context,
/// so context identity is pointer identity.
inline const FieldCtx& field(int m, std::optional<std::uint64_t> modulus = std::nullopt) {
  static std::mutex mu;
  static std::map<std::pair<int, std::uint64_t>, std::unique_ptr<FieldCtx>> registry;
  static std::map<int, std::uint64_t> defaults;
  require(m >= 1 && m <= kMaxFieldDegree,
          "field degree must be in [1, " + std::to_string(kMaxFieldDegree) + "], got " +
              std::to_string(m));
  std::lock_guard<std::mutex> lock(mu);
  std::uint64_t f;
  if (modulus) {
    f = *modulus;
  } else {
    auto it = defaults.find(m);
    if (it == defaults.end()) it = defaults.emplace(m, gf2x::smallest_irreducible(m)).first;
    f = it->second;
  }
  auto& slot = registry[{m, f}];
  if (!slot) slot = std::make_unique<FieldCtx>(m, f);
  return *slot;
}

inline void same_field(const FieldElt& a, const FieldElt& b) {
  if (a.ctx != b.ctx) throw PreconditionError("field context mismatch");
}

inline FieldElt operator+(const FieldElt& a, const FieldElt& b) {
  same_field(a, b);
  return {a.ctx, a.bits ^ b.bits};
}
inline FieldElt operator-(const FieldElt& a, const FieldElt& b) { return a + b; }
inline FieldElt operator-(const FieldElt& a) { return a; }
inline FieldElt operator*(const FieldElt& a, const FieldElt& b) {
  same_field(a, b);
  return {a.ctx, a.ctx->mul_raw(a.bits, b.bits)};
}
inline FieldElt& operator+=(FieldElt& a, const FieldElt& b) { return a = a + b; }
inline FieldElt& operator-=(FieldElt& a, const FieldElt& b) { return a = a + b; }
inline FieldElt& operator*=(FieldElt& a, const FieldElt& b) { return a = a * b; }

/// Multiplication by an integer: the image of k in GF(2).
inline FieldElt times(const FieldElt& a, long k) { return (k % 2 != 0) ? a : a.ctx->zero(); }

inline FieldElt pow(FieldElt a, std::uint64_t k) {
  FieldElt r = a.ctx->one();
  while (k != 0) {
    if (k & 1U) r *= a;
    a *= a;
    k >>= 1;
  }
  return r;
}

inline FieldElt inv(const FieldElt& a) {
  if (a.is_zero()) throw PreconditionError("inverse of zero");
  return pow(a, a.ctx->size() - 2);
}

inline FieldElt operator/(const FieldElt& a, const FieldElt& b) { return a * inv(b); }

/// a^(2^k)
inline FieldElt frobenius(FieldElt a, int k = 1) {
  for (int i = 0; i < k; ++i) a = a * a;
  return a;
}

/// Absolute trace to GF(2), as 0 or 1.
inline int trace_abs(const FieldElt& a) { return a.ctx->trace_raw(a.bits); }

/// Trace from the subfield GF(2^k) to GF(2), evaluated inside the big field
/// as a + a^2 + ... + a^(2^(k-1)). The result lies in {0, 1}.
inline FieldElt power_sum_trace(const FieldElt& a, int k) {
  const int m = a.ctx->degree();
  require(k >= 1 && m % k == 0, "subfield degree must divide the field degree");
  require(frobenius(a, k) == a, "element does not lie in the subfield GF(2^k)");
  FieldElt acc = a.ctx->zero(), p = a;
  for (int i = 0; i < k; ++i) {
    acc += p;
    p = p * p;
  }
  ensure(acc.bits <= 1, "subfield trace left GF(2)");
  return acc;
}

/// Both solutions of z^2 + z = a (they differ by 1), or nullopt when the
/// absolute trace of a is 1. The first entry has bit 0 clear.
inline std::optional<std::pair<FieldElt, FieldElt>> solve_wp(const FieldElt& a) {
  auto z = a.ctx->solve_wp_raw(a.bits);
  if (!z) return std::nullopt;
  return std::pair{FieldElt{a.ctx, *z}, FieldElt{a.ctx, *z ^ 1U}};
}

/// The unique square root, a^(2^(m-1)).
inline FieldElt sqrt_elt(const FieldElt& a) { return frobenius(a, a.ctx->degree() - 1); }

inline std::string to_hex(const FieldElt& a) {
  std::ostringstream os;
  os << std::hex << a.bits;
  return os.str();
}

inline std::uint64_t parse_hex(const std::string& s) {
  std::string body = s;
  if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
  if (body.empty()) throw ParseError("empty hex value");
  std::uint64_t v = 0;
  for (char ch : body) {
    int d;
    if (ch >= '0' && ch <= '9') d = ch - '0';
    else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
    else throw ParseError("bad hex digit in '" + s + "'");
    if (v >> 58) throw ParseError("hex value too large: '" + s + "'");
    v = v * 16 + static_cast<std::uint64_t>(d);
  }
  return v;
}

inline FieldElt parse_elt(const FieldCtx& F, const std::string& s) {
  const auto v = parse_hex(s);
  if (v >= F.size()) throw ParseError("element '" + s + "' does not fit in GF(2^" +
                                      std::to_string(F.degree()) + ")");
  return F.elt(v);
}

/// "m" or "m:modulus-hex".
inline const FieldCtx& parse_field_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  int m = 0;
  try {
    std::size_t used = 0;
    m = std::stoi(head, &used);
    if (used != head.size()) throw ParseError("bad field degree '" + head + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad field spec '" + spec + "'");
  }
  if (m < 1 || m > kMaxFieldDegree)
    throw PreconditionError("field degree must be in [1, " + std::to_string(kMaxFieldDegree) +
                            "], got " + std::to_string(m));
  if (colon == std::string::npos) return field(m);
  const auto f = parse_hex(spec.substr(colon + 1));
  if (gf2x::degree(f) != m) throw ParseError("modulus degree does not match m in '" + spec + "'");
  if (!gf2x::is_irreducible(f)) throw PreconditionError("modulus in '" + spec + "' is reducible");
  return field(m, f);
}

/// Field homomorphism GF(2^k) -> GF(2^M) for k | M, sending the class of x
/// to the smallest (by bit pattern) root of the source modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(const FieldCtx& from, const FieldCtx& to) : from_(&from), to_(&to) {
    require(to.degree() % from.degree() == 0, "target field does not contain the source field");
    if (&from == &to) {
      identity_ = true;
      return;
    }
    const auto f = from.modulus();
    const int k = from.degree();
    for (std::uint64_t z = 0; z < to.size(); ++z) {
      // Horner evaluation of the source modulus at z
      std::uint32_t acc = 0;
      for (int i = k; i >= 0; --i) {
        acc = to.mul_raw(acc, static_cast<std::uint32_t>(z));
        if ((f >> i) & 1U) acc ^= 1U;
      }
      if (acc == 0) {
        root_ = static_cast<std::uint32_t>(z);
        break;
      }
    }
    ensure(k == 1 || root_ != 0 || (f & 1U) == 0, "no root of the source modulus found");
    powers_.resize(static_cast<std::size_t>(k));
    std::uint32_t p = 1;
    for (int i = 0; i < k; ++i) {
      powers_[i] = p;
      p = to.mul_raw(p, root_);
    }
  }

  const FieldCtx& source() const { return *from_; }
  const FieldCtx& target() const { return *to_; }

  FieldElt operator()(const FieldElt& a) const {
    require(a.ctx == from_, "embedding applied to an element of another field");
    if (identity_) return a;
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < powers_.size(); ++i)
      if ((a.bits >> i) & 1U) r ^= powers_[i];
    return {to_, r};
  }

 private:
  const FieldCtx* from_;
  const FieldCtx* to_;
  bool identity_ = false;
  std::uint32_t root_ = 0;
  std::vector<std::uint32_t> powers_;
};

}  // namespace qtwist
