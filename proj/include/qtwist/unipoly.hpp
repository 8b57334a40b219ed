#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/binfield.hpp"
#include "qtwist/errors.hpp"

namespace qtwist {

/// Dense univariate polynomial over GF(2^m), coefficients indexed by degree.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty vector and no degree.
class UniPoly {
 public:
  explicit UniPoly(const FieldCtx& F) : ctx_(&F) {}
  UniPoly(const FieldCtx& F, std::vector<FieldElt> coeffs) : ctx_(&F), c_(std::move(coeffs)) {
    for (const auto& a : c_) require(a.ctx == ctx_, "coefficient from another field");
    trim();
  }
  /// From raw bit patterns, lowest degree first.
  static UniPoly from_bits(const FieldCtx& F, const std::vector<std::uint64_t>& bits) {
    std::vector<FieldElt> cs;
    cs.reserve(bits.size());
    for (auto b : bits) cs.push_back(F.elt(b));
    return {F, std::move(cs)};
  }
  static UniPoly constant(const FieldElt& a) { return {*a.ctx, {a}}; }
  static UniPoly monomial(const FieldElt& a, std::size_t k) {
    std::vector<FieldElt> cs(k + 1, a.ctx->zero());
    cs[k] = a;
    return {*a.ctx, std::move(cs)};
  }
  /// The variable t.
  static UniPoly t(const FieldCtx& F) { return monomial(F.one(), 1); }

  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  FieldElt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_->zero(); }
  FieldElt leading() const { return c_.empty() ? ctx_->zero() : c_.back(); }
  const std::vector<FieldElt>& coeffs() const { return c_; }

  /// Lowest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return i;
    return std::nullopt;
  }

  FieldElt eval(const FieldElt& x) const {
    FieldElt acc = ctx_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// f(g(t)), Horner in g.
  UniPoly compose(const UniPoly& g) const {
    UniPoly acc(*ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
  }

  /// f(t) / t^k, which must be exact.
  UniPoly shift_down(std::size_t k) const {
    if (is_zero()) return *this;
    require(valuation().value() >= k, "polynomial not divisible by t^k");
    return {*ctx_, std::vector<FieldElt>(c_.begin() + static_cast<long>(k), c_.end())};
  }
  UniPoly shift_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<FieldElt> cs(k, ctx_->zero());
    cs.insert(cs.end(), c_.begin(), c_.end());
    return {*ctx_, std::move(cs)};
  }

  /// t^k f(1/t) for k >= deg f.
  UniPoly reversed(std::size_t k) const {
    if (is_zero()) return *this;
    require(k >= *degree(), "reversal length below degree");
    std::vector<FieldElt> cs(k + 1, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) cs[k - i] = c_[i];
    return {*ctx_, std::move(cs)};
  }

  friend UniPoly operator+(const UniPoly& f, const UniPoly& g) {
    if (f.ctx_ != g.ctx_) throw PreconditionError("polynomial field mismatch");
    const auto& longer = f.c_.size() >= g.c_.size() ? f : g;
    const auto& shorter = f.c_.size() >= g.c_.size() ? g : f;
    std::vector<FieldElt> cs = longer.c_;
    for (std::size_t i = 0; i < shorter.c_.size(); ++i) cs[i] += shorter.c_[i];
    return {*f.ctx_, std::move(cs)};
  }
  friend UniPoly operator-(const UniPoly& f, const UniPoly& g) { return f + g; }
  friend UniPoly operator-(const UniPoly& f) { return f; }

  friend UniPoly operator*(const UniPoly& f, const UniPoly& g) {
    if (f.ctx_ != g.ctx_) throw PreconditionError("polynomial field mismatch");
    if (f.is_zero() || g.is_zero()) return UniPoly(*f.ctx_);
    const FieldCtx& F = *f.ctx_;
    std::vector<std::uint32_t> acc(f.c_.size() + g.c_.size() - 1, 0);
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      if (f.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < g.c_.size(); ++j)
        acc[i + j] ^= F.mul_raw(f.c_[i].bits, g.c_[j].bits);
    }
    std::vector<FieldElt> cs;
    cs.reserve(acc.size());
    for (auto b : acc) cs.push_back({&F, b});
    return {F, std::move(cs)};
  }
  friend UniPoly operator*(const FieldElt& a, const UniPoly& f) { return constant(a) * f; }

  UniPoly& operator+=(const UniPoly& g) { return *this = *this + g; }
  UniPoly& operator*=(const UniPoly& g) { return *this = *this * g; }

  friend bool operator==(const UniPoly& f, const UniPoly& g) {
    return f.ctx_ == g.ctx_ && f.c_ == g.c_;
  }

  /// Coefficientwise image under a field embedding.
  UniPoly map(const FieldEmbedding& emb) const {
    std::vector<FieldElt> cs;
    cs.reserve(c_.size());
    for (const auto& a : c_) cs.push_back(emb(a));
    return {emb.target(), std::move(cs)};
  }

  /// Comma-separated hex coefficients, lowest degree first; "0" for zero.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << to_hex(c_[i]);
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  const FieldCtx* ctx_;
  std::vector<FieldElt> c_;
};

inline UniPoly times(const UniPoly& f, long k) { return (k % 2 != 0) ? f : UniPoly(f.ctx()); }

inline UniPoly pow(UniPoly f, std::uint64_t k) {
  UniPoly r = UniPoly::constant(f.ctx().one());
  while (k != 0) {
    if (k & 1U) r *= f;
    f *= f;
    k >>= 1;
  }
  return r;
}

/// Frobenius on polynomials: f -> f^2 coefficientwise (char 2).
inline UniPoly square(const UniPoly& f) {
  std::vector<FieldElt> cs(f.coeffs().empty() ? 0 : 2 * f.coeffs().size() - 1, f.ctx().zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) cs[2 * i] = f.coeffs()[i] * f.coeffs()[i];
  return {f.ctx(), std::move(cs)};
}

/// Parse "h0,h1,...,hd" (hex, lowest degree first).
inline UniPoly parse_poly(const FieldCtx& F, const std::string& text) {
  std::vector<FieldElt> cs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    cs.push_back(parse_elt(F, item));
  }
  if (cs.empty()) throw ParseError("empty polynomial");
  return {F, std::move(cs)};
}

/// t + t^2 + ... + t^(2^(k-1)) over F.
inline UniPoly trace_poly(const FieldCtx& F, int k) {
  require(k >= 1 && k <= 30, "trace polynomial length out of range");
  UniPoly acc(F);
  for (int i = 0; i < k; ++i) acc += UniPoly::monomial(F.one(), std::size_t{1} << i);
  return acc;
}

}  // namespace qtwist
