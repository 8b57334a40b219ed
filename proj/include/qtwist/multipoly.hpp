#pragma once

// Sparse polynomials in four generators (x, y, r, s) with coefficients in
// GF(2^m)[t], and rewriting modulo "power of generator" rules.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qtwist/unipoly.hpp"

namespace qtwist {

enum class Var : int { X = 0, Y = 1, R = 2, S = 3 };
inline constexpr int kNumVars = 4;

inline const char* var_name(Var v) {
  static constexpr const char* names[] = {"x", "y", "r", "s"};
  return names[static_cast<int>(v)];
}

using Exponents = std::array<std::uint32_t, kNumVars>;

class MultiPoly {
 public:
  using Terms = std::map<Exponents, UniPoly>;

  explicit MultiPoly(const FieldCtx& F) : ctx_(&F) {}

  static MultiPoly constant(const UniPoly& c) {
    MultiPoly p(c.ctx());
    p.add_term({0, 0, 0, 0}, c);
    return p;
  }
  static MultiPoly constant(const FieldElt& a) { return constant(UniPoly::constant(a)); }
  static MultiPoly var(const FieldCtx& F, Var v, std::uint32_t e = 1) {
    MultiPoly p(F);
    Exponents ex{};
    ex[static_cast<int>(v)] = e;
    p.add_term(ex, UniPoly::constant(F.one()));
    return p;
  }
  /// The base variable t as a constant of this ring.
  static MultiPoly t(const FieldCtx& F) { return constant(UniPoly::t(F)); }

  const FieldCtx& ctx() const { return *ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const UniPoly& c) {
    require(&c.ctx() == ctx_, "coefficient from another field");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  UniPoly coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? UniPoly(*ctx_) : it->second;
  }

  std::uint32_t max_exponent(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.ctx_ != b.ctx_) throw PreconditionError("polynomial field mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.ctx_ != b.ctx_) throw PreconditionError("polynomial field mismatch");
    MultiPoly r(*a.ctx_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const UniPoly& c, const MultiPoly& a) { return constant(c) * a; }
  friend MultiPoly operator*(const FieldElt& c, const MultiPoly& a) { return constant(c) * a; }

  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "[" << it->second.to_string() << "]";
      for (int i = 0; i < kNumVars; ++i) {
        if (it->first[i] == 0) continue;
        os << "*" << var_name(static_cast<Var>(i));
        if (it->first[i] > 1) os << "^" << it->first[i];
      }
    }
    return os.str();
  }

 private:
  const FieldCtx* ctx_;
  Terms terms_;
};

inline MultiPoly operator+(const MultiPoly& a, const UniPoly& c) { return a + MultiPoly::constant(c); }
inline MultiPoly operator+(const MultiPoly& a, const FieldElt& c) { return a + MultiPoly::constant(c); }

/// One rule: var^exponent -> replacement, where the replacement has lower
/// degree in var.
struct RewriteRule {
  Var var;
  std::uint32_t exponent;
  MultiPoly replacement;
};

/// Ordered list of rules. Reduction applies the first rule whose generator
/// exponent is exceeded, on the largest reducible term first, until no rule
/// applies. Rules must be triangular (a replacement may only reintroduce
/// generators that come later in the list or reduce strictly), which makes
/// the process terminate.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
    for (const auto& r : rules_) {
      require(r.exponent >= 1, "rewrite rule exponent must be positive");
      require(r.replacement.max_exponent(r.var) < r.exponent,
              "rewrite rule does not lower its generator");
    }
  }

  /// The tower relations y^2 = y + x^3 + x, s^2 = s + rA + B, r^2 = r + A,
  /// in that order.
  static RewriteSystem tower(const UniPoly& A, const UniPoly& B) {
    const auto& F = A.ctx();
    const auto x = MultiPoly::var(F, Var::X), y = MultiPoly::var(F, Var::Y);
    const auto r = MultiPoly::var(F, Var::R), s = MultiPoly::var(F, Var::S);
    return RewriteSystem({
        {Var::Y, 2, y + x * x * x + x},
        {Var::S, 2, s + A * r + MultiPoly::constant(B)},
        {Var::R, 2, r + MultiPoly::constant(A)},
    });
  }

  const std::vector<RewriteRule>& rules() const { return rules_; }

  MultiPoly normal_form(const MultiPoly& p) const {
    MultiPoly acc = p;
    std::size_t steps = 0;
    for (;;) {
      std::optional<std::pair<Exponents, const RewriteRule*>> hit;
      for (auto it = acc.terms().rbegin(); it != acc.terms().rend() && !hit; ++it)
        for (const auto& rule : rules_)
          if (it->first[static_cast<int>(rule.var)] >= rule.exponent) {
            hit = {it->first, &rule};
            break;
          }
      if (!hit) return acc;
      if (++steps > kStepLimit) throw ConsistencyError("rewriting did not terminate");
      const auto& [e, rule] = *hit;
      const UniPoly c = acc.coeff(e);
      acc.add_term(e, c);  // remove the term (char 2)
      Exponents rest = e;
      rest[static_cast<int>(rule->var)] -= rule->exponent;
      MultiPoly mono(p.ctx());
      mono.add_term(rest, c);
      acc += mono * rule->replacement;
    }
  }

  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return normal_form(a * b); }

  MultiPoly pow(const MultiPoly& a, std::uint64_t k) const {
    MultiPoly base = normal_form(a);
    MultiPoly r = MultiPoly::constant(a.ctx().one());
    while (k != 0) {
      if (k & 1U) r = mul(r, base);
      k >>= 1;
      if (k != 0) base = mul(base, base);
    }
    return r;
  }

  bool is_normal(const MultiPoly& p) const {
    for (const auto& [e, c] : p.terms())
      for (const auto& rule : rules_)
        if (e[static_cast<int>(rule.var)] >= rule.exponent) return false;
    return true;
  }

 private:
  static constexpr std::size_t kStepLimit = 50'000'000;
  std::vector<RewriteRule> rules_;
};

inline MultiPoly rewrite_normal_form(const MultiPoly& p, const RewriteSystem& rs) {
  return rs.normal_form(p);
}

/// Ring map sending each generator to the given image, reducing as it goes.
inline MultiPoly substitute(const MultiPoly& p, const std::array<MultiPoly, kNumVars>& images,
                            const RewriteSystem& rs) {
  std::array<std::vector<MultiPoly>, kNumVars> powers;
  auto power = [&](int v, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(p.ctx().one()));
    while (cache.size() <= e) cache.push_back(rs.mul(cache.back(), images[v]));
    return cache[e];
  };
  MultiPoly acc(p.ctx());
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(c);
    for (int v = 0; v < kNumVars; ++v)
      if (e[v] != 0) term = rs.mul(term, power(v, e[v]));
    acc += term;
  }
  return rs.normal_form(acc);
}

/// Generator images with the identity everywhere except where overridden.
inline std::array<MultiPoly, kNumVars> identity_images(const FieldCtx& F) {
  return {MultiPoly::var(F, Var::X), MultiPoly::var(F, Var::Y), MultiPoly::var(F, Var::R),
          MultiPoly::var(F, Var::S)};
}

}  // namespace qtwist
