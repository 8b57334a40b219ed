#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "qtwist/multipoly.hpp"
#include "qtwist/unipoly.hpp"

namespace qtwist {

struct WpReduction {
  UniPoly reduced;  ///< A + c^2 + c
  UniPoly c;
};

/// Cancel even-degree leading terms of A against c^2 + c until the degree is
/// odd or A is constant. r^2 + r = A and r^2 + r = reduced define isomorphic
/// curves via r -> r + c.
inline WpReduction wp_reduce(const UniPoly& A) {
  UniPoly red = A, c(A.ctx());
  while (!red.is_constant() && *red.degree() % 2 == 0) {
    const auto k = *red.degree() / 2;
    const auto step = UniPoly::monomial(sqrt_elt(red.leading()), k);
    c += step;
    red += square(step) + step;
  }
  return {red, c};
}

/// True iff f = z^2 + z for some z in GF(2^m)[t].
inline bool in_wp_image(const UniPoly& f) {
  const auto red = wp_reduce(f).reduced;
  return red.is_constant() && trace_abs(red.coeff(0)) == 0;
}

/// Result of the change of variables r~ = r + c, s~ = s + c r + d:
/// A~ = A + c^2 + c and B~ = B + (c^2 + c) A + c^3 + c^2 + d^2 + d.
struct NormalizedPair {
  UniPoly A, B, c, d;
};

inline NormalizedPair normalize_pair(const UniPoly& A, const UniPoly& B) {
  require(&A.ctx() == &B.ctx(), "A and B over different fields");
  auto [At, c] = wp_reduce(A);
  const UniPoly c2c = square(c) + c;
  const UniPoly shifted = B + c2c * A + square(c) * c + square(c);
  auto [Bt, d] = wp_reduce(shifted);
  return {At, Bt, c, d};
}

/// Odd degree, or constant.
inline bool is_normalized(const UniPoly& f) { return f.is_constant() || *f.degree() % 2 == 1; }

namespace detail {

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw PreconditionError("L-polynomial coefficient overflow");
  return r;
}
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw PreconditionError("L-polynomial coefficient overflow");
  return r;
}
inline long long checked_pow(long long q, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r = checked_mul(r, q);
  return r;
}

}  // namespace detail

inline constexpr int kMaxLpolyGenus = 6;

/// L-polynomial coefficients a_0..a_{2g} of a genus-g curve over F_q from
/// counts[k-1] = #C(F_{q^k}), k = 1..g. Newton's identities give a_1..a_g; the
/// functional equation a_{2g-i} = q^{g-i} a_i gives the rest.
inline std::vector<long long> lpoly_from_counts(const std::vector<long long>& counts, int g, long long q) {
  require(g >= 0 && g <= kMaxLpolyGenus, "genus out of range for L-polynomial recovery");
  require(q >= 2, "field size must be at least 2");
  require(static_cast<int>(counts.size()) >= g, "need counts over F_{q^k} for k = 1..g");
  using detail::checked_add;
  using detail::checked_mul;
  std::vector<long long> S(static_cast<std::size_t>(g) + 1, 0), e(static_cast<std::size_t>(g) + 1, 0);
  for (int k = 1; k <= g; ++k)
    S[k] = checked_add(checked_add(detail::checked_pow(q, k), 1), -counts[k - 1]);
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    long long acc = 0;
    for (int i = 1; i <= k; ++i) {
      const long long term = checked_mul(e[k - i], S[i]);
      acc = checked_add(acc, (i % 2 == 1) ? term : -term);
    }
    if (acc % k != 0) throw ConsistencyError("non-integral L-polynomial coefficient: inconsistent counts");
    e[k] = acc / k;
  }
  std::vector<long long> a(2 * static_cast<std::size_t>(g) + 1, 0);
  for (int k = 0; k <= g; ++k) a[k] = (k % 2 == 0) ? e[k] : -e[k];
  for (int i = 0; i < g; ++i) a[2 * g - i] = checked_mul(detail::checked_pow(q, g - i), a[i]);
  return a;
}

/// Coefficients of (1 + root T)^n.
inline std::vector<long long> binomial_power(long long root, int n) {
  std::vector<long long> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i >= 1; --i) a[i] = detail::checked_add(a[i], detail::checked_mul(a[i - 1], root));
  return a;
}

}  // namespace qtwist
