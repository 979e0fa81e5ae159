#pragma once

// Test-only reference implementations, deliberately naive and independent of
// the library's algorithms.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvesys/field.hpp"
#include "curvesys/poly.hpp"

namespace oracle {

using curvesys::FieldElement;
using curvesys::Poly;

/// Determinant by fraction-free cofactor-free Gaussian elimination.
inline FieldElement determinant(std::vector<std::vector<FieldElement>> m, const curvesys::FieldPtr& F) {
  const std::size_t n = m.size();
  FieldElement det = FieldElement::one(F);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return FieldElement::zero(F);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      FieldElement f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Sylvester matrix determinant with formal degrees nf, ng.
inline FieldElement sylvester(const Poly& f, int nf, const Poly& g, int ng) {
  const auto& F = f.field();
  const int n = nf + ng;
  std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n, FieldElement::zero(F)));
  for (int r = 0; r < ng; ++r)
    for (int i = 0; i <= nf; ++i) m[r][r + i] = f.coeff(nf - i);
  for (int r = 0; r < nf; ++r)
    for (int i = 0; i <= ng; ++i) m[ng + r][r + i] = g.coeff(ng - i);
  return determinant(std::move(m), F);
}

/// Roots in F_p by exhaustive evaluation.
inline std::vector<std::uint64_t> brute_roots(const Poly& f) {
  std::vector<std::uint64_t> out;
  const auto& F = f.field();
  for (std::uint64_t a = 0; a < F->characteristic(); ++a)
    if (f(FieldElement::from_int(F, static_cast<long long>(a))).is_zero()) out.push_back(a);
  return out;
}

}  // namespace oracle

#include "curvesys/forms.hpp"

namespace oracle {

/// All points of P^2(F_p), normalized, by direct enumeration.
inline std::vector<curvesys::Coords> projective_points(const curvesys::FieldPtr& F) {
  std::vector<curvesys::Coords> out;
  const long long p = static_cast<long long>(F->characteristic());
  auto e = [&](long long v) { return FieldElement::from_int(F, v); };
  for (long long x = 0; x < p; ++x)
    for (long long y = 0; y < p; ++y) out.push_back({e(x), e(y), e(1)});
  for (long long x = 0; x < p; ++x) out.push_back({e(x), e(1), e(0)});
  out.push_back({e(1), e(0), e(0)});
  return out;
}

/// Points of P^2 over an arbitrary finite field (small orders only).
inline std::vector<curvesys::Coords> projective_points_ext(const curvesys::FieldPtr& K) {
  std::vector<FieldElement> elems;
  const std::uint64_t q = K->order().get_ui();
  const std::uint64_t p = K->characteristic();
  for (std::uint64_t i = 0; i < q; ++i) {
    std::vector<std::uint64_t> digits;
    for (std::uint64_t v = i; v; v /= p) digits.push_back(v % p);
    elems.push_back(FieldElement::from_coeffs(K, digits));
  }
  std::vector<curvesys::Coords> out;
  const auto zero = FieldElement::zero(K), one = FieldElement::one(K);
  for (const auto& x : elems)
    for (const auto& y : elems) out.push_back({x, y, one});
  for (const auto& x : elems) out.push_back({x, one, zero});
  out.push_back({one, zero, zero});
  return out;
}

/// i(G, C; P) at a rational smooth point P of C over F_p, from a
/// parametrization of C solved one coefficient per fixed-point step in plain
/// uint64 arithmetic. Returns `precision` when G vanishes to that order.
inline int valuation_at(const curvesys::TernaryForm& g, const curvesys::TernaryForm& c, const curvesys::Coords& pt,
                        int precision) {
  using u64 = std::uint64_t;
  using Series = std::vector<u64>;
  const u64 p = c.field()->characteristic();
  const int N = precision;
  auto val = [](const FieldElement& e) { return static_cast<u64>(std::stoull(e.to_string())); };
  auto mul = [&](u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); };
  auto inv = [&](u64 a) {
    u64 r = 1, e = p - 2;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  };
  auto smul = [&](const Series& a, const Series& b) {
    Series out(N, 0);
    for (int i = 0; i < N; ++i)
      if (a[i])
        for (int j = 0; i + j < N; ++j) out[i + j] = (out[i + j] + mul(a[i], b[j])) % p;
    return out;
  };
  // Chart: the last coordinate with a nonzero entry is set to 1.
  int chart = 2;
  while (val(pt[chart]) == 0) --chart;
  const u64 scale = inv(val(pt[chart]));
  std::array<u64, 3> P{};
  for (int i = 0; i < 3; ++i) P[i] = mul(val(pt[i]), scale);
  std::array<int, 2> free{};
  for (int i = 0, k = 0; i < 3; ++i)
    if (i != chart) free[k++] = i;
  auto eval = [&](const curvesys::TernaryForm& f, const std::array<Series, 3>& xyz) {
    Series out(N, 0);
    for (const auto& [e, coef] : f.terms()) {
      Series term(N, 0);
      term[0] = val(coef);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < e[i]; ++k) term = smul(term, xyz[i]);
      for (int i = 0; i < N; ++i) out[i] = (out[i] + term[i]) % p;
    }
    return out;
  };
  auto deriv_at = [&](int var) {
    std::array<Series, 3> xyz;
    for (int i = 0; i < 3; ++i) xyz[i] = Series(N, 0), xyz[i][0] = P[i];
    return eval(c.partial(var), xyz)[0];
  };
  // Solve for one free coordinate as a series in t = (other free coordinate - its value).
  const int solved = deriv_at(free[1]) != 0 ? free[1] : free[0];
  const int moving = solved == free[1] ? free[0] : free[1];
  const u64 d = deriv_at(solved);
  if (d == 0) throw std::logic_error("oracle: point is singular");
  const u64 dinv = inv(d);
  std::array<Series, 3> xyz;
  for (int i = 0; i < 3; ++i) xyz[i] = Series(N, 0), xyz[i][0] = P[i];
  if (N > 1) xyz[moving][1] = 1;
  for (int step = 0; step < N; ++step) {
    const Series f = eval(c, xyz);
    for (int i = 0; i < N; ++i) xyz[solved][i] = (xyz[solved][i] + p - mul(f[i], dinv)) % p;
  }
  const Series gs = eval(g, xyz);
  for (int i = 0; i < N; ++i)
    if (gs[i]) return i;
  return N;
}

}  // namespace oracle
