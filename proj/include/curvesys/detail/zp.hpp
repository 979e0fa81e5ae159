#pragma once

// Word-level arithmetic modulo a prime p < 2^63 and dense polynomials over
// F_p stored low-to-high as vectors of residues. Building blocks for the
// extension-field representation; not part of the public surface.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace curvesys::zp {

using Vec = std::vector<std::uint64_t>;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if ((p >> 32) == 0) return a * b % p;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
// Throws DivisionByZero for a == 0.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::uint64_t from_mpz(const mpz_class& v, std::uint64_t p);

bool is_prime(std::uint64_t n);

void trim(Vec& a);
Vec mul(const Vec& a, const Vec& b, std::uint64_t p);
// Remainder modulo m (m trimmed, nonzero).
Vec rem(Vec a, const Vec& m, std::uint64_t p);
void divrem(const Vec& a, const Vec& m, std::uint64_t p, Vec& q, Vec& r);
Vec mulmod(const Vec& a, const Vec& b, const Vec& m, std::uint64_t p);
Vec powmod(const Vec& a, const mpz_class& e, const Vec& m, std::uint64_t p);
Vec gcd(Vec a, Vec b, std::uint64_t p);
// Inverse of a modulo m; empty result when not invertible.
Vec invmod(const Vec& a, const Vec& m, std::uint64_t p);
// Rabin's test for a polynomial of degree >= 1.
bool is_irreducible(const Vec& f, std::uint64_t p);

// Extension multiplication with a monic modulus of degree k; a, b have
// length exactly k.
void ext_mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
             const Vec& modulus, std::uint64_t p);

}  // namespace curvesys::zp
