#include "curvesys/detail/zp.hpp"

#include <algorithm>

#include "curvesys/error.hpp"

namespace curvesys::zp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p));
  __int128 t = 0, nt = 1;
  __int128 r = p, nr = a % p;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t from_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class m(std::to_string(p));
  mpz_class r = v % m;
  if (r < 0) r += m;
  return std::stoull(r.get_str());
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec mul(const Vec& a, const Vec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  if ((p >> 32) == 0) {
    std::vector<unsigned __int128> acc(out.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i] * b[j]);
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint64_t>(acc[i] % p);
  } else {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j], p), p);
  }
  trim(out);
  return out;
}

void divrem(const Vec& a, const Vec& m, std::uint64_t p, Vec& q, Vec& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < m.size()) return;
  q.assign(r.size() - m.size() + 1, 0);
  const std::uint64_t lead_inv = inv(m.back(), p);
  for (std::size_t i = r.size(); i-- >= m.size();) {
    std::uint64_t c = mul(r[i], lead_inv, p);
    if (c == 0) continue;
    std::size_t shift = i - (m.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < m.size(); ++j) r[shift + j] = sub(r[shift + j], mul(c, m[j], p), p);
  }
  trim(r);
  trim(q);
}

Vec rem(Vec a, const Vec& m, std::uint64_t p) {
  Vec q, r;
  divrem(a, m, p, q, r);
  return r;
}

Vec mulmod(const Vec& a, const Vec& b, const Vec& m, std::uint64_t p) { return rem(mul(a, b, p), m, p); }

Vec powmod(const Vec& a, const mpz_class& e, const Vec& m, std::uint64_t p) {
  Vec result{1};
  result = rem(result, m, p);
  Vec base = rem(a, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m, p);
  }
  return result;
}

Vec gcd(Vec a, Vec b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t li = inv(a.back(), p);
    for (auto& c : a) c = mul(c, li, p);
  }
  return a;
}

Vec invmod(const Vec& a, const Vec& m, std::uint64_t p) {
  // Extended Euclid tracking the cofactor of a.
  Vec r0 = m, r1 = rem(a, m, p);
  Vec t0, t1{1};
  while (!r1.empty()) {
    Vec q, r;
    divrem(r0, r1, p, q, r);
    Vec qt = mul(q, t1, p);
    Vec nt(std::max(t0.size(), qt.size()), 0);
    for (std::size_t i = 0; i < nt.size(); ++i) {
      std::uint64_t x = i < t0.size() ? t0[i] : 0;
      std::uint64_t y = i < qt.size() ? qt[i] : 0;
      nt[i] = sub(x, y, p);
    }
    trim(nt);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.size() != 1) return {};
  std::uint64_t c = inv(r0[0], p);
  for (auto& v : t0) v = mul(v, c, p);
  return t0;
}

namespace {

std::vector<int> prime_divisors(int k) {
  std::vector<int> out;
  for (int q = 2; q * q <= k; ++q) {
    if (k % q == 0) {
      out.push_back(q);
      while (k % q == 0) k /= q;
    }
  }
  if (k > 1) out.push_back(k);
  return out;
}

}  // namespace

bool is_irreducible(const Vec& f_in, std::uint64_t p) {
  Vec f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  const mpz_class pz(std::to_string(p));
  // frob[i] = x^(p^i) mod f
  std::vector<Vec> frob(k + 1);
  frob[0] = rem(Vec{0, 1}, f, p);
  for (int i = 1; i <= k; ++i) frob[i] = powmod(frob[i - 1], pz, f, p);
  auto minus_x = [&](Vec v) {
    if (v.size() < 2) v.resize(2, 0);
    v[1] = sub(v[1], 1, p);
    trim(v);
    return v;
  };
  if (!minus_x(frob[k]).empty()) return false;
  for (int q : prime_divisors(k)) {
    Vec g = gcd(minus_x(frob[k / q]), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

void ext_mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, const Vec& modulus,
             std::uint64_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  if ((p >> 32) == 0) {
    std::vector<unsigned __int128> acc(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < k; ++j) acc[i + j] += static_cast<unsigned __int128>(a[i] * b[j]);
    }
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = static_cast<std::uint64_t>(acc[i] % p);
  } else {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) prod[i + j] = add(prod[i + j], mul(a[i], b[j], p), p);
  }
  for (std::size_t i = prod.size(); i-- > k;) {
    std::uint64_t c = prod[i];
    if (!c) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i - k + j] = sub(prod[i - k + j], mul(c, modulus[j], p), p);
  }
  std::copy(prod.begin(), prod.begin() + k, out);
}

}  // namespace curvesys::zp
