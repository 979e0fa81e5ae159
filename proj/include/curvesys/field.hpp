#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "curvesys/error.hpp"
#include "curvesys/random.hpp"

namespace curvesys {

enum class FieldKind { Rationals, Prime, Extension };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable descriptor of the scalar field: Q, F_p, or F_p[t]/(modulus).
///
/// Primality of p and irreducibility of the modulus are verified when the
/// descriptor is built; a live descriptor is always a field.
class Field : public std::enable_shared_from_this<Field> {
  struct Token {};

 public:
  Field(Token, FieldKind kind, std::uint64_t p, std::vector<std::uint64_t> modulus);

  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  /// `modulus` is low-to-high over F_p, degree >= 2; it is made monic.
  static FieldPtr extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

  FieldKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != FieldKind::Rationals; }
  std::uint64_t characteristic() const noexcept { return p_; }
  /// Degree over the prime field.
  int degree() const noexcept { return kind_ == FieldKind::Extension ? static_cast<int>(modulus_.size()) - 1 : 1; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  /// Number of elements; zero for Q.
  mpz_class order() const;
  /// F_p for an extension, the field itself otherwise.
  FieldPtr prime_subfield() const;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldKind kind_;
  std::uint64_t p_;
  std::vector<std::uint64_t> modulus_;
  FieldPtr prime_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

/// Irreducible modulus of degree k over F_p found by seeded random search.
FieldPtr make_extension(std::uint64_t p, int k, std::uint64_t seed = kDefaultSeed);

bool is_prime(std::uint64_t n);

/// Exact scalar tagged with its field. Canonical representatives make
/// equality structural: reduced fractions, residues in [0, p), and
/// polynomials of degree < k for extensions.
class FieldElement {
 public:
  FieldElement() = default;

  static FieldElement zero(const FieldPtr& f);
  static FieldElement one(const FieldPtr& f);
  static FieldElement from_int(const FieldPtr& f, long long v);
  static FieldElement from_mpz(const FieldPtr& f, const mpz_class& v);
  /// Finite fields map a/b to a * b^-1; DivisionByZero when p | b.
  static FieldElement from_mpq(const FieldPtr& f, const mpq_class& v);
  static FieldElement from_coeffs(const FieldPtr& f, std::vector<std::uint64_t> coeffs);
  /// The class of t in F_p[t]/(modulus).
  static FieldElement generator(const FieldPtr& f);
  static FieldElement random(const FieldPtr& f, Rng& rng);
  static FieldElement random_nonzero(const FieldPtr& f, Rng& rng);
  /// "a", "-a", "a/b"; extensions also accept "[c0,c1,...]".
  static FieldElement parse(const FieldPtr& f, const std::string& text);

  const FieldPtr& field() const noexcept { return field_; }
  bool valid() const noexcept { return static_cast<bool>(field_); }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement pow(const mpz_class& e) const;
  /// x -> x^p.
  FieldElement frobenius() const;
  /// Norm and trace down to the prime field (identity for Q and F_p).
  FieldElement norm() const;
  FieldElement trace() const;

  /// Image in `target`: identity when the fields agree, the natural
  /// inclusion F_p -> F_p[t]/(f) otherwise.
  FieldElement embed(const FieldPtr& target) const;
  bool in_prime_subfield() const;
  /// The element as a member of the prime field; requires in_prime_subfield().
  FieldElement to_prime_subfield() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;
  const std::vector<std::uint64_t>& coeffs() const;

  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  /// Structural total order (within one field), used for deterministic sorting.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

 private:
  FieldElement(FieldPtr f, std::variant<std::uint64_t, std::vector<std::uint64_t>, mpq_class> v)
      : field_(std::move(f)), value_(std::move(v)) {}
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  std::variant<std::uint64_t, std::vector<std::uint64_t>, mpq_class> value_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

}  // namespace curvesys
