#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvesys/field.hpp"

namespace curvesys {

/// Dense univariate polynomial, coefficients low-to-high, trailing zeros
/// trimmed (the zero polynomial has no coefficients and degree -1).
class Poly {
 public:
  explicit Poly(FieldPtr f) : field_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<FieldElement> coeffs);

  static Poly constant(const FieldElement& c);
  static Poly x(const FieldPtr& f);
  static Poly monomial(const FieldElement& c, int degree);
  /// X - root.
  static Poly linear_root(const FieldElement& root);

  const FieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  FieldElement coeff(int i) const;
  FieldElement lead() const;

  Poly monic() const;
  Poly derivative() const;
  /// Evaluation; coefficients are embedded into the field of `x`.
  FieldElement operator()(const FieldElement& x) const;
  /// Coefficient-wise embedding into a larger field.
  Poly embed(const FieldPtr& target) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const FieldElement& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Degree first, then coefficients from the top.
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, const mpz_class& e, const Poly& m);
Poly pow(const Poly& a, int e);

/// Res(f, g) for nonzero f, g, computed by the Euclidean remainder sequence.
/// Equals the Sylvester determinant for the actual degrees.
FieldElement resultant(const Poly& f, const Poly& g);
/// Sylvester resultant with formal degrees nf >= deg f, ng >= deg g.
FieldElement resultant_formal(const Poly& f, int nf, const Poly& g, int ng);

/// Unique polynomial of degree < n through n points with distinct abscissae.
Poly interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys);

/// Minimal polynomial over the prime field of an element of a finite field.
Poly minimal_polynomial(const FieldElement& a);

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace curvesys
