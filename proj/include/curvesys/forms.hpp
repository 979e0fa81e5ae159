#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvesys/linalg.hpp"
#include "curvesys/poly.hpp"

namespace curvesys {

using Exponent = std::array<int, 3>;
using Coords = std::array<FieldElement, 3>;

/// Lexicographic descending order on exponent triples: x^m first.
struct LexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

/// Exponents of degree m in lex-descending order; the column order of every
/// coefficient vector in the library.
std::vector<Exponent> monomials(int m);
int monomial_count(int m);
int monomial_index(const Exponent& e);

/// Homogeneous polynomial in x, y, z. Sparse; the zero form keeps its degree.
class TernaryForm {
 public:
  TernaryForm(FieldPtr f, int degree);
  static TernaryForm zero(const FieldPtr& f, int degree) { return TernaryForm(f, degree); }
  static TernaryForm constant(const FieldElement& c);
  /// x (i = 0), y (i = 1) or z (i = 2).
  static TernaryForm variable(const FieldPtr& f, int i);
  static TernaryForm monomial(const FieldElement& c, const Exponent& e);
  static TernaryForm linear(const FieldElement& a, const FieldElement& b, const FieldElement& c);
  /// Coefficients in monomials(degree) order.
  static TernaryForm from_vector(const FieldPtr& f, int degree, const std::vector<FieldElement>& coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponent, FieldElement, LexDesc>& terms() const noexcept { return terms_; }
  FieldElement coeff(const Exponent& e) const;
  void set(const Exponent& e, const FieldElement& c);
  std::vector<FieldElement> to_vector() const;

  FieldElement operator()(const Coords& p) const;
  FieldElement operator()(const FieldElement& x, const FieldElement& y, const FieldElement& z) const {
    return (*this)(Coords{x, y, z});
  }
  /// Partial derivative with respect to variable i.
  TernaryForm partial(int i) const;
  /// G(v) = F(M v).
  TernaryForm substitute(const Matrix& m) const;
  /// Same form with coefficients mapped into a larger field.
  TernaryForm embed(const FieldPtr& target) const;
  /// Scaled so that the first nonzero coefficient in monomial order is 1.
  TernaryForm normalized() const;
  /// F(x, y, 1) as a polynomial in y with coefficients evaluated at x = x0,
  /// used by eliminations; the field is that of x0.
  Poly fiber(const FieldElement& x0) const;

  TernaryForm operator-() const;
  TernaryForm& operator+=(const TernaryForm& o);
  TernaryForm& operator-=(const TernaryForm& o);
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const FieldElement& c, const TernaryForm& a);
  friend bool operator==(const TernaryForm& a, const TernaryForm& b);
  friend bool operator!=(const TernaryForm& a, const TernaryForm& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldPtr field_;
  int degree_;
  std::map<Exponent, FieldElement, LexDesc> terms_;
};

TernaryForm pow(const TernaryForm& f, int e);
inline std::ostream& operator<<(std::ostream& os, const TernaryForm& f) { return os << f.to_string(); }

/// Homogeneous polynomial in (s, t); c[k] is the coefficient of s^(n-k) t^k.
class BinaryForm {
 public:
  BinaryForm(FieldPtr f, int degree);
  BinaryForm(FieldPtr f, int degree, std::vector<FieldElement> coeffs);
  /// The form a s + b t.
  static BinaryForm linear(const FieldElement& a, const FieldElement& b);

  const FieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const;
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
  FieldElement coeff(int k) const { return c_[k]; }
  FieldElement operator()(const FieldElement& s, const FieldElement& t) const;
  /// B(s, 1) as a polynomial in s; its degree falls short of degree() by
  /// the multiplicity of the root (1 : 0).
  Poly dehomogenize() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const FieldElement& k, const BinaryForm& a);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
  std::string to_string() const;

 private:
  FieldPtr field_;
  int degree_;
  std::vector<FieldElement> c_;
};

/// F(s A + t B). Zero exactly when F vanishes on the line through A and B.
BinaryForm restrict_to_param(const TernaryForm& f, const Coords& a, const Coords& b);

struct RootReconstruction {
  Poly poly;           // monic, prod (X - X_j)^(m_j)
  FieldElement a0;     // (-1)^m prod X_j^(m_j)
  FieldElement a_top;  // coefficient of X^(m-1): -sum m_j X_j
};

/// Monic polynomial with prescribed roots; also checks that its constant and
/// subleading coefficients match the closed forms.
RootReconstruction reconstruct_from_roots(const std::vector<std::pair<FieldElement, int>>& roots, int m);

/// Power series truncated at t^N. Products keep the smaller precision.
class TruncatedSeries {
 public:
  TruncatedSeries(FieldPtr f, int precision);
  TruncatedSeries(FieldPtr f, int precision, std::vector<FieldElement> coeffs);
  static TruncatedSeries constant(const FieldElement& c, int precision);
  /// c + t.
  static TruncatedSeries shifted_variable(const FieldElement& c, int precision);

  const FieldPtr& field() const noexcept { return field_; }
  int precision() const noexcept { return n_; }
  const FieldElement& operator[](int i) const { return c_[i]; }
  FieldElement& operator[](int i) { return c_[i]; }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
  /// Index of the first nonzero coefficient below the precision, if any.
  std::optional<int> valuation() const;
  TruncatedSeries truncate(int precision) const;
  TruncatedSeries inverse() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const FieldElement& k, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  FieldPtr field_;
  int n_;
  std::vector<FieldElement> c_;
};

/// Evaluate a form at series coordinates.
TruncatedSeries compose(const TernaryForm& f, const std::array<TruncatedSeries, 3>& xyz);

/// Local parametrization of a smooth plane curve at a point. The chart is the
/// coordinate set to 1 (2 = z, 1 = y, 0 = x, tried in that order); `affine`
/// holds the two remaining coordinates in their natural order.
struct Branch {
  int chart;
  std::array<TruncatedSeries, 2> affine;
  std::array<TruncatedSeries, 3> homogeneous() const;
};

Branch branch_expansion(const TernaryForm& c, const Coords& p, int precision);

/// i(G, C; P) at a smooth point P of C; std::nullopt means infinite (G and C
/// share the component through P). `hint` seeds the truncation order.
std::optional<int> intersection_multiplicity(const TernaryForm& g, const TernaryForm& c, const Coords& p,
                                             std::optional<int> hint = std::nullopt);

/// Coordinates scaled so the last nonzero entry is 1.
Coords normalize_coords(const Coords& p);

}  // namespace curvesys
