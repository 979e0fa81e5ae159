#pragma once

#include <vector>

#include "curvesys/poly.hpp"
#include "curvesys/random.hpp"

namespace curvesys {

struct Factor {
  Poly poly;
  int multiplicity;
};

/// Squarefree decomposition of a polynomial over a finite field: pairwise
/// coprime monic squarefree parts with their multiplicities.
std::vector<Factor> squarefree_decomposition(const Poly& f);

/// Monic irreducible factors over a finite field, sorted by degree and then
/// coefficients. Squarefree split, distinct-degree split, then seeded
/// equal-degree splitting.
std::vector<Factor> factor_univariate(const Poly& f, std::uint64_t seed = kDefaultSeed);

/// Product of lc(f) and the factors raised to their multiplicities.
Poly expand_factors(const FieldElement& lead, const std::vector<Factor>& factors);

bool is_irreducible(const Poly& f);

/// Distinct roots in the coefficient field (finite fields), sorted.
std::vector<FieldElement> roots(const Poly& f, std::uint64_t seed = kDefaultSeed);

struct RootWithMultiplicity {
  FieldElement value;
  int multiplicity;
};

/// Rational roots of a polynomial over Q with multiplicities, by p-adic
/// lifting and rational reconstruction.
std::vector<RootWithMultiplicity> rational_roots(const Poly& f);

/// One root per irreducible factor, living in the residue field of that
/// factor: F_p itself for linear factors, F_p[t]/(factor) otherwise.
/// Over Q and over F_{p^k} only roots in the coefficient field can be
/// represented; UnsupportedField is raised if the polynomial has others.
struct ClosedRoot {
  FieldElement root;
  Poly factor;
  int multiplicity;
  int degree;
};
std::vector<ClosedRoot> closed_roots(const Poly& f, std::uint64_t seed = kDefaultSeed);

}  // namespace curvesys
