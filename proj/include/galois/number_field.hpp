// Number fields K = Q(gamma) inside the fixed algebraic closure, in
// primitive-element form, with their splitting algorithms: membership by
// the Vandermonde procedure, factorization over K by the norm method,
// conjugates, primitive elements for towers, and Galois closures.
//
// Tower arithmetic runs on exact linear algebra in the tensor algebra
// Q[t]/(m1) (x) Q[y]/(m2); no factorization is needed when the adjoined
// step is known irreducible (quadratic square-class bookkeeping).

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "galois/qbar.hpp"

namespace galois {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(NumberFieldPtr owner, std::vector<Rational> coords);

  const NumberFieldPtr& owner() const { return owner_; }
  const std::vector<Rational>& coords() const { return coords_; }
  // coordinates as the polynomial a0 + a1 t + ... of degree < [K:Q]
  QPoly poly() const { return QPoly(coords_); }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;  // domain_error on zero
  FieldElement operator*(const Rational& s) const;
  bool operator==(const FieldElement& o) const;

  Box enclosure(const Rational& eps) const;  // interval image in C
  AlgebraicNumber algebraic_value() const;   // exact value with its minpoly

  std::string str() const;  // coordinate list

 private:
  NumberFieldPtr owner_;
  std::vector<Rational> coords_;
};

// polynomial over K, lowest degree first, trailing zeros trimmed
using KPoly = std::vector<FieldElement>;

class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static NumberFieldPtr rationals();
  // Q(a); a rational gives back rationals()
  static NumberFieldPtr of(const AlgebraicNumber& a);

  const AlgebraicNumber& generator() const { return gen_; }
  const QPoly& modulus() const { return gen_.minpoly(); }
  int degree() const { return gen_.degree(); }
  bool is_rationals() const { return degree() == 1; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& r) const;
  FieldElement generator_element() const;  // gamma itself
  FieldElement element(std::vector<Rational> coords) const;

  std::string str() const;  // generator serialization

  // --- caches; observationally invisible, guarded internally ---
  struct Caches;
  Caches& caches() const { return *caches_; }

 private:
  explicit NumberField(AlgebraicNumber gen);
  AlgebraicNumber gen_;
  std::unique_ptr<Caches> caches_;
};

bool same_field(const NumberField& a, const NumberField& b);

// result of adjoining an element: the compositum in primitive-element form
struct Adjunction {
  NumberFieldPtr field;       // K(beta) = Q(theta)
  FieldElement old_generator; // K's generator inside the new field
  FieldElement adjoined;      // beta inside the new field
  int relative_degree = 1;    // [K(beta) : K]
};

// [OP] tower_extend / primitive_element backbone: K(beta) with the images of
// both generators; tries theta = gamma + k*beta for k = 0, 1, 2, ...
Adjunction adjoin(const NumberFieldPtr& K, const AlgebraicNumber& beta);

// [OP] primitive_element: the field K(beta)
NumberFieldPtr primitive_element(const NumberFieldPtr& K, const AlgebraicNumber& beta);

// [OP] tower_extend: same field, uniform in K and beta
NumberFieldPtr tower_extend(const NumberFieldPtr& K, const AlgebraicNumber& beta);

// [OP] membership: power-basis coordinates of beta if beta lies in K.
// Conjugate counts first, then the Vandermonde systems over the conjugate
// assignments, solutions tested for rationality (exactly, against a
// denominator bound); verified witnesses only.
std::optional<FieldElement> membership(const AlgebraicNumber& beta, const NumberFieldPtr& K);

// [OP] factor_over: complete factorization over K via squarefree split and
// the shifted-norm method; factors monic, multiplied back they give p.
std::vector<std::pair<KPoly, int>> factor_over(const KPoly& p, const NumberFieldPtr& K);

// [OP] conjugates_over: roots of the minimal polynomial of x over K,
// canonically ordered
std::vector<AlgebraicNumber> conjugates_over(const AlgebraicNumber& x, const NumberFieldPtr& K);

// [OP] galois_closure: smallest Galois field over Q containing K
NumberFieldPtr galois_closure(const NumberFieldPtr& K);

// compositum F * E of two fields; group caches propagate when both are
// Galois with known groups and the join is linearly disjoint
NumberFieldPtr compositum(const NumberFieldPtr& F, const NumberFieldPtr& E);

bool is_galois(const NumberFieldPtr& K);

// images of the generator under the full automorphism group, as coordinate
// polynomials; domain_error when K is not Galois over Q
std::vector<std::vector<Rational>> automorphism_images(const NumberFieldPtr& K);

// --- KPoly helpers -------------------------------------------------------
KPoly kpoly_from_qpoly(const QPoly& p, const NumberFieldPtr& K);
int kdeg(const KPoly& p);
void ktrim(KPoly& p);
KPoly kadd(const KPoly& a, const KPoly& b);
KPoly ksub(const KPoly& a, const KPoly& b);
KPoly kmul(const KPoly& a, const KPoly& b);
KPoly kmonic(const KPoly& a);
std::pair<KPoly, KPoly> kdivmod(const KPoly& a, const KPoly& b);
KPoly kgcd(const KPoly& a, const KPoly& b);
KPoly kderiv(const KPoly& a);
KPoly kcompose(const KPoly& outer, const KPoly& inner);
bool kequal(const KPoly& a, const KPoly& b);

// apply a coordinate-polynomial map (image of gamma) to an element of K
std::vector<Rational> apply_image(const std::vector<Rational>& elem,
                                  const std::vector<Rational>& image, const QPoly& modulus);

}  // namespace galois
