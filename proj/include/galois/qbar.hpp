// The fixed computable presentation of the algebraic closure of Q:
// algebraic numbers with decidable equality, exact field arithmetic, and a
// concrete bijection with the naturals.
//
// The enumeration runs in blocks B = 1, 2, ...: block B holds every monic
// irreducible polynomial with max(degree, coefficient height) = B, ordered
// by (degree, height, coefficient tuple high-to-low); inside a polynomial,
// roots come in the canonical (re, im)-lexicographic order.

#pragma once

#include "galois/roots.hpp"

namespace galois {

class AlgebraicNumber {
 public:
  // rational constant
  explicit AlgebraicNumber(const Rational& r);
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}

  // root `index` (canonical order) of a monic irreducible polynomial
  static AlgebraicNumber root_of(const QPoly& monic_irreducible, int index,
                                 bool verify_irreducible = true);
  // the unique root of `minpoly` that the isolating box pins down
  static AlgebraicNumber from_box(const QPoly& minpoly, const Box& box,
                                  bool verify_irreducible = true);

  static AlgebraicNumber sqrt_of(const Rational& r);  // principal square root
  static AlgebraicNumber zeta(int n);                 // exp(2 pi i / n)

  const QPoly& minpoly() const { return minpoly_; }
  int root_index() const { return index_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return minpoly_.degree() == 1; }
  Rational rational_value() const;  // requires degree 1
  bool is_zero() const { return is_rational() && rational_value() == 0; }

  // live (cache-refined) enclosure, shrunk below eps
  Box enclosure(const Rational& eps) const;
  // deterministic enclosure derived from the pristine isolation box
  Box stable_box() const;

  std::string str() const;  // {minpoly=[...], box=[...]}

 private:
  AlgebraicNumber(QPoly m, int idx) : minpoly_(std::move(m)), index_(idx) {}
  QPoly minpoly_;
  int index_ = 0;
};

// [OP] equals: decidable equality on the fixed presentation
bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b);

// strict order of the fixed enumeration (block, poly, root)
bool canonical_less(const AlgebraicNumber& a, const AlgebraicNumber& b);

// [OP] qbar_index / qbar_element: the fixed bijection with the naturals
unsigned long qbar_index(const AlgebraicNumber& a);
AlgebraicNumber qbar_element(unsigned long n);

// [OP] qbar arithmetic: exact field operations; results carry irreducible
// minimal polynomials obtained by factoring the resultant composition and
// selecting the factor whose roots meet the interval enclosure
AlgebraicNumber qbar_add(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber qbar_mul(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber qbar_neg(const AlgebraicNumber& a);
AlgebraicNumber qbar_inv(const AlgebraicNumber& a);  // domain_error on zero
AlgebraicNumber qbar_sub(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber qbar_div(const AlgebraicNumber& a, const AlgebraicNumber& b);

// movement cap for composed-resultant arithmetic; results beyond this degree
// raise domain_error (degrees past desk scale are out of contract)
inline constexpr int kQbarDegreeCap = 64;

}  // namespace galois
