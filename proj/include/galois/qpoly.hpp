// Univariate polynomials over Q, dense representation, lowest degree first.
// The zero polynomial has an empty coefficient vector; everything else is
// normalized so the leading coefficient is nonzero.

#pragma once

#include <vector>

#include "galois/rational.hpp"

namespace galois {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit QPoly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
  }

  static QPoly x();                       // the monomial t
  static QPoly monomial(int k, Rational a = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[static_cast<size_t>(i)];
  }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const Rational& s) const;

  QPoly monic() const;
  QPoly derivative() const;
  Rational eval(const Rational& x) const;
  QPoly compose(const QPoly& inner) const;   // this(inner(t))
  QPoly shift(const Rational& a) const;      // this(t + a)
  QPoly scale_arg(const Rational& s) const;  // this(s * t), s != 0
  QPoly reverse() const;                     // t^deg * this(1/t)

  std::string str() const;  // "[c0, c1, ...]"

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// quotient/remainder with remainder degree < degree of divisor
struct QPolyDivMod {
  QPoly quot, rem;
};
QPolyDivMod divmod(const QPoly& a, const QPoly& b);

bool divides(const QPoly& d, const QPoly& a);

// [OP] poly_gcd: monic gcd; throws domain_error if both inputs are zero.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

// [OP] resultant: Sylvester resultant of two nonzero polynomials.
Rational resultant(const QPoly& a, const QPoly& b);

Rational discriminant(const QPoly& p);

// p / gcd(p, p') made monic
QPoly squarefree_part(const QPoly& p);

// Yun decomposition: list of (squarefree factor, multiplicity), content dropped.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

// max height over coefficients
Integer poly_height(const QPoly& p);

QPoly parse_qpoly(const std::string& s);  // "[c0, c1, ...]"

// Lagrange interpolation through (xs[i], ys[i]), xs distinct.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// res_y(a(y), b(x - y)): roots are all sums (root of a) + (root of b).
QPoly composed_sum(const QPoly& a, const QPoly& b);
// roots are all products; requires b(0) != 0... handled by caller for 0.
QPoly composed_product(const QPoly& a, const QPoly& b);

// 1 + max |c_i / c_n|: every complex root has modulus strictly below this.
Rational root_bound(const QPoly& p);

}  // namespace galois
