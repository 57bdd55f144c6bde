#include "galois/interval.hpp"

#include <sstream>

namespace galois {

Interval Interval::operator*(const Interval& o) const {
  Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  Rational mn = a, mx = a;
  for (const Rational* v : {&b, &c, &d}) {
    if (*v < mn) mn = *v;
    if (*v > mx) mx = *v;
  }
  return {mn, mx};
}

Interval Interval::recip() const {
  GLB_CHECK(!contains_zero(), "reciprocal of interval containing zero");
  return {1 / hi, 1 / lo};
}

static Rational round_down_dyadic(const Rational& x, long prec) {
  Integer two_p;
  mpz_ui_pow_ui(two_p.get_mpz_t(), 2, static_cast<unsigned long>(prec));
  Rational scaled = x * Rational(two_p);
  return Rational(rfloor(scaled)) / Rational(two_p);
}

static Rational round_up_dyadic(const Rational& x, long prec) {
  Integer two_p;
  mpz_ui_pow_ui(two_p.get_mpz_t(), 2, static_cast<unsigned long>(prec));
  Rational scaled = x * Rational(two_p);
  return Rational(rceil(scaled)) / Rational(two_p);
}

Interval Interval::rounded(long prec) const {
  return {round_down_dyadic(lo, prec), round_up_dyadic(hi, prec)};
}

Box Box::recip() const {
  GLB_CHECK(!contains_zero(), "reciprocal of box containing zero");
  Interval n = re * re + im * im;  // excludes zero since the box does
  Interval inv = n.recip();
  return {re * inv, (-im) * inv};
}

std::string Box::str() const {
  std::ostringstream os;
  os << "[" << rational_str(re.lo) << ", " << rational_str(re.hi) << ", "
     << rational_str(im.lo) << ", " << rational_str(im.hi) << "]";
  return os.str();
}

Box parse_box(const std::string& s) {
  QPoly asPoly = parse_qpoly(s);  // reuse the list parser
  std::vector<Rational> v(asPoly.coeffs());
  // parse_qpoly trims trailing zeros; re-pad
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  size_t commas = 0;
  for (char ch : t)
    if (ch == ',') ++commas;
  if (commas != 3) throw parse_error("box must have exactly four entries");
  v.resize(4, Rational(0));
  Box b;
  b.re = Interval(v[0], v[1]);
  b.im = Interval(v[2], v[3]);
  return b;
}

Box eval_on_box(const QPoly& p, const Box& z, long prec) {
  Box acc = Box::point(Rational(0), Rational(0));
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * z + Box::point(p.coeff(i), Rational(0));
    if (prec > 0) acc = acc.rounded(prec);
  }
  return acc;
}

Box eval_at_point(const QPoly& p, const Rational& re, const Rational& im) {
  Rational ar(0), ai(0);
  for (int i = p.degree(); i >= 0; --i) {
    Rational nr = ar * re - ai * im + p.coeff(i);
    Rational ni = ar * im + ai * re;
    ar = nr;
    ai = ni;
  }
  return Box::point(ar, ai);
}

KrawczykResult krawczyk_step(const QPoly& p, const QPoly& dp, const Box& X, long prec) {
  KrawczykResult res;
  Rational mr = X.re.mid(), mi = X.im.mid();
  Box pm = eval_at_point(p, mr, mi);
  Box dpm = eval_at_point(dp, mr, mi);
  if (dpm.re.lo == 0 && dpm.im.lo == 0) return res;  // p'(m) == 0, cannot invert
  // exact inverse of the complex rational p'(m)
  Rational nn = dpm.re.lo * dpm.re.lo + dpm.im.lo * dpm.im.lo;
  Box Y = Box::point(dpm.re.lo / nn, -dpm.im.lo / nn);
  Box m = Box::point(mr, mi);
  Box one = Box::point(Rational(1), Rational(0));
  Box dpX = eval_on_box(dp, X, prec);
  Box K = m - Y * pm + (one - Y * dpX) * (X - m);
  if (prec > 0) K = K.rounded(prec);
  res.ok = true;
  res.K = K;
  return res;
}

}  // namespace galois
