// Exact interval arithmetic over Q with outward rounding to dyadic grids.
// No floating point: every equality or ordering decision downstream either
// separates two intervals exactly or falls through to an exact algebraic test.

#pragma once

#include "galois/qpoly.hpp"

namespace galois {

struct Interval {
  Rational lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rational point) : lo(point), hi(point) {}
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    GLB_CHECK(lo <= hi, "inverted interval");
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool contains(const Rational& x) const { return lo <= x && hi <= hi && x <= hi; }
  bool is_point() const { return lo == hi; }

  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
  bool inside(const Interval& o) const { return o.lo < lo && hi < o.hi; }       // strict
  bool subset(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval operator-() const { return {-hi, -lo}; }
  Interval operator*(const Interval& o) const;
  Interval operator*(const Rational& s) const {
    return s >= 0 ? Interval{lo * s, hi * s} : Interval{hi * s, lo * s};
  }
  Interval hull(const Interval& o) const {
    return {lo < o.lo ? lo : o.lo, hi > o.hi ? hi : o.hi};
  }
  // reciprocal; requires the interval excludes 0
  Interval recip() const;

  // round endpoints outward onto the grid Z / 2^prec
  Interval rounded(long prec) const;
};

// Complex box: re x im rectangle with rational endpoints.
// [TYPE] Box of exact-core.
struct Box {
  Interval re, im;

  Box() = default;
  Box(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  static Box point(const Rational& r, const Rational& i) {
    return Box(Interval(r), Interval(i));
  }
  static Box real_point(const Rational& r) { return point(r, Rational(0)); }

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool disjoint(const Box& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
  bool inside(const Box& o) const { return re.inside(o.re) && im.inside(o.im); }
  bool subset(const Box& o) const { return re.subset(o.re) && im.subset(o.im); }
  bool is_real_line() const { return im.lo == 0 && im.hi == 0; }
  Rational max_width() const {
    Rational w = re.width(), v = im.width();
    return w > v ? w : v;
  }

  Box operator+(const Box& o) const { return {re + o.re, im + o.im}; }
  Box operator-(const Box& o) const { return {re - o.re, im - o.im}; }
  Box operator-() const { return {-re, -im}; }
  Box operator*(const Box& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Box operator*(const Rational& s) const { return {re * s, im * s}; }
  Box conj() const { return {re, -im}; }
  Box hull(const Box& o) const { return {re.hull(o.re), im.hull(o.im)}; }
  Box recip() const;  // 1/z; requires 0 not in the box
  Box rounded(long prec) const { return {re.rounded(prec), im.rounded(prec)}; }

  std::string str() const;  // "[relo, rehi, imlo, imhi]"
};

Box parse_box(const std::string& s);

// Horner evaluation of p over a box, optionally with outward rounding.
Box eval_on_box(const QPoly& p, const Box& z, long prec = -1);

// p evaluated at an exact complex rational point (re, im).
Box eval_at_point(const QPoly& p, const Rational& re, const Rational& im);

// One Krawczyk step K(X) for p on box X around midpoint m.
// If the returned box is strictly inside X, X contains exactly one root of p
// (and K(X) contains it too). `ok` is false when p'(m) is not invertible.
struct KrawczykResult {
  bool ok = false;
  Box K;
};
KrawczykResult krawczyk_step(const QPoly& p, const QPoly& dp, const Box& X, long prec);

}  // namespace galois
