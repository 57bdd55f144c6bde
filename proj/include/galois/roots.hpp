// Certified complex root isolation for squarefree rational polynomials.
// Real roots come from Sturm bisection; non-real roots from quadtree
// subdivision of the upper half plane with Krawczyk uniqueness certificates.
// Boxes are pairwise disjoint, each contains exactly one root, and the list
// is in the canonical (re, im)-lexicographic order. Ordering ties (equal real
// parts of non-conjugate roots) are decided exactly through the composed-sum
// polynomial, never numerically.

#pragma once

#include <functional>
#include <memory>
#include <mutex>

#include "galois/interval.hpp"

namespace galois {

class RootSet {
 public:
  RootSet(QPoly squarefree, std::vector<Box> boxes)
      : p_(std::move(squarefree)), dp_(p_.derivative()), initial_(boxes), boxes_(std::move(boxes)) {}

  const QPoly& poly() const { return p_; }
  int count() const { return static_cast<int>(boxes_.size()); }

  Box box(int i) const;
  // the pristine isolation box, unaffected by any later refinement
  Box initial_box(int i) const { return initial_[static_cast<size_t>(i)]; }
  std::vector<Box> snapshot() const;

  // shrink box i until max_width <= eps; monotone, thread-safe
  void refine(int i, const Rational& eps) const;

  // index of the root that the refinable enclosure pins down; `enclose(prec)`
  // must return a box containing a genuine root of poly(), shrinking as prec
  // grows
  int identify(const std::function<Box(long)>& enclose) const;

 private:
  QPoly p_, dp_;
  std::vector<Box> initial_;
  mutable std::mutex mu_;
  mutable std::vector<Box> boxes_;
};

using RootSetPtr = std::shared_ptr<const RootSet>;

// isolation with caching; p must be squarefree of degree >= 1
RootSetPtr isolate(const QPoly& p);

// Sturm-only isolation of the real roots of a squarefree p, in increasing
// order; intervals are pairwise disjoint and endpoints are never roots
// (a rational root comes back as a point interval after refinement, never
// as an endpoint of its isolating interval)
std::vector<Interval> isolate_real_roots(const QPoly& p);

// halve a real isolating interval by exact sign-change bisection
Interval bisect_real_root(const QPoly& p, const Interval& iv);

// [OP] isolate_roots: spec surface; domain_error when p is zero or not
// squarefree (callers take the squarefree part first)
std::vector<Box> isolate_roots(const QPoly& p);

// one monotone refinement pass on an isolating box of a simple root of p
Box refine_box_once(const QPoly& p, const QPoly& dp, const Box& b, long prec);

// shrink an isolating box until max_width <= eps
Box refine_box(const QPoly& p, Box b, const Rational& eps);

// exact (re, im)-lexicographic comparison of roots i, j of the same set
bool root_less(const RootSet& rs, int i, int j);

}  // namespace galois
