#include "doctest.h"

#include <random>

#include "galois/factor.hpp"
#include "galois/roots.hpp"

using namespace galois;

namespace {

QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

bool contains_value_near(const Box& b, double re, double im, double slack = 1e-9) {
  auto lo = [&](const Rational& r) { return r.get_d(); };
  return lo(b.re.lo) <= re + slack && re - slack <= lo(b.re.hi) && lo(b.im.lo) <= im + slack &&
         im - slack <= lo(b.im.hi);  // double only used to sanity-read the test expectation
}

}  // namespace

TEST_CASE("isolate_roots of x^2-2: two real boxes with interval sign checks") {
  QPoly p = poly({-2, 0, 1});
  auto boxes = isolate_roots(p);
  REQUIRE(boxes.size() == 2);
  for (const auto& b : boxes) {
    CHECK(b.is_real_line());
    // sign change of p across the real interval certifies the root
    Rational pl = p.eval(b.re.lo), ph = p.eval(b.re.hi);
    CHECK(pl * ph <= 0);
  }
  CHECK(boxes[0].re.hi < 0);
  CHECK(boxes[1].re.lo > -2);
  CHECK(contains_value_near(boxes[0], -1.41421356, 0));
  CHECK(contains_value_near(boxes[1], 1.41421356, 0));
}

TEST_CASE("isolate_roots of x^2+1: conjugate pair") {
  auto boxes = isolate_roots(poly({1, 0, 1}));
  REQUIRE(boxes.size() == 2);
  CHECK(boxes[0].im.hi < 0);
  CHECK(boxes[1].im.lo > 0);
  CHECK(contains_value_near(boxes[0], 0, -1));
  CHECK(contains_value_near(boxes[1], 0, 1));
  // symmetry about the real axis
  CHECK(boxes[0].re.lo == boxes[1].re.lo);
}

TEST_CASE("degree five squarefree: exactly five boxes, pairwise disjoint") {
  QPoly p = poly({-3, 1, 0, -2, 0, 1});  // x^5 - 2x^3 + x - 3, squarefree
  REQUIRE(poly_gcd(p, p.derivative()).degree() == 0);
  auto boxes = isolate_roots(p);
  REQUIRE(boxes.size() == 5);
  for (size_t i = 0; i < boxes.size(); ++i)
    for (size_t j = i + 1; j < boxes.size(); ++j) CHECK(boxes[i].disjoint(boxes[j]));
}

TEST_CASE("non-squarefree input signals a domain error") {
  QPoly a = poly({-1, 1});
  CHECK_THROWS_AS(isolate_roots(a * a), domain_error);
  CHECK_THROWS_AS(isolate_roots(QPoly()), domain_error);
}

TEST_CASE("refinement keeps exactly one root certificate") {
  QPoly p = poly({-2, 0, 1});
  auto boxes = isolate_roots(p);
  Box b = boxes[1];
  for (int k = 0; k < 6; ++k) {
    Rational eps = b.max_width() / 2;
    if (eps == 0) break;
    Box nb = refine_box(p, b, eps);
    CHECK(nb.max_width() <= eps);
    CHECK(nb.re.lo >= b.re.lo);
    CHECK(nb.re.hi <= b.re.hi);
    Rational pl = p.eval(nb.re.lo), ph = p.eval(nb.re.hi);
    CHECK(pl * ph <= 0);  // still brackets the root
    b = nb;
  }
}

TEST_CASE("canonical order sorts by (re, im) with exact ties") {
  // x^4 + 5x^2 + 5: four purely imaginary roots, all real parts equal 0,
  // two non-conjugate pairs among them; irreducible by Eisenstein at 5
  QPoly p = poly({5, 0, 5, 0, 1});
  REQUIRE(is_irreducible(p));
  auto boxes = isolate_roots(p);
  REQUIRE(boxes.size() == 4);
  for (size_t i = 0; i + 1 < boxes.size(); ++i) CHECK(boxes[i].im.hi < boxes[i + 1].im.lo);
  // roots are +- i*sqrt((5 +- sqrt5)/2): magnitudes about 1.176 and 1.902
  CHECK(contains_value_near(boxes[0], 0, -1.902113032590307));
  CHECK(contains_value_near(boxes[1], 0, -1.175570504584946));
  CHECK(contains_value_near(boxes[2], 0, 1.175570504584946));
  CHECK(contains_value_near(boxes[3], 0, 1.902113032590307));
}

TEST_CASE("mixed real and complex, canonical order") {
  // (x^2-2)(x^2+1) squarefree product
  QPoly p = poly({-2, 0, 1}) * poly({1, 0, 1});
  auto boxes = isolate_roots(p);
  REQUIRE(boxes.size() == 4);
  // order: -sqrt2, then the pair at re=0 (im -1 then +1), then sqrt2
  CHECK(contains_value_near(boxes[0], -1.41421356, 0));
  CHECK(contains_value_near(boxes[1], 0, -1));
  CHECK(contains_value_near(boxes[2], 0, 1));
  CHECK(contains_value_near(boxes[3], 1.41421356, 0));
}

TEST_CASE("random squarefree polynomials isolate deg(p) boxes") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 25) {
    int deg = 2 + static_cast<int>(rng() % 6);
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (auto& v : c) v = Rational(static_cast<long>(rng() % 11) - 5);
    if (c.back() == 0) c.back() = 1;
    QPoly p{std::move(c)};
    if (p.degree() < 2) continue;
    if (poly_gcd(p, p.derivative()).degree() != 0) continue;
    auto boxes = isolate_roots(p);
    CHECK(static_cast<int>(boxes.size()) == p.degree());
    for (size_t i = 0; i < boxes.size(); ++i)
      for (size_t j = i + 1; j < boxes.size(); ++j) CHECK(boxes[i].disjoint(boxes[j]));
    ++done;
  }
}

TEST_CASE("identify pins enclosures to the right root") {
  QPoly p = poly({-2, 0, 1});
  auto rs = isolate(p);
  int idx = rs->identify([&](long prec) {
    (void)prec;
    return Box(Interval(Rational(14, 10), Rational(15, 10)), Interval(Rational(0)));
  });
  CHECK(idx == 1);
}
