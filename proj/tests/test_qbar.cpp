#include "doctest.h"

#include <random>

#include "galois/factor.hpp"
#include "galois/qbar.hpp"

using namespace galois;

namespace {

QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

AlgebraicNumber sqrt2() { return AlgebraicNumber::sqrt_of(Rational(2)); }
AlgebraicNumber sqrt3() { return AlgebraicNumber::sqrt_of(Rational(3)); }

}  // namespace

TEST_CASE("sqrt constructors pick the principal root") {
  auto s2 = sqrt2();
  CHECK(s2.minpoly() == poly({-2, 0, 1}));
  Box b = s2.stable_box();
  CHECK(b.re.lo > 0);
  CHECK(b.is_real_line());

  auto i = AlgebraicNumber::sqrt_of(Rational(-1));
  CHECK(i.minpoly() == poly({1, 0, 1}));
  CHECK(i.stable_box().im.lo > 0);

  CHECK(AlgebraicNumber::sqrt_of(Rational(9, 4)).rational_value() == Rational(3, 2));
}

TEST_CASE("equals distinguishes conjugates and identifies duplicates") {
  auto s2 = sqrt2();
  // same root reached through a different box
  auto dup = AlgebraicNumber::from_box(poly({-2, 0, 1}),
                                       Box(Interval(Rational(1), Rational(2)), Interval(Rational(0))), false);
  CHECK(equals(s2, dup));
  auto neg = qbar_neg(s2);
  CHECK(!equals(s2, neg));
  CHECK(neg.minpoly() == s2.minpoly());
}

TEST_CASE("additive inverse collapses to zero") {
  auto s2 = sqrt2();
  auto z = qbar_add(s2, qbar_neg(s2));
  CHECK(z.is_rational());
  CHECK(z.rational_value() == 0);
}

TEST_CASE("sqrt2 * sqrt3 is the positive root of x^2-6") {
  auto prod = qbar_mul(sqrt2(), sqrt3());
  CHECK(prod.minpoly() == poly({-6, 0, 1}));
  CHECK(prod.stable_box().re.lo > 0);
}

TEST_CASE("sqrt2 + sqrt3 has minimal polynomial x^4-10x^2+1") {
  // symbolic oracle: (x^2-5)^2 - 24 expands to x^4 - 10x^2 + 1
  QPoly inner = poly({-5, 0, 1});
  QPoly expanded = inner * inner - QPoly(Rational(24));
  CHECK(expanded == poly({1, 0, -10, 0, 1}));
  auto sum = qbar_add(sqrt2(), sqrt3());
  CHECK(sum.minpoly() == expanded);
  Box b = sum.stable_box();
  CHECK(b.re.lo > 3);
  CHECK(b.re.hi < Rational(315, 100));
}

TEST_CASE("(sqrt2+sqrt3)(sqrt3-sqrt2) equals 1") {
  auto sum = qbar_add(sqrt2(), sqrt3());
  auto diff = qbar_sub(sqrt3(), sqrt2());
  auto prod = qbar_mul(sum, diff);
  CHECK(equals(prod, AlgebraicNumber(Rational(1))));
}

TEST_CASE("inversion of zero is a domain error") {
  CHECK_THROWS_AS(qbar_inv(AlgebraicNumber(Rational(0))), domain_error);
  auto s2 = sqrt2();
  auto inv = qbar_inv(s2);
  CHECK(equals(qbar_mul(s2, inv), AlgebraicNumber(Rational(1))));
  // 1/sqrt2 = sqrt2/2: minpoly x^2 - 1/2
  CHECK(inv.minpoly() == QPoly(std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(1)}));
}

TEST_CASE("enumeration: first elements and bijection round trip") {
  // indices of 0 and 1 are distinct; every small rational appears
  auto e0 = qbar_element(0);
  auto e1 = qbar_element(1);
  CHECK(!equals(e0, e1));
  CHECK(qbar_index(AlgebraicNumber(Rational(0))) != qbar_index(AlgebraicNumber(Rational(1))));
  for (long k = -2; k <= 2; ++k) {
    AlgebraicNumber q{Rational(k)};
    CHECK(equals(qbar_element(qbar_index(q)), q));
  }
  CHECK(equals(qbar_element(qbar_index(sqrt2())), sqrt2()));
  // round trip over the enumeration prefix
  for (unsigned long n = 0; n < 200; ++n) {
    CHECK(qbar_index(qbar_element(n)) == n);
  }
}

TEST_CASE("first several enumerated elements are distinct") {
  std::vector<AlgebraicNumber> xs;
  for (unsigned long n = 0; n < 30; ++n) xs.push_back(qbar_element(n));
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) CHECK(!equals(xs[i], xs[j]));
}

TEST_CASE("canonical_less agrees with index order") {
  for (unsigned long n = 0; n + 1 < 40; ++n) {
    auto a = qbar_element(n), b = qbar_element(n + 1);
    CHECK(canonical_less(a, b));
    CHECK(!canonical_less(b, a));
  }
}

TEST_CASE("zeta constructions") {
  auto i = AlgebraicNumber::zeta(4);
  CHECK(i.minpoly() == poly({1, 0, 1}));
  CHECK(i.stable_box().im.lo > 0);
  auto z8 = AlgebraicNumber::zeta(8);
  CHECK(z8.minpoly() == poly({1, 0, 0, 0, 1}));
  Box b = z8.stable_box();
  CHECK(b.re.lo > 0);
  CHECK(b.im.lo > 0);
  // zeta(8)^2 = zeta(4)
  CHECK(equals(qbar_mul(z8, z8), i));
  auto z5 = AlgebraicNumber::zeta(5);
  CHECK(z5.minpoly() == poly({1, 1, 1, 1, 1}));
}

TEST_CASE("field axioms on random low-degree triples") {
  // pool inside one quartic field per triple keeps composed degrees small
  std::mt19937_64 rng(91);
  std::vector<std::vector<AlgebraicNumber>> pools;
  for (long d : {2L, 3L, 5L, 6L}) {
    std::vector<AlgebraicNumber> pool;
    auto sd = AlgebraicNumber::sqrt_of(Rational(d));
    pool.push_back(sd);
    pool.push_back(qbar_neg(sd));
    pool.push_back(qbar_add(sd, AlgebraicNumber(Rational(1))));
    pool.push_back(qbar_mul(sd, AlgebraicNumber(Rational(1, 2))));
    pool.push_back(AlgebraicNumber(Rational(3, 2)));
    pools.push_back(std::move(pool));
  }
  for (int it = 0; it < 30; ++it) {
    auto& pool = pools[rng() % pools.size()];
    auto pick = [&]() { return pool[rng() % pool.size()]; };
    AlgebraicNumber a = pick(), b = pick(), c = pick();
    CHECK(equals(qbar_add(a, b), qbar_add(b, a)));
    CHECK(equals(qbar_mul(a, b), qbar_mul(b, a)));
    CHECK(equals(qbar_add(qbar_add(a, b), c), qbar_add(a, qbar_add(b, c))));
    CHECK(equals(qbar_mul(qbar_mul(a, b), c), qbar_mul(a, qbar_mul(b, c))));
    CHECK(equals(qbar_mul(a, qbar_add(b, c)), qbar_add(qbar_mul(a, b), qbar_mul(a, c))));
    if (!a.is_zero()) CHECK(equals(qbar_mul(a, qbar_inv(a)), AlgebraicNumber(Rational(1))));
  }
}

TEST_CASE("produced minimal polynomials are irreducible") {
  auto sum = qbar_add(sqrt2(), sqrt3());
  auto f = factor_q(sum.minpoly());
  CHECK(f.size() == 1);
  CHECK(f[0].second == 1);
  auto prod = qbar_mul(sum, AlgebraicNumber::zeta(4));
  auto f2 = factor_q(prod.minpoly());
  CHECK(f2.size() == 1);
}
