// Exact rational arithmetic for the galois-lab kernel.
//
// Rational is GMP's mpq_class: always in lowest terms with positive
// denominator once canonicalized, which is exactly the invariant the
// rest of the library relies on. Anything that builds a Rational from
// raw numerator/denominator must go through make_rational.

#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace galois {

using Integer = mpz_class;
using Rational = mpq_class;

// Library error taxonomy. domain_error maps to CLI exit 3, parse_error to
// exit 2, stage_error to exit 4.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : error {
  using error::error;
};
struct parse_error : error {
  using error::error;
};
struct stage_error : error {
  int stage;
  stage_error(int s, const std::string& msg) : error(msg), stage(s) {}
};
struct internal_error : error {
  using error::error;
};

#define GLB_CHECK(cond, msg) \
  do {                       \
    if (!(cond)) throw ::galois::internal_error(msg); \
  } while (0)

inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer num(const Rational& r) { return r.get_num(); }
inline Integer den(const Rational& r) { return r.get_den(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// height = max(|numerator|, denominator); at least 1 so that 0 has height 1.
Integer rational_height(const Rational& r);

// "p/q" for proper fractions, plain "n" for integers.
std::string rational_str(const Rational& r);

// Accepts "n", "-n", "p/q". Throws parse_error on anything else.
Rational parse_rational(const std::string& s);

// floor(r), ceil(r) as Integers.
Integer rfloor(const Rational& r);
Integer rceil(const Rational& r);

}  // namespace galois
