#include "galois/rational.hpp"

namespace galois {

Integer rational_height(const Rational& r) {
  Integer n = abs(r.get_num());
  Integer d = r.get_den();
  Integer h = n > d ? n : d;
  if (h < 1) h = 1;
  return h;
}

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(s);
      return Rational(n);
    }
    Integer n(s.substr(0, slash));
    Integer d(s.substr(slash + 1));
    if (d == 0) throw parse_error("zero denominator in '" + s + "'");
    return make_rational(n, d);
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal '" + s + "'");
  }
}

Integer rfloor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Integer rceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

}  // namespace galois
