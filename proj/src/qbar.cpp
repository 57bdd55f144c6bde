#include "galois/qbar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <mutex>
#include <sstream>

#include "galois/factor.hpp"

namespace galois {

namespace {

Rational eps_of_prec(long prec) { return Rational(1, Integer(1) << std::min(prec, 1L << 14)); }

// tuple describing a polynomial's place in the enumeration
struct PolyRank {
  Integer block;
  int degree;
  Integer height;
  std::vector<Rational> tuple;  // coefficients high-to-low, lead excluded
};

PolyRank rank_of(const QPoly& m) {
  PolyRank r;
  r.degree = m.degree();
  r.height = 1;
  for (int i = 0; i < m.degree(); ++i) {
    Integer h = rational_height(m.coeff(i));
    if (h > r.height) r.height = h;
  }
  r.block = r.height > r.degree ? r.height : Integer(r.degree);
  for (int i = m.degree() - 1; i >= 0; --i) r.tuple.push_back(m.coeff(i));
  return r;
}

int rank_cmp(const PolyRank& a, const PolyRank& b) {
  if (a.block != b.block) return a.block < b.block ? -1 : 1;
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  if (a.height != b.height) return a.height < b.height ? -1 : 1;
  for (size_t i = 0; i < a.tuple.size(); ++i) {
    if (a.tuple[i] != b.tuple[i]) return a.tuple[i] < b.tuple[i] ? -1 : 1;
  }
  return 0;
}

// rationals p/q with max(|p|, q) <= h, ascending
std::vector<Rational> rationals_up_to(long h) {
  std::vector<Rational> out;
  for (long q = 1; q <= h; ++q)
    for (long p = -h; p <= h; ++p) {
      if (std::gcd(std::labs(p), q) != 1) continue;  // keeps 0/1, excludes 0/q
      out.push_back(Rational(p, q));
    }
  std::sort(out.begin(), out.end());
  return out;
}

struct Enumeration {
  std::mutex mu;
  unsigned long blocks_done = 0;
  std::vector<QPoly> polys;              // canonical order
  std::vector<unsigned long> start;      // element index of poly's first root
  unsigned long total = 0;               // elements enumerated so far
  std::map<std::string, size_t> by_key;  // minpoly str -> position in polys

  void push(const QPoly& m) {
    by_key[m.str()] = polys.size();
    polys.push_back(m);
    start.push_back(total);
    total += static_cast<unsigned long>(m.degree());
  }

  // all monic irreducible polynomials in block B = max(degree, height),
  // ordered by (degree, height, coefficient tuple high-to-low)
  void extend_to(unsigned long B) {
    while (blocks_done < B) {
      unsigned long blk = blocks_done + 1;
      for (int d = 1; d <= static_cast<int>(blk); ++d) {
        long hmin = (d == static_cast<int>(blk)) ? 1 : static_cast<long>(blk);
        for (long h = hmin; h <= static_cast<long>(blk); ++h) {
          std::vector<Rational> rats = rationals_up_to(h);
          std::vector<size_t> odo(static_cast<size_t>(d), 0);
          bool done = false;
          while (!done) {
            std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
            coeffs[static_cast<size_t>(d)] = 1;
            Integer height = 1;
            for (int i = 0; i < d; ++i) {
              const Rational& c = rats[odo[static_cast<size_t>(i)]];
              coeffs[static_cast<size_t>(d - 1 - i)] = c;
              Integer hh = rational_height(c);
              if (hh > height) height = hh;
            }
            if (height == h) {
              QPoly m(coeffs);
              if (is_irreducible(m)) push(m);
            }
            // odometer: tuple index 0 is the most significant coefficient
            int pos = d - 1;
            while (pos >= 0) {
              if (++odo[static_cast<size_t>(pos)] < rats.size()) break;
              odo[static_cast<size_t>(pos)] = 0;
              --pos;
            }
            if (pos < 0) done = true;
          }
        }
      }
      blocks_done = blk;
    }
  }
};

Enumeration& enumeration() {
  static Enumeration e;
  return e;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& r) {
  minpoly_ = QPoly(std::vector<Rational>{-r, Rational(1)});
  index_ = 0;
}

AlgebraicNumber AlgebraicNumber::root_of(const QPoly& m, int index, bool verify) {
  GLB_CHECK(m.degree() >= 1 && m.is_monic(), "minimal polynomial must be monic of degree >= 1");
  if (verify) {
    if (!is_irreducible(m)) throw domain_error("polynomial is not irreducible over Q");
  }
  auto rs = isolate(m);
  GLB_CHECK(index >= 0 && index < rs->count(), "root index out of range");
  return AlgebraicNumber(m, index);
}

AlgebraicNumber AlgebraicNumber::from_box(const QPoly& m, const Box& box, bool verify) {
  GLB_CHECK(m.degree() >= 1 && m.is_monic(), "minimal polynomial must be monic of degree >= 1");
  if (verify && !is_irreducible(m)) throw domain_error("polynomial is not irreducible over Q");
  auto rs = isolate(m);
  int idx = rs->identify([&](long) { return box; });
  return AlgebraicNumber(m, idx);
}

Rational AlgebraicNumber::rational_value() const {
  GLB_CHECK(is_rational(), "not a rational value");
  return -minpoly_.coeff(0);
}

Box AlgebraicNumber::enclosure(const Rational& eps) const {
  if (is_rational()) return Box::real_point(rational_value());
  auto rs = isolate(minpoly_);
  rs->refine(index_, eps);
  return rs->box(index_);
}

Box AlgebraicNumber::stable_box() const {
  if (is_rational()) return Box::real_point(rational_value());
  auto rs = isolate(minpoly_);
  Box b = rs->initial_box(index_);
  Rational eps(1, 1 << 20);
  if (b.max_width() > eps) b = refine_box(minpoly_, b, eps);
  return b;
}

std::string AlgebraicNumber::str() const {
  std::ostringstream os;
  os << "{minpoly=" << minpoly_.str() << ", box=" << stable_box().str() << "}";
  return os.str();
}

AlgebraicNumber AlgebraicNumber::sqrt_of(const Rational& r) {
  if (r == 0) return AlgebraicNumber(Rational(0));
  Integer n = r.get_num(), d = r.get_den();
  if (r > 0 && mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
    Integer sn = sqrt(n), sd = sqrt(d);
    return AlgebraicNumber(make_rational(sn, sd));
  }
  // x^2 - r is irreducible once r is not a rational square; the principal
  // root (positive real, or positive imaginary axis) is the last box
  QPoly m(std::vector<Rational>{-r, Rational(0), Rational(1)});
  auto rs = isolate(m);
  return AlgebraicNumber::root_of(m, rs->count() - 1, false);
}

AlgebraicNumber AlgebraicNumber::zeta(int n) {
  GLB_CHECK(n >= 1, "zeta index must be positive");
  if (n == 1) return AlgebraicNumber(Rational(1));
  if (n == 2) return AlgebraicNumber(Rational(-1));
  QPoly m = cyclotomic(n);
  auto rs = isolate(m);
  // exp(2 pi i / n) maximizes the real part among primitive roots; its
  // conjugate shares the real part, and positive imaginary part sorts last
  return AlgebraicNumber::root_of(m, rs->count() - 1, false);
}

bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a.minpoly() == b.minpoly() && a.root_index() == b.root_index();
}

bool canonical_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  PolyRank ra = rank_of(a.minpoly()), rb = rank_of(b.minpoly());
  int c = rank_cmp(ra, rb);
  if (c != 0) return c < 0;
  return a.root_index() < b.root_index();
}

unsigned long qbar_index(const AlgebraicNumber& a) {
  PolyRank r = rank_of(a.minpoly());
  GLB_CHECK(mpz_fits_ulong_p(r.block.get_mpz_t()) != 0 && r.block.get_ui() < (1u << 20),
            "qbar_index outside the enumerable range");
  auto& e = enumeration();
  std::lock_guard<std::mutex> lock(e.mu);
  e.extend_to(r.block.get_ui());
  auto it = e.by_key.find(a.minpoly().str());
  GLB_CHECK(it != e.by_key.end(), "minimal polynomial missing from enumeration");
  return e.start[it->second] + static_cast<unsigned long>(a.root_index());
}

AlgebraicNumber qbar_element(unsigned long n) {
  auto& e = enumeration();
  std::lock_guard<std::mutex> lock(e.mu);
  while (e.total <= n) e.extend_to(e.blocks_done + 1);
  // binary search for the polynomial owning element n
  size_t lo = 0, hi = e.polys.size();
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (e.start[mid] <= n)
      lo = mid;
    else
      hi = mid;
  }
  int idx = static_cast<int>(n - e.start[lo]);
  return AlgebraicNumber::root_of(e.polys[lo], idx, false);
}

namespace {

// pick the irreducible factor and root pinned down by a refinable enclosure
AlgebraicNumber select_value(const QPoly& composed, const std::function<Box(long)>& enclose) {
  auto factors = factor_q(composed);
  struct Cand {
    const QPoly* f;
    RootSetPtr rs;
    int root;
  };
  long prec = 32;
  Rational eps(1, 1024);
  for (int round = 0; round < 256; ++round) {
    Box e = enclose(prec);
    std::vector<Cand> cands;
    for (auto& [f, mult] : factors) {
      auto rs = isolate(f);
      for (int i = 0; i < rs->count(); ++i)
        if (!rs->box(i).disjoint(e)) cands.push_back({&f, rs, i});
    }
    if (cands.size() == 1)
      return AlgebraicNumber::from_box(*cands[0].f, cands[0].rs->box(cands[0].root), false);
    GLB_CHECK(!cands.empty(), "enclosure missed every candidate root");
    for (auto& c : cands) c.rs->refine(c.root, eps);
    eps /= 16;
    prec = std::min(prec * 2, 1L << 14);
  }
  throw internal_error("value selection did not converge");
}

void check_cap(int da, int db) {
  if (da * db > kQbarDegreeCap)
    throw domain_error("qbar arithmetic beyond the supported degree range");
}

}  // namespace

AlgebraicNumber qbar_add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational())
    return AlgebraicNumber(a.rational_value() + b.rational_value());
  if (a.is_rational()) return qbar_add(b, a);
  if (b.is_rational()) {
    // shift: minpoly of a + r is m(x - r)
    Rational r = b.rational_value();
    QPoly shifted = a.minpoly().shift(-r);
    Box box = a.enclosure(Rational(1, 1024)) + Box::real_point(r);
    return AlgebraicNumber::from_box(shifted, box, false);
  }
  check_cap(a.degree(), b.degree());
  QPoly composed = composed_sum(a.minpoly(), b.minpoly()).monic();
  return select_value(composed, [&](long prec) {
    Rational eps = eps_of_prec(prec);
    return a.enclosure(eps) + b.enclosure(eps);
  });
}

AlgebraicNumber qbar_neg(const AlgebraicNumber& a) {
  if (a.is_rational()) return AlgebraicNumber(-a.rational_value());
  QPoly m = a.minpoly().scale_arg(Rational(-1)).monic();
  Box box = -a.enclosure(Rational(1, 1024));
  return AlgebraicNumber::from_box(m, box, false);
}

AlgebraicNumber qbar_mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational())
    return AlgebraicNumber(a.rational_value() * b.rational_value());
  if (a.is_rational()) return qbar_mul(b, a);
  if (b.is_rational()) {
    Rational r = b.rational_value();
    if (r == 0) return AlgebraicNumber(Rational(0));
    QPoly m = a.minpoly().scale_arg(1 / r).monic();
    Box box = a.enclosure(Rational(1, 1024)) * r;
    return AlgebraicNumber::from_box(m, box, false);
  }
  check_cap(a.degree(), b.degree());
  QPoly composed = composed_product(a.minpoly(), b.minpoly()).monic();
  return select_value(composed, [&](long prec) {
    Rational eps = eps_of_prec(prec);
    return a.enclosure(eps) * b.enclosure(eps);
  });
}

AlgebraicNumber qbar_inv(const AlgebraicNumber& a) {
  if (a.is_zero()) throw domain_error("inverse of zero");
  if (a.is_rational()) return AlgebraicNumber(1 / a.rational_value());
  QPoly m = a.minpoly().reverse().monic();
  // refine until the enclosure excludes zero, then invert it
  Rational eps(1, 1024);
  Box box = a.enclosure(eps);
  while (box.contains_zero()) {
    eps /= 1024;
    box = a.enclosure(eps);
  }
  return AlgebraicNumber::from_box(m, box.recip(), false);
}

AlgebraicNumber qbar_sub(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return qbar_add(a, qbar_neg(b));
}

AlgebraicNumber qbar_div(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return qbar_mul(a, qbar_inv(b));
}

}  // namespace galois
