#include "galois/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

namespace galois {
namespace {

// ---------------------------------------------------------------------------
// integer polynomials, lowest degree first, trailing zeros trimmed
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

QPoly to_qpoly(const ZPoly& a) {
  std::vector<Rational> c;
  c.reserve(a.size());
  for (const auto& v : a) c.emplace_back(v);
  return QPoly(std::move(c));
}

// clear denominators and content: primitive integer polynomial with
// positive leading coefficient, same roots as p
ZPoly primitive_z(const QPoly& p) {
  Integer l(1);
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(l);
    z.push_back(scaled.get_num());
  }
  ztrim(z);
  if (z.empty()) return z;
  Integer cont = zcontent(z);
  if (z.back() < 0) cont = -cont;
  for (auto& v : z) v /= cont;
  return z;
}

// ---------------------------------------------------------------------------
// arithmetic in F_p[x], p an odd machine prime
using PPoly = std::vector<long>;

struct PMod {
  long p;
  long add(long a, long b) const { return (a + b) % p; }
  long sub(long a, long b) const { return ((a - b) % p + p) % p; }
  long mul(long a, long b) const { return static_cast<long>((__int128)a * b % p); }
  long inv(long a) const {
    long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
      long q = r / nr;
      long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    GLB_CHECK(r == 1, "inverse of non-unit mod p");
    return ((t % p) + p) % p;
  }
};

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

PPoly psub(const PMod& F, const PPoly& a, const PPoly& b) {
  PPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  ptrim(r);
  return r;
}

PPoly pmul(const PMod& F, const PPoly& a, const PPoly& b) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<long>((__int128)a[i] * b[j] % F.p)) % F.p;
  }
  ptrim(r);
  return r;
}

// quotient and remainder of a by b (b nonzero)
void pdivmod(const PMod& F, PPoly a, const PPoly& b, PPoly& quot, PPoly& rem) {
  long linv = F.inv(b.back());
  quot.assign(pdeg(a) >= pdeg(b) ? a.size() - b.size() + 1 : 0, 0);
  while (pdeg(a) >= pdeg(b)) {
    long c = F.mul(a.back(), linv);
    int shift = pdeg(a) - pdeg(b);
    quot[static_cast<size_t>(shift)] = c;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] = F.sub(a[i + shift], F.mul(c, b[i]));
    ptrim(a);
    if (a.empty()) break;
  }
  ptrim(quot);
  rem = std::move(a);
}

PPoly prem(const PMod& F, PPoly a, const PPoly& b) {
  PPoly q, r;
  pdivmod(F, std::move(a), b, q, r);
  return r;
}

PPoly pquot(const PMod& F, PPoly a, const PPoly& b) {
  PPoly q, r;
  pdivmod(F, std::move(a), b, q, r);
  GLB_CHECK(r.empty(), "pquot with nonzero remainder");
  return q;
}

PPoly pmonic(const PMod& F, PPoly a) {
  if (a.empty()) return a;
  long linv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, linv);
  return a;
}

PPoly pgcd(const PMod& F, PPoly a, PPoly b) {
  while (!b.empty()) {
    PPoly r = prem(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(F, std::move(a));
}

PPoly pderiv(const PMod& F, const PPoly& a) {
  if (a.size() <= 1) return {};
  PPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = static_cast<long>((__int128)a[i] * static_cast<long>(i % static_cast<size_t>(F.p)) % F.p);
  ptrim(r);
  return r;
}

PPoly pmulmod(const PMod& F, const PPoly& a, const PPoly& b, const PPoly& m) {
  return prem(F, pmul(F, a, b), m);
}

PPoly ppowmod(const PMod& F, PPoly base, Integer e, const PPoly& m) {
  PPoly r{1};
  base = prem(F, std::move(base), m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmulmod(F, r, base, m);
    base = pmulmod(F, base, base, m);
    e >>= 1;
  }
  return r;
}

// Cantor-Zassenhaus equal-degree split of a squarefree product of
// degree-d irreducibles over F_p, p odd. Deterministically seeded by caller.
void equal_degree_split(const PMod& F, const PPoly& f, int d, std::vector<PPoly>& out,
                        std::mt19937_64& rng) {
  if (pdeg(f) == d) {
    out.push_back(pmonic(F, f));
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  while (true) {
    PPoly a(static_cast<size_t>(pdeg(f)), 0);
    for (auto& c : a) c = static_cast<long>(rng() % static_cast<unsigned long>(F.p));
    ptrim(a);
    if (pdeg(a) < 1) continue;
    PPoly g = pgcd(F, f, a);
    if (pdeg(g) <= 0 || pdeg(g) >= pdeg(f)) {
      PPoly b = ppowmod(F, a, e, f);
      b = psub(F, b, PPoly{1});
      g = pgcd(F, f, b);
    }
    if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
      PPoly h = pquot(F, f, g);
      equal_degree_split(F, g, d, out, rng);
      equal_degree_split(F, h, d, out, rng);
      return;
    }
  }
}

// full factorization of a squarefree monic f over F_p
std::vector<PPoly> factor_mod_p(const PMod& F, PPoly f) {
  std::vector<PPoly> out;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  f = pmonic(F, std::move(f));
  PPoly h{0, 1};  // x^(p^i) mod f, running
  const PPoly x{0, 1};
  int d = 0;
  while (pdeg(f) > 0) {
    ++d;
    if (2 * d > pdeg(f)) {
      out.push_back(f);
      break;
    }
    h = ppowmod(F, h, Integer(F.p), f);
    PPoly g = pgcd(F, f, psub(F, h, x));
    if (pdeg(g) > 0) {
      equal_degree_split(F, g, d, out, rng);
      f = pquot(F, f, g);
      h = prem(F, std::move(h), f);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// arithmetic modulo an Integer modulus
struct ModM {
  Integer m;
  Integer reduce(const Integer& a) const {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  Integer sym(const Integer& a) const {
    Integer r = reduce(a);
    if (r * 2 > m) r -= m;
    return r;
  }
};

void mtrim(ZPoly& a, const ModM& M) {
  for (auto& c : a) c = M.reduce(c);
  ztrim(a);
}

ZPoly mmul(const ModM& M, const ZPoly& a, const ZPoly& b) {
  ZPoly r = zmul(a, b);
  mtrim(r, M);
  return r;
}

ZPoly madd(const ModM& M, const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  mtrim(r, M);
  return r;
}

ZPoly msub(const ModM& M, const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  mtrim(r, M);
  return r;
}

std::pair<ZPoly, ZPoly> mdivmod_monic(const ModM& M, ZPoly a, const ZPoly& b) {
  GLB_CHECK(!b.empty() && M.reduce(b.back()) == 1, "mdivmod needs monic divisor");
  mtrim(a, M);
  if (zdeg(a) < zdeg(b)) return {{}, a};
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  while (!a.empty() && zdeg(a) >= zdeg(b)) {
    Integer c = M.reduce(a.back());
    int shift = zdeg(a) - zdeg(b);
    q[static_cast<size_t>(shift)] = c;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] = M.reduce(a[i + shift] - c * b[i]);
    ztrim(a);
  }
  mtrim(q, M);
  return {q, a};
}

// Quadratic Hensel step: from f = g h and s g + t h = 1 (mod m) to the same
// congruences mod m' (caller supplies m' = m^2 capped). h monic throughout.
struct HenselPair {
  ZPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const ModM& M2) {
  const ZPoly &g = in.g, &h = in.h, &s = in.s, &t = in.t;
  ZPoly e = msub(M2, f, mmul(M2, g, h));
  auto [q, r] = mdivmod_monic(M2, mmul(M2, s, e), h);
  ZPoly g1 = madd(M2, madd(M2, g, mmul(M2, t, e)), mmul(M2, q, g));
  ZPoly h1 = madd(M2, h, r);
  ZPoly b = msub(M2, madd(M2, mmul(M2, s, g1), mmul(M2, t, h1)), ZPoly{Integer(1)});
  auto [c, d] = mdivmod_monic(M2, mmul(M2, s, b), h1);
  ZPoly s1 = msub(M2, s, d);
  ZPoly t1 = msub(M2, msub(M2, t, mmul(M2, t, b)), mmul(M2, c, g1));
  return {g1, h1, s1, t1};
}

// extended euclid over F_p: s*a + t*b = 1 for coprime a, b
void pbezout(const PMod& F, const PPoly& a, const PPoly& b, PPoly& s, PPoly& t) {
  PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    PPoly q, r;
    pdivmod(F, r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    PPoly ns = psub(F, s0, pmul(F, q, s1));
    PPoly nt = psub(F, t0, pmul(F, q, t1));
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  GLB_CHECK(pdeg(r0) == 0, "bezout of non-coprime polynomials");
  long inv = F.inv(r0[0]);
  for (auto& c : s0) c = F.mul(c, inv);
  for (auto& c : t0) c = F.mul(c, inv);
  s = std::move(s0);
  t = std::move(t0);
}

ZPoly lift_of(const PPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (long c : a) r.emplace_back(c);
  return r;
}

// Lift f = lead * prod(monic factors) from mod p to mod `modulus` = p^k.
// Binary split recursion; appends the lifted monic factors to `out`.
void hensel_lift_tree(const ZPoly& f, const std::vector<PPoly>& facs, const PMod& F,
                      const Integer& modulus, std::vector<ZPoly>& out) {
  ModM MF{modulus};
  if (facs.size() == 1) {
    Integer linv;
    GLB_CHECK(mpz_invert(linv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t()) != 0,
              "leading coefficient not invertible");
    ZPoly g = f;
    for (auto& c : g) c = MF.reduce(c * linv);
    ztrim(g);
    out.push_back(g);
    return;
  }
  size_t half = facs.size() / 2;
  PPoly gp{1}, hp{1};
  for (size_t i = 0; i < half; ++i) gp = pmul(F, gp, facs[i]);
  for (size_t i = half; i < facs.size(); ++i) hp = pmul(F, hp, facs[i]);
  long lmodp = static_cast<long>(mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(F.p)));
  PPoly gpl = gp;
  for (auto& c : gpl) c = F.mul(c, lmodp);
  PPoly s, t;
  pbezout(F, gpl, hp, s, t);
  HenselPair pair{lift_of(gpl), lift_of(hp), lift_of(s), lift_of(t)};
  Integer cur(F.p);
  while (cur < modulus) {
    cur *= cur;
    ModM M2{cur};
    pair = hensel_step(f, pair, M2);
  }
  ZPoly G = pair.g, H = pair.h;
  mtrim(G, MF);
  mtrim(H, MF);
  std::vector<PPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
  std::vector<PPoly> right(facs.begin() + static_cast<long>(half), facs.end());
  hensel_lift_tree(G, left, F, modulus, out);
  hensel_lift_tree(H, right, F, modulus, out);
}

Integer znorm2_sq(const ZPoly& a) {
  Integer n = 0;
  for (const auto& c : a) n += c * c;
  return n;
}

// coefficient bound covering lc(f) * (any monic factor of f/lc)
Integer factor_coeff_bound(const ZPoly& f) {
  Integer n2 = znorm2_sq(f);
  Integer s = sqrt(n2) + 1;
  Integer b = abs(f.back()) * s;
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(zdeg(f) + 1));
  return b * two_n;
}

bool try_divide(ZPoly& f, const ZPoly& g) {
  QPoly qf = to_qpoly(f), qg = to_qpoly(g);
  auto dm = divmod(qf, qg);
  if (!dm.rem.is_zero()) return false;
  f = primitive_z(dm.quot);
  return true;
}

std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
  std::vector<ZPoly> result;
  if (zdeg(f) <= 1) {
    result.push_back(std::move(f));
    return result;
  }

  struct Cand {
    long p;
    std::vector<PPoly> facs;
  };
  std::vector<Cand> cands;
  int n = zdeg(f);
  std::vector<bool> degree_possible(static_cast<size_t>(n) + 1, true);
  long p = 1;
  int good = 0;
  while (good < 4) {
    do {
      p += 2;
    } while (mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) == 0);
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    PMod F{p};
    PPoly fp(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      long r = static_cast<long>(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p)));
      fp[i] = r;
    }
    ptrim(fp);
    if (pdeg(fp) != n) continue;
    if (pdeg(pgcd(F, fp, pderiv(F, fp))) != 0) continue;
    ++good;
    Cand c{p, factor_mod_p(F, fp)};
    std::vector<bool> reach(static_cast<size_t>(n) + 1, false);
    reach[0] = true;
    for (const auto& fac : c.facs) {
      int d = pdeg(fac);
      for (int s = n; s >= d; --s)
        if (reach[static_cast<size_t>(s - d)]) reach[static_cast<size_t>(s)] = true;
    }
    for (int i = 0; i <= n; ++i)
      if (!reach[static_cast<size_t>(i)]) degree_possible[static_cast<size_t>(i)] = false;
    if (c.facs.size() == 1) {
      result.push_back(std::move(f));
      return result;
    }
    cands.push_back(std::move(c));
  }
  bool proper_possible = false;
  for (int d = 1; d < n; ++d)
    if (degree_possible[static_cast<size_t>(d)]) proper_possible = true;
  if (!proper_possible) {
    result.push_back(std::move(f));
    return result;
  }

  auto& best = *std::min_element(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.facs.size() < b.facs.size();
  });
  PMod F{best.p};

  Integer bound = factor_coeff_bound(f);
  Integer modulus(best.p);
  while (modulus <= bound * 2) modulus *= best.p;
  std::vector<ZPoly> lifted;
  hensel_lift_tree(f, best.facs, F, modulus, lifted);
  ModM M{modulus};

  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);

  while (!alive.empty() && zdeg(f) > 0) {
    int remaining = static_cast<int>(alive.size());
    bool found = false;
    for (int card = 1; card <= remaining && !found; ++card) {
      if (2 * card > remaining && card != remaining) continue;  // complements searched first
      std::vector<int> idx(static_cast<size_t>(card));
      for (int i = 0; i < card; ++i) idx[static_cast<size_t>(i)] = i;
      while (!found) {
        int dsum = 0;
        for (int i : idx) dsum += zdeg(lifted[static_cast<size_t>(alive[static_cast<size_t>(i)])]);
        if (dsum <= n && degree_possible[static_cast<size_t>(dsum)]) {
          ZPoly cand{f.back()};
          for (int i : idx) cand = mmul(M, cand, lifted[static_cast<size_t>(alive[static_cast<size_t>(i)])]);
          for (auto& c : cand) c = M.sym(c);
          ztrim(cand);
          if (!cand.empty()) {
            Integer cont = zcontent(cand);
            if (cand.back() < 0) cont = -cont;
            for (auto& c : cand) c /= cont;
            if (try_divide(f, cand)) {
              result.push_back(cand);
              std::vector<int> next_alive;
              for (int j = 0; j < remaining; ++j)
                if (std::find(idx.begin(), idx.end(), j) == idx.end())
                  next_alive.push_back(alive[static_cast<size_t>(j)]);
              alive = std::move(next_alive);
              found = true;
              break;
            }
          }
        }
        int i = card - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == remaining - card + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < card; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      }
    }
    if (!found) {
      result.push_back(std::move(f));
      f = ZPoly{Integer(1)};
      break;
    }
  }
  return result;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_q(const QPoly& p) {
  if (p.is_zero()) throw domain_error("factor_q of zero polynomial");
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() == 0) return out;
  for (auto& [sf, mult] : squarefree_decomposition(p)) {
    ZPoly z = primitive_z(sf);
    for (auto& fac : factor_squarefree_z(std::move(z)))
      out.emplace_back(to_qpoly(fac).monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i)
      if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const QPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_q(p);
  return f.size() == 1 && f[0].second == 1;
}

QPoly cyclotomic(int n) {
  GLB_CHECK(n >= 1, "cyclotomic index must be positive");
  static std::map<int, QPoly> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Rational> xn(static_cast<size_t>(n) + 1, Rational(0));
  xn[0] = -1;
  xn.back() = 1;
  QPoly result(std::move(xn));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) result = divmod(result, cyclotomic(d)).quot;
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, result);
  }
  return result;
}

}  // namespace galois
