#include "galois/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "galois/factor.hpp"

namespace galois {
namespace {

// ---------------------------------------------------------------------------
// Sturm machinery for real roots. The chain is kept integer and primitive;
// dividing by positive content preserves the sign pattern.

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).rem;
    if (r.is_zero()) break;
    // normalize magnitude: scale to unit leading coefficient is fine over Q
    chain.push_back(-r);
  }
  return chain;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_variations_at(const std::vector<QPoly>& chain, const Rational& x) {
  int var = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign_of(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// a bisection point in (a, b) where p does not vanish
Rational nonroot_point(const QPoly& p, const Rational& a, const Rational& b) {
  static const long nums[] = {1, 3, 1, 5, 3, 7};
  static const long dens[] = {2, 7, 3, 11, 5, 13};
  for (int i = 0; i < 6; ++i) {
    Rational m = a + (b - a) * Rational(nums[i], dens[i]);
    if (p.eval(m) != 0) return m;
  }
  // more roots than probes is impossible for degree <= 6 probes + degree cap,
  // fall back to a scan
  for (long k = 2;; ++k) {
    for (long j = 1; j < 2 * k; j += 2) {
      Rational m = a + (b - a) * Rational(j, 2 * k);
      if (p.eval(m) != 0) return m;
    }
  }
}

// isolating open intervals for all real roots of squarefree p
std::vector<Interval> isolate_real(const QPoly& p) {
  std::vector<Interval> out;
  if (p.degree() < 1) return out;
  auto chain = sturm_chain(p);
  Rational B = root_bound(p);
  struct Item {
    Rational a, b;
    int va, vb;
  };
  Rational lo = -B, hi = B;
  std::deque<Item> work{{lo, hi, sign_variations_at(chain, lo), sign_variations_at(chain, hi)}};
  while (!work.empty()) {
    Item it = work.front();
    work.pop_front();
    int count = it.va - it.vb;
    if (count <= 0) continue;
    if (count == 1) {
      out.push_back(Interval(it.a, it.b));
      continue;
    }
    Rational m = nonroot_point(p, it.a, it.b);
    int vm = sign_variations_at(chain, m);
    work.push_back({it.a, m, it.va, vm});
    work.push_back({m, it.b, vm, it.vb});
  }
  std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return out;
}

long prec_for(const Box& b) {
  Rational w = b.max_width();
  long prec = 32;
  if (w > 0 && w < 1) {
    // roughly -log2(w) plus slack
    Integer d = w.get_den(), n = w.get_num();
    prec = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 48;
  }
  return std::max(prec, 32L);
}

Box inflate(const Box& b, const Rational& f) {
  Rational wr = b.re.width() * f, wi = b.im.width() * f;
  Rational pad = wr > wi ? wr : wi;
  if (pad == 0) pad = Rational(1, 1024);
  return Box(Interval(b.re.lo - pad, b.re.hi + pad), Interval(b.im.lo - pad, b.im.hi + pad));
}

bool box_excludes_root(const QPoly& p, const Box& b, long prec) {
  return !eval_on_box(p, b, prec).contains_zero();
}

// Krawczyk certificate: exactly one root of p inside the returned box
struct Certificate {
  bool ok = false;
  Box root_box;
};

Certificate certify(const QPoly& p, const QPoly& dp, const Box& X, long prec) {
  Certificate c;
  auto kr = krawczyk_step(p, dp, X, prec);
  if (!kr.ok) return c;
  if (kr.K.inside(X)) {
    c.ok = true;
    c.root_box = kr.K;
  }
  return c;
}

}  // namespace

Box refine_box_once(const QPoly& p, const QPoly& dp, const Box& b, long prec) {
  if (b.is_real_line()) {
    // exact sign-change bisection; endpoints are never roots unless the box
    // is already a point
    if (b.re.width() == 0) return b;
    Rational a = b.re.lo, c = b.re.hi;
    Rational pa = p.eval(a);
    if (b.re.width() <= Rational(1, 16)) {
      auto kr = krawczyk_step(p, dp, b, prec);
      if (kr.ok) {
        Rational rlo = std::max(kr.K.re.lo, a), rhi = std::min(kr.K.re.hi, c);
        if (rlo <= rhi && (rhi - rlo) * 4 <= (c - a) * 3)
          return Box(Interval(rlo, rhi), Interval(Rational(0)));
      }
    }
    Rational m = (a + c) / 2;
    Rational pm = p.eval(m);
    if (pm == 0) return Box::real_point(m);
    bool left = (pa > 0) != (pm > 0);
    return Box(left ? Interval(a, m) : Interval(m, c), Interval(Rational(0)));
  }
  // Krawczyk contraction keeps every root of b, so intersecting is safe
  auto kr = krawczyk_step(p, dp, b, prec);
  if (kr.ok) {
    Rational rlo = std::max(kr.K.re.lo, b.re.lo), rhi = std::min(kr.K.re.hi, b.re.hi);
    Rational ilo = std::max(kr.K.im.lo, b.im.lo), ihi = std::min(kr.K.im.hi, b.im.hi);
    if (rlo <= rhi && ilo <= ihi) {
      Box nb(Interval(rlo, rhi), Interval(ilo, ihi));
      if (nb.max_width() * 4 <= b.max_width() * 3) return nb;
    }
  }
  // split and keep the child that certifies or the only non-excluded one
  static const std::pair<long, long> fracs[] = {{1, 2}, {3, 7}, {5, 11}};
  for (auto [fn, fd] : fracs) {
    auto split = [&](const Interval& iv) {
      std::vector<Interval> parts;
      if (iv.width() == 0) {
        parts.push_back(iv);
      } else {
        Rational m = iv.lo + iv.width() * Rational(fn, fd);
        parts.emplace_back(iv.lo, m);
        parts.emplace_back(m, iv.hi);
      }
      return parts;
    };
    std::vector<Box> alive;
    for (const auto& re : split(b.re))
      for (const auto& im : split(b.im)) {
        Box k(re, im);
        if (!box_excludes_root(p, k, prec)) alive.push_back(k);
      }
    if (alive.size() == 1) return alive[0];
    for (const auto& k : alive) {
      auto c = certify(p, dp, inflate(k, Rational(1, 4)), prec);
      if (c.ok) {
        Rational rlo = std::max(c.root_box.re.lo, b.re.lo), rhi = std::min(c.root_box.re.hi, b.re.hi);
        Rational ilo = std::max(c.root_box.im.lo, b.im.lo), ihi = std::min(c.root_box.im.hi, b.im.hi);
        if (rlo <= rhi && ilo <= ihi) return Box(Interval(rlo, rhi), Interval(ilo, ihi));
      }
    }
  }
  return b;  // caller raises precision and retries
}

Box refine_box(const QPoly& p, Box b, const Rational& eps) {
  QPoly dp = p.derivative();
  long prec = prec_for(b);
  int stall = 0;
  while (b.max_width() > eps) {
    Box nb = refine_box_once(p, dp, b, prec);
    if (nb.max_width() * 4 <= b.max_width() * 3) {
      b = nb;
      stall = 0;
      prec = std::max(prec, prec_for(b));
    } else {
      b = nb;
      prec = std::min(prec * 2, 1L << 20);
      GLB_CHECK(++stall < 48, "root refinement stalled");
    }
  }
  return b;
}

Box RootSet::box(int i) const {
  std::lock_guard<std::mutex> lock(mu_);
  return boxes_[static_cast<size_t>(i)];
}

std::vector<Box> RootSet::snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return boxes_;
}

void RootSet::refine(int i, const Rational& eps) const {
  Box b;
  {
    std::lock_guard<std::mutex> lock(mu_);
    b = boxes_[static_cast<size_t>(i)];
  }
  if (b.max_width() <= eps) return;
  b = refine_box(p_, b, eps);
  std::lock_guard<std::mutex> lock(mu_);
  Box& cur = boxes_[static_cast<size_t>(i)];
  if (b.max_width() < cur.max_width()) cur = b;
}

int RootSet::identify(const std::function<Box(long)>& enclose) const {
  long prec = 48;
  Rational eps(1, 16);
  for (int round = 0; round < 256; ++round) {
    Box e = enclose(prec);
    std::vector<int> hits;
    for (int i = 0; i < count(); ++i)
      if (!box(i).disjoint(e)) hits.push_back(i);
    if (hits.size() == 1) return hits[0];
    GLB_CHECK(!hits.empty(), "enclosure does not meet any root box");
    for (int i : hits) refine(i, eps);
    eps /= 16;
    prec = std::min(prec * 2, 1L << 22);
  }
  throw internal_error("root identification did not converge");
}

namespace {

// exact decision of re(a) == re(b) when both are roots of rs.poly() and the
// conjugate shortcut failed: locate a + conj(a) and b + conj(b) among the
// real roots of the composed-sum polynomial. Real roots only, so this never
// recurses into complex isolation.
int compare_re_exact(const RootSet& rs, int i, int j) {
  const QPoly& p = rs.poly();
  QPoly S = squarefree_part(composed_sum(p, p));
  std::vector<Interval> reals = isolate_real_roots(S);
  auto sum_index = [&](int idx) {
    Rational eps(1, 4096);
    for (int round = 0; round < 200; ++round) {
      rs.refine(idx, eps);
      Box b = rs.box(idx);
      Interval target = (b + b.conj()).re;  // encloses 2*re(root idx), a real root of S
      std::vector<int> hits;
      for (size_t k = 0; k < reals.size(); ++k)
        if (!reals[k].disjoint(target)) hits.push_back(static_cast<int>(k));
      GLB_CHECK(!hits.empty(), "real part sum missed every real root of the sum polynomial");
      if (hits.size() == 1) return hits[0];
      for (int k : hits) reals[static_cast<size_t>(k)] = bisect_real_root(S, reals[static_cast<size_t>(k)]);
      eps /= 16;
    }
    throw internal_error("real part identification did not converge");
  };
  int si = sum_index(i);
  int sj = sum_index(j);
  if (si == sj) return 0;
  return si < sj ? -1 : 1;  // real roots of S are in increasing order
}

// index of the root equal to conj(root i), using pure box refinement
int conjugate_index(const RootSet& rs, int i) {
  return rs.identify([&](long prec) {
    Rational eps(1, Integer(1) << std::min<long>(prec, 4096));
    rs.refine(i, eps);
    return rs.box(i).conj();
  });
}

}  // namespace

bool root_less(const RootSet& rs, int i, int j) {
  if (i == j) return false;
  Rational eps(1, 1024);
  for (int round = 0; round < 200; ++round) {
    Box a = rs.box(i), b = rs.box(j);
    if (a.re.disjoint(b.re)) return a.re.hi < b.re.lo;
    if (a.im.disjoint(b.im) && round >= 4) {
      // a conjugate pair ties exactly on the real part
      if (conjugate_index(rs, i) == j) return a.im.hi < b.im.lo;
      if (round >= 8) {
        // non-conjugate tie candidates: decide the real parts exactly
        int c = compare_re_exact(rs, i, j);
        if (c != 0) return c < 0;
        return a.im.hi < b.im.lo;
      }
    }
    rs.refine(i, eps);
    rs.refine(j, eps);
    eps /= 64;
  }
  throw internal_error("root comparison did not converge");
}

namespace {

std::vector<Box> isolate_boxes(const QPoly& input) {
  QPoly p = input.monic();
  int n = p.degree();
  std::vector<Box> out;
  if (n == 1) {
    out.push_back(Box::real_point(-p.coeff(0)));
    return out;
  }
  QPoly dp = p.derivative();

  // real roots
  std::vector<Interval> reals = isolate_real(p);
  for (const auto& iv : reals) out.emplace_back(iv, Interval(Rational(0)));

  // non-real roots: certified search in the open upper half plane
  int target = (n - static_cast<int>(reals.size())) / 2;
  GLB_CHECK((n - static_cast<int>(reals.size())) % 2 == 0, "conjugate pairing broken");
  if (target > 0) {
    Rational B = root_bound(p);
    std::deque<Box> work{Box(Interval(-B, B), Interval(Rational(0), B))};
    std::vector<Box> found;
    int steps = 0;
    while (static_cast<int>(found.size()) < target) {
      GLB_CHECK(!work.empty(), "upper half plane search exhausted early");
      GLB_CHECK(++steps < 2000000, "upper half plane search diverged");
      Box b = work.front();
      work.pop_front();
      long prec = std::max(64L, prec_for(b));
      if (box_excludes_root(p, b, prec)) continue;
      auto cert = certify(p, dp, inflate(b, Rational(1, 4)), prec);
      if (cert.ok && cert.root_box.im.lo > 0) {
        // dedup against previously certified roots
        bool dup = false;
        for (auto& e : found) {
          Box ce = e, cc = cert.root_box;
          for (int r = 0; r < 64; ++r) {
            if (ce.disjoint(cc)) break;
            auto hull_cert = certify(p, dp, inflate(ce.hull(cc), Rational(1, 4)), prec + 16 * r);
            if (hull_cert.ok) {
              dup = true;
              break;
            }
            ce = refine_box_once(p, dp, ce, prec + 16 * r);
            cc = refine_box_once(p, dp, cc, prec + 16 * r);
          }
          if (dup) break;
          if (!ce.disjoint(cc)) throw internal_error("ambiguous certified roots");
        }
        if (!dup) found.push_back(cert.root_box);
        continue;
      }
      // split into four and keep searching
      Rational mr = b.re.mid(), mi = b.im.mid();
      bool can_split = b.re.width() > 0 || b.im.width() > 0;
      GLB_CHECK(can_split, "cannot split a point box");
      for (int q = 0; q < 4; ++q) {
        Interval re = (q & 1) ? Interval(mr, b.re.hi) : Interval(b.re.lo, mr);
        Interval im = (q & 2) ? Interval(mi, b.im.hi) : Interval(b.im.lo, mi);
        if (re.width() == 0 && im.width() == 0) continue;
        work.emplace_back(re, im);
      }
    }
    for (const auto& f : found) {
      out.push_back(f);
      out.push_back(f.conj());
    }
  }

  GLB_CHECK(static_cast<int>(out.size()) == n, "root count mismatch");
  return out;
}

struct IsolateCache {
  std::mutex mu;
  std::map<std::string, RootSetPtr> map;
};
IsolateCache& cache() {
  static IsolateCache c;
  return c;
}

}  // namespace

RootSetPtr isolate(const QPoly& input) {
  GLB_CHECK(input.degree() >= 1, "isolate needs degree >= 1");
  QPoly p = input.monic();
  std::string key = p.str();
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().map.find(key);
    if (it != cache().map.end()) return it->second;
  }
  auto boxes = isolate_boxes(p);
  auto rs = std::make_shared<RootSet>(p, std::move(boxes));

  // separate all boxes with positive gaps, then sort canonically
  bool changed = true;
  Rational eps(1, 64);
  while (changed) {
    changed = false;
    for (int i = 0; i < rs->count(); ++i)
      for (int j = i + 1; j < rs->count(); ++j)
        if (!rs->box(i).disjoint(rs->box(j))) {
          rs->refine(i, eps);
          rs->refine(j, eps);
          changed = true;
        }
    eps /= 64;
  }
  std::vector<int> order(static_cast<size_t>(rs->count()));
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return root_less(*rs, a, b); });
  std::vector<Box> sorted;
  sorted.reserve(order.size());
  for (int i : order) sorted.push_back(rs->box(i));
  auto final_rs = std::make_shared<RootSet>(p, std::move(sorted));

  std::lock_guard<std::mutex> lock(cache().mu);
  auto [it, inserted] = cache().map.emplace(key, final_rs);
  return it->second;
}

std::vector<Box> isolate_roots(const QPoly& p) {
  if (p.is_zero()) throw domain_error("isolate_roots of zero polynomial");
  if (p.degree() == 0) return {};
  QPoly g = poly_gcd(p, p.derivative());
  if (g.degree() != 0) throw domain_error("isolate_roots requires a squarefree polynomial");
  return isolate(p)->snapshot();
}

std::vector<Interval> isolate_real_roots(const QPoly& p) {
  GLB_CHECK(p.degree() >= 1, "isolate_real_roots needs degree >= 1");
  return isolate_real(p.monic());
}

Interval bisect_real_root(const QPoly& p, const Interval& iv) {
  if (iv.width() == 0) return iv;
  Rational pa = p.eval(iv.lo);
  Rational m = iv.mid();
  Rational pm = p.eval(m);
  if (pm == 0) return Interval(m);  // rational root pinned exactly
  bool left = (pa > 0) != (pm > 0);
  return left ? Interval(iv.lo, m) : Interval(m, iv.hi);
}

}  // namespace galois
