#include "galois/qpoly.hpp"

#include <sstream>

namespace galois {

QPoly QPoly::x() { return monomial(1); }

QPoly QPoly::monomial(int k, Rational a) {
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c.back() = std::move(a);
  return QPoly(std::move(c));
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v = -v;
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rational& s) const {
  if (s == 0) return QPoly();
  std::vector<Rational> r(c_);
  for (auto& v : r) v *= s;
  return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  GLB_CHECK(!is_zero(), "monic() on zero polynomial");
  if (c_.back() == 1) return *this;
  Rational inv = 1 / c_.back();
  return *this * inv;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return QPoly(std::move(r));
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QPoly QPoly::compose(const QPoly& inner) const {
  QPoly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + QPoly(c_[i]);
  return acc;
}

QPoly QPoly::shift(const Rational& a) const {
  QPoly inner(std::vector<Rational>{a, Rational(1)});
  return compose(inner);
}

QPoly QPoly::scale_arg(const Rational& s) const {
  GLB_CHECK(s != 0, "scale_arg by zero");
  std::vector<Rational> r(c_);
  Rational pw(1);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] *= pw;
    pw *= s;
  }
  return QPoly(std::move(r));
}

QPoly QPoly::reverse() const {
  std::vector<Rational> r(c_.rbegin(), c_.rend());
  return QPoly(std::move(r));
}

std::string QPoly::str() const {
  std::ostringstream os;
  os << "[";
  if (is_zero()) {
    os << "0";
  } else {
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ", ";
      os << rational_str(c_[i]);
    }
  }
  os << "]";
  return os.str();
}

QPolyDivMod divmod(const QPoly& a, const QPoly& b) {
  GLB_CHECK(!b.is_zero(), "division by zero polynomial");
  std::vector<Rational> rem(a.coeffs());
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {QPoly(), a};
  std::vector<Rational> quot(static_cast<size_t>(da - db) + 1, Rational(0));
  Rational lead_inv = 1 / b.lead();
  for (int i = da; i >= db; --i) {
    Rational q = rem[static_cast<size_t>(i)] * lead_inv;
    if (q == 0) continue;
    quot[static_cast<size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= q * b.coeff(j);
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

bool divides(const QPoly& d, const QPoly& a) {
  if (a.is_zero()) return true;
  if (d.is_zero()) return false;
  return divmod(a, d).rem.is_zero();
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw domain_error("gcd of two zero polynomials");
  QPoly f = a, g = b;
  while (!g.is_zero()) {
    QPoly r = divmod(f, g).rem;
    f = g;
    g = r;
  }
  return f.monic();
}

Rational resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) throw domain_error("resultant of zero polynomial");
  // Euclidean recursion: res(f,g) = lc(g)^(deg f - deg r) * (-1)^(df*dg) * res(g, r)
  QPoly f = a, g = b;
  Rational acc(1);
  while (true) {
    int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      Rational l = g.lead();
      Rational pw(1);
      for (int i = 0; i < df; ++i) pw *= l;
      return acc * pw;
    }
    QPoly r = divmod(f, g).rem;
    if (r.is_zero()) return Rational(0);
    int dr = r.degree();
    if ((static_cast<long>(df) * dg) % 2 == 1) acc = -acc;
    Rational l = g.lead();
    Rational pw(1);
    for (int i = 0; i < df - dr; ++i) pw *= l;
    acc *= pw;
    f = g;
    g = r;
  }
}

Rational discriminant(const QPoly& p) {
  GLB_CHECK(p.degree() >= 1, "discriminant needs degree >= 1");
  Rational r = resultant(p, p.derivative());
  r /= p.lead();
  int n = p.degree();
  if (((static_cast<long>(n) * (n - 1)) / 2) % 2 == 1) r = -r;
  return r;
}

QPoly squarefree_part(const QPoly& p) {
  GLB_CHECK(!p.is_zero(), "squarefree part of zero");
  if (p.degree() == 0) return QPoly(Rational(1));
  QPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.monic();
  return divmod(p, g).quot.monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  GLB_CHECK(!p.is_zero(), "squarefree decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  QPoly f = p.monic();
  if (f.degree() == 0) return out;
  // Yun's algorithm
  QPoly fp = f.derivative();
  QPoly a = poly_gcd(f, fp);
  QPoly b = divmod(f, a).quot;
  QPoly c = divmod(fp, a).quot;
  QPoly d = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    QPoly t = poly_gcd(b, d);
    if (t.degree() > 0) out.emplace_back(t.monic(), mult);
    b = divmod(b, t).quot;
    c = divmod(d, t).quot;
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

Integer poly_height(const QPoly& p) {
  Integer h = 1;
  for (const auto& c : p.coeffs()) {
    Integer hc = rational_height(c);
    if (hc > h) h = hc;
  }
  return h;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  GLB_CHECK(xs.size() == ys.size() && !xs.empty(), "interpolate: bad point count");
  // Newton form
  size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  QPoly acc;
  for (size_t i = n; i-- > 0;) {
    QPoly lin(std::vector<Rational>{-xs[i], Rational(1)});
    acc = acc * lin + QPoly(dd[i]);
  }
  return acc;
}

QPoly composed_sum(const QPoly& a, const QPoly& b) {
  GLB_CHECK(!a.is_zero() && !b.is_zero(), "composed_sum of zero");
  int da = a.degree(), db = b.degree();
  GLB_CHECK(da >= 1 && db >= 1, "composed_sum needs positive degrees");
  int dr = da * db;
  std::vector<Rational> xs, ys;
  xs.reserve(static_cast<size_t>(dr) + 1);
  ys.reserve(static_cast<size_t>(dr) + 1);
  long v = 0;
  while (static_cast<int>(xs.size()) <= dr) {
    Rational x0(v);
    // b(x0 - y) as polynomial in y
    QPoly inner(std::vector<Rational>{x0, Rational(-1)});
    QPoly by = b.compose(inner);
    xs.push_back(x0);
    ys.push_back(resultant(a, by));
    v = v > 0 ? -v : -v + 1;  // 0, 1, -1, 2, -2, ...
  }
  return interpolate(xs, ys);
}

QPoly composed_product(const QPoly& a, const QPoly& b) {
  GLB_CHECK(!a.is_zero() && !b.is_zero(), "composed_product of zero");
  int da = a.degree(), db = b.degree();
  GLB_CHECK(da >= 1 && db >= 1, "composed_product needs positive degrees");
  // constant terms nonzero: keeps the y-degree of y^db * b(x/y) independent
  // of the evaluation point, so specialization commutes with the resultant
  GLB_CHECK(a.coeff(0) != 0 && b.coeff(0) != 0, "composed_product with root 0");
  int dr = da * db;
  std::vector<Rational> xs, ys;
  long v = 0;
  while (static_cast<int>(xs.size()) <= dr) {
    Rational x0(v);
    // y^db * b(x0 / y) as polynomial in y
    std::vector<Rational> c(static_cast<size_t>(db) + 1, Rational(0));
    Rational pw(1);
    for (int k = 0; k <= db; ++k) {
      c[static_cast<size_t>(db - k)] = b.coeff(k) * pw;
      pw *= x0;
    }
    QPoly by{std::move(c)};
    xs.push_back(x0);
    ys.push_back(by.is_zero() ? Rational(0) : resultant(a, by));
    v = v > 0 ? -v : -v + 1;
  }
  return interpolate(xs, ys);
}

Rational root_bound(const QPoly& p) {
  GLB_CHECK(p.degree() >= 1, "root bound needs degree >= 1");
  Rational mx(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational a = abs(p.coeff(i) / p.lead());
    if (a > mx) mx = a;
  }
  return mx + 1;
}

QPoly parse_qpoly(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw parse_error("polynomial must look like [c0, c1, ...]");
  t = t.substr(1, t.size() - 2);
  std::vector<Rational> coeffs;
  if (!t.empty()) {
    size_t pos = 0;
    while (pos <= t.size()) {
      size_t comma = t.find(',', pos);
      std::string item = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      coeffs.push_back(parse_rational(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return QPoly(std::move(coeffs));
}

}  // namespace galois
