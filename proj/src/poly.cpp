#include "skewlab/poly.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace skewlab {

Poly::Poly(const Field &f, std::vector<Fel> coeffs) : field_(f) {
  c_.reserve(coeffs.size());
  for (auto &x : coeffs)
    c_.push_back(f.reduce(x));
  strip();
}

void Poly::strip() {
  while (!c_.empty() && field_.is_zero(c_.back()))
    c_.pop_back();
}

Poly Poly::constant(const Field &f, const Fel &c) {
  return Poly(f, {c});
}

Poly Poly::x(const Field &f) { return Poly(f, {f.zero(), f.one()}); }

Fel Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return field_.zero();
  return c_[i];
}

Fel Poly::leading() const {
  if (is_zero())
    throw FieldError("leading coefficient of zero polynomial");
  return c_.back();
}

static void check_same_field(const Poly &a, const Poly &b) {
  if (a.field() != b.field())
    throw FieldError("mixed-field polynomial operands");
}

Poly Poly::operator+(const Poly &o) const {
  check_same_field(*this, o);
  std::vector<Fel> r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = field_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly &o) const {
  check_same_field(*this, o);
  std::vector<Fel> r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = field_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly &o) const {
  check_same_field(*this, o);
  if (is_zero() || o.is_zero())
    return Poly(field_);
  std::vector<Fel> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Fel &s) const {
  std::vector<Fel> r = c_;
  for (auto &x : r)
    x = field_.mul(x, s);
  return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly &o) const {
  return field_ == o.field_ && c_ == o.c_;
}

Poly Poly::monic() const {
  if (is_zero())
    return *this;
  return *this * field_.inv(leading());
}

Poly Poly::derivative() const {
  if (degree() <= 0)
    return Poly(field_);
  std::vector<Fel> r(c_.size() - 1, field_.zero());
  for (size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = field_.mul(c_[i], field_.from_long(static_cast<long>(i)));
  return Poly(field_, std::move(r));
}

Fel Poly::eval(const Fel &x) const {
  Fel acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (field_.is_zero(c_[i]))
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (i == 0 || !field_.is_one(c_[i]))
      os << field_.to_string(c_[i]);
    if (i == 0)
      continue;
    if (!field_.is_one(c_[i]))
      os << "*";
    os << "x";
    if (i > 1)
      os << "^" << i;
  }
  return os.str();
}

void Poly::divmod(const Poly &a, const Poly &b, Poly &q, Poly &r) {
  check_same_field(a, b);
  if (b.is_zero())
    throw FieldError("polynomial division by zero");
  const Field &F = a.field_;
  std::vector<Fel> rem = a.c_;
  int db = b.degree();
  Fel lcinv = F.inv(b.leading());
  std::vector<Fel> quo;
  if (a.degree() >= db)
    quo.assign(a.degree() - db + 1, F.zero());
  for (int i = a.degree(); i >= db; --i) {
    if (F.is_zero(rem[i]))
      continue;
    Fel c = F.mul(rem[i], lcinv);
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.c_[j]));
  }
  q = Poly(F, std::move(quo));
  r = Poly(F, std::move(rem));
}

Poly Poly::operator/(const Poly &b) const {
  Poly q(field_), r(field_);
  divmod(*this, b, q, r);
  return q;
}

Poly Poly::operator%(const Poly &b) const {
  Poly q(field_), r(field_);
  divmod(*this, b, q, r);
  return r;
}

bool Poly::divides(const Poly &f) const {
  if (is_zero())
    return f.is_zero();
  return (f % *this).is_zero();
}

Poly poly_gcd(Poly a, Poly b) {
  check_same_field(a, b);
  while (!b.is_zero()) {
    Poly r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

Poly poly_pow_mod(const Poly &base, const mpz_class &exp, const Poly &m) {
  const Field &F = base.field();
  Poly result = Poly::constant(F, F.one()) % m;
  Poly b = base % m;
  mpz_class e = exp;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Factorization over F_p: squarefree split, distinct-degree, Cantor-Zassenhaus.
// ---------------------------------------------------------------------------

namespace {

Poly random_poly(const Field &F, int deg, std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> dist(0, F.p() - 1);
  std::vector<Fel> c(deg + 1);
  for (auto &x : c)
    x = F.from_long(dist(rng));
  return Poly(F, std::move(c));
}

// f = u(x^p) with u' arbitrary; over F_p the Frobenius fixes coefficients.
Poly pth_root(const Poly &f) {
  const Field &F = f.field();
  long p = F.p();
  std::vector<Fel> c;
  for (int i = 0; i * p <= f.degree(); ++i)
    c.push_back(f.coeff(static_cast<int>(i * p)));
  return Poly(F, std::move(c));
}

// Splits a monic squarefree product of irreducibles of equal degree d.
void equal_degree_split(const Poly &f, int d, std::mt19937_64 &rng,
                        std::vector<Poly> &out) {
  const Field &F = f.field();
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  long p = F.p();
  while (true) {
    Poly r = random_poly(F, f.degree() - 1, rng);
    if (r.degree() < 1)
      continue;
    Poly g = poly_gcd(r, f);
    if (g.degree() == 0) {
      if (p == 2) {
        // trace map: r + r^2 + r^4 + ... + r^(2^(d-1))
        Poly t = r % f, acc = t;
        for (int i = 1; i < d; ++i) {
          t = (t * t) % f;
          acc = acc + t;
        }
        g = poly_gcd(acc, f);
      } else {
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(d));
        e = (e - 1) / 2;
        Poly s = poly_pow_mod(r, e, f);
        g = poly_gcd(s - Poly::constant(F, F.one()), f);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

// Monic squarefree f -> irreducible monic factors.
std::vector<Poly> factor_squarefree_fp(Poly f, std::mt19937_64 &rng) {
  const Field &F = f.field();
  long p = F.p();
  std::vector<Poly> out;
  Poly xp = poly_pow_mod(Poly::x(F), mpz_class(p), f);
  Poly h = xp;
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (f.degree() < 2 * d) {
      out.push_back(f.monic());
      break;
    }
    Poly g = poly_gcd(h - Poly::x(F), f);
    if (g.degree() > 0) {
      equal_degree_split(g.monic(), d, rng, out);
      f = f / g;
      h = h % f;
    }
    h = poly_pow_mod(h, mpz_class(p), f);
  }
  return out;
}

void factor_fp_rec(Poly f, std::mt19937_64 &rng,
                   std::map<std::vector<Fel>, std::pair<Poly, int>> &acc) {
  const Field &F = f.field();
  f = f.monic();
  if (f.degree() <= 0)
    return;
  Poly df = f.derivative();
  if (df.is_zero()) {
    std::map<std::vector<Fel>, std::pair<Poly, int>> inner;
    factor_fp_rec(pth_root(f), rng, inner);
    for (auto &[key, fm] : inner) {
      auto it = acc.find(key);
      int add = fm.second * static_cast<int>(F.p());
      if (it == acc.end())
        acc.emplace(key, std::make_pair(fm.first, add));
      else
        it->second.second += add;
    }
    return;
  }
  Poly g = poly_gcd(f, df);
  Poly sf = (f / g).monic();
  Poly rest = f;
  for (const Poly &q : factor_squarefree_fp(sf, rng)) {
    int e = 0;
    while (q.divides(rest)) {
      rest = rest / q;
      ++e;
    }
    auto it = acc.find(q.coeffs());
    if (it == acc.end())
      acc.emplace(q.coeffs(), std::make_pair(q, e));
    else
      it->second.second += e;
  }
  factor_fp_rec(rest, rng, acc); // factors with multiplicity divisible by p
}

// ---------------------------------------------------------------------------
// Factorization over Q: reduce to a monic integer polynomial, factor mod p,
// Hensel-lift (quadratic, factor tree), naive subset recombination.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>; // lowest degree first, no trailing zeros

int zdeg(const ZPoly &f) { return static_cast<int>(f.size()) - 1; }

void zstrip(ZPoly &f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

ZPoly zmul(const ZPoly &a, const ZPoly &b) {
  if (a.empty() || b.empty())
    return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

void zmod(ZPoly &f, const mpz_class &m) {
  for (auto &c : f) {
    c %= m;
    if (c < 0)
      c += m;
  }
  zstrip(f);
}

ZPoly zsub(const ZPoly &a, const ZPoly &b) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (i < a.size() ? a[i] : mpz_class(0)) -
           (i < b.size() ? b[i] : mpz_class(0));
  zstrip(r);
  return r;
}

ZPoly zadd(const ZPoly &a, const ZPoly &b) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (i < a.size() ? a[i] : mpz_class(0)) +
           (i < b.size() ? b[i] : mpz_class(0));
  zstrip(r);
  return r;
}

// division by a monic divisor, coefficients mod m
void zdivmod_monic(const ZPoly &a, const ZPoly &b, const mpz_class &m,
                   ZPoly &q, ZPoly &r) {
  assert(!b.empty() && b.back() == 1);
  r = a;
  zmod(r, m);
  int db = zdeg(b);
  q.clear();
  if (zdeg(r) >= db)
    q.assign(zdeg(r) - db + 1, mpz_class(0));
  for (int i = zdeg(r); i >= db; --i) {
    mpz_class c = (i < static_cast<int>(r.size())) ? r[i] : mpz_class(0);
    c %= m;
    if (c < 0)
      c += m;
    if (c == 0)
      continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      mpz_class &t = r[i - db + j];
      t = (t - c * b[j]) % m;
      if (t < 0)
        t += m;
    }
  }
  zstrip(q);
  zstrip(r);
}

// One quadratic Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m),
// g and h monic. Produces the same data mod m^2.
void hensel_step(const ZPoly &f, ZPoly &g, ZPoly &h, ZPoly &s, ZPoly &t,
                 const mpz_class &m) {
  mpz_class m2 = m * m;
  ZPoly e = zsub(f, zmul(g, h));
  zmod(e, m2);
  ZPoly q, r;
  zdivmod_monic(zmul(s, e), h, m2, q, r);
  ZPoly gstar = zadd(g, zadd(zmul(t, e), zmul(q, g)));
  zmod(gstar, m2);
  ZPoly hstar = zadd(h, r);
  zmod(hstar, m2);
  ZPoly b = zsub(zadd(zmul(s, gstar), zmul(t, hstar)),
                 ZPoly{mpz_class(1)});
  zmod(b, m2);
  ZPoly c, d;
  zdivmod_monic(zmul(s, b), hstar, m2, c, d);
  ZPoly sstar = zsub(s, d);
  zmod(sstar, m2);
  ZPoly tstar = zsub(t, zadd(zmul(t, b), zmul(c, gstar)));
  zmod(tstar, m2);
  g = gstar;
  h = hstar;
  s = sstar;
  t = tstar;
}

// extended gcd of polynomials over F_p, for the initial Bezout data
void bezout_fp(const Poly &a, const Poly &b, Poly &s, Poly &t) {
  const Field &F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, F.one()), s1(F);
  Poly t0(F), t1 = Poly::constant(F, F.one());
  while (!r1.is_zero()) {
    Poly q(F), r(F);
    Poly::divmod(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  Fel inv = F.inv(r0.leading());
  s = s0 * inv;
  t = t0 * inv;
}

ZPoly fp_to_z(const Poly &f) {
  ZPoly r;
  for (auto &c : f.coeffs())
    r.push_back(c.get_num());
  zstrip(r);
  return r;
}

// Lifts the factorization f = prod(factors) from mod p to mod target,
// where target is a power of p. f and all factors monic.
std::vector<ZPoly> hensel_lift_list(const ZPoly &f,
                                    const std::vector<Poly> &factors_p,
                                    long p, const mpz_class &target) {
  if (factors_p.size() == 1) {
    ZPoly r = f;
    zmod(r, target);
    return {r};
  }
  size_t half = factors_p.size() / 2;
  std::vector<Poly> left(factors_p.begin(), factors_p.begin() + half);
  std::vector<Poly> right(factors_p.begin() + half, factors_p.end());
  const Field &F = factors_p[0].field();
  Poly gp = Poly::constant(F, F.one()), hp = gp;
  for (auto &x : left)
    gp = gp * x;
  for (auto &x : right)
    hp = hp * x;
  Poly sp(F), tp(F);
  bezout_fp(gp, hp, sp, tp);
  ZPoly g = fp_to_z(gp), h = fp_to_z(hp), s = fp_to_z(sp), t = fp_to_z(tp);
  mpz_class m(p);
  while (m < target) {
    hensel_step(f, g, h, s, t, m);
    m = m * m;
  }
  zmod(g, target);
  zmod(h, target);
  auto lg = hensel_lift_list(g, left, p, target);
  auto lh = hensel_lift_list(h, right, p, target);
  lg.insert(lg.end(), lh.begin(), lh.end());
  return lg;
}

void symmetric_rep(ZPoly &f, const mpz_class &m) {
  mpz_class half = m / 2;
  for (auto &c : f)
    if (c > half)
      c -= m;
  zstrip(f);
}

bool zdivides_exact(const ZPoly &g, const ZPoly &f, ZPoly &quotient) {
  // exact division test over Z, g monic
  if (g.empty() || g.back() != 1)
    return false;
  ZPoly r = f;
  int dg = zdeg(g);
  if (zdeg(r) < dg)
    return false;
  ZPoly q(zdeg(r) - dg + 1, mpz_class(0));
  for (int i = zdeg(r); i >= dg; --i) {
    mpz_class c = (i < static_cast<int>(r.size())) ? r[i] : mpz_class(0);
    if (c == 0)
      continue;
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j)
      r[i - dg + j] -= c * g[j];
  }
  zstrip(r);
  if (!r.empty())
    return false;
  quotient = q;
  zstrip(quotient);
  return true;
}

// Factors a monic squarefree integer polynomial into monic integer
// irreducibles (Zassenhaus).
std::vector<ZPoly> factor_monic_squarefree_z(ZPoly f, std::uint64_t seed) {
  std::vector<ZPoly> out;
  if (zdeg(f) <= 0)
    return out;
  if (zdeg(f) == 1) {
    out.push_back(f);
    return out;
  }
  // prime with squarefree reduction
  long p = 0;
  std::vector<Poly> modular;
  for (long cand = 3;; cand += 2) {
    if (!is_prime(cand))
      continue;
    Field F = Field::prime(cand);
    std::vector<Fel> c;
    for (auto &z : f)
      c.push_back(F.from_mpz(z));
    Poly fp(F, std::move(c));
    if (fp.degree() != zdeg(f))
      continue; // cannot happen for monic f, kept for safety
    if (poly_gcd(fp, fp.derivative()).degree() != 0)
      continue;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL ^
                        static_cast<std::uint64_t>(cand));
    modular = factor_squarefree_fp(fp, rng);
    p = cand;
    break;
  }
  if (modular.size() == 1) {
    out.push_back(f);
    return out;
  }
  std::sort(modular.begin(), modular.end(),
            [](const Poly &a, const Poly &b) {
              if (a.degree() != b.degree())
                return a.degree() < b.degree();
              for (int i = a.degree(); i >= 0; --i)
                if (a.coeff(i) != b.coeff(i))
                  return a.coeff(i) < b.coeff(i);
              return false;
            });
  // Mignotte-style bound on factor coefficients of monic f
  mpz_class norm2sq(0);
  for (auto &c : f)
    norm2sq += c * c;
  mpz_class bound(1);
  mpz_class norm(1);
  while (norm * norm < norm2sq)
    ++norm;
  bound = norm + 1;
  mpz_class two_n(1);
  mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(),
               static_cast<mp_bitcnt_t>(zdeg(f) + 1));
  bound *= two_n;
  mpz_class target(p);
  while (target < 2 * bound + 1)
    target *= target;
  std::vector<ZPoly> lifted = hensel_lift_list(f, modular, p, target);

  std::vector<bool> used(lifted.size(), false);
  ZPoly remaining = f;
  size_t active = lifted.size();
  for (size_t card = 1; 2 * card <= active;) {
    // enumerate index subsets of the unused factors of this cardinality
    std::vector<size_t> avail;
    for (size_t i = 0; i < lifted.size(); ++i)
      if (!used[i])
        avail.push_back(i);
    std::vector<size_t> pick(card);
    bool found = false;
    std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) {
      if (pos == card) {
        ZPoly cand{mpz_class(1)};
        for (size_t idx : pick)
          cand = zmul(cand, lifted[idx]);
        zmod(cand, target);
        symmetric_rep(cand, target);
        ZPoly quo;
        if (!cand.empty() && cand.back() == 1 &&
            zdivides_exact(cand, remaining, quo)) {
          out.push_back(cand);
          remaining = quo;
          for (size_t idx : pick)
            used[idx] = true;
          active -= card;
          return true;
        }
        return false;
      }
      for (size_t i = start; i + (card - pos) <= avail.size() + 1 &&
                             i < avail.size();
           ++i) {
        pick[pos] = avail[i];
        if (rec(pos + 1, i + 1))
          return true;
      }
      return false;
    };
    found = rec(0, 0);
    if (!found)
      ++card;
  }
  if (zdeg(remaining) > 0)
    out.push_back(remaining);
  return out;
}

ZPoly q_clear_denominators(const Poly &f) {
  mpz_class lcm(1);
  for (auto &c : f.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly r;
  for (auto &c : f.coeffs()) {
    mpq_class v = c * mpq_class(lcm);
    v.canonicalize();
    assert(v.get_den() == 1);
    r.push_back(v.get_num());
  }
  // primitive part
  mpz_class content(0);
  for (auto &z : r)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content > 1)
    for (auto &z : r)
      z /= content;
  zstrip(r);
  return r;
}

// Factors a squarefree rational polynomial into monic irreducibles over Q.
std::vector<Poly> factor_squarefree_q(const Poly &f, std::uint64_t seed) {
  const Field &F = f.field();
  ZPoly fi = q_clear_denominators(f);
  mpz_class lc = fi.back();
  // monicize: F(x) = lc^(n-1) f(x/lc)
  int n = zdeg(fi);
  ZPoly fm(fi.size());
  mpz_class pw(1);
  for (int i = n; i >= 0; --i) {
    fm[i] = fi[i] * pw;
    if (i > 0)
      pw *= lc;
  }
  std::vector<Poly> out;
  for (const ZPoly &gz : factor_monic_squarefree_z(fm, seed)) {
    // map back: g(x) = G(lc * x), then take the monic normalization
    std::vector<Fel> c(gz.size());
    mpq_class scale(1);
    for (size_t i = 0; i < gz.size(); ++i) {
      c[i] = mpq_class(gz[i]) * scale;
      c[i].canonicalize();
      scale *= lc;
    }
    out.push_back(Poly(F, std::move(c)).monic());
  }
  return out;
}

} // namespace

std::vector<PolyFactor> poly_factor(const Poly &f, std::uint64_t seed,
                                    int degree_ceiling) {
  if (f.is_zero())
    throw FieldError("cannot factor the zero polynomial");
  if (f.degree() > degree_ceiling)
    throw FieldError("degree " + std::to_string(f.degree()) +
                     " exceeds the factorization ceiling " +
                     std::to_string(degree_ceiling));
  const Field &F = f.field();
  std::vector<PolyFactor> out;
  if (f.degree() == 0)
    return out;
  if (F.kind() == Field::Kind::Prime) {
    std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
    std::map<std::vector<Fel>, std::pair<Poly, int>> acc;
    factor_fp_rec(f, rng, acc);
    for (auto &[key, fm] : acc)
      out.push_back({fm.first, fm.second});
  } else {
    Poly g = poly_gcd(f, f.derivative());
    Poly sf = (f / g).monic();
    Poly rest = f.monic();
    for (const Poly &q : factor_squarefree_q(sf, seed)) {
      int e = 0;
      while (q.divides(rest)) {
        rest = rest / q;
        ++e;
      }
      out.push_back({q, e});
    }
    assert(rest.degree() == 0);
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor &a, const PolyFactor &b) {
    if (a.factor.degree() != b.factor.degree())
      return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i)
      if (a.factor.coeff(i) != b.factor.coeff(i))
        return a.factor.coeff(i) < b.factor.coeff(i);
    return false;
  });
  return out;
}

} // namespace skewlab
