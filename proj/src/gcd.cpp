#include "dimkac/gcd.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "dimkac/modarith.hpp"

namespace dimkac {
namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z/p, index = degree, no trailing zeros.

using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

std::uint64_t ueval(const UPoly& u, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = u.size(); i-- > 0;) acc = addmod(mulmod(acc, x, p), u[i], p);
  return acc;
}

UPoly umul(const UPoly& a, const UPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

void umonic(UPoly& u, std::uint64_t p) {
  if (u.empty() || u.back() == 1) return;
  std::uint64_t inv = *invmod(u.back(), p);
  for (auto& c : u) c = mulmod(c, inv, p);
}

// Remainder of a by b, in place; b nonzero.
void urem(UPoly& a, const UPoly& b, std::uint64_t p) {
  const int db = udeg(b);
  const std::uint64_t inv = *invmod(b.back(), p);
  while (udeg(a) >= db) {
    const int shift = udeg(a) - db;
    const std::uint64_t f = mulmod(a.back(), inv, p);
    for (int i = 0; i <= db; ++i) a[i + shift] = submod(a[i + shift], mulmod(f, b[i], p), p);
    trim(a);
  }
}

// Exact quotient a / b; b nonzero.
UPoly udiv(UPoly a, const UPoly& b, std::uint64_t p) {
  const int db = udeg(b);
  if (udeg(a) < db) return {};
  const std::uint64_t inv = *invmod(b.back(), p);
  UPoly q(a.size() - b.size() + 1, 0);
  while (udeg(a) >= db) {
    const int shift = udeg(a) - db;
    const std::uint64_t f = mulmod(a.back(), inv, p);
    q[shift] = f;
    for (int i = 0; i <= db; ++i) a[i + shift] = submod(a[i + shift], mulmod(f, b[i], p), p);
    trim(a);
  }
  trim(q);
  return q;
}

UPoly ugcd(UPoly a, UPoly b, std::uint64_t p) {
  while (!b.empty()) {
    urem(a, b, p);
    std::swap(a, b);
  }
  umonic(a, p);
  return a;
}

// ---------------------------------------------------------------------------
// Sparse polynomials over Z/p in k variables (exponent slots 0..k-1 of a
// permuted Monomial). Slot k-1 is the evaluation variable at recursion depth k.

struct TermP {
  Monomial m;
  std::uint64_t c;
};
using PolyP = std::vector<TermP>;  // strictly decreasing lex, nonzero coefficients

bool is_const(const PolyP& a) { return a.size() == 1 && a[0].m.is_one(); }

PolyP one() { return {TermP{Monomial{}, 1}}; }

bool same_rest(const Monomial& a, const Monomial& b, int x) {
  for (int i = 0; i < x; ++i)
    if (a.exp[i] != b.exp[i]) return false;
  return true;
}

struct Group {
  Monomial rest;  // slot x cleared
  UPoly coeffs;   // univariate in slot x
};

// Terms sharing the same exponents in slots < x are contiguous because slot x
// is the least significant active slot.
std::vector<Group> to_groups(const PolyP& a, int x) {
  std::vector<Group> groups;
  for (std::size_t i = 0; i < a.size();) {
    Group g;
    g.rest = a[i].m;
    g.rest.exp[x] = 0;
    std::size_t j = i;
    while (j < a.size() && same_rest(a[j].m, a[i].m, x)) {
      unsigned e = a[j].m.exp[x];
      if (g.coeffs.size() <= e) g.coeffs.resize(e + 1, 0);
      g.coeffs[e] = a[j].c;
      ++j;
    }
    groups.push_back(std::move(g));
    i = j;
  }
  return groups;
}

PolyP from_groups(const std::vector<Group>& groups, int x) {
  PolyP out;
  for (const auto& g : groups) {
    for (std::size_t e = g.coeffs.size(); e-- > 0;) {
      if (g.coeffs[e] == 0) continue;
      TermP t{g.rest, g.coeffs[e]};
      t.m.exp[x] = static_cast<std::uint16_t>(e);
      out.push_back(t);
    }
  }
  return out;
}

UPoly content_x(const PolyP& a, int x, std::uint64_t p) {
  UPoly c;
  for (auto& g : to_groups(a, x)) {
    c = c.empty() ? g.coeffs : ugcd(std::move(c), g.coeffs, p);
    umonic(c, p);
    if (c.size() == 1) break;
  }
  return c;
}

PolyP div_univ(const PolyP& a, const UPoly& u, int x, std::uint64_t p) {
  if (u.size() == 1 && u[0] == 1) return a;
  auto groups = to_groups(a, x);
  for (auto& g : groups) g.coeffs = udiv(g.coeffs, u, p);
  return from_groups(groups, x);
}

PolyP mul_univ(const PolyP& a, const UPoly& u, int x, std::uint64_t p) {
  auto groups = to_groups(a, x);
  for (auto& g : groups) g.coeffs = umul(g.coeffs, u, p);
  return from_groups(groups, x);
}

PolyP eval_slot(const PolyP& a, int x, std::uint64_t alpha, std::uint64_t p) {
  PolyP out;
  for (auto& g : to_groups(a, x)) {
    std::uint64_t v = ueval(g.coeffs, alpha, p);
    if (v != 0) out.push_back({g.rest, v});
  }
  return out;
}

UPoly univariate(const PolyP& a, int x) {
  UPoly u;
  for (const auto& t : a) {
    unsigned e = t.m.exp[x];
    if (u.size() <= e) u.resize(e + 1, 0);
    u[e] = t.c;
  }
  return u;
}

PolyP from_univariate(const UPoly& u, int x) {
  PolyP out;
  for (std::size_t e = u.size(); e-- > 0;) {
    if (u[e] == 0) continue;
    TermP t{Monomial{}, u[e]};
    t.m.exp[x] = static_cast<std::uint16_t>(e);
    out.push_back(t);
  }
  return out;
}

PolyP add_scaled(const PolyP& a, const PolyP& b, std::uint64_t f, std::uint64_t p) {
  PolyP out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].m > b[j].m)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].m > a[i].m) {
      std::uint64_t c = mulmod(b[j].c, f, p);
      if (c) out.push_back({b[j].m, c});
      ++j;
    } else {
      std::uint64_t c = addmod(a[i].c, mulmod(b[j].c, f, p), p);
      if (c) out.push_back({a[i].m, c});
      ++i;
      ++j;
    }
  }
  return out;
}

void scale(PolyP& a, std::uint64_t f, std::uint64_t p) {
  for (auto& t : a) t.c = mulmod(t.c, f, p);
}

void make_monic(PolyP& a, std::uint64_t p) {
  if (a.empty() || a.front().c == 1) return;
  scale(a, *invmod(a.front().c, p), p);
}

int deg_slot(const PolyP& a, int x) {
  int d = 0;
  for (const auto& t : a) d = std::max<int>(d, t.m.exp[x]);
  return d;
}

bool divides_p(const PolyP& d, const PolyP& a, std::uint64_t p) {
  const TermP& lead = d.front();
  const std::uint64_t inv = *invmod(lead.c, p);
  std::map<Monomial, std::uint64_t, std::greater<>> rem;
  for (const auto& t : a) rem.emplace_hint(rem.end(), t.m, t.c);
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.m.divides(it->first)) return false;
    Monomial qm = it->first / lead.m;
    std::uint64_t qc = mulmod(it->second, inv, p);
    rem.erase(it);
    for (std::size_t k = 1; k < d.size(); ++k) {
      auto [pos, inserted] = rem.try_emplace(qm * d[k].m, 0);
      pos->second = submod(pos->second, mulmod(qc, d[k].c, p), p);
      if (pos->second == 0) rem.erase(pos);
    }
  }
  return true;
}

// Monic gcd of nonzero a, b in Z/p[slots 0..k-1].
PolyP pgcd(const PolyP& a, const PolyP& b, int k, std::uint64_t p) {
  if (is_const(a) || is_const(b)) return one();
  if (k == 1) return from_univariate(ugcd(univariate(a, 0), univariate(b, 0), p), 0);

  const int x = k - 1;
  const UPoly ca = content_x(a, x, p);
  const UPoly cb = content_x(b, x, p);
  const UPoly c = ugcd(ca, cb, p);
  const PolyP ap = div_univ(a, ca, x, p);
  const PolyP bp = div_univ(b, cb, x, p);
  if (is_const(ap) || is_const(bp)) return from_univariate(c, x);

  const UPoly la = to_groups(ap, x).front().coeffs;
  const UPoly lb = to_groups(bp, x).front().coeffs;
  const UPoly g = ugcd(la, lb, p);
  const int bound = std::min(deg_slot(ap, x), deg_slot(bp, x)) + udeg(g);

  PolyP h;
  UPoly prod{1};
  Monomial lm_h;
  int npts = 0;
  const std::uint64_t limit = 16 * static_cast<std::uint64_t>(bound) + 256;
  for (std::uint64_t alpha = 1; alpha < limit; ++alpha) {
    if (ueval(la, alpha, p) == 0 || ueval(lb, alpha, p) == 0) continue;
    PolyP img = pgcd(eval_slot(ap, x, alpha, p), eval_slot(bp, x, alpha, p), k - 1, p);
    if (is_const(img)) return from_univariate(c, x);
    scale(img, ueval(g, alpha, p), p);
    const Monomial lm = img.front().m;
    bool stable = false;
    if (npts == 0 || lm < lm_h) {
      h = std::move(img);
      lm_h = lm;
      prod = {submod(0, alpha % p, p), 1};
      npts = 1;
    } else if (lm > lm_h) {
      continue;  // unlucky evaluation point
    } else {
      PolyP diff = add_scaled(img, eval_slot(h, x, alpha, p), p - 1, p);
      if (diff.empty()) {
        stable = true;
      } else {
        std::uint64_t inv = *invmod(ueval(prod, alpha, p), p);
        scale(diff, inv, p);
        h = add_scaled(h, mul_univ(diff, prod, x, p), 1, p);
      }
      prod = umul(prod, UPoly{submod(0, alpha % p, p), 1}, p);
      ++npts;
    }
    if (stable || npts > bound) {
      PolyP hpp = div_univ(h, content_x(h, x, p), x, p);
      if (divides_p(hpp, ap, p) && divides_p(hpp, bp, p)) {
        PolyP r = mul_univ(hpp, c, x, p);
        make_monic(r, p);
        return r;
      }
    }
  }
  throw std::runtime_error("modular gcd did not converge");
}

// ---------------------------------------------------------------------------
// Integer layer.

struct PermutedTerm {
  Monomial m;
  mpz_class c;
};

std::vector<PermutedTerm> permute(const Poly& a, const std::vector<int>& order) {
  std::vector<PermutedTerm> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    PermutedTerm pt{Monomial{}, t.coeff};
    for (std::size_t j = 0; j < order.size(); ++j) pt.m.exp[j] = t.mono.exp[static_cast<std::size_t>(order[j])];
    out.push_back(std::move(pt));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.m > y.m; });
  return out;
}

PolyP reduce(const std::vector<PermutedTerm>& a, std::uint64_t p) {
  PolyP out;
  out.reserve(a.size());
  for (const auto& t : a) {
    std::uint64_t c = mpz_fdiv_ui(t.c.get_mpz_t(), p);
    if (c) out.push_back({t.m, c});
  }
  return out;
}

Poly unpermute(const std::map<Monomial, mpz_class, std::greater<>>& h, const std::vector<int>& order) {
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : h) {
    Poly::Term t{Monomial{}, c};
    for (std::size_t j = 0; j < order.size(); ++j) t.mono.exp[static_cast<std::size_t>(order[j])] = m.exp[j];
    terms.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(terms));
}

std::uint64_t gcd_prime(std::size_t index) {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t n = (1ull << 62) - 57; ps.size() < 64; n -= 2)
      if (is_prime_u64(n)) ps.push_back(n);
    return ps;
  }();
  if (index >= primes.size()) throw std::runtime_error("gcd: ran out of primes");
  return primes[index];
}

Poly normalize_sign(Poly a) { return a.sign() < 0 ? -a : a; }

Poly primitive_gcd(const Poly& a, const Poly& b) {
  std::vector<std::pair<int, int>> degs;
  for (int v = 0; v < kNumVars; ++v) {
    int d = std::max(a.degree(v), b.degree(v));
    if (d > 0) degs.push_back({d, v});
  }
  std::stable_sort(degs.begin(), degs.end(), [](auto& l, auto& r) { return l.first > r.first; });
  std::vector<int> order;
  for (auto& [d, v] : degs) order.push_back(v);
  const int k = static_cast<int>(order.size());

  const auto pa = permute(a, order);
  const auto pb = permute(b, order);
  const mpz_class& lca = pa.front().c;
  const mpz_class& lcb = pb.front().c;
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), lca.get_mpz_t(), lcb.get_mpz_t());

  std::map<Monomial, mpz_class, std::greater<>> h;
  Monomial lm_h;
  mpz_class modulus = 0;
  for (std::size_t pi = 0;; ++pi) {
    const std::uint64_t p = gcd_prime(pi);
    if (mpz_fdiv_ui(lca.get_mpz_t(), p) == 0 || mpz_fdiv_ui(lcb.get_mpz_t(), p) == 0) continue;
    PolyP img = pgcd(reduce(pa, p), reduce(pb, p), k, p);
    if (is_const(img)) return Poly(1);
    scale(img, mpz_fdiv_ui(gamma.get_mpz_t(), p), p);
    const Monomial lm = img.front().m;
    if (modulus == 0 || lm < lm_h) {
      h.clear();
      for (const auto& t : img) h.emplace(t.m, mpz_class(static_cast<unsigned long>(t.c)));
      // symmetric representative
      for (auto& [m, c] : h)
        if (c > p / 2) c -= mpz_class(static_cast<unsigned long>(p));
      modulus = static_cast<unsigned long>(p);
      lm_h = lm;
    } else if (lm > lm_h) {
      continue;
    } else {
      // CRT: combine h (mod modulus) with img (mod p).
      std::map<Monomial, std::uint64_t, std::greater<>> im;
      for (const auto& t : img) im.emplace(t.m, t.c);
      for (const auto& [m, c] : im) h.try_emplace(m, 0);
      const std::uint64_t minv = *invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
      mpz_class new_mod = modulus * static_cast<unsigned long>(p);
      mpz_class half = new_mod / 2;
      for (auto it = h.begin(); it != h.end();) {
        auto f = im.find(it->first);
        std::uint64_t target = f == im.end() ? 0 : f->second;
        std::uint64_t cur = mpz_fdiv_ui(it->second.get_mpz_t(), p);
        std::uint64_t delta = mulmod(submod(target, cur, p), minv, p);
        it->second += modulus * static_cast<unsigned long>(delta);
        if (it->second > half) it->second -= new_mod;
        if (it->second == 0)
          it = h.erase(it);
        else
          ++it;
      }
      modulus = new_mod;
    }
    Poly cand = unpermute(h, order);
    mpz_class cont = cand.content();
    cand = normalize_sign(cand.divide_term(cont, Monomial{}));
    if (a.divide_exact(cand) && b.divide_exact(cand)) return cand;
  }
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);

  const Monomial ma = a.monomial_content();
  const Monomial mb = b.monomial_content();
  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  mpz_class ic;
  mpz_gcd(ic.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const Poly outer = Poly::monomial(Monomial::min(ma, mb), ic);

  if (a.is_term() || b.is_term()) return outer;
  Poly a1 = normalize_sign(a.divide_term(ca, ma));
  Poly b1 = normalize_sign(b.divide_term(cb, mb));
  if (a1.is_constant() || b1.is_constant()) return outer;
  if (a1 == b1) return a1 * outer;

  bool shared = false;
  for (int v = 0; v < kNumVars; ++v)
    if (a1.degree(v) > 0 && b1.degree(v) > 0) shared = true;
  if (!shared) return outer;

  return primitive_gcd(a1, b1) * outer;
}

}  // namespace dimkac
