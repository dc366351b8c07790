#include "dimkac/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "dimkac/modarith.hpp"

namespace dimkac {

std::string variable_name(int v) {
  if (v == kVarS) return "s";
  if (v == kVarT) return "t";
  return "u" + std::to_string(v - 1);
}

Monomial Monomial::variable(int v, unsigned e) {
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](std::uint16_t e) { return e == 0; });
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) {
    unsigned e = unsigned{exp[i]} + other.exp[i];
    if (e > 0xffffu) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
  return r;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

Poly::Poly(long long c) {
  if (c != 0) terms_.push_back({Monomial{}, mpz_class(static_cast<long>(c))});
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(int v) { return monomial(Monomial::variable(v)); }

Poly Poly::monomial(const Monomial& m, const mpz_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Poly(std::move(out));
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

int Poly::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coeff); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two sorted term lists; `negate_b` subtracts instead of adding.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                                    bool negate_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      mpz_class c = negate_b ? mpz_class(a[i].coeff - b[j].coeff) : mpz_class(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.multiply_term(a.terms_[0].coeff, a.terms_[0].mono);
  if (b.size() == 1) return a.multiply_term(b.terms_[0].coeff, b.terms_[0].mono);

  struct Product {
    Monomial mono;
    std::uint32_t i, j;
  };
  std::vector<Product> prods;
  prods.reserve(a.size() * b.size());
  for (std::uint32_t i = 0; i < a.size(); ++i)
    for (std::uint32_t j = 0; j < b.size(); ++j)
      prods.push_back({a.terms_[i].mono * b.terms_[j].mono, i, j});
  std::sort(prods.begin(), prods.end(), [](const Product& x, const Product& y) { return x.mono > y.mono; });

  std::vector<Poly::Term> out;
  mpz_class acc;
  for (std::size_t k = 0; k < prods.size();) {
    std::size_t l = k;
    acc = 0;
    while (l < prods.size() && prods[l].mono == prods[k].mono) {
      mpz_addmul(acc.get_mpz_t(), a.terms_[prods[l].i].coeff.get_mpz_t(), b.terms_[prods[l].j].coeff.get_mpz_t());
      ++l;
    }
    if (acc != 0) out.push_back({prods[k].mono, acc});
    k = l;
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

int Poly::degree(int v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[v]);
  return d;
}

int Poly::min_degree(int v) const {
  if (terms_.empty()) return -1;
  int d = 0xffff;
  for (const auto& t : terms_) d = std::min<int>(d, t.mono.exp[v]);
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::min(m, t.mono);
  return m;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::divide_term(const mpz_class& c, const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term r{t.mono / m, 0};
    mpz_divexact(r.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    out.push_back(std::move(r));
  }
  return Poly(std::move(out));
}

Poly Poly::multiply_term(const mpz_class& c, const Monomial& m) const {
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, t.coeff * c});
  return Poly(std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Poly{};
  if (d.size() == 1) {
    const auto& dt = d.terms_[0];
    for (const auto& t : terms_) {
      if (!dt.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), dt.coeff.get_mpz_t()))
        return std::nullopt;
    }
    return divide_term(dt.coeff, dt.mono);
  }
  for (int v = 0; v < kNumVars; ++v)
    if (degree(v) < d.degree(v)) return std::nullopt;

  const Term& lead = d.terms_.front();
  std::map<Monomial, mpz_class, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  std::vector<Term> quot;
  mpz_class qc;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Monomial qm = it->first / lead.mono;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    rem.erase(it);
    for (std::size_t k = 1; k < d.terms_.size(); ++k) {
      Monomial m = qm * d.terms_[k].mono;
      auto [pos, inserted] = rem.try_emplace(m);
      mpz_submul(pos->second.get_mpz_t(), qc.get_mpz_t(), d.terms_[k].coeff.get_mpz_t());
      if (!inserted && pos->second == 0) rem.erase(pos);
    }
    quot.push_back({qm, qc});
  }
  return Poly(std::move(quot));
}

std::uint64_t Poly::eval_mod(std::uint64_t p, std::span<const std::uint64_t> values) const {
  std::array<std::vector<std::uint64_t>, kNumVars> powers;
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t term = mpz_fdiv_ui(t.coeff.get_mpz_t(), p);
    for (int v = 0; v < kNumVars && term != 0; ++v) {
      unsigned e = t.mono.exp[v];
      if (e == 0) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e) pw.push_back(mulmod(pw.back(), values[static_cast<std::size_t>(v)], p));
      term = mulmod(term, pw[e], p);
    }
    acc = addmod(acc, term, p);
  }
  return acc;
}

Poly Poly::substitute(int v, const Poly& r) const {
  std::vector<Poly> powers{Poly(1)};
  Poly out;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exp[v];
    while (powers.size() <= e) powers.push_back(powers.back() * r);
    Monomial rest = t.mono;
    rest.exp[v] = 0;
    out += powers[e].multiply_term(t.coeff, rest);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.mono.is_one()) {
      out += c.get_str();
      need_star = true;
    }
    for (int v = 0; v < kNumVars; ++v) {
      unsigned e = t.mono.exp[v];
      if (e == 0) continue;
      if (need_star) out += "*";
      out += variable_name(v);
      if (e > 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

}  // namespace dimkac
