#include "dimkac/scalar.hpp"

#include "dimkac/gcd.hpp"
#include "dimkac/modarith.hpp"

namespace dimkac {
namespace {

Poly exact(const Poly& a, const Poly& d) {
  if (d.is_one()) return a;
  auto q = a.divide_exact(d);
  if (!q) throw std::logic_error("Scalar: inexact division");
  return *std::move(q);
}

}  // namespace

Scalar::Scalar(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  num_ = exact(num, g);
  den_ = exact(den, g);
  normalize_sign();
}

void Scalar::normalize_sign() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::s() { return Scalar(Poly::variable(kVarS)); }
Scalar Scalar::t() { return Scalar(Poly::variable(kVarT)); }
Scalar Scalar::q() { return Scalar(Poly::monomial(Monomial::variable(kVarS, 2) * Monomial::variable(kVarT))); }
Scalar Scalar::p() { return Scalar(Poly::monomial(Monomial::variable(kVarS, 2))); }
Scalar Scalar::u(int color) { return Scalar(Poly::variable(var_u(color))); }
Scalar Scalar::rational(long long num, long long den) { return Scalar(Poly(num), Poly(den)); }

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Reduced{}); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = Scalar(num_ + o.num_, den_);
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  Poly b1 = exact(den_, g);
  Poly d1 = exact(o.den_, g);
  Poly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = Scalar();
  Poly h = gcd(n, g);
  num_ = exact(n, h);
  den_ = b1 * d1 * exact(g, h);
  normalize_sign();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  num_ = exact(num_, g1) * exact(o.num_, g2);
  den_ = exact(den_, g2) * exact(o.den_, g1);
  normalize_sign();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r(den_, num_, Reduced{});
  r.normalize_sign();
  return r;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of a reduced fraction stay reduced.
  return Scalar(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{});
}

Scalar Scalar::substitute(int v, const Scalar& r) const {
  auto sub = [&](const Poly& a) {
    Scalar acc;
    Scalar rp = 1;
    for (int k = 0; k <= a.degree(v); ++k) {
      std::vector<Poly::Term> part;
      for (const auto& term : a.terms()) {
        if (term.mono.exp[static_cast<std::size_t>(v)] != k) continue;
        Poly::Term t2 = term;
        t2.mono.exp[static_cast<std::size_t>(v)] = 0;
        part.push_back(std::move(t2));
      }
      if (!part.empty()) acc += Scalar(Poly::from_terms(std::move(part))) * rp;
      rp *= r;
    }
    return acc;
  };
  return sub(num_) / sub(den_);
}

std::uint64_t Scalar::eval_mod(std::uint64_t p, std::span<const std::uint64_t> values) const {
  std::uint64_t d = den_.eval_mod(p, values);
  auto inv = invmod(d, p);
  if (!inv) throw BadPoint();
  return mulmod(num_.eval_mod(p, values), *inv, p);
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace dimkac
