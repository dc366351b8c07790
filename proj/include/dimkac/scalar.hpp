#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "dimkac/poly.hpp"

namespace dimkac {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// A denominator vanished at a modular evaluation point; the caller resamples.
struct BadPoint : std::runtime_error {
  BadPoint() : std::runtime_error("bad point") {}
};

/// Element of Q(s, t, u1, ..., uN), with q = s^2 t and p = s^2.
///
/// Always reduced: gcd(num, den) = 1 and den has a positive leading
/// coefficient, so equal rational functions have equal representations.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Poly num) : num_(std::move(num)), den_(1) {}
  Scalar(const Poly& num, const Poly& den);

  static Scalar s();
  static Scalar t();
  static Scalar q();  // s^2 t
  static Scalar p();  // s^2
  static Scalar u(int color);
  static Scalar rational(long long num, long long den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  Scalar inverse() const;
  Scalar pow(int e) const;
  /// Replace variable v by the rational function r.
  Scalar substitute(int v, const Scalar& r) const;

  /// Value modulo p with one residue per variable; throws BadPoint if the
  /// denominator vanishes.
  std::uint64_t eval_mod(std::uint64_t p, std::span<const std::uint64_t> values) const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  struct Reduced {};
  Scalar(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_sign();

  Poly num_;
  Poly den_;
};

}  // namespace dimkac
