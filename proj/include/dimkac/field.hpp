#pragma once

#include <vector>

#include "dimkac/modular.hpp"
#include "dimkac/scalar.hpp"

namespace dimkac {

/// Coefficient context for algorithms generic over the field: either exact
/// rational functions (F = Scalar) or values at a modular point (F = Fp).
///
/// `u` may hold specialized values; it is what the algorithms use for u_i.
template <class F>
struct Params;

template <>
struct Params<Scalar> {
  int N = 1;
  std::vector<Scalar> u;  // u[0] is u_1

  explicit Params(int n) : N(n) {
    for (int c = 1; c <= n; ++c) u.push_back(Scalar::u(c));
  }
  Params(int n, std::vector<Scalar> us) : N(n), u(std::move(us)) {}

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(1); }
  Scalar integer(long long n) const { return Scalar(n); }
  Scalar lift(const Scalar& a) const { return a; }
  const Scalar& uc(int color) const { return u[static_cast<std::size_t>(color - 1)]; }
};

template <>
struct Params<Fp> {
  int N = 1;
  ModPoint point;
  std::vector<Fp> u;

  Params(int n, const ModPoint& pt) : N(n), point(pt) {
    for (int c = 1; c <= n; ++c) u.push_back(pt.u(c));
  }
  Params(int n, const ModPoint& pt, std::vector<Fp> us) : N(n), point(pt), u(std::move(us)) {}

  Fp zero() const { return Fp(0, point.prime); }
  Fp one() const { return Fp(1, point.prime); }
  Fp integer(long long n) const { return Fp(reduce_signed(n, point.prime), point.prime); }
  /// Throws BadPoint if the denominator vanishes.
  Fp lift(const Scalar& a) const { return point.eval(a); }
  const Fp& uc(int color) const { return u[static_cast<std::size_t>(color - 1)]; }
};

}  // namespace dimkac
