#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dimkac/modarith.hpp"
#include "dimkac/poly.hpp"
#include "dimkac/scalar.hpp"

namespace dimkac {

/// Element of Z/p; the prime travels with the value.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }

  Fp operator-() const { return Fp(v == 0 ? 0 : p - v, p); }
  Fp& operator+=(const Fp& o) { v = addmod(v, o.v, p); return *this; }
  Fp& operator-=(const Fp& o) { v = submod(v, o.v, p); return *this; }
  Fp& operator*=(const Fp& o) { v = mulmod(v, o.v, p); return *this; }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }

  /// Throws BadPoint on zero: a vanishing denominator means the sample point
  /// is not generic.
  Fp inverse() const {
    auto inv = invmod(v, p);
    if (!inv) throw BadPoint();
    return Fp(*inv, p);
  }
  Fp pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return Fp(powmod(v, static_cast<std::uint64_t>(e), p), p);
  }
  std::string to_string() const { return std::to_string(v); }
};

/// Assignment of nonzero residues to s, t, u1..uN modulo a prime.
struct ModPoint {
  std::uint64_t prime = 0;
  std::array<std::uint64_t, kNumVars> values{};
  int colors = 0;  // number of u-variables in use

  static ModPoint random(std::uint64_t prime, int colors, std::mt19937_64& rng);

  Fp s() const { return Fp(values[kVarS], prime); }
  Fp t() const { return Fp(values[kVarT], prime); }
  Fp u(int color) const { return Fp(values[static_cast<std::size_t>(var_u(color))], prime); }
  Fp eval(const Scalar& a) const { return Fp(a.eval_mod(prime, values), prime); }
  Fp eval(const Poly& a) const { return Fp(a.eval_mod(prime, values), prime); }
};

/// The k-th prime below 2^62 (descending, deterministic).
std::uint64_t word_prime(std::size_t k);

/// Raised when the resample budget is exhausted.
struct DegenerateInput : std::runtime_error {
  explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

struct PointResult {
  ModPoint point;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool ok = false;
};

struct VerifyReport {
  std::vector<PointResult> points;
  std::vector<std::uint64_t> primes;
  int resamples = 0;
  bool pass = false;
  std::optional<std::size_t> first_mismatch;
};

using PointFunction = std::function<std::uint64_t(const ModPoint&)>;

/// Schwartz-Zippel comparison: evaluates both sides at max(trials, 2) random
/// points, alternating between two primes, and stops at the first mismatch.
/// Points where either side hits a vanishing denominator are resampled, up to
/// 10 * trials times.
VerifyReport sz_equal(const PointFunction& lhs, const PointFunction& rhs, int trials, std::uint64_t seed, int colors);

}  // namespace dimkac
