#pragma once

#include <cstdint>
#include <optional>

namespace dimkac {

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = a + b;
  return (r >= p || r < a) ? r - p : r;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

/// Inverse modulo a prime; nullopt for zero.
inline std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) return std::nullopt;
  return powmod(a, p - 2, p);
}

/// Reduce a signed integer into [0, p).
inline std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;  // |v| without overflow
  m %= p;
  return m == 0 ? 0 : p - m;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace dimkac
