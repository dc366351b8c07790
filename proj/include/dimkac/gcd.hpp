#pragma once

#include "dimkac/poly.hpp"

namespace dimkac {

/// Greatest common divisor in Z[s, t, u1, ...], normalized to a positive
/// leading coefficient. gcd(0, 0) = 0.
///
/// Brown's dense modular algorithm: images over word-sized primes are computed
/// by recursive evaluation down to univariate Euclid, interpolated with early
/// termination, recombined by CRT and certified by trial division over Z.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace dimkac
