#include "dimkac/modular.hpp"

#include <mutex>

namespace dimkac {

ModPoint ModPoint::random(std::uint64_t prime, int colors, std::mt19937_64& rng) {
  ModPoint pt;
  pt.prime = prime;
  pt.colors = colors;
  pt.values.fill(1);
  pt.values[kVarS] = rng() % (prime - 1) + 1;
  pt.values[kVarT] = rng() % (prime - 1) + 1;
  for (int c = 1; c <= colors; ++c) pt.values[static_cast<std::size_t>(var_u(c))] = rng() % (prime - 1) + 1;
  return pt;
}

std::uint64_t word_prime(std::size_t k) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(mu);
  std::uint64_t n = primes.empty() ? (1ull << 62) - 1 : primes.back() - 2;
  while (primes.size() <= k) {
    if (is_prime_u64(n)) primes.push_back(n);
    n -= 2;
  }
  return primes[k];
}

VerifyReport sz_equal(const PointFunction& lhs, const PointFunction& rhs, int trials, std::uint64_t seed, int colors) {
  if (trials < 1) throw std::invalid_argument("sz_equal: trials must be positive");
  VerifyReport report;
  report.primes = {word_prime(0), word_prime(1)};
  std::mt19937_64 rng(seed);
  const int npoints = std::max(trials, 2);
  const int budget = 10 * trials;
  for (int i = 0; i < npoints; ++i) {
    const std::uint64_t prime = report.primes[static_cast<std::size_t>(i) % 2];
    for (;;) {
      ModPoint pt = ModPoint::random(prime, colors, rng);
      try {
        PointResult r{pt, lhs(pt), rhs(pt), false};
        r.ok = r.lhs == r.rhs;
        report.points.push_back(r);
        break;
      } catch (const BadPoint&) {
        if (++report.resamples > budget) throw DegenerateInput("degenerate input: resample budget exhausted");
      }
    }
    if (!report.points.back().ok) {
      report.first_mismatch = report.points.size() - 1;
      report.pass = false;
      return report;
    }
  }
  report.pass = true;
  return report;
}

}  // namespace dimkac
