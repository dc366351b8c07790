#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dimkac/gcd.hpp"
#include "dimkac/modular.hpp"
#include "dimkac/scalar.hpp"

using namespace dimkac;

namespace {

Poly random_poly(std::mt19937_64& rng, int nvars, int terms, int maxdeg) {
  std::vector<Poly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int v = 0; v < nvars; ++v) m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(rng() % (maxdeg + 1));
    long c = static_cast<long>(rng() % 19) - 9;
    ts.push_back({m, mpz_class(c)});
  }
  return Poly::from_terms(std::move(ts));
}

const Scalar s = Scalar::s();
const Scalar t = Scalar::t();
const Scalar q = Scalar::q();
const Scalar one = 1;

}  // namespace

TEST_CASE("poly arithmetic") {
  Poly x = Poly::variable(kVarS), y = Poly::variable(kVarT);
  Poly a = (x + y) * (x - y);
  CHECK(a == x * x - y * y);
  CHECK(a.to_string() == "s^2-t^2");
  CHECK((x + 1).pow(3) == x * x * x + 3 * x * x + 3 * x + 1);
  CHECK(*a.divide_exact(x - y) == x + y);
  CHECK_FALSE(a.divide_exact(x + 2).has_value());
  CHECK(Poly(0).is_zero());
}

TEST_CASE("gcd of products recovers the common factor") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int nv = 1 + trial % 5;
    Poly g = random_poly(rng, nv, 3, 3);
    Poly a = random_poly(rng, nv, 4, 3);
    Poly b = random_poly(rng, nv, 4, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Poly d = gcd(g * a, g * b);
    CHECK((g * a).divide_exact(d).has_value());
    CHECK((g * b).divide_exact(d).has_value());
    CHECK(d.divide_exact(gcd(g, g)).has_value());  // g | d
    CHECK(d.sign() > 0);
  }
}

TEST_CASE("gcd edge cases") {
  Poly x = Poly::variable(kVarS), y = Poly::variable(kVarT), u = Poly::variable(var_u(1));
  CHECK(gcd(Poly(0), Poly(0)).is_zero());
  CHECK(gcd(Poly(6), Poly(4)) == Poly(2));
  CHECK(gcd(-x, Poly(0)) == x);
  CHECK(gcd(x * x * y, x * y * y) == x * y);
  CHECK(gcd(x + y, x - y) == Poly(1));
  Poly f = x * y * u - 3 * u * u + y;
  CHECK(gcd(f * (x + u), f * (y - 1) * 2) == f);
  CHECK(gcd(1 - x.pow(2) * y, 1 - x.pow(4) * y.pow(2)) == x * x * y - 1);
}

TEST_CASE("scalar examples") {
  CHECK(((1 - q) / (1 - t)) * ((1 - t) / (1 - q)) == one);
  CHECK(q / t == s * s);
  CHECK(((1 - q * q) / (1 - t * t)) / ((1 + q) / (1 + t)) == (1 - q) / (1 - t));
  CHECK_THROWS_AS(one / Scalar(), DivisionByZero);
  CHECK(t.pow(-2) * t.pow(2) == one);
  CHECK((one / t).to_string() == "(1)/(t)");
  CHECK((-one / (1 - t)).to_string() == "(1)/(t-1)");
}

TEST_CASE("reduction is canonical") {
  Scalar a = (1 - q) / (1 - t) + t / (1 + t);
  Scalar b = ((1 - q) * (1 + t) + t * (1 - t)) / ((1 - t) * (1 + t));
  CHECK(a == b);
  Scalar c = (a * (q - t) + b * t) / (q - t) - a;
  CHECK(c == b * t / (q - t));
  for (const Scalar& x : {a, (1 - q) / (t * t), s - t}) CHECK(x * x.inverse() == one);
}

TEST_CASE("eval_mod") {
  std::array<std::uint64_t, kNumVars> v{};
  v.fill(1);
  v[kVarS] = 2;
  v[kVarT] = 3;
  CHECK(one.eval_mod(101, v) == 1);
  CHECK((s * s * t).eval_mod(101, v) == 12);
  CHECK_THROWS_AS((one / (t - 3)).eval_mod(101, v), BadPoint);
}

TEST_CASE("eval_mod is a ring homomorphism") {
  std::mt19937_64 rng(5);
  const std::uint64_t p = word_prime(0);
  for (int i = 0; i < 100; ++i) {
    Scalar a(random_poly(rng, 4, 4, 3), random_poly(rng, 4, 2, 2) + Poly(23));
    Scalar b(random_poly(rng, 4, 4, 3));
    ModPoint pt = ModPoint::random(p, 2, rng);
    try {
      CHECK(pt.eval(a * b) == pt.eval(a) * pt.eval(b));
      CHECK(pt.eval(a + b) == pt.eval(a) + pt.eval(b));
    } catch (const BadPoint&) {
    }
  }
}

TEST_CASE("sz_equal") {
  auto ev = [](Scalar x) { return [x](const ModPoint& pt) { return pt.eval(x).v; }; };
  auto r1 = sz_equal(ev(one), ev(one), 5, 1, 1);
  CHECK(r1.pass);
  CHECK(r1.points.size() == 5);
  CHECK(r1.primes.size() == 2);
  CHECK(r1.primes[0] != r1.primes[1]);
  CHECK(sz_equal(ev((1 - q) * (1 - t)), ev(1 - q - t + q * t), 20, 2, 1).pass);
  auto r3 = sz_equal(ev(1 - q), ev(1 - t), 20, 3, 1);
  CHECK_FALSE(r3.pass);
  CHECK(r3.first_mismatch == std::size_t{0});
  // a side that always rejects its point exhausts the budget
  auto bad = [](const ModPoint&) -> std::uint64_t { throw BadPoint(); };
  CHECK_THROWS_AS(sz_equal(bad, bad, 3, 4, 1), DegenerateInput);
  // false-pass rate for distinct polynomials
  int false_pass = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    if (sz_equal(ev(q * q - t), ev(q * q + t), 1, seed, 1).pass) ++false_pass;
  CHECK(false_pass == 0);
}
