#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimkac/singular.hpp"

using namespace dimkac;

namespace {

bool all_zero(const SingularReport& r) {
  for (const auto& c : r.checks)
    if (!c.zero) return false;
  return !r.checks.empty();
}

}  // namespace

TEST_CASE("singular vectors from Theta, both backends") {
  const std::vector<RSData> cases = {{{1}, {1}}, {{2}, {1}}, {{1}, {2}}, {{1, 1}, {1, 1}}, {{2, 1}, {1, 1}}};
  for (auto backend : {Backend::symbolic, Backend::modular})
    for (const auto& d : cases) {
      auto rep = singular_check(d, 0, backend, 7);
      CAPTURE(to_string(rep.theta));
      CHECK(rep.kernel_dim == 1);
      CHECK(rep.depth == size(rep.theta));
      CHECK(rep.checks.size() == static_cast<std::size_t>(d.N() * rep.depth));
      CHECK(all_zero(rep));
      CHECK(rep.verdict == "PASS");
    }
  CHECK(singular_check({{1}, {1}}, 0, Backend::symbolic, 0).theta == NTuple{{}, {1}});
  CHECK(singular_check({{2, 1}, {1, 1}}, 0, Backend::symbolic, 0).theta == NTuple{{}, {1}, {2}});
}

TEST_CASE("deeper checks vanish by grading") {
  auto rep = singular_check({{1}, {1}}, 4, Backend::modular, 3);
  CHECK(rep.checks.size() == 8);
  CHECK(rep.verdict == "PASS");
}

TEST_CASE("generic weights give no singular vector") {
  // (|1) at generic u is an eigenvector but not annihilated by X^(1)_1.
  std::mt19937_64 rng(5);
  const ModPoint pt = ModPoint::random(word_prime(0), 2, rng);
  FockEngine<Fp> eng{Params<Fp>(2, pt)};
  auto ev = gen_macdonald_at_point<Fp>({{}, {1}}, eng);
  REQUIRE(ev.kernel_dim == 1);
  CHECK_FALSE(eng.apply(1, 1, ev.vector).empty());
}

TEST_CASE("rank-one constraint") {
  auto a = rank1_check(1, 1, 2, 2, Backend::symbolic, 0);
  CHECK(a.theta == NTuple{{}, {2}});
  CHECK(a.verdict == "PASS");
  auto b = rank1_check(2, 1, 1, 3, Backend::symbolic, 0);
  CHECK(b.theta == NTuple{{}, {}, {1}});
  CHECK(b.verdict == "PASS");
  auto c = rank1_check(1, 1, 1, 3, Backend::modular, 11);
  CHECK(c.theta == NTuple{{}, {1}, {}});
  CHECK(c.verdict == "PASS");
  CHECK(rank1_check(1, 2, 1, 2, Backend::modular, 11).verdict == "PASS");
  CHECK_THROWS_AS(rank1_check(2, 1, 1, 2, Backend::symbolic, 0), std::invalid_argument);
}

TEST_CASE("u_i = 0 smoke test: a^(1)_{-1}|u> is annihilated") {
  Params<Scalar> par(2, {Scalar(), Scalar::u(2)});
  FockEngine<Scalar> eng{par};
  FockVector<Scalar> v{{{{{1, 1}, 1}}, Scalar(1)}};
  CHECK(eng.apply(1, 1, v).empty());
  CHECK(eng.apply(2, 1, v).empty());
}

TEST_CASE("projection is proportional to P_lambda") {
  const std::vector<std::pair<RSData, Partition>> cases = {
      {{{1}, {1}}, {1}}, {{{1}, {2}}, {2}}, {{{2}, {1}}, {1, 1}}};
  for (auto backend : {Backend::symbolic, Backend::modular})
    for (const auto& [d, lambda] : cases) {
      auto rep = projection_check(d, backend, 7);
      CHECK(rep.lambda == lambda);
      CHECK(rep.kernel_dim == 1);
      CHECK(rep.verdict == "PASS");
      REQUIRE(rep.ratio);
      CHECK(*rep.ratio != "0");
      CHECK(rep.projection.size() == rep.target.size());
    }
  CHECK_THROWS_AS(projection_check({{2, 1}, {1, 1}}, Backend::symbolic, 0), Inapplicable);
}

TEST_CASE("report json") {
  auto j = to_json(singular_check({{1}, {1}}, 0, Backend::symbolic, 0));
  CHECK(j["theta"] == "|1");
  CHECK(j["verdict"] == "PASS");
  CHECK(j["annihilation"].size() == 2);
  auto p = to_json(projection_check({{1}, {1}}, Backend::symbolic, 0));
  CHECK(p["ratio"] == "s");
  CHECK(parse_backend("modular") == Backend::modular);
  CHECK_THROWS_AS(parse_backend("exact"), std::invalid_argument);
}
