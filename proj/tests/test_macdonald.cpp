#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dimkac/macdonald.hpp"

using namespace dimkac;

namespace {

const Scalar t = Scalar::t();
const Scalar q = Scalar::q();

SymFunc<Scalar> pbasis(std::initializer_list<std::pair<Partition, Scalar>> terms) {
  SymFunc<Scalar> f;
  for (const auto& [l, c] : terms) f[l] += c;
  std::erase_if(f, [](const auto& kv) { return kv.second.is_zero(); });
  return f;
}

FockVector<Scalar> residual(FockEngine<Scalar>& eng, const FockVector<Scalar>& v, const Scalar& eps) {
  return add(eng.apply(1, 0, v), v, -eps);
}

}  // namespace

TEST_CASE("inner_pp") {
  CHECK(inner_pp({1}, {1}) == (1 - q) / (1 - t));
  CHECK(inner_pp({2}, {1, 1}).is_zero());
  CHECK(inner_pp({1, 1}, {1, 1}) == 2 * ((1 - q) / (1 - t)).pow(2));
  CHECK(inner_pp({2, 1}, {2, 1}) == 2 * (1 - q * q) / (1 - t * t) * (1 - q) / (1 - t));
}

TEST_CASE("small Macdonald polynomials") {
  CHECK(macdonald_P({1}) == pbasis({{{1}, 1}}));
  CHECK(macdonald_P({1, 1}) == pbasis({{{1, 1}, Scalar::rational(1, 2)}, {{2}, Scalar::rational(-1, 2)}}));
  // m_2 = p_2, m_11 = (p_1^2 - p_2)/2
  Scalar c = (1 + q) * (1 - t) / (1 - q * t);
  CHECK(macdonald_P({2}) == pbasis({{{2}, 1 - c / 2}, {{1, 1}, c / 2}}));
  CHECK(monomial_m({1, 1}) == pbasis({{{1, 1}, Scalar::rational(1, 2)}, {{2}, Scalar::rational(-1, 2)}}));
}

TEST_CASE("orthogonality and unitriangularity") {
  for (int n = 1; n <= 5; ++n) {
    const auto& d = macdonald_degree(n);
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
      for (std::size_t j = 0; j < d.parts.size(); ++j) {
        if (i != j) CHECK(inner(macdonald_P(d.parts[i]), macdonald_P(d.parts[j])).is_zero());
        const Scalar& c = d.P_to_m[i][j];
        if (i == j) CHECK(c == Scalar(1));
        else if (!c.is_zero()) CHECK(dominates(d.parts[i], d.parts[j]));
      }
    }
  }
}

TEST_CASE("product_basis") {
  Params<Scalar> par(2);
  CHECK(product_basis<Scalar>({{}, {}}, par) == FockVector<Scalar>{{{}, Scalar(1)}});
  CHECK(product_basis<Scalar>({{1}, {}}, par) == FockVector<Scalar>{{{{{1, 1}, 1}}, Scalar(1)}});
  CHECK(product_basis<Scalar>({{1}, {1}}, par) == FockVector<Scalar>{{{{{1, 1}, 1}, {{2, 1}, 1}}, Scalar(1)}});
  // coordinates invert the construction
  for (int level = 0; level <= 3; ++level) {
    auto basis = default_order(2, level);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto coords = product_coordinates(product_basis(basis[b], par), basis, par);
      for (std::size_t k = 0; k < basis.size(); ++k) CHECK(coords[k] == Scalar(k == b ? 1 : 0));
    }
  }
}

TEST_CASE("x0_matrix small cases") {
  {
    FockEngine<Scalar> eng{Params<Scalar>(3)};
    auto M = x0_matrix(eng, default_order(3, 0));
    CHECK(M == Matrix<Scalar>{{Scalar::u(1) + Scalar::u(2) + Scalar::u(3)}});
  }
  {
    FockEngine<Scalar> eng{Params<Scalar>(1)};
    for (int level = 1; level <= 4; ++level) {
      auto basis = default_order(1, level);
      auto M = x0_matrix(eng, basis);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
          CHECK(M[i][j] == (i == j ? Scalar::u(1) * e_lambda(basis[i][0]) : Scalar()));
    }
  }
  {
    FockEngine<Scalar> eng{Params<Scalar>(2)};
    auto basis = default_order(2, 1);
    REQUIRE(basis == std::vector<NTuple>{{{}, {1}}, {{1}, {}}});
    auto M = x0_matrix(eng, basis);
    const Scalar e1 = e_lambda({1});
    CHECK(M[0][0] == Scalar::u(1) + Scalar::u(2) * e1);
    CHECK(M[1][1] == Scalar::u(1) * e1 + Scalar::u(2));
    CHECK(M[0][1].is_zero());
    CHECK_FALSE(M[1][0].is_zero());
  }
}

TEST_CASE("x0_matrix triangularity and diagonal, N <= 3, level <= 3") {
  for (int N = 1; N <= 3; ++N) {
    Params<Scalar> par(N);
    FockEngine<Scalar> eng{par};
    for (int level = 0; level <= 3; ++level) {
      auto basis = default_order(N, level);
      auto M = x0_matrix(eng, basis);
      for (std::size_t row = 0; row < basis.size(); ++row)
        for (std::size_t col = 0; col < basis.size(); ++col) {
          if (row == col) CHECK(M[row][col] == eps_eigenvalue(basis[row], par.u));
          else if (!M[row][col].is_zero()) CHECK(less_star(basis[row], basis[col]));
        }
    }
  }
}

TEST_CASE("generalized Macdonald functions are exact eigenvectors, N <= 3, level <= 3") {
  for (int N = 1; N <= 3; ++N) {
    Params<Scalar> par(N);
    FockEngine<Scalar> eng{par};
    for (int level = 0; level <= 3; ++level) {
      auto basis = default_order(N, level);
      auto M = x0_matrix(eng, basis);
      for (const auto& l : basis) {
        auto g = gen_macdonald(l, par, basis, M);
        for (std::size_t b = 0; b < basis.size(); ++b) {
          if (basis[b] == l) CHECK(g.coefficients[b] == Scalar(1));
          else if (!g.coefficients[b].is_zero()) CHECK(less_star(basis[b], l));
        }
        auto v = expansion_vector(basis, g.coefficients, par);
        CHECK(residual(eng, v, eps_eigenvalue(l, par.u)).empty());
      }
    }
  }
}

TEST_CASE("N = 1 reduces to ordinary Macdonald functions") {
  Params<Scalar> par(1);
  for (int n = 0; n <= 4; ++n)
    for (const auto& l : enum_partitions(n)) {
      auto g = gen_macdonald({l}, par);
      for (std::size_t b = 0; b < g.basis.size(); ++b) CHECK(g.coefficients[b] == Scalar(g.basis[b][0] == l ? 1 : 0));
    }
}

TEST_CASE("N = 2 example: (0,(1))") {
  Params<Scalar> par(2);
  FockEngine<Scalar> eng{par};
  auto g = gen_macdonald({{}, {1}}, par);
  CHECK(g.eigenvalue == Scalar::u(1) + Scalar::u(2) * e_lambda({1}));
  CHECK(residual(eng, expansion_vector(g.basis, g.coefficients, par), g.eigenvalue).empty());
  CHECK(gen_macdonald({{}, {}}, par).coefficients == std::vector<Scalar>{Scalar(1)});
}

TEST_CASE("result does not depend on the linear extension") {
  Params<Scalar> par(2);
  auto a = default_order(2, 2), b = alternate_order(2, 2);
  CHECK(a != b);
  for (const auto& l : a) {
    auto ga = gen_macdonald(l, par, a);
    auto gb = gen_macdonald(l, par, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto j = static_cast<std::size_t>(std::find(b.begin(), b.end(), a[i]) - b.begin());
      CHECK(ga.coefficients[i] == gb.coefficients[j]);
    }
  }
}

TEST_CASE("point eigenvectors") {
  std::mt19937_64 rng(21);
  const ModPoint pt = ModPoint::random(word_prime(1), 2, rng);
  Params<Fp> fpar(2, pt);
  FockEngine<Fp> feng{fpar};
  Params<Scalar> par(2);
  for (const auto& l : default_order(2, 2)) {
    auto g = gen_macdonald(l, par);
    auto h = gen_macdonald_at_point(l, feng);
    REQUIRE(h.kernel_dim == 1);
    for (std::size_t b = 0; b < g.basis.size(); ++b) CHECK(pt.eval(g.coefficients[b]) == h.coefficients[b]);
    CHECK(g.basis[*h.lead] == l);
  }
  auto vac = gen_macdonald_at_point<Fp>({{}, {}}, feng);
  CHECK(vac.kernel_dim == 1);
  CHECK(vac.vector == feng.vacuum());

  // specialized weight u_1 = q t^-1 u_2
  auto u = specialize_u({{1}, {1}}, Scalar::u(2));
  FockEngine<Scalar> seng{Params<Scalar>(2, u)};
  auto sp = gen_macdonald_at_point<Scalar>({{}, {1}}, seng);
  CHECK(sp.kernel_dim == 1);
}
