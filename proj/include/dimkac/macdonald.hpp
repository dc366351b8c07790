#pragma once

#include <optional>
#include <vector>

#include "dimkac/fock.hpp"
#include "dimkac/linalg.hpp"

namespace dimkac {

/// <p_l, p_m>_{q,t} = delta z_l prod (1 - q^{l_k}) / (1 - t^{l_k}).
Scalar inner_pp(const Partition& l, const Partition& m);

/// <f, g>_{q,t} for power-sum expansions.
Scalar inner(const SymFunc<Scalar>& f, const SymFunc<Scalar>& g);

/// Transition data for one degree, all indexed by enum_partitions(n).
struct MacdonaldDegree {
  std::vector<Partition> parts;
  Matrix<Scalar> p_to_m;  // p_l = sum_m p_to_m[l][m] m_m
  Matrix<Scalar> P_to_m;  // P_l = sum_m P_to_m[l][m] m_m, unitriangular
  Matrix<Scalar> P_to_p;  // P_l = sum_m P_to_p[l][m] p_m
  Matrix<Scalar> p_to_P;  // p_l = sum_m p_to_P[l][m] P_m
  std::size_t index(const Partition& l) const;
};

/// Cached per degree; safe for concurrent readers.
const MacdonaldDegree& macdonald_degree(int n);

/// Macdonald polynomial P_l in the power-sum basis.
SymFunc<Scalar> macdonald_P(const Partition& l);

/// Monomial symmetric function m_l in the power-sum basis.
SymFunc<Scalar> monomial_m(const Partition& l);

/// prod_i P_{l^(i)}(a^(i)_{-n}) |u>.
template <class F>
FockVector<F> product_basis(const NTuple& l, const Params<F>& params) {
  FockVector<F> out;
  out.emplace(BosonMonomial{}, params.one());
  for (std::size_t c = 0; c < l.size(); ++c) {
    if (l[c].empty()) continue;
    const auto P = macdonald_P(l[c]);
    FockVector<F> next;
    for (const auto& [mono, coeff] : out) {
      for (const auto& [mu, pc] : P) {
        BosonMonomial m = mono;
        for (int part : mu) ++m[{static_cast<int>(c) + 1, part}];
        add_to(next, m, coeff * params.lift(pc));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Coordinates of a homogeneous vector in the product-Macdonald basis listed in `basis`.
template <class F>
std::vector<F> product_coordinates(const FockVector<F>& v, const std::vector<NTuple>& basis, const Params<F>& params) {
  std::vector<F> out(basis.size(), params.zero());
  const int N = params.N;
  for (const auto& [mono, coeff] : v) {
    // Per-color power-sum label of the monomial.
    std::vector<Partition> mu(static_cast<std::size_t>(N));
    for (const auto& [key, e] : mono)
      for (int j = 0; j < e; ++j) mu[static_cast<std::size_t>(key.first - 1)].push_back(key.second);
    for (auto& m : mu) std::sort(m.rbegin(), m.rend());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      F c = coeff;
      for (int col = 0; col < N && !c.is_zero(); ++col) {
        const auto& target = basis[b][static_cast<std::size_t>(col)];
        const auto& m = mu[static_cast<std::size_t>(col)];
        if (size(target) != size(m)) {
          c = params.zero();
          break;
        }
        if (m.empty()) continue;
        const auto& deg = macdonald_degree(size(m));
        c *= params.lift(deg.p_to_P[deg.index(m)][deg.index(target)]);
      }
      if (!c.is_zero()) out[b] += c;
    }
  }
  return out;
}

/// Linear extension used by default: enum_ntuples(N, level).
std::vector<NTuple> default_order(int N, int level);
/// Another linear extension: default order with each equal-weight block reversed.
std::vector<NTuple> alternate_order(int N, int level);

/// Matrix of X^(1)_0 on the level subspace in the product-Macdonald basis:
/// M[row][col] is the coefficient of P_row in X^(1)_0 P_col.
template <class F>
Matrix<F> x0_matrix(FockEngine<F>& engine, const std::vector<NTuple>& basis) {
  const auto& params = engine.params();
  Matrix<F> M(basis.size(), std::vector<F>(basis.size(), params.zero()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto image = engine.apply(1, 0, product_basis(basis[col], params));
    auto coords = product_coordinates(image, basis, params);
    for (std::size_t row = 0; row < basis.size(); ++row) M[row][col] = coords[row];
  }
  return M;
}

template <class F>
F eps_at(const NTuple& l, const Params<F>& params) {
  F e = params.zero();
  for (std::size_t k = 0; k < l.size(); ++k) e += params.u[k] * params.lift(e_lambda(l[k]));
  return e;
}

struct Degenerate : std::runtime_error {
  explicit Degenerate(const std::string& what) : std::runtime_error(what) {}
};

/// Generalized Macdonald function in the product basis: coefficient 1 at the
/// defining tuple, other support strictly below it.
struct GenMacExpansion {
  NTuple tuple;
  std::vector<NTuple> basis;
  std::vector<Scalar> coefficients;  // aligned with basis
  Scalar eigenvalue;
};

/// Symbolic construction by back-substitution on the triangular X^(1)_0 matrix.
/// Throws Degenerate if an eigenvalue difference vanishes.
GenMacExpansion gen_macdonald(const NTuple& l, const Params<Scalar>& params, const std::vector<NTuple>& basis);
GenMacExpansion gen_macdonald(const NTuple& l, const Params<Scalar>& params);
/// Same, reusing a matrix from x0_matrix over `basis`.
GenMacExpansion gen_macdonald(const NTuple& l, const Params<Scalar>& params, const std::vector<NTuple>& basis,
                              const Matrix<Scalar>& M);

template <class F>
FockVector<F> expansion_vector(const std::vector<NTuple>& basis, const std::vector<F>& coeffs, const Params<F>& params) {
  FockVector<F> out;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coeffs[b].is_zero()) continue;
    for (const auto& [m, c] : product_basis(basis[b], params)) add_to(out, m, c * coeffs[b]);
  }
  return out;
}

template <class F>
struct PointEigenvector {
  std::vector<NTuple> basis;
  std::vector<F> coefficients;  // product-basis coordinates; empty unless kernel_dim == 1
  FockVector<F> vector;
  std::size_t kernel_dim = 0;
  std::optional<std::size_t> lead;  // first (greatest) index in the support
  F eigenvalue;
};

/// Kernel of X^(1)_0 - eps_l at specialized u, normalized to 1 at the
/// greatest tuple in its support. A kernel dimension other than one is
/// reported, not thrown.
template <class F>
PointEigenvector<F> gen_macdonald_at_point(const NTuple& l, FockEngine<F>& engine) {
  const auto& params = engine.params();
  PointEigenvector<F> out;
  out.basis = default_order(params.N, size(l));
  out.eigenvalue = eps_at(l, params);
  Matrix<F> M = x0_matrix(engine, out.basis);
  for (std::size_t i = 0; i < M.size(); ++i) M[i][i] -= out.eigenvalue;
  auto ker = kernel(M, params.zero(), params.one());
  out.kernel_dim = ker.size();
  if (ker.size() != 1) return out;
  auto& v = ker[0];
  std::size_t lead = 0;
  while (v[lead].is_zero()) ++lead;
  const F inv = v[lead].inverse();
  for (auto& c : v) c *= inv;
  out.lead = lead;
  out.coefficients = v;
  out.vector = expansion_vector(out.basis, v, params);
  return out;
}

}  // namespace dimkac
