#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dimkac/linalg.hpp"
#include "dimkac/macdonald.hpp"

namespace dimkac {

/// X^(1)_{-l1_1} X^(1)_{-l1_2} ... X^(N)_{-lN_1} ... |u>, applied right to left.
template <class F>
FockVector<F> pbw_vector(const NTuple& l, FockEngine<F>& engine) {
  FockVector<F> v = engine.vacuum();
  for (std::size_t c = l.size(); c-- > 0;)
    for (std::size_t k = l[c].size(); k-- > 0;) v = engine.apply(static_cast<int>(c) + 1, -l[c][k], v);
  return v;
}

/// <u| ... X^(1)_{l1_2} X^(1)_{l1_1} applied to `ket`; the factor next to the
/// ket acts first.
template <class F>
F bra_pairing(const NTuple& l, const FockVector<F>& ket, FockEngine<F>& engine) {
  FockVector<F> v = ket;
  for (std::size_t c = 0; c < l.size() && !v.empty(); ++c)
    for (std::size_t k = 0; k < l[c].size() && !v.empty(); ++k) v = engine.apply(static_cast<int>(c) + 1, l[c][k], v);
  return vacuum_coefficient(v, engine.params().zero());
}

template <class F>
F gram_entry(const NTuple& l, const NTuple& m, FockEngine<F>& engine) {
  if (size(l) != size(m)) return engine.params().zero();
  return bra_pairing(l, pbw_vector(m, engine), engine);
}

/// Gram matrix of the level subspace in enum_ntuples order: G[row][col] = <X_row|X_col>.
template <class F>
Matrix<F> gram_matrix(int level, FockEngine<F>& engine) {
  const auto basis = enum_ntuples(engine.N(), level);
  std::vector<FockVector<F>> kets;
  for (const auto& m : basis) kets.push_back(pbw_vector(m, engine));
  Matrix<F> G(basis.size(), std::vector<F>(basis.size(), engine.params().zero()));
  for (std::size_t row = 0; row < basis.size(); ++row)
    for (std::size_t col = 0; col < basis.size(); ++col) G[row][col] = bra_pairing(basis[row], kets[col], engine);
  return G;
}

/// Gram matrix factored through the boson monomials of the level: G = B A with
/// A[m][col] the coefficient of monomial m in |X_col> and B[row][m] = <X_row|m>.
/// Monomials are labeled by the same tuples (tuple l <-> prod a^(c)_{-l^(c)_k}).
template <class F>
struct GramFactors {
  std::vector<NTuple> basis;
  Matrix<F> B;
  Matrix<F> A;
};

template <class F>
GramFactors<F> gram_factors(int level, FockEngine<F>& engine) {
  const auto& params = engine.params();
  GramFactors<F> out;
  out.basis = enum_ntuples(engine.N(), level);
  const std::size_t d = out.basis.size();
  std::vector<BosonMonomial> monos;
  for (const auto& l : out.basis) {
    BosonMonomial m;
    for (std::size_t c = 0; c < l.size(); ++c)
      for (int part : l[c]) ++m[{static_cast<int>(c) + 1, part}];
    monos.push_back(std::move(m));
  }
  out.A.assign(d, std::vector<F>(d, params.zero()));
  out.B.assign(d, std::vector<F>(d, params.zero()));
  for (std::size_t col = 0; col < d; ++col) {
    const auto v = pbw_vector(out.basis[col], engine);
    for (std::size_t m = 0; m < d; ++m) {
      auto it = v.find(monos[m]);
      if (it != v.end()) out.A[m][col] = it->second;
    }
  }
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t m = 0; m < d; ++m)
      out.B[row][m] = bra_pairing(out.basis[row], FockVector<F>{{monos[m], params.one()}}, engine);
  return out;
}

/// Largest matrix dimension for which the symbolic determinant is attempted.
inline constexpr std::size_t kSymbolicMaxDim = 10;

/// Symbolic Gram determinant, computed as det B * det A after checking G = B A
/// entrywise. Throws std::invalid_argument above kSymbolicMaxDim.
Scalar kac_lhs_symbolic(int N, int level);
/// Gram determinant at one modular point with generic u. Throws BadPoint.
Fp kac_lhs_at(int N, int level, const ModPoint& pt);

/// Closed product formula for the level-n determinant.
Scalar kac_rhs(int N, int level);
/// The same product printed factor by factor, e.g. "(-s^2*t+1)*(...)^2".
std::string kac_rhs_text(int N, int level);

struct GramReport {
  int N = 0;
  int level = 0;
  std::size_t dimension = 0;
  std::string backend;  // "symbolic" or "modular"
  std::string lhs = "det <X_l|X_m>";
  std::string rhs;
  std::optional<bool> symbolic_equal;
  VerifyReport modular;
  bool pass = false;
  double seconds = 0;
};

/// Modular check at `trials` points over two primes; the exact symbolic
/// comparison is added when `symbolic` is set and the dimension allows it.
GramReport verify_kac(int N, int level, int trials, std::uint64_t seed, bool symbolic = false);
/// Same against an arbitrary right-hand side (used for mutation controls).
GramReport verify_kac_against(int N, int level, const Scalar& rhs, int trials, std::uint64_t seed, bool symbolic,
                              std::optional<std::string> rhs_text = std::nullopt);

nlohmann::ordered_json to_json(const GramReport& r, bool reproducible);
nlohmann::ordered_json to_json(const PointResult& r);

}  // namespace dimkac
