#include "dimkac/macdonald.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace dimkac {
namespace {

// Coefficient of x^m in p_l: assignments of the parts of l to rows of m with
// matching row sums.
long long count_assignments(const Partition& l, const Partition& m) {
  std::vector<int> room(m.begin(), m.end());
  auto rec = [&](auto&& self, std::size_t i) -> long long {
    if (i == l.size()) return 1;
    long long total = 0;
    for (auto& r : room) {
      if (r < l[i]) continue;
      r -= l[i];
      total += self(self, i + 1);
      r += l[i];
    }
    return total;
  };
  return rec(rec, 0);
}

Matrix<Scalar> inverse(const Matrix<Scalar>& a) {
  const std::size_t n = a.size();
  Matrix<Scalar> aug(n, std::vector<Scalar>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (piv.size() != n || (n > 0 && piv.back() != n - 1)) throw std::logic_error("singular transition matrix");
  Matrix<Scalar> out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<Scalar> out(n, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Scalar inner_vec(const std::vector<Scalar>& x, const std::vector<Scalar>& y, const std::vector<Scalar>& norms) {
  Scalar r;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) r += x[i] * y[i] * norms[i];
  return r;
}

std::unique_ptr<MacdonaldDegree> build_degree(int n) {
  auto d = std::make_unique<MacdonaldDegree>();
  d->parts = enum_partitions(n);
  const std::size_t k = d->parts.size();
  d->p_to_m.assign(k, std::vector<Scalar>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) d->p_to_m[i][j] = Scalar(count_assignments(d->parts[i], d->parts[j]));
  const Matrix<Scalar> m_to_p = inverse(d->p_to_m);

  std::vector<Scalar> norms(k);
  for (std::size_t i = 0; i < k; ++i) norms[i] = inner_pp(d->parts[i], d->parts[i]);

  // Gram-Schmidt from the bottom of the reverse-lex order, which extends dominance.
  d->P_to_p.assign(k, std::vector<Scalar>(k));
  std::vector<Scalar> self_norm(k);
  for (std::size_t i = k; i-- > 0;) {
    std::vector<Scalar> v = m_to_p[i];
    for (std::size_t j = k - 1; j > i; --j) {
      Scalar c = inner_vec(m_to_p[i], d->P_to_p[j], norms) / self_norm[j];
      if (c.is_zero()) continue;
      for (std::size_t x = 0; x < k; ++x) v[x] -= c * d->P_to_p[j][x];
    }
    self_norm[i] = inner_vec(v, v, norms);
    d->P_to_p[i] = std::move(v);
  }
  d->P_to_m = multiply(d->P_to_p, d->p_to_m);
  d->p_to_P = multiply(d->p_to_m, inverse(d->P_to_m));
  return d;
}

}  // namespace

std::size_t MacdonaldDegree::index(const Partition& l) const {
  auto it = std::find(parts.begin(), parts.end(), l);
  if (it == parts.end()) throw std::out_of_range("partition of the wrong degree");
  return static_cast<std::size_t>(it - parts.begin());
}

Scalar inner_pp(const Partition& l, const Partition& m) {
  if (l != m) return Scalar();
  const Scalar q = Scalar::q(), t = Scalar::t();
  Scalar r = 1;
  std::map<int, int> mult;
  for (int part : l) ++mult[part];
  for (auto [part, k] : mult)
    for (int j = 1; j <= k; ++j) r *= Scalar(static_cast<long long>(part) * j);
  for (int part : l) r *= (1 - q.pow(part)) / (1 - t.pow(part));
  return r;
}

Scalar inner(const SymFunc<Scalar>& f, const SymFunc<Scalar>& g) {
  Scalar r;
  for (const auto& [l, c] : f) {
    auto it = g.find(l);
    if (it != g.end()) r += c * it->second * inner_pp(l, l);
  }
  return r;
}

const MacdonaldDegree& macdonald_degree(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<MacdonaldDegree>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_degree(n);
  return *slot;
}

SymFunc<Scalar> macdonald_P(const Partition& l) {
  const auto& d = macdonald_degree(size(l));
  const auto& row = d.P_to_p[d.index(l)];
  SymFunc<Scalar> out;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero()) out.emplace(d.parts[j], row[j]);
  return out;
}

SymFunc<Scalar> monomial_m(const Partition& l) {
  const auto& d = macdonald_degree(size(l));
  const auto m_to_p = inverse(d.p_to_m);
  const auto& row = m_to_p[d.index(l)];
  SymFunc<Scalar> out;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero()) out.emplace(d.parts[j], row[j]);
  return out;
}

std::vector<NTuple> default_order(int N, int level) { return enum_ntuples(N, level); }

std::vector<NTuple> alternate_order(int N, int level) {
  auto basis = enum_ntuples(N, level);
  // Tuples with equal color weights are incomparable; reverse each such block.
  auto weights = [](const NTuple& l) {
    std::vector<int> w;
    for (const auto& part : l) w.push_back(size(part));
    return w;
  };
  for (auto first = basis.begin(); first != basis.end();) {
    auto last = std::find_if(first, basis.end(), [&](const NTuple& l) { return weights(l) != weights(*first); });
    std::reverse(first, last);
    first = last;
  }
  return basis;
}

GenMacExpansion gen_macdonald(const NTuple& l, const Params<Scalar>& params, const std::vector<NTuple>& basis) {
  FockEngine<Scalar> engine(params);
  return gen_macdonald(l, params, basis, x0_matrix(engine, basis));
}

GenMacExpansion gen_macdonald(const NTuple& l, const Params<Scalar>& params, const std::vector<NTuple>& basis,
                              const Matrix<Scalar>& M) {
  auto it = std::find(basis.begin(), basis.end(), l);
  if (it == basis.end()) throw std::invalid_argument("gen_macdonald: tuple not in basis");
  const std::size_t idx = static_cast<std::size_t>(it - basis.begin());
  GenMacExpansion out{l, basis, std::vector<Scalar>(basis.size()), eps_at(l, params)};
  out.coefficients[idx] = 1;
  for (std::size_t mu = idx + 1; mu < basis.size(); ++mu) {
    Scalar acc;
    for (std::size_t nu = idx; nu < mu; ++nu)
      if (!M[mu][nu].is_zero() && !out.coefficients[nu].is_zero()) acc += M[mu][nu] * out.coefficients[nu];
    if (acc.is_zero()) continue;
    Scalar gap = out.eigenvalue - M[mu][mu];
    if (gap.is_zero()) throw Degenerate("degenerate: eigenvalue collision at " + to_string(basis[mu]));
    out.coefficients[mu] = acc / gap;
  }
  return out;
}

GenMacExpansion gen_macdonald(const NTuple& l, const Params<Scalar>& params) {
  return gen_macdonald(l, params, default_order(params.N, size(l)));
}

}  // namespace dimkac
