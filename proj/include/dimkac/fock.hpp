#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimkac/field.hpp"
#include "dimkac/partition.hpp"
#include "dimkac/scalar.hpp"

namespace dimkac {

/// prod (a^(c)_{-n})^m |u>, keyed by (color, mode) -> multiplicity.
using BosonMonomial = std::map<std::pair<int, int>, int>;

/// Finite linear combination of boson monomials; zero coefficients are never stored.
template <class F>
using FockVector = std::map<BosonMonomial, F>;

/// Symmetric function in the power-sum basis: p_l -> coefficient.
template <class F>
using SymFunc = std::map<Partition, F>;

int degree(const BosonMonomial& m);
/// "c:n^m,..." in (color, mode) order; the vacuum is "".
std::string to_string(const BosonMonomial& m);

template <class F>
void add_to(FockVector<F>& v, const BosonMonomial& m, const F& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

template <class F>
FockVector<F> add(FockVector<F> a, const FockVector<F>& b, const F& scale) {
  for (const auto& [m, c] : b) add_to(a, m, c * scale);
  return a;
}

template <class F>
FockVector<F> scaled(const FockVector<F>& a, const F& scale) {
  FockVector<F> out;
  if (scale.is_zero()) return out;
  for (const auto& [m, c] : a) out.emplace(m, c * scale);
  return out;
}

/// Coefficient of the vacuum |u>.
template <class F>
F vacuum_coefficient(const FockVector<F>& v, const F& zero) {
  auto it = v.find(BosonMonomial{});
  return it == v.end() ? zero : it->second;
}

/// n (1 - q^n) / (1 - t^n), the norm of a^(c)_{-n}|u>.
Scalar kappa(int n);

/// <u| prod a_n^m  prod a_{-n}^m' |u>.
Scalar pairing(const BosonMonomial& bra, const BosonMonomial& ket);

/// One vertex operator inside a normal-ordered product, evaluated at z s^shift.
struct VertexFactor {
  int color;
  bool eta;  // eta^(color) when true, phi^(color) otherwise
  int shift;
};

/// One summand of X^(i)(z): the product over the chosen colors j_1 < ... < j_i.
struct VertexTerm {
  std::vector<int> colors;  // u-factor is the product of u_c over these
  std::vector<VertexFactor> factors;

  /// A_{c,n}: coefficient of z^n a^(c)_{-n} in the creation exponent.
  Scalar creation(int color, int n) const;
  /// B_{c,n}: coefficient of z^{-n} a^(c)_n in the annihilation exponent.
  Scalar annihilation(int color, int n) const;
};

std::vector<VertexTerm> build_X_terms(int i, int N);

/// Taylor coefficients f_0..f_{l_max} of f^(1) (which = 1) or f^(2) (which = 2).
std::vector<Scalar> f_coeffs(int which, int l_max);

/// Coefficients of h^(i)_n in terms of a^(k)_n, k = 1..N, for n != 0.
std::vector<Scalar> h_coeffs(int N, int i, int n);

/// c_{k,n} with h^(N)_n = sum_k c_{k,n} a^(k)_n, n = 1..n_max.
struct HBosonTable {
  int N = 0;
  int n_max = 0;
  std::vector<std::vector<Scalar>> c;  // c[n-1][k-1]
  const Scalar& at(int k, int n) const { return c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)]; }
};

HBosonTable h_table(int N, int n_max);

/// Exact mode action of X^(i)_n on Fock vectors over a field context.
///
/// The vertex tables (creation coefficients and annihilation coefficients
/// already multiplied by the Heisenberg norm) and the creation-exponential
/// expansions are cached per engine and grow on demand.
template <class F>
class FockEngine {
 public:
  explicit FockEngine(Params<F> params) : params_(std::move(params)) {
    for (int i = 1; i <= params_.N; ++i) {
      std::vector<TermData> data;
      for (auto& term : build_X_terms(i, params_.N)) {
        TermData d{term, params_.one(), {}, {}, {}};
        for (int c : term.colors) d.u_factor *= params_.uc(c);
        data.push_back(std::move(d));
      }
      terms_.push_back(std::move(data));
    }
  }

  const Params<F>& params() const { return params_; }
  int N() const { return params_.N; }

  /// X^(i)_n v.
  FockVector<F> apply(int i, int n, const FockVector<F>& v) {
    FockVector<F> out;
    for (auto& td : terms_[static_cast<std::size_t>(i - 1)]) {
      for (const auto& [mono, coeff] : v) apply_term(td, n, mono, coeff * td.u_factor, out);
    }
    return out;
  }

  /// X^(i)_n |u>.
  FockVector<F> apply_vacuum(int i, int n) { return apply(i, n, vacuum()); }

  FockVector<F> vacuum() const {
    FockVector<F> v;
    v.emplace(BosonMonomial{}, params_.one());
    return v;
  }

  F pairing(const BosonMonomial& bra, const BosonMonomial& ket) const { return params_.lift(dimkac::pairing(bra, ket)); }

 private:
  struct TermData {
    VertexTerm term;
    F u_factor;
    std::vector<std::vector<F>> A;   // A[n][color-1]
    std::vector<std::vector<F>> BK;  // B_{c,n} kappa_n
    std::vector<FockVector<F>> h;    // degree-l part of the creation exponential
  };

  void ensure_modes(TermData& td, int n_max) {
    while (static_cast<int>(td.A.size()) <= n_max) {
      const int n = static_cast<int>(td.A.size());
      std::vector<F> a, bk;
      for (int c = 1; c <= params_.N; ++c) {
        if (n == 0) {
          a.push_back(params_.zero());
          bk.push_back(params_.zero());
        } else {
          a.push_back(params_.lift(td.term.creation(c, n)));
          bk.push_back(params_.lift(td.term.annihilation(c, n) * kappa(n)));
        }
      }
      td.A.push_back(std::move(a));
      td.BK.push_back(std::move(bk));
    }
  }

  const FockVector<F>& creation_part(TermData& td, int l) {
    ensure_modes(td, l);
    if (td.h.empty()) td.h.push_back(vacuum());
    while (static_cast<int>(td.h.size()) <= l) {
      const int k = static_cast<int>(td.h.size());
      FockVector<F> hk;
      for (int m = 1; m <= k; ++m) {
        for (int c = 1; c <= params_.N; ++c) {
          const F& a = td.A[static_cast<std::size_t>(m)][static_cast<std::size_t>(c - 1)];
          if (a.is_zero()) continue;
          const F w = params_.integer(m) * a;
          for (const auto& [mono, coeff] : td.h[static_cast<std::size_t>(k - m)]) {
            BosonMonomial next = mono;
            ++next[{c, m}];
            add_to(hk, next, coeff * w);
          }
        }
      }
      const F inv = params_.integer(k).inverse();
      for (auto& [mono, coeff] : hk) coeff *= inv;
      td.h.push_back(std::move(hk));
    }
    return td.h[static_cast<std::size_t>(l)];
  }

  void apply_term(TermData& td, int n, const BosonMonomial& mono, const F& coeff, FockVector<F>& out) {
    const int deg = degree(mono);
    if (deg - n < 0) return;
    ensure_modes(td, std::max(deg, deg - n));
    std::vector<std::pair<std::pair<int, int>, int>> parts(mono.begin(), mono.end());
    std::vector<int> take(parts.size(), 0);
    // Enumerate sub-multisets removed by the annihilation shift.
    while (true) {
      int removed = 0;
      F c = coeff;
      BosonMonomial rest;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto [key, e] = parts[k];
        const int j = take[k];
        removed += key.second * j;
        if (j > 0) {
          const F& bk = td.BK[static_cast<std::size_t>(key.second)][static_cast<std::size_t>(key.first - 1)];
          c *= params_.integer(binomial(e, j)) * bk.pow(j);
        }
        if (e - j > 0) rest.emplace(key, e - j);
      }
      const int l = removed - n;
      if (l >= 0 && !c.is_zero()) {
        for (const auto& [hm, hc] : creation_part(td, l)) {
          BosonMonomial m = rest;
          for (const auto& [key, e] : hm) m[key] += e;
          add_to(out, m, c * hc);
        }
      }
      std::size_t k = 0;
      while (k < parts.size() && take[k] == parts[k].second) take[k++] = 0;
      if (k == parts.size()) break;
      ++take[k];
    }
  }

  static long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

  Params<F> params_;
  std::vector<std::vector<TermData>> terms_;
};

/// Image of a Fock vector under <u| exp(-sum_n p_n h^(N)_n / (1 - q^n)):
/// each a^(k)_{-n} becomes -c_{k,n} n p_n / (1 - t^n).
template <class F>
SymFunc<F> project_symfunc(const FockVector<F>& v, const HBosonTable& table, const Params<F>& params) {
  SymFunc<F> out;
  for (const auto& [mono, coeff] : v) {
    F c = coeff;
    Partition modes;
    for (const auto& [key, e] : mono) {
      const auto [color, n] = key;
      if (n > table.n_max || color > table.N) throw std::out_of_range("table too small");
      const Scalar img = -table.at(color, n) * Scalar(n) / (1 - Scalar::t().pow(n));
      c *= params.lift(img).pow(e);
      for (int j = 0; j < e; ++j) modes.push_back(n);
    }
    std::sort(modes.rbegin(), modes.rend());
    auto [it, inserted] = out.try_emplace(modes, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

}  // namespace dimkac
