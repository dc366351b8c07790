#include "dimkac/fock.hpp"

namespace dimkac {

int degree(const BosonMonomial& m) {
  int d = 0;
  for (const auto& [key, e] : m) d += key.second * e;
  return d;
}

std::string to_string(const BosonMonomial& m) {
  std::string out;
  for (const auto& [key, e] : m) {
    if (!out.empty()) out += ',';
    out += std::to_string(key.first) + ':' + std::to_string(key.second) + '^' + std::to_string(e);
  }
  return out;
}

Scalar kappa(int n) { return Scalar(n) * (1 - Scalar::q().pow(n)) / (1 - Scalar::t().pow(n)); }

Scalar pairing(const BosonMonomial& bra, const BosonMonomial& ket) {
  if (bra != ket) return Scalar();
  Scalar r = 1;
  for (const auto& [key, e] : ket) {
    long long fact = 1;
    for (int j = 2; j <= e; ++j) fact *= j;
    r *= Scalar(fact) * kappa(key.second).pow(e);
  }
  return r;
}

Scalar VertexTerm::creation(int color, int n) const {
  const Scalar s = Scalar::s(), t = Scalar::t();
  const Scalar base = (1 - t.pow(-n)) / Scalar(n);
  const Scalar phi = 1 - s.pow(-2 * n);  // 1 - p^{-n}
  Scalar a;
  for (const auto& f : factors) {
    if (f.color != color) continue;
    Scalar term = base * s.pow(f.shift * n);
    a += f.eta ? term : term * phi;
  }
  return a;
}

Scalar VertexTerm::annihilation(int color, int n) const {
  const Scalar s = Scalar::s(), t = Scalar::t();
  Scalar b;
  for (const auto& f : factors)
    if (f.eta && f.color == color) b -= (1 - t.pow(n)) / Scalar(n) * s.pow(-f.shift * n);
  return b;
}

std::vector<VertexTerm> build_X_terms(int i, int N) {
  if (i < 1 || i > N) throw std::invalid_argument("build_X_terms: need 1 <= i <= N");
  std::vector<VertexTerm> out;
  std::vector<int> pick(static_cast<std::size_t>(i));
  // Lambda_{j_m}(p^{m-1} z) holds phi^(k)(. p^{-(k-1)/2}) for k < j and eta^(j)(. p^{-(j-1)/2}).
  auto rec = [&](auto&& self, int m, int from) -> void {
    if (m == i) {
      VertexTerm term;
      for (int pos = 0; pos < i; ++pos) {
        const int j = pick[static_cast<std::size_t>(pos)];
        term.colors.push_back(j);
        for (int k = 1; k < j; ++k) term.factors.push_back({k, false, 2 * pos - (k - 1)});
        term.factors.push_back({j, true, 2 * pos - (j - 1)});
      }
      out.push_back(std::move(term));
      return;
    }
    for (int j = from; j <= N; ++j) {
      pick[static_cast<std::size_t>(m)] = j;
      self(self, m + 1, j + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

std::vector<Scalar> f_coeffs(int which, int l_max) {
  if (which != 1 && which != 2) throw std::invalid_argument("f_coeffs: which must be 1 or 2");
  const Scalar q = Scalar::q(), t = Scalar::t(), p = Scalar::p();
  std::vector<Scalar> g(static_cast<std::size_t>(l_max) + 1);
  for (int n = 1; n <= l_max; ++n) {
    Scalar gn = (1 - q.pow(n)) * (1 - t.pow(-n)) / Scalar(n);
    if (which == 2) gn *= 1 + p.pow(n);
    g[static_cast<std::size_t>(n)] = gn;
  }
  // f = exp(G): l f_l = sum_k k g_k f_{l-k}
  std::vector<Scalar> f(static_cast<std::size_t>(l_max) + 1);
  f[0] = 1;
  for (int l = 1; l <= l_max; ++l) {
    Scalar acc;
    for (int k = 1; k <= l; ++k) acc += Scalar(k) * g[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(l - k)];
    f[static_cast<std::size_t>(l)] = acc / Scalar(l);
  }
  return f;
}

std::vector<Scalar> h_coeffs(int N, int i, int n) {
  if (N < 2) throw Inapplicable("h bosons need N >= 2");
  if (i < 1 || i > N || n == 0) throw std::invalid_argument("h_coeffs: need 1 <= i <= N and n != 0");
  const Scalar s = Scalar::s(), t = Scalar::t(), p = Scalar::p();
  const std::size_t NN = static_cast<std::size_t>(N);
  // p^{(-k+1)n/2} = s^{(1-k)n}
  auto ph = [&](int k, int m) { return s.pow((1 - k) * m); };
  const int m = n > 0 ? n : -n;
  // b'_{+-m} as coefficients on a^(k)_{+-m}
  std::vector<Scalar> bprime(NN);
  const Scalar pref = (1 - p.pow(m)) / (Scalar(m) * (1 - p.pow(N * m))) * p.pow((N - 1) * m);
  for (int k = 1; k <= N; ++k) {
    bprime[static_cast<std::size_t>(k - 1)] = n > 0 ? -(1 - t.pow(m)) * pref * ph(k, m) : (1 - t.pow(-m)) * pref * ph(k, m);
  }
  auto b = [&](int j) {
    std::vector<Scalar> out(NN);
    for (std::size_t k = 0; k < NN; ++k) out[k] = (n > 0 ? Scalar(1) : Scalar(-1)) * ph(j, m) * bprime[k];
    const Scalar diag = n > 0 ? (1 - t.pow(m)) / Scalar(m) : (1 - t.pow(-m)) / Scalar(m);
    out[static_cast<std::size_t>(j - 1)] += diag;
    return out;
  };
  std::vector<Scalar> h(NN);
  if (n > 0) {
    auto bi = b(i);
    for (std::size_t k = 0; k < NN; ++k) h[k] = -s.pow((i - 1) * m) * bi[k];
  } else {
    for (int k = 1; k < i; ++k) {
      auto bk = b(k);
      for (std::size_t j = 0; j < NN; ++j) h[j] += (1 - p.pow(-m)) * ph(k, m) * bk[j];
    }
    auto bi = b(i);
    for (std::size_t j = 0; j < NN; ++j) h[j] += ph(i, m) * bi[j];
  }
  return h;
}

HBosonTable h_table(int N, int n_max) {
  HBosonTable table;
  table.N = N;
  table.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) table.c.push_back(h_coeffs(N, N, n));
  return table;
}

}  // namespace dimkac
