#include "dimkac/kac.hpp"

#include <chrono>
#include <map>

namespace dimkac {

Scalar kac_lhs_symbolic(int N, int level) {
  if (count_PN(N, level) > kSymbolicMaxDim) throw std::invalid_argument("kac_lhs_symbolic: dimension above the symbolic cap");
  FockEngine<Scalar> engine{Params<Scalar>(N)};
  const auto G = gram_matrix(level, engine);
  auto f = gram_factors(level, engine);
  // Eliminating on G directly is far slower: its entries are products of
  // the much smaller entries of B and A.
  const std::size_t d = G.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar x;
      for (std::size_t k = 0; k < d; ++k)
        if (!f.B[i][k].is_zero() && !f.A[k][j].is_zero()) x += f.B[i][k] * f.A[k][j];
      if (x != G[i][j]) throw std::logic_error("kac_lhs_symbolic: Gram factorization mismatch");
    }
  return determinant(std::move(f.B), Scalar(1)) * determinant(std::move(f.A), Scalar(1));
}

Fp kac_lhs_at(int N, int level, const ModPoint& pt) {
  FockEngine<Fp> engine{Params<Fp>(N, pt)};
  const Fp one(1, pt.prime);
  return determinant(gram_matrix(level, engine), one);
}

namespace {

// Factors of the closed product with multiplicities, in first-seen order.
std::vector<std::pair<Scalar, long>> kac_rhs_factors(int N, int level) {
  const Scalar q = Scalar::q(), t = Scalar::t(), tinv = t.pow(-1);
  std::vector<std::pair<Scalar, long>> fs;
  auto push = [&](const Scalar& f, long e) {
    if (e == 0) return;
    for (auto& [g, k] : fs)
      if (g == f) {
        k += e;
        return;
      }
    fs.emplace_back(f, e);
  };
  for (const auto& l : enum_ntuples(N, level))
    for (const auto& part : l) {
      std::map<int, int> mult;
      for (int x : part) ++mult[x];
      for (auto [x, m] : mult)
        for (int k = 1; k <= m; ++k) {
          push(1 - q.pow(k), 1);
          push(tinv.pow(k) - 1, 1);
        }
    }
  for (int rr = 1; rr <= level; ++rr)
    for (int ss = 1; rr * ss <= level; ++ss) {
      const long e = static_cast<long>(count_PN(N, level - rr * ss));
      for (int c = 1; c <= N; ++c) push(Scalar::u(c), 2 * e);
      for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
          push(Scalar::u(i) - q.pow(ss) * t.pow(-rr) * Scalar::u(j), e);
          push(Scalar::u(i) - q.pow(-rr) * t.pow(ss) * Scalar::u(j), e);
        }
    }
  return fs;
}

}  // namespace

Scalar kac_rhs(int N, int level) {
  Scalar r = 1;
  for (const auto& [f, e] : kac_rhs_factors(N, level)) r *= f.pow(static_cast<int>(e));
  return r;
}

std::string kac_rhs_text(int N, int level) {
  std::string out;
  for (const auto& [f, e] : kac_rhs_factors(N, level)) {
    if (!out.empty()) out += "*";
    out += "(" + f.to_string() + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

GramReport verify_kac_against(int N, int level, const Scalar& rhs, int trials, std::uint64_t seed, bool symbolic,
                              std::optional<std::string> rhs_text) {
  const auto start = std::chrono::steady_clock::now();
  GramReport rep;
  rep.N = N;
  rep.level = level;
  rep.dimension = count_PN(N, level);
  rep.rhs = rhs_text ? *rhs_text : rhs.to_string();
  rep.backend = symbolic && rep.dimension <= kSymbolicMaxDim ? "symbolic" : "modular";
  if (rep.backend == "symbolic") rep.symbolic_equal = kac_lhs_symbolic(N, level) == rhs;
  rep.modular = sz_equal([&](const ModPoint& pt) { return kac_lhs_at(N, level, pt).v; },
                         [&](const ModPoint& pt) { return pt.eval(rhs).v; }, trials, seed, N);
  rep.pass = rep.modular.pass && rep.symbolic_equal.value_or(true);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

GramReport verify_kac(int N, int level, int trials, std::uint64_t seed, bool symbolic) {
  return verify_kac_against(N, level, kac_rhs(N, level), trials, seed, symbolic, kac_rhs_text(N, level));
}

nlohmann::ordered_json to_json(const PointResult& r) {
  nlohmann::ordered_json assignment;
  assignment["s"] = r.point.values[kVarS];
  assignment["t"] = r.point.values[kVarT];
  for (int c = 1; c <= r.point.colors; ++c)
    assignment["u" + std::to_string(c)] = r.point.values[static_cast<std::size_t>(var_u(c))];
  return {{"prime", r.point.prime}, {"assignment", assignment}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ok", r.ok}};
}

nlohmann::ordered_json to_json(const GramReport& r, bool reproducible) {
  nlohmann::ordered_json j;
  j["N"] = r.N;
  j["level"] = r.level;
  j["dimension"] = r.dimension;
  j["backend"] = r.backend;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (r.symbolic_equal) j["symbolic_equal"] = *r.symbolic_equal;
  j["primes"] = r.modular.primes;
  j["resamples"] = r.modular.resamples;
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : r.modular.points) pts.push_back(to_json(p));
  if (r.modular.first_mismatch) j["first_mismatch"] = *r.modular.first_mismatch;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  if (!reproducible) j["seconds"] = r.seconds;
  return j;
}

}  // namespace dimkac
