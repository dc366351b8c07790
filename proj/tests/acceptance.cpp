// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "dimkac/cli.hpp"
#include "dimkac/kac.hpp"
#include "dimkac/singular.hpp"
#include "relations.hpp"

using namespace dimkac;

namespace {

constexpr std::uint64_t kSeed = 20240;

struct Result {
  bool pass = true;
  std::string detail;
};

const std::vector<std::pair<int, int>> kKacCases = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};

Result kac_determinant() {
  Result r;
  int points = 0, symbolic = 0;
  for (auto [N, n] : kKacCases) {
    auto rep = verify_kac(N, n, 20, kSeed + static_cast<std::uint64_t>(10 * N + n), true);
    const bool enough = rep.modular.points.size() >= 20 && rep.modular.primes.size() >= 2;
    const bool sym_ok = rep.dimension > kSymbolicMaxDim || rep.symbolic_equal == true;
    if (!rep.pass || !enough || !sym_ok) {
      r.pass = false;
      r.detail += " (" + std::to_string(N) + "," + std::to_string(n) + ") failed;";
    }
    points += static_cast<int>(rep.modular.points.size());
    symbolic += rep.symbolic_equal == true;
  }
  if (r.pass)
    r.detail = std::to_string(kKacCases.size()) + " cases, " + std::to_string(symbolic) + " symbolic equalities, " +
               std::to_string(points) + " modular points, no mismatch";
  return r;
}

Result basis_corollary() {
  Result r;
  std::mt19937_64 rng(kSeed);
  for (auto [N, n] : kKacCases) {
    const ModPoint pt = ModPoint::random(word_prime(0), N, rng);
    FockEngine<Fp> eng{Params<Fp>(N, pt)};
    if (rank(gram_matrix(n, eng)) != count_PN(N, n)) {
      r.pass = false;
      r.detail += " rank deficit at (" + std::to_string(N) + "," + std::to_string(n) + ");";
    }
  }
  const ModPoint pt = ModPoint::random(word_prime(1), 2, rng);
  std::vector<Fp> u{pt.eval(Scalar::q() / Scalar::t()) * pt.u(2), pt.u(2)};
  FockEngine<Fp> eng{Params<Fp>(2, pt, u)};
  const bool vanishes = determinant(gram_matrix(1, eng), Fp(1, pt.prime)).is_zero();
  if (!vanishes) {
    r.pass = false;
    r.detail += " determinant nonzero at u1 = q/t u2;";
  }
  if (r.pass) r.detail = "full rank for all 9 (N,n); level-1 determinant vanishes at u1 = q t^-1 u2";
  return r;
}

Result triangularity() {
  Result r;
  int matrices = 0, vectors = 0;
  for (int N = 1; N <= 3; ++N) {
    Params<Scalar> par(N);
    FockEngine<Scalar> eng{par};
    for (int level = 0; level <= 3; ++level) {
      const auto basis = default_order(N, level);
      const auto M = x0_matrix(eng, basis);
      ++matrices;
      for (std::size_t row = 0; row < basis.size(); ++row)
        for (std::size_t col = 0; col < basis.size(); ++col) {
          const bool ok = row == col ? M[row][col] == eps_eigenvalue(basis[row], par.u)
                                     : M[row][col].is_zero() || less_star(basis[row], basis[col]);
          if (!ok) r.pass = false;
        }
      for (const auto& l : basis) {
        auto g = gen_macdonald(l, par, basis, M);
        auto v = expansion_vector(basis, g.coefficients, par);
        if (!add(eng.apply(1, 0, v), v, -g.eigenvalue).empty()) r.pass = false;
        ++vectors;
      }
    }
  }
  r.detail = std::to_string(matrices) + " matrices triangular in the star order with diagonal eps; " +
             std::to_string(vectors) + " eigenvector residuals" + (r.pass ? " exactly zero" : " checked, failures found");
  return r;
}

Result n1_reduction() {
  Result r;
  Params<Scalar> par(1);
  int count = 0;
  for (int n = 0; n <= 4; ++n)
    for (const auto& l : enum_partitions(n)) {
      auto g = gen_macdonald({l}, par);
      for (std::size_t b = 0; b < g.basis.size(); ++b)
        if (g.coefficients[b] != Scalar(g.basis[b][0] == l ? 1 : 0)) r.pass = false;
      if (expansion_vector(g.basis, g.coefficients, par) != product_basis<Scalar>({l}, par)) r.pass = false;
      ++count;
    }
  r.detail = std::to_string(count) + " partitions of size <= 4 give P_l(a_{-n})|u>";
  return r;
}

Result mode_relations() {
  const auto s = testing::check_n2_relations(2, 2);
  Result r;
  r.pass = s.failures.empty() && s.checked == 600;
  r.detail = std::to_string(s.checked) + " relation instances, " + std::to_string(s.failures.size()) + " failures";
  return r;
}

Partition random_partition(std::mt19937_64& rng, int max_len, int max_part) {
  Partition l;
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  int cap = max_part;
  for (int i = 0; i < len; ++i) {
    cap = 1 + static_cast<int>(rng() % static_cast<unsigned>(cap));
    l.push_back(cap);
  }
  return l;
}

Result e_identities() {
  Result r;
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    Partition l = random_partition(rng, 6, 6);
    const int rr = static_cast<int>(l.size()) + static_cast<int>(rng() % static_cast<unsigned>(7 - l.size()));
    const int ss = 1 + static_cast<int>(rng() % 6);
    const int n = static_cast<int>(rng() % 8);
    Partition m = l.empty() ? random_partition(rng, 4, 6) : random_partition(rng, 4, l.back());
    const auto c = lemma_e_identities(l, m, rr, ss, n);
    if (!c.rectangle || !c.split || !c.join) r.pass = false;
  }
  int parts = 0;
  for (int n = 0; n <= 12; ++n)
    for (const auto& l : enum_partitions(n)) {
      if (e_lambda(l) != e_lambda_edges(l)) r.pass = false;
      ++parts;
    }
  r.detail = "100 random instances x 3 identities; edge form = sum form on " + std::to_string(parts) + " partitions";
  return r;
}

Result singular_vectors() {
  Result r;
  const std::vector<RSData> cases = {{{1}, {1}}, {{2}, {1}}, {{1}, {2}}, {{1, 1}, {1, 1}}, {{2, 1}, {1, 1}}};
  int checks = 0;
  for (auto backend : {Backend::symbolic, Backend::modular})
    for (const auto& d : cases) {
      auto rep = singular_check(d, 0, backend, kSeed);
      bool ok = rep.verdict == "PASS" && rep.kernel_dim == 1 &&
                rep.checks.size() == static_cast<std::size_t>(d.N() * size(rep.theta));
      for (const auto& c : rep.checks) ok = ok && c.zero;
      checks += static_cast<int>(rep.checks.size());
      if (!ok) {
        r.pass = false;
        r.detail += " " + to_string(rep.theta) + " (" + to_string(backend) + ") " + rep.verdict + ";";
      }
    }
  if (r.pass) r.detail = "5 (r,s) cases on both backends, kernel dim 1, " + std::to_string(checks) + " exact annihilations";
  return r;
}

Result projection() {
  Result r;
  const std::vector<RSData> cases = {{{1}, {1}}, {{1}, {2}}, {{2}, {1}}};
  std::string ratios;
  for (auto backend : {Backend::symbolic, Backend::modular})
    for (const auto& d : cases) {
      auto rep = projection_check(d, backend, kSeed);
      if (rep.verdict != "PASS" || !rep.ratio || *rep.ratio == "0") r.pass = false;
      if (backend == Backend::symbolic && rep.ratio) ratios += " P_" + to_string(rep.lambda) + ":" + *rep.ratio;
    }
  r.detail = "constant nonzero ratio on both backends;" + ratios;
  return r;
}

void for_each_rs(int N, bool r_increasing, const std::function<void(const RSData&)>& f) {
  RSData d;
  d.r.assign(static_cast<std::size_t>(N - 1), 0);
  d.s.assign(static_cast<std::size_t>(N - 1), 1);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == d.r.size()) {
      f(d);
      return;
    }
    for (int rv = 0; rv <= 3; ++rv) {
      if (r_increasing && k > 0 && rv < d.r[k - 1]) continue;
      for (int sv = 1; sv <= 3; ++sv) {
        d.r[k] = rv;
        d.s[k] = sv;
        self(self, k + 1);
      }
    }
  };
  rec(rec, 0);
}

Result theta_combinatorics() {
  Result r;
  int closed = 0, eigen = 0;
  const Scalar q = Scalar::q(), t = Scalar::t(), upp = Scalar::u(1);
  for (int N = 2; N <= 4; ++N) {
    for_each_rs(N, true, [&](const RSData& d) {
      NTuple expected(static_cast<std::size_t>(N));
      expected.back() = lambda_rs_closed(d);
      if (theta_rs(d) != expected) r.pass = false;
      ++closed;
    });
    for_each_rs(N, false, [&](const RSData& d) {
      Scalar target;
      for (int i = 1; i <= N; ++i) {
        const int r_prev = i >= 2 ? d.r[static_cast<std::size_t>(i - 2)] : 0;
        int ssum = 0;
        for (int k = i; k <= N - 1; ++k) ssum += d.s[static_cast<std::size_t>(k - 1)];
        target += t.pow(-r_prev) * q.pow(ssum);
      }
      if (eps_eigenvalue(theta_rs(d), specialize_u(d, upp)) / upp != target) r.pass = false;
      ++eigen;
    });
  }
  r.detail = std::to_string(closed) + " closed-form comparisons, " + std::to_string(eigen) + " eigenvalue identities";
  return r;
}

std::string run_suite() {
  const std::string seed = std::to_string(kSeed);
  const std::vector<std::vector<std::string>> runs = {
      {"kac", "--N", "1", "--level", "4", "--symbolic"},
      {"kac", "--N", "2", "--level", "3", "--trials", "20"},
      {"kac", "--N", "3", "--level", "2", "--trials", "20"},
      {"gmac", "--N", "2", "--tuple", "1|1"},
      {"gmac", "--N", "3", "--tuple", "|1|1", "--backend", "modular"},
      {"singular", "--N", "3", "--r", "2,1", "--s", "1,1"},
      {"project", "--N", "2", "--r", "1", "--s", "2"},
      {"count", "--N", "3", "--level", "6", "--format", "csv"},
  };
  std::ostringstream all, err;
  for (auto args : runs) {
    args.insert(args.end(), {"--seed", seed, "--reproducible"});
    const int code = run_cli(args, all, err);
    all << "exit " << code << '\n';
  }
  return all.str();
}

Result determinism() {
  const std::string a = run_suite();
  const std::string b = run_suite();
  Result r;
  r.pass = a == b && a.find("timestamp") == std::string::npos && a.find("exit 1") == std::string::npos &&
           a.find("exit 2") == std::string::npos;
  r.detail = std::to_string(a.size()) + " report bytes, " + (a == b ? "identical" : "different") + " across two runs";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"Kac determinant", kac_determinant},
      {"basis and degeneration", basis_corollary},
      {"triangularity and eigenvalues", triangularity},
      {"N = 1 reduction", n1_reduction},
      {"N = 2 mode relations", mode_relations},
      {"e_lambda identities", e_identities},
      {"singular vectors", singular_vectors},
      {"projection", projection},
      {"Theta combinatorics", theta_combinatorics},
      {"determinism", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && r.pass;
    std::cout << "criterion " << i + 1 << ": " << (r.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << r.detail << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
  }
  return all ? 0 : 1;
}
