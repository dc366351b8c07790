#include "dimkac/singular.hpp"

#include <random>

namespace dimkac {
namespace {

std::string str(const Scalar& a) { return a.to_string(); }
std::string str(const Fp& a) { return a.to_string(); }

std::string verdict_of(std::size_t kernel_dim, bool all_zero) {
  if (kernel_dim != 1) return "DEGENERATE";
  return all_zero ? "PASS" : "FAIL";
}

template <class F>
void run_annihilation(const NTuple& theta, Params<F> params, SingularReport& rep) {
  FockEngine<F> engine(std::move(params));
  auto ev = gen_macdonald_at_point(theta, engine);
  rep.kernel_dim = ev.kernel_dim;
  bool all_zero = true;
  if (ev.kernel_dim == 1) {
    for (int i = 1; i <= engine.N(); ++i)
      for (int n = 1; n <= rep.depth; ++n) {
        const bool zero = engine.apply(i, n, ev.vector).empty();
        rep.checks.push_back({i, n, zero});
        all_zero = all_zero && zero;
      }
  }
  rep.verdict = verdict_of(ev.kernel_dim, all_zero);
}

ModPoint draw_point(int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return ModPoint::random(word_prime(0), N, rng);
}

// Evaluates a specialized u vector at a point. The u_N variable is part of the
// point, so this is an ordinary evaluation.
// The specialized values are written back so the reported point is the one used.
std::vector<Fp> eval_all(const std::vector<Scalar>& u, ModPoint& pt) {
  std::vector<Fp> out;
  for (const auto& x : u) out.push_back(pt.eval(x));
  for (std::size_t c = 0; c < out.size(); ++c) pt.values[static_cast<std::size_t>(var_u(static_cast<int>(c) + 1))] = out[c].v;
  return out;
}

SingularReport run(const RSData& d, const NTuple& theta, const std::vector<Scalar>& u, int depth, Backend backend,
                   std::uint64_t seed) {
  SingularReport rep;
  rep.data = d;
  rep.theta = theta;
  rep.backend = backend;
  rep.depth = depth > 0 ? depth : size(theta);
  const int N = static_cast<int>(theta.size());
  if (backend == Backend::symbolic) {
    for (const auto& x : u) rep.specialization.push_back(str(x));
    run_annihilation(theta, Params<Scalar>(N, u), rep);
  } else {
    rep.point = draw_point(N, seed);
    auto uf = eval_all(u, *rep.point);
    for (const auto& x : uf) rep.specialization.push_back(str(x));
    run_annihilation(theta, Params<Fp>(N, *rep.point, uf), rep);
  }
  return rep;
}

template <class F>
void run_projection(const Params<F>& params, ProjectionReport& rep) {
  FockEngine<F> engine(params);
  auto ev = gen_macdonald_at_point(rep.theta, engine);
  rep.kernel_dim = ev.kernel_dim;
  if (ev.kernel_dim != 1) {
    rep.verdict = "DEGENERATE";
    return;
  }
  const int level = size(rep.theta);
  const auto proj = project_symfunc(ev.vector, h_table(params.N, std::max(level, 1)), params);
  SymFunc<F> target;
  for (const auto& [mu, c] : macdonald_P(rep.lambda)) {
    F x = params.lift(c);
    if (!x.is_zero()) target.emplace(mu, x);
  }
  for (const auto& [mu, c] : proj) rep.projection.emplace_back(mu, str(c));
  for (const auto& [mu, c] : target) rep.target.emplace_back(mu, str(c));
  if (proj.empty()) {
    rep.verdict = "FAIL";
    return;
  }
  // Walk the union of supports; every ratio must equal the first one.
  std::optional<F> ratio;
  auto check = [&](const Partition& mu) {
    auto a = proj.find(mu);
    auto b = target.find(mu);
    if (a == proj.end() || b == target.end()) return false;
    F r = a->second / b->second;
    if (!ratio) ratio = r;
    return *ratio == r;
  };
  for (const auto& [mu, c] : target)
    if (!check(mu)) {
      rep.first_mismatch = mu;
      break;
    }
  if (!rep.first_mismatch)
    for (const auto& [mu, c] : proj)
      if (!target.count(mu)) {
        rep.first_mismatch = mu;
        break;
      }
  if (ratio) rep.ratio = str(*ratio);
  rep.verdict = rep.first_mismatch ? "FAIL" : "PASS";
}

nlohmann::ordered_json symfunc_json(const std::vector<std::pair<Partition, std::string>>& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [mu, c] : f) j[to_string(mu)] = c;
  return j;
}

nlohmann::ordered_json point_json(const ModPoint& pt) {
  nlohmann::ordered_json a;
  a["s"] = pt.values[kVarS];
  a["t"] = pt.values[kVarT];
  for (int c = 1; c <= pt.colors; ++c) a["u" + std::to_string(c)] = pt.values[static_cast<std::size_t>(var_u(c))];
  return {{"prime", pt.prime}, {"assignment", a}};
}

}  // namespace

std::string to_string(Backend b) { return b == Backend::symbolic ? "symbolic" : "modular"; }

Backend parse_backend(const std::string& text) {
  if (text == "symbolic") return Backend::symbolic;
  if (text == "modular") return Backend::modular;
  throw std::invalid_argument("unknown backend: " + text);
}

SingularReport singular_check(const RSData& d, int depth, Backend backend, std::uint64_t seed) {
  const int N = d.N();
  return run(d, theta_rs(d), specialize_u(d, Scalar::u(N)), depth, backend, seed);
}

SingularReport rank1_check(int i, int r, int s, int N, Backend backend, std::uint64_t seed) {
  if (N < 2 || i < 1 || i > N - 1) throw std::invalid_argument("rank1_check: need 1 <= i <= N-1");
  if (r < 1 || s < 1) throw std::invalid_argument("rank1_check: r and s must be positive");
  NTuple theta(static_cast<std::size_t>(N));
  theta[static_cast<std::size_t>(i)] = Partition(static_cast<std::size_t>(r), s);
  std::vector<Scalar> u;
  for (int c = 1; c <= N; ++c) u.push_back(Scalar::u(c));
  u[static_cast<std::size_t>(i - 1)] = Scalar::q().pow(s) * Scalar::t().pow(-r) * Scalar::u(i + 1);
  RSData d;
  d.r.assign(static_cast<std::size_t>(N - 1), 0);
  d.s.assign(static_cast<std::size_t>(N - 1), 0);
  d.r[static_cast<std::size_t>(i - 1)] = r;
  d.s[static_cast<std::size_t>(i - 1)] = s;
  return run(d, theta, u, 0, backend, seed);
}

ProjectionReport projection_check(const RSData& d, Backend backend, std::uint64_t seed) {
  ProjectionReport rep;
  rep.data = d;
  rep.lambda = lambda_rs_closed(d);
  rep.theta = theta_rs(d);
  rep.backend = backend;
  const int N = d.N();
  const auto u = specialize_u(d, Scalar::u(N));
  if (backend == Backend::symbolic) {
    run_projection(Params<Scalar>(N, u), rep);
  } else {
    rep.point = draw_point(N, seed);
    run_projection(Params<Fp>(N, *rep.point, eval_all(u, *rep.point)), rep);
  }
  return rep;
}

nlohmann::ordered_json to_json(const SingularReport& r) {
  nlohmann::ordered_json j;
  j["N"] = static_cast<int>(r.theta.size());
  j["r"] = r.data.r;
  j["s"] = r.data.s;
  j["theta"] = to_string(r.theta);
  j["backend"] = to_string(r.backend);
  if (r.point) j["point"] = point_json(*r.point);
  j["specialization"] = r.specialization;
  j["depth"] = r.depth;
  j["depth_note"] = "X^(i)_n with n > |theta| lowers the degree below zero, so the image vanishes by grading";
  j["kernel_dim"] = r.kernel_dim;
  auto& checks = j["annihilation"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"i", c.i}, {"n", c.n}, {"zero", c.zero}});
  j["verdict"] = r.verdict;
  return j;
}

nlohmann::ordered_json to_json(const ProjectionReport& r) {
  nlohmann::ordered_json j;
  j["N"] = static_cast<int>(r.theta.size());
  j["r"] = r.data.r;
  j["s"] = r.data.s;
  j["theta"] = to_string(r.theta);
  j["lambda"] = to_string(r.lambda);
  j["backend"] = to_string(r.backend);
  if (r.point) j["point"] = point_json(*r.point);
  j["kernel_dim"] = r.kernel_dim;
  j["projection"] = symfunc_json(r.projection);
  j["target"] = symfunc_json(r.target);
  if (r.ratio) j["ratio"] = *r.ratio;
  if (r.first_mismatch) j["first_mismatch"] = to_string(*r.first_mismatch);
  j["verdict"] = r.verdict;
  return j;
}

}  // namespace dimkac
