#include "dimkac/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dimkac/kac.hpp"
#include "dimkac/singular.hpp"

namespace dimkac {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json paper_params_json() {
  return {{"q", "s^2*t"},
          {"p", "s^2"},
          {"p^(1/2)", "s"},
          {"t", "t"},
          {"u_i", "u_i, the U_i eigenvalue on |u> including its p-power"}};
}

void require_N(const RunConfig& c) {
  if (c.N < 1 || c.N > kMaxColors) throw UsageError("--N must be between 1 and " + std::to_string(kMaxColors));
}

void require_level(const RunConfig& c) {
  if (c.level < 0) throw UsageError("--level must be given and non-negative");
}

RSData parse_rs(const RunConfig& c) {
  require_N(c);
  if (c.N < 2) throw UsageError("--N must be at least 2 for (r,s) data");
  RSData d;
  try {
    d.r = parse_int_list(c.r);
    d.s = parse_int_list(c.s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto len = static_cast<std::size_t>(c.N - 1);
  if (d.r.size() != len || d.s.size() != len) throw UsageError("--r and --s need N-1 entries each");
  for (int x : d.s)
    if (x < 1) throw UsageError("--s entries must be positive");
  return d;
}

Backend backend_or(const RunConfig& c, Backend fallback) {
  if (c.symbolic) return Backend::symbolic;
  if (c.backend.empty()) return fallback;
  try {
    return parse_backend(c.backend);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

template <class F>
void write_matrix_csv(std::ostream& os, const std::vector<NTuple>& basis, const Matrix<F>& G) {
  os << "row\\col";
  for (const auto& l : basis) os << ',' << csv_field(to_string(l));
  os << '\n';
  for (std::size_t i = 0; i < basis.size(); ++i) {
    os << csv_field(to_string(basis[i]));
    for (const auto& x : G[i]) os << ',' << csv_field(x.to_string());
    os << '\n';
  }
}

struct Outcome {
  int code = kExitPass;
  Json report;
  std::string text;  // used instead of report for csv and pretty
};

Outcome cmd_kac(const RunConfig& c) {
  require_N(c);
  require_level(c);
  if (c.trials < 1) throw UsageError("--trials must be positive");
  const bool symbolic = c.symbolic || c.backend == "symbolic";
  if (!c.backend.empty()) backend_or(c, Backend::modular);
  auto rep = verify_kac(c.N, c.level, c.trials, c.seed, symbolic);
  Outcome o;
  o.code = rep.pass ? kExitPass : kExitFail;
  o.report = to_json(rep, c.reproducible);
  if (c.format == "csv") {
    std::ostringstream os;
    const auto basis = enum_ntuples(c.N, c.level);
    if (rep.backend == "symbolic") {
      FockEngine<Scalar> eng{Params<Scalar>(c.N)};
      write_matrix_csv(os, basis, gram_matrix(c.level, eng));
    } else {
      FockEngine<Fp> eng{Params<Fp>(c.N, rep.modular.points.front().point)};
      write_matrix_csv(os, basis, gram_matrix(c.level, eng));
    }
    o.text = os.str();
  } else if (c.format == "pretty") {
    std::ostringstream os;
    os << "kac N=" << c.N << " level=" << c.level << " dimension=" << rep.dimension << " backend=" << rep.backend << '\n';
    if (rep.symbolic_equal) os << "symbolic equality: " << (*rep.symbolic_equal ? "yes" : "no") << '\n';
    os << "modular points: " << rep.modular.points.size() << " over " << rep.modular.primes.size() << " primes\n";
    os << "verdict: " << (rep.pass ? "PASS" : "FAIL") << '\n';
    o.text = os.str();
  }
  return o;
}

Outcome cmd_gmac(const RunConfig& c) {
  require_N(c);
  NTuple l;
  try {
    l = parse_ntuple(c.tuple, c.N);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Outcome o;
  Json j;
  j["N"] = c.N;
  j["tuple"] = to_string(l);
  const Backend backend = backend_or(c, Backend::symbolic);
  j["backend"] = to_string(backend);
  Json exp = Json::object();
  if (backend == Backend::symbolic) {
    try {
      auto g = gen_macdonald(l, Params<Scalar>(c.N));
      for (std::size_t b = 0; b < g.basis.size(); ++b)
        if (!g.coefficients[b].is_zero()) exp[to_string(g.basis[b])] = g.coefficients[b].to_string();
      j["eigenvalue"] = g.eigenvalue.to_string();
      j["expansion"] = exp;
      j["verdict"] = "PASS";
    } catch (const Degenerate& e) {
      j["verdict"] = "DEGENERATE";
      j["detail"] = e.what();
      o.code = kExitFail;
    }
  } else {
    std::mt19937_64 rng(c.seed);
    const ModPoint pt = ModPoint::random(word_prime(0), c.N, rng);
    FockEngine<Fp> eng{Params<Fp>(c.N, pt)};
    auto g = gen_macdonald_at_point(l, eng);
    j["prime"] = pt.prime;
    j["kernel_dim"] = g.kernel_dim;
    j["eigenvalue"] = g.eigenvalue.to_string();
    for (std::size_t b = 0; b < g.coefficients.size(); ++b)
      if (!g.coefficients[b].is_zero()) exp[to_string(g.basis[b])] = g.coefficients[b].to_string();
    j["expansion"] = exp;
    const bool ok = g.kernel_dim == 1 && g.lead && g.basis[*g.lead] == l;
    j["verdict"] = ok ? "PASS" : "DEGENERATE";
    if (!ok) o.code = kExitFail;
  }
  o.report = j;
  if (c.format == "pretty") {
    std::ostringstream os;
    os << "P_" << to_string(l) << " eigenvalue " << j["eigenvalue"].get<std::string>() << '\n';
    for (const auto& [k, v] : exp.items()) os << "  [" << k << "] " << v.get<std::string>() << '\n';
    o.text = os.str();
  }
  return o;
}

Outcome cmd_singular(const RunConfig& c) {
  const RSData d = parse_rs(c);
  auto rep = singular_check(d, c.depth, backend_or(c, Backend::modular), c.seed);
  Outcome o;
  o.code = rep.verdict == "PASS" ? kExitPass : kExitFail;
  o.report = to_json(rep);
  if (c.format == "pretty") {
    std::ostringstream os;
    os << "theta " << to_string(rep.theta) << " kernel_dim " << rep.kernel_dim << '\n';
    for (const auto& a : rep.checks) os << "  X^(" << a.i << ")_" << a.n << (a.zero ? " annihilates\n" : " does not annihilate\n");
    os << "verdict: " << rep.verdict << '\n';
    o.text = os.str();
  }
  return o;
}

Outcome cmd_project(const RunConfig& c) {
  const RSData d = parse_rs(c);
  ProjectionReport rep;
  try {
    rep = projection_check(d, backend_or(c, Backend::modular), c.seed);
  } catch (const Inapplicable& e) {
    throw UsageError(e.what());
  }
  Outcome o;
  o.code = rep.verdict == "PASS" ? kExitPass : kExitFail;
  o.report = to_json(rep);
  if (c.format == "pretty") {
    std::ostringstream os;
    os << "projection of theta " << to_string(rep.theta) << " against P_" << to_string(rep.lambda) << '\n';
    if (rep.ratio) os << "ratio: " << *rep.ratio << '\n';
    os << "verdict: " << rep.verdict << '\n';
    o.text = os.str();
  }
  return o;
}

Outcome cmd_count(const RunConfig& c) {
  require_N(c);
  require_level(c);
  Outcome o;
  Json rows = Json::array();
  bool agree = true;
  std::ostringstream csv;
  csv << "level,count,enumerated\n";
  for (int n = 0; n <= c.level; ++n) {
    const auto gf = count_PN(c.N, n);
    const auto en = enum_ntuples(c.N, n).size();
    agree = agree && gf == en;
    csv << n << ',' << gf << ',' << en << '\n';
    rows.push_back({{"level", n}, {"count", gf}, {"enumerated", en}});
  }
  o.report = {{"N", c.N}, {"level", c.level}, {"count", count_PN(c.N, c.level)}, {"table", rows}, {"verdict", agree ? "PASS" : "FAIL"}};
  o.code = agree ? kExitPass : kExitFail;
  if (c.format == "csv") o.text = csv.str();
  if (c.format == "pretty") o.text = std::to_string(count_PN(c.N, c.level)) + '\n';
  return o;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for the level-N free-field algebra"};
  app.name("dimkac");
  RunConfig c;
  app.add_flag("--paper-params", c.paper_params, "Print the (s,t) -> (q,p) dictionary");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--N", c.N, "Number of colors");
    sub->add_option("--out", c.out, "Write the report to this file");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_flag("--reproducible", c.reproducible, "Suppress timestamps and timings");
    sub->add_option("--seed", c.seed, "Seed for modular points");
    sub->add_option("--backend", c.backend, "symbolic or modular");
    sub->add_flag("--symbolic", c.symbolic, "Use the symbolic backend");
  };
  auto* kac = app.add_subcommand("kac", "Verify the Kac determinant formula");
  common(kac);
  kac->add_option("--level", c.level, "Level");
  kac->add_option("--trials", c.trials, "Modular points");
  auto* gmac = app.add_subcommand("gmac", "Generalized Macdonald function");
  common(gmac);
  gmac->add_option("--tuple", c.tuple, "N-tuple, e.g. \"2,1||3\"")->required();
  auto* sing = app.add_subcommand("singular", "Singular vector check");
  common(sing);
  sing->add_option("--r", c.r, "r_1,...,r_{N-1}")->required();
  sing->add_option("--s", c.s, "s_1,...,s_{N-1}")->required();
  sing->add_option("--depth", c.depth, "Largest mode checked (default |Theta|)");
  auto* proj = app.add_subcommand("project", "Projection to symmetric functions");
  common(proj);
  proj->add_option("--r", c.r, "r_1,...,r_{N-1}")->required();
  proj->add_option("--s", c.s, "s_1,...,s_{N-1}")->required();
  auto* count = app.add_subcommand("count", "Count N-tuples of partitions");
  common(count);
  count->add_option("--level", c.level, "Level");
  app.require_subcommand(0, 1);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  if (c.command.empty()) {
    if (c.paper_params) {
      out << paper_params_json().dump(2) << '\n';
      return kExitPass;
    }
    err << "usage error: a command is required\n" << app.help();
    return kExitUsage;
  }

  Outcome o;
  try {
    if (c.command == "kac") o = cmd_kac(c);
    else if (c.command == "gmac") o = cmd_gmac(c);
    else if (c.command == "singular") o = cmd_singular(c);
    else if (c.command == "project") o = cmd_project(c);
    else o = cmd_count(c);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateInput& e) {
    err << e.what() << '\n';
    return kExitFail;
  }
  if (c.format == "csv" && o.text.empty()) {
    err << "usage error: csv output is available for kac and count only\n";
    return kExitUsage;
  }

  std::string body;
  if (o.text.empty()) {
    Json j;
    j["command"] = c.command;
    if (!c.reproducible) j["timestamp"] = timestamp();
    if (c.paper_params) j["parameters"] = paper_params_json();
    for (auto& [k, v] : o.report.items()) j[k] = v;
    body = j.dump(2) + '\n';
  } else {
    body = o.text;
  }
  if (c.out.empty()) {
    out << body;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      err << "cannot write " << c.out << '\n';
      return kExitUsage;
    }
    f << body;
  }
  return o.code;
}

}  // namespace dimkac
