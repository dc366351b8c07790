#include "dimkac/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dimkac {

int size(const Partition& l) { return std::accumulate(l.begin(), l.end(), 0); }

int size(const NTuple& l) {
  int n = 0;
  for (const auto& c : l) n += size(c);
  return n;
}

bool is_partition(const Partition& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 1) return false;
    if (i > 0 && l[i] > l[i - 1]) return false;
  }
  return true;
}

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<int> weights(const NTuple& l) {
  std::vector<int> w;
  for (std::size_t i = l.size(); i-- > 0;) w.push_back(size(l[i]));
  return w;
}

}  // namespace

std::vector<Partition> enum_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

bool ntuple_before(const NTuple& a, const NTuple& b) {
  auto wa = weights(a), wb = weights(b);
  if (wa != wb) return wa > wb;
  return a > b;  // componentwise, each in reverse lex
}

std::vector<NTuple> enum_ntuples(int N, int n) {
  std::vector<NTuple> out;
  NTuple cur(static_cast<std::size_t>(N));
  auto rec = [&](auto&& self, int color, int left) -> void {
    if (color == N - 1) {
      for (auto& p : enum_partitions(left)) {
        cur[static_cast<std::size_t>(color)] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int k = left; k >= 0; --k) {
      for (auto& p : enum_partitions(k)) {
        cur[static_cast<std::size_t>(color)] = p;
        self(self, color + 1, left - k);
      }
    }
  };
  if (N >= 1 && n >= 0) rec(rec, 0, n);
  std::sort(out.begin(), out.end(), ntuple_before);
  return out;
}

std::uint64_t count_PN(int N, int n) {
  if (n < 0) return 0;
  // Multiply N times by prod_k 1/(1-x^k), i.e. N rounds of the partition recurrence.
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int round = 0; round < N; ++round)
    for (int k = 1; k <= n; ++k)
      for (int m = k; m <= n; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - k)];
  return c[static_cast<std::size_t>(n)];
}

bool less_star(const NTuple& mu, const NTuple& lambda) {
  if (mu.size() != lambda.size() || size(mu) != size(lambda)) return false;
  int tl = 0, tm = 0;
  bool differ = false;
  for (std::size_t k = lambda.size(); k-- > 0;) {
    int a = size(lambda[k]), b = size(mu[k]);
    tl += a;
    tm += b;
    if (tl < tm) return false;
    if (a != b) differ = true;
  }
  return differ;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  int a = 0, b = 0;
  for (std::size_t i = 0; i < std::max(lambda.size(), mu.size()); ++i) {
    a += i < lambda.size() ? lambda[i] : 0;
    b += i < mu.size() ? mu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

std::pair<std::vector<Box>, std::vector<Box>> edge_sets(const Partition& l) {
  std::vector<Box> add, rem;
  const int len = static_cast<int>(l.size());
  for (int i = 1; i <= len + 1; ++i) {
    int row = i <= len ? l[static_cast<std::size_t>(i - 1)] : 0;
    int above = i >= 2 ? l[static_cast<std::size_t>(i - 2)] : -1;
    if (i == 1 || above > row) add.push_back({i, row + 1});
    int below = i < len ? l[static_cast<std::size_t>(i)] : 0;
    if (i <= len && below < row) rem.push_back({i, row});
  }
  return {add, rem};
}

Scalar e_lambda(const Partition& l) {
  const Scalar q = Scalar::q(), t = Scalar::t();
  Scalar sum;
  for (std::size_t i = 0; i < l.size(); ++i) sum += (q.pow(l[i]) - 1) * t.pow(-static_cast<int>(i + 1));
  return 1 + (t - 1) * sum;
}

Scalar e_lambda_edges(const Partition& l) {
  const Scalar q = Scalar::q(), t = Scalar::t();
  auto [add, rem] = edge_sets(l);
  Scalar e;
  for (auto b : add) e += q.pow(b.col - 1) * t.pow(-b.row + 1);
  for (auto b : rem) e -= q.pow(b.col) * t.pow(-b.row);
  return e;
}

Scalar eps_eigenvalue(const NTuple& l, const std::vector<Scalar>& u) {
  if (u.size() != l.size()) throw std::invalid_argument("eps_eigenvalue: need one u per color");
  Scalar e;
  for (std::size_t k = 0; k < l.size(); ++k) e += u[k] * e_lambda(l[k]);
  return e;
}

Partition T(const Partition& l, int n) {
  if (n >= static_cast<int>(l.size())) return l;
  return Partition(l.begin(), l.begin() + std::max(n, 0));
}

Partition R(const Partition& l, int n) {
  if (n >= static_cast<int>(l.size())) return {};
  return Partition(l.begin() + std::max(n, 0), l.end());
}

Partition join(const Partition& l, const Partition& m) {
  if (!l.empty() && !m.empty() && l.back() < m.front()) throw std::invalid_argument("not a partition");
  Partition out = l;
  out.insert(out.end(), m.begin(), m.end());
  return out;
}

Partition add_rectangle(const Partition& l, int s, int r) {
  if (static_cast<int>(l.size()) > r) throw Inapplicable("add_rectangle: too many parts");
  if (s == 0) return l;
  Partition out(static_cast<std::size_t>(r), s);
  for (std::size_t i = 0; i < l.size(); ++i) out[i] += l[i];
  return out;
}

LemmaCheck lemma_e_identities(const Partition& l, const Partition& m, int r, int s, int n) {
  if (static_cast<int>(l.size()) > r) throw Inapplicable("lemma: length exceeds r");
  if (n < 0) throw Inapplicable("lemma: negative n");
  if (!l.empty() && !m.empty() && l.back() < m.front()) throw Inapplicable("lemma: J(l, m) is not a partition");
  const Scalar q = Scalar::q(), t = Scalar::t();
  LemmaCheck c;
  c.rectangle = e_lambda(add_rectangle(l, s, r)) == q.pow(s) * e_lambda(l) - q.pow(s) * t.pow(-r) + t.pow(-r);
  c.split = e_lambda(l) == e_lambda(T(l, n)) + t.pow(-n) * e_lambda(R(l, n)) - t.pow(-n);
  const int len = static_cast<int>(l.size());
  c.join = e_lambda(join(l, m)) == e_lambda(l) + t.pow(-len) * e_lambda(m) - t.pow(-len);
  return c;
}

NTuple theta_rs(const RSData& d) {
  const int N = d.N();
  if (N < 2 || d.s.size() != d.r.size()) throw std::invalid_argument("theta_rs: need N >= 2 and |r| = |s|");
  for (std::size_t k = 0; k < d.r.size(); ++k)
    if (d.r[k] < 0 || d.s[k] < 1) throw std::invalid_argument("theta_rs: need r >= 0, s >= 1");
  NTuple theta{{}, Partition(static_cast<std::size_t>(d.r[0]), d.s[0])};
  for (std::size_t k = 1; k < d.r.size(); ++k) {
    Partition last = theta.back();
    theta.back() = R(last, d.r[k]);
    theta.push_back(add_rectangle(T(last, d.r[k]), d.s[k], d.r[k]));
  }
  return theta;
}

Partition lambda_rs_closed(const RSData& d) {
  const std::size_t m = d.r.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (d.r[k] < 0 || d.s[k] < 1) throw std::invalid_argument("lambda_rs_closed: need r >= 0, s >= 1");
    if (k > 0 && d.r[k] < d.r[k - 1]) throw Inapplicable("lambda_rs_closed: r must be weakly increasing");
  }
  Partition out;
  int prev = 0;
  for (std::size_t k = 0; k < m; ++k) {
    int width = 0;
    for (std::size_t j = k; j < m; ++j) width += d.s[j];
    for (int i = prev; i < d.r[k]; ++i) out.push_back(width);
    prev = d.r[k];
  }
  return out;
}

std::vector<Scalar> specialize_u(const RSData& d, const Scalar& u_pp) {
  const int N = d.N();
  std::vector<Scalar> u(static_cast<std::size_t>(N));
  u.back() = u_pp;
  const Scalar q = Scalar::q(), t = Scalar::t();
  for (int i = N - 2; i >= 0; --i) {
    int r_next = i + 1 < N - 1 ? d.r[static_cast<std::size_t>(i + 1)] : 0;
    u[static_cast<std::size_t>(i)] =
        q.pow(d.s[static_cast<std::size_t>(i)]) * t.pow(-d.r[static_cast<std::size_t>(i)] + r_next) * u[static_cast<std::size_t>(i + 1)];
  }
  return u;
}

std::string to_string(const Partition& l) {
  std::string out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(l[i]);
  }
  return out;
}

std::string to_string(const NTuple& l) {
  std::string out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += '|';
    out += to_string(l[i]);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string field = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos || field.size() > 6)
      throw std::invalid_argument("malformed integer list: \"" + text + "\"");
    out.push_back(std::stoi(field));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition l = parse_int_list(text);
  if (!is_partition(l)) throw std::invalid_argument("not a partition: \"" + text + "\"");
  return l;
}

NTuple parse_ntuple(const std::string& text, int N) {
  NTuple out;
  std::size_t pos = 0;
  while (true) {
    std::size_t bar = text.find('|', pos);
    out.push_back(parse_partition(text.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos)));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  if (static_cast<int>(out.size()) != N)
    throw std::invalid_argument("expected " + std::to_string(N) + " components in \"" + text + "\"");
  return out;
}

}  // namespace dimkac
