#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dimkac/scalar.hpp"

namespace dimkac {

/// Weakly decreasing positive parts; empty is the empty partition.
using Partition = std::vector<int>;
/// One partition per color, index 0 is color 1.
using NTuple = std::vector<Partition>;

struct RSData {
  std::vector<int> r;  // non-negative, length N-1
  std::vector<int> s;  // positive, length N-1
  int N() const { return static_cast<int>(r.size()) + 1; }
};

struct Inapplicable : std::invalid_argument {
  explicit Inapplicable(const std::string& what) : std::invalid_argument(what) {}
};

int size(const Partition& l);
int size(const NTuple& l);
bool is_partition(const Partition& l);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> enum_partitions(int n);

/// Total order refining the dominance-type order on N-tuples: weight vector
/// (|l^N|, ..., |l^1|) descending, then components 1..N by reverse lex.
/// Returns true when a comes before b.
bool ntuple_before(const NTuple& a, const NTuple& b);

/// All N-tuples of total size n, sorted by ntuple_before.
std::vector<NTuple> enum_ntuples(int N, int n);

/// Number of N-tuples of size n, from the generating function prod_k (1-x^k)^(-N).
std::uint64_t count_PN(int N, int n);

/// True iff lambda is strictly above mu in the order used for generalized
/// Macdonald functions: same size, every tail sum sum_{i>=k} |lambda^i| at
/// least the corresponding one of mu, and different weight vectors.
bool less_star(const NTuple& mu, const NTuple& lambda);

/// Dominance order on partitions of equal size: lambda >= mu.
bool dominates(const Partition& lambda, const Partition& mu);

struct Box {
  int row;
  int col;
  auto operator<=>(const Box&) const = default;
};

/// Addable and removable boxes, 1-based (row, column).
std::pair<std::vector<Box>, std::vector<Box>> edge_sets(const Partition& l);

/// e_l = 1 + (t-1) sum_{i>=1} (q^{l_i} - 1) t^{-i}.
Scalar e_lambda(const Partition& l);
/// The same eigenvalue from addable/removable boxes.
Scalar e_lambda_edges(const Partition& l);

/// sum_k u_k e_{l^(k)}.
Scalar eps_eigenvalue(const NTuple& l, const std::vector<Scalar>& u);

/// First n parts / remaining parts.
Partition T(const Partition& l, int n);
Partition R(const Partition& l, int n);
/// Concatenation; throws std::invalid_argument("not a partition") unless
/// the last part of l is at least the first part of m.
Partition join(const Partition& l, const Partition& m);
/// Row-wise sum l + (s^r); precondition length(l) <= r.
Partition add_rectangle(const Partition& l, int s, int r);

struct LemmaCheck {
  bool rectangle = false;  // e_{l+(s^r)} = q^s e_l - q^s t^-r + t^-r
  bool split = false;      // e_l = e_T + t^-n e_R - t^-n
  bool join = false;       // e_{J(l,m)} = e_l + t^-len(l) e_m - t^-len(l)
};

/// Evaluates both sides of the three identities. Throws Inapplicable when
/// length(l) > r, n < 0, or J(l, m) is not a partition.
LemmaCheck lemma_e_identities(const Partition& l, const Partition& m, int r, int s, int n);

/// The N-tuple Theta_{r,s} from the recursive definition.
NTuple theta_rs(const RSData& d);

/// Stacked rectangles ((s_1+..+s_{N-1})^{r_1}, (s_2+..+s_{N-1})^{r_2-r_1}, ...);
/// requires weakly increasing r.
Partition lambda_rs_closed(const RSData& d);

/// (u_1, ..., u_N) with u_N = u_pp and u_i = q^{s_i} t^{-r_i + r_{i+1}} u_{i+1}.
std::vector<Scalar> specialize_u(const RSData& d, const Scalar& u_pp);

std::string to_string(const Partition& l);
std::string to_string(const NTuple& l);
/// Comma-separated parts; throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);
/// Components separated by '|'; the component count must equal N.
NTuple parse_ntuple(const std::string& text, int N);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace dimkac
