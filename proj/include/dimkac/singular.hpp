#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dimkac/macdonald.hpp"

namespace dimkac {

enum class Backend { symbolic, modular };

std::string to_string(Backend b);
/// Throws std::invalid_argument on anything but "symbolic" or "modular".
Backend parse_backend(const std::string& text);

struct Annihilation {
  int i = 0;
  int n = 0;
  bool zero = false;
};

struct SingularReport {
  RSData data;
  NTuple theta;
  Backend backend = Backend::symbolic;
  std::vector<std::string> specialization;  // u_1..u_N as strings
  std::optional<ModPoint> point;            // modular backend only
  int depth = 0;
  std::size_t kernel_dim = 0;
  std::vector<Annihilation> checks;
  std::string verdict;  // PASS, FAIL or DEGENERATE
};

/// Builds the X^(1)_0 eigenvector for Theta_{r,s} at u = specialize_u(d, u_N)
/// and applies every X^(i)_n, 1 <= n <= depth. depth <= 0 means |Theta|.
/// The modular backend draws s, t, u_N from `seed`.
SingularReport singular_check(const RSData& d, int depth, Backend backend, std::uint64_t seed);

/// Single constraint u_i = q^s t^{-r} u_{i+1}, other u generic, tuple with
/// the rectangle (s^r) in slot i+1.
SingularReport rank1_check(int i, int r, int s, int N, Backend backend, std::uint64_t seed);

struct ProjectionReport {
  RSData data;
  NTuple theta;
  Partition lambda;
  Backend backend = Backend::symbolic;
  std::optional<ModPoint> point;
  std::size_t kernel_dim = 0;
  std::vector<std::pair<Partition, std::string>> projection;  // p-basis coefficients
  std::vector<std::pair<Partition, std::string>> target;      // P_lambda in the p-basis
  std::optional<std::string> ratio;
  std::optional<Partition> first_mismatch;
  std::string verdict;
};

/// Projects the Theta_{r,s} eigenvector to symmetric functions and compares
/// with P_{lambda_{r,s}}. Throws Inapplicable unless r is weakly increasing.
ProjectionReport projection_check(const RSData& d, Backend backend, std::uint64_t seed);

nlohmann::ordered_json to_json(const SingularReport& r);
nlohmann::ordered_json to_json(const ProjectionReport& r);

}  // namespace dimkac
