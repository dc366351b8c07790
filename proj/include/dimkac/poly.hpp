#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dimkac {

/// Largest number of boson colors (and therefore u-variables) supported.
inline constexpr int kMaxColors = 6;

/// Variables of the coefficient ring, in lex order: s > t > u1 > ... > u6.
inline constexpr int kNumVars = 2 + kMaxColors;
inline constexpr int kVarS = 0;
inline constexpr int kVarT = 1;
inline constexpr int var_u(int color) { return 1 + color; }  // color is 1-based

std::string variable_name(int v);

struct Monomial {
  std::array<std::uint16_t, kNumVars> exp{};

  // std::array compares lexicographically, which is exactly lex order with s first.
  auto operator<=>(const Monomial&) const = default;

  static Monomial variable(int v, unsigned e = 1);

  bool is_one() const;
  unsigned total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Precondition: divides(*this).
  Monomial operator/(const Monomial& other) const;
  static Monomial min(const Monomial& a, const Monomial& b);
};

/// Sparse multivariate polynomial over the integers. Terms are kept sorted by
/// strictly decreasing monomial (lex) and never carry a zero coefficient.
class Poly {
 public:
  struct Term {
    Monomial mono;
    mpz_class coeff;
  };

  Poly() = default;
  Poly(long long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(const mpz_class& c);
  static Poly variable(int v);
  static Poly monomial(const Monomial& m, const mpz_class& c = 1);
  /// Takes terms in any order, combines duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_term() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int sign() const;  // sign of the leading coefficient, 0 for the zero polynomial

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const mpz_class& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;

  int degree(int v) const;      // -1 for the zero polynomial
  int min_degree(int v) const;  // -1 for the zero polynomial
  unsigned total_degree() const;
  bool uses_variable(int v) const { return degree(v) > 0; }
  /// Elementwise minimum of all exponents (the largest monomial dividing this).
  Monomial monomial_content() const;
  /// Positive gcd of all coefficients; 0 for the zero polynomial.
  mpz_class content() const;

  /// Quotient when `d` divides this exactly, nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;
  /// Divides every term by c*m; precondition: exact.
  Poly divide_term(const mpz_class& c, const Monomial& m) const;
  Poly multiply_term(const mpz_class& c, const Monomial& m) const;

  /// Evaluation modulo p; `values` holds one residue per variable.
  std::uint64_t eval_mod(std::uint64_t p, std::span<const std::uint64_t> values) const;
  /// Replace variable v by the polynomial r.
  Poly substitute(int v, const Poly& r) const;

  std::string to_string() const;

 private:
  explicit Poly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

}  // namespace dimkac
