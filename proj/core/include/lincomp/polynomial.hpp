#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lincomp/model.hpp"

namespace lincomp {

/// Product of parameters with positive exponents, kept sorted by Param.
/// The empty product is the constant monomial 1.
class Monomial {
 public:
  using Factor = std::pair<Param, unsigned>;

  Monomial() = default;
  explicit Monomial(Param p) : factors_{{p, 1u}}, degree_(1) {}

  /// Canonicalizes: sorts, merges repeated parameters, drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent(Param p) const;

  Monomial operator*(const Monomial& other) const;

  /// "a02*a13^2"; "1" for the empty product.
  std::string to_string() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// Order used for storage and printing: higher total degree first, then
/// lexicographic on the (Param-sorted) factor sequence.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class, TermOrder>;

  Polynomial() = default;

  static Polynomial constant(const mpz_class& c);
  static Polynomial variable(Param p);
  static Polynomial term(Monomial m, const mpz_class& c = 1);

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Value when constant (0 for the zero polynomial), nullopt otherwise.
  std::optional<mpz_class> constant_value() const;
  /// Coefficient of `m` (0 if absent).
  mpz_class coefficient(const Monomial& m) const;
  std::set<Param> variables() const;

  void add_term(const Monomial& m, const mpz_class& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Canonical text, e.g. "a02*a13*a21 + a02*a21*a23 - 2*a12 + 1"; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

Polynomial partial_derivative(const Polynomial& p, Param x);

/// Parses the canonical text form (and anything close to it: arbitrary term
/// order, optional spaces, integer coefficients, ^ exponents). Parameter
/// names are "a" followed by two digits, or "a<row>_<col>".
Polynomial parse_polynomial(const std::string& text);

// ---------------------------------------------------------------------------
// Univariate polynomials in lambda with Polynomial coefficients.

class LambdaPoly {
 public:
  LambdaPoly() = default;
  /// Coefficient list indexed by lambda-degree; trailing zeros are trimmed.
  explicit LambdaPoly(std::vector<Polynomial> coefficients);

  static LambdaPoly constant(Polynomial c);
  /// lambda + c
  static LambdaPoly monic_linear(Polynomial c);

  bool is_zero() const { return coeffs_.empty(); }
  /// lambda-degree; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of lambda^k; zero beyond the degree.
  Polynomial coefficient(int k) const;
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

  LambdaPoly& operator+=(const LambdaPoly& other);
  LambdaPoly& operator-=(const LambdaPoly& other);
  LambdaPoly operator-() const;
  LambdaPoly scaled(const Polynomial& c) const;
  /// Multiplication by lambda^k.
  LambdaPoly shifted(int k) const;

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);

  /// "L^2 + (a12 + a21)*L" style rendering, for diagnostics.
  std::string to_string() const;

  friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

 private:
  void trim();
  std::vector<Polynomial> coeffs_;
};

// ---------------------------------------------------------------------------
// Prime fields

/// Primes just below 2^61, so products fit in unsigned 128-bit arithmetic.
inline constexpr std::uint64_t kTrialPrimes[3] = {
    2305843009213693951ULL,  // 2^61 - 1
    2305843009213693921ULL,
    2305843009213693907ULL,
};

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;
  /// Inverse of a nonzero element (Fermat).
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }
  std::uint64_t reduce(const mpz_class& c) const;

 private:
  std::uint64_t p_;
};

/// An assignment of field elements to parameters.
struct FieldPoint {
  std::uint64_t prime = kTrialPrimes[0];
  std::map<Param, std::uint64_t> values;
};

/// Exact evaluation mod pt.prime. Throws std::out_of_range naming the first
/// unassigned parameter.
std::uint64_t eval_mod(const Polynomial& p, const FieldPoint& pt);

/// Rank of a dense matrix over F_p (Gaussian elimination). Rows may be ragged
/// only if empty.
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> rows,
                     const PrimeField& field);

}  // namespace lincomp
