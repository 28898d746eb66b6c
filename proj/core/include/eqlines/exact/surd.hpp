#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqlines::exact {

using Rational = mpq_class;

// Raised for inputs outside the mathematical domain of an operation,
// e.g. the square root of a negative number or division by zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a radicand cannot be reduced within the trial-division bound,
// or when a nested square root falls outside the supported extension.
class UnsupportedRadicand : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// num/den in lowest terms; den == 0 raises DomainError.
Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

// An exact real number  sum_i q_i sqrt(d_i)  +  theta * sum_j r_j sqrt(e_j)
// with rational q_i, r_j, square-free positive d_i, e_j and
// theta = sqrt((5 - sqrt 5) / 10).
//
// theta is not an element of any multiquadratic field, so the term list
// is a canonical form: equality of Surds is equality of term lists.
// The rational part sits in the term with rad == 1 and theta == false.
class Surd {
 public:
  struct Term {
    Rational coeff;
    std::uint64_t rad = 1;
    bool theta = false;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Surd() = default;
  Surd(const Rational& q);  // NOLINT: implicit by design
  Surd(long v);             // NOLINT

  // q * sqrt(rad) [* theta]; rad need not be square-free.
  static Surd term(const Rational& q, const mpz_class& rad, bool theta = false);

  // sqrt(q) for q >= 0.
  static Surd sqrt(const Rational& q);
  static Surd sqrt(long v) { return sqrt(Rational(v)); }
  // sqrt(s) for s >= 0 when s is rational, denests over Q(sqrt 5), or is
  // theta^2 times such a square. Anything else raises UnsupportedRadicand.
  static Surd sqrt(const Surd& s);
  static Surd theta();
  // theta^2 = 1/2 - sqrt(5)/10
  static const Surd& theta_squared();

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool has_theta() const;
  // The coefficient of sqrt(1); zero when absent.
  Rational rational_part() const;
  // Only valid when is_rational().
  Rational to_rational() const;

  // -1, 0 or +1, decided exactly.
  int sign() const;
  Surd abs() const;
  Surd inverse() const;
  double to_double() const;
  std::string to_string() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

  // Builds from arbitrary terms, merging duplicates and dropping zeros.
  // Radicands must already be square-free.
  static Surd from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

// sign(a - b)
int compare(const Surd& a, const Surd& b);

// Splits a positive integer n as s^2 * f with f square-free.
// Raises UnsupportedRadicand when the factorization is not decidable within
// the trial-division bound or f does not fit in 64 bits.
std::pair<mpz_class, std::uint64_t> square_free_split(const mpz_class& n);

inline constexpr std::uint64_t kTrialDivisionBound = 1000000;

}  // namespace eqlines::exact
