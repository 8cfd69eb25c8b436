// Exact Laurent-polynomial arithmetic in a fixed root t = q^(1/D) of the
// deformation parameter, plus the q-number combinatorics built on it.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qalg {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponent of q that is not representable with the active root.
class RootError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// The root denominator D: every exponent of q in a session is a multiple of 1/D.
class RootConfig {
 public:
  explicit RootConfig(int denominator = 2);

  /// D = 2*k1*k2, enough for every exponent arising in the embedding formulas.
  static RootConfig for_embedding(int k1, int k2);

  int denominator() const { return denominator_; }
  bool divisible_by(int k) const { return k != 0 && denominator_ % k == 0; }

  friend bool operator==(RootConfig, RootConfig) = default;

 private:
  int denominator_;
};

/// Exact rational exponent of q, always in lowest terms with positive denominator.
class QExponent {
 public:
  constexpr QExponent() = default;
  QExponent(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /// The exponent of t = q^(1/D); throws RootError if not an integer.
  int t_exponent(RootConfig root) const;

  QExponent operator-() const { return {-num_, den_}; }
  friend QExponent operator+(QExponent a, QExponent b);
  friend QExponent operator-(QExponent a, QExponent b) { return a + (-b); }
  friend QExponent operator*(QExponent a, QExponent b);
  friend bool operator==(QExponent, QExponent) = default;
  friend std::strong_ordering operator<=>(QExponent a, QExponent b);

  /// "a" or "a/b".
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Finite sum of c_e t^e with exact rational c_e. Zero coefficients are never stored,
/// so equality is structural. Constants carry no root; anything else remembers D.
class LaurentScalar {
 public:
  using Terms = std::map<int, Rational>;

  LaurentScalar() = default;
  LaurentScalar(const Rational& constant);  // NOLINT: constants convert implicitly
  LaurentScalar(long constant) : LaurentScalar(Rational(constant)) {}  // NOLINT
  LaurentScalar(int constant) : LaurentScalar(Rational(constant)) {}   // NOLINT

  static LaurentScalar monomial(const Rational& coeff, int t_exp, RootConfig root);

  /// 0 for constants, otherwise D.
  int root() const { return root_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(int t_exp) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentScalar& operator+=(const LaurentScalar& other);
  LaurentScalar& operator-=(const LaurentScalar& other);
  LaurentScalar& operator*=(const LaurentScalar& other);
  LaurentScalar operator-() const;

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return a.root_ == b.root_ && a.terms_ == b.terms_;
  }

  /// The bar involution t -> t^(-1).
  LaurentScalar bar() const;

  /// Quotient if `divisor` divides this exactly in the Laurent ring.
  std::optional<LaurentScalar> divide_exact(const LaurentScalar& divisor) const;

 private:
  void adopt_root(int other);
  void normalize_root();

  Terms terms_;
  int root_ = 0;
};

inline bool is_zero(const LaurentScalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// numerator / (q - q^(-1))^power with power minimal. Holds the few quantities
/// that leave the Laurent ring: diagonal Y constants, counits, half-integer q-numbers.
class LaurentFraction {
 public:
  LaurentFraction() = default;
  LaurentFraction(const Rational& constant) : numerator_(constant) {}  // NOLINT
  LaurentFraction(LaurentScalar numerator)  // NOLINT
      : numerator_(std::move(numerator)), root_(numerator_.root()) {}
  LaurentFraction(LaurentScalar numerator, int qdiff_power, RootConfig root);

  const LaurentScalar& numerator() const { return numerator_; }
  int qdiff_power() const { return power_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// The Laurent polynomial, if the denominator cancels.
  std::optional<LaurentScalar> to_laurent() const;

  LaurentFraction& operator+=(const LaurentFraction& other);
  LaurentFraction& operator-=(const LaurentFraction& other) { return *this += -other; }
  LaurentFraction& operator*=(const LaurentFraction& other);
  LaurentFraction operator-() const;

  friend LaurentFraction operator+(LaurentFraction a, const LaurentFraction& b) { return a += b; }
  friend LaurentFraction operator-(LaurentFraction a, const LaurentFraction& b) { return a -= b; }
  friend LaurentFraction operator*(LaurentFraction a, const LaurentFraction& b) { return a *= b; }
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
    return a.power_ == b.power_ && a.root_ == b.root_ && a.numerator_ == b.numerator_;
  }

 private:
  void canonicalize();

  LaurentScalar numerator_;
  int power_ = 0;
  int root_ = 0;
};

inline bool is_zero(const LaurentFraction& f) { return f.is_zero(); }

/// q^e as the monomial t^(e*D).
LaurentScalar q_power(QExponent e, RootConfig root);

/// q - q^(-1).
LaurentScalar q_difference(RootConfig root);

/// [k]_q = (q^k - q^(-k)) / (q - q^(-1)), expanded; [-k]_q = -[k]_q.
LaurentScalar q_integer(long k, RootConfig root);

/// [1]_q [2]_q ... [k]_q.
LaurentScalar q_factorial(long k, RootConfig root);

/// [x]_q for a rational x. Laurent only when x is an integer.
LaurentFraction q_number(QExponent x, RootConfig root);

/// Exact value at t = t0. Throws DivisionByZero for t0 = 0 with negative exponents.
Rational eval_at(const LaurentScalar& p, const Rational& t0);

/// Text form: terms "c*q^(a/b)" by descending exponent, joined with " + " / " - ".
std::string to_string(const LaurentScalar& p);
std::string to_string(const LaurentFraction& f);
std::string to_string(const Rational& r);

/// Inverse of to_string(LaurentScalar); exponents must be multiples of 1/D.
LaurentScalar parse_scalar(std::string_view text, RootConfig root);

std::ostream& operator<<(std::ostream& os, const LaurentScalar& p);
std::ostream& operator<<(std::ostream& os, const LaurentFraction& f);
std::ostream& operator<<(std::ostream& os, QExponent e);

}  // namespace qalg
