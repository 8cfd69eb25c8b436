#include "qalg/ring.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

namespace qalg {

RootConfig::RootConfig(int denominator) : denominator_(denominator) {
  if (denominator < 2) {
    throw RootError("root denominator must be at least 2, got " + std::to_string(denominator));
  }
}

RootConfig RootConfig::for_embedding(int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw RootError("embedding parameters must be positive");
  return RootConfig(2 * k1 * k2);
}

QExponent::QExponent(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DivisionByZero("exponent with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / (g == 0 ? 1 : g);
  den_ = denominator / (g == 0 ? 1 : g);
}

int QExponent::t_exponent(RootConfig root) const {
  const std::int64_t d = root.denominator();
  if (d % den_ != 0) {
    throw RootError("exponent " + to_string() + " of q is not a multiple of 1/" + std::to_string(d));
  }
  return static_cast<int>(num_ * (d / den_));
}

QExponent operator+(QExponent a, QExponent b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

QExponent operator*(QExponent a, QExponent b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

std::strong_ordering operator<=>(QExponent a, QExponent b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string QExponent::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------

LaurentScalar::LaurentScalar(const Rational& constant) {
  if (sgn(constant) == 0) return;
  Rational c = constant;
  c.canonicalize();
  terms_.emplace(0, c);
}

LaurentScalar LaurentScalar::monomial(const Rational& coeff, int t_exp, RootConfig root) {
  LaurentScalar s;
  if (sgn(coeff) == 0) return s;
  Rational c = coeff;
  c.canonicalize();
  s.terms_.emplace(t_exp, c);
  s.root_ = root.denominator();
  s.normalize_root();
  return s;
}

bool LaurentScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational LaurentScalar::coefficient(int t_exp) const {
  auto it = terms_.find(t_exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentScalar::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentScalar::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentScalar::adopt_root(int other) {
  if (other == 0) return;
  if (root_ != 0 && root_ != other) {
    throw RootError("mixing scalars with root denominators " + std::to_string(root_) + " and " +
                    std::to_string(other));
  }
  root_ = other;
}

void LaurentScalar::normalize_root() {
  if (is_constant()) root_ = 0;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
  adopt_root(other.root_);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  normalize_root();
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& other) {
  adopt_root(other.root_);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  normalize_root();
  return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar out;
  out.root_ = a.root_;
  out.adopt_root(b.root_);
  if (a.is_zero() || b.is_zero()) {
    out.root_ = 0;
    return out;
  }
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Rational prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(ea + eb, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  out.normalize_root();
  return out;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& other) {
  *this = *this * other;
  return *this;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentScalar LaurentScalar::bar() const {
  LaurentScalar out;
  out.root_ = root_;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

std::optional<LaurentScalar> LaurentScalar::divide_exact(const LaurentScalar& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  LaurentScalar rest = *this;
  rest.adopt_root(divisor.root_);
  LaurentScalar quotient;
  if (rest.is_zero()) return quotient;
  const int lowest_allowed = rest.min_exponent() - divisor.min_exponent();
  const int lead_exp = divisor.max_exponent();
  const Rational lead_coeff = divisor.terms_.rbegin()->second;
  const int root = rest.root_ != 0 ? rest.root_ : divisor.root_;
  while (!rest.is_zero()) {
    const int shift = rest.max_exponent() - lead_exp;
    if (shift < lowest_allowed) return std::nullopt;
    Rational c = rest.terms_.rbegin()->second / lead_coeff;
    LaurentScalar step;
    step.terms_.emplace(shift, c);
    step.root_ = root;
    step.normalize_root();
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

// ---------------------------------------------------------------------------

LaurentFraction::LaurentFraction(LaurentScalar numerator, int qdiff_power, RootConfig root)
    : numerator_(std::move(numerator)), power_(qdiff_power), root_(root.denominator()) {
  if (qdiff_power < 0) {
    numerator_ *= [&] {
      LaurentScalar p = 1;
      for (int k = 0; k < -qdiff_power; ++k) p *= q_difference(root);
      return p;
    }();
    power_ = 0;
  }
  canonicalize();
}

void LaurentFraction::canonicalize() {
  if (numerator_.is_zero()) {
    power_ = 0;
    root_ = 0;
    return;
  }
  if (power_ == 0) {
    root_ = numerator_.root();
    return;
  }
  const LaurentScalar qdiff = q_difference(RootConfig(root_));
  while (power_ > 0) {
    auto q = numerator_.divide_exact(qdiff);
    if (!q) break;
    numerator_ = *q;
    --power_;
  }
  if (power_ == 0) root_ = numerator_.root();
}

std::optional<LaurentScalar> LaurentFraction::to_laurent() const {
  if (power_ == 0) return numerator_;
  return std::nullopt;
}

LaurentFraction& LaurentFraction::operator+=(const LaurentFraction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int root = root_ != 0 ? root_ : other.root_;
  if (root_ != 0 && other.root_ != 0 && root_ != other.root_) {
    throw RootError("mixing fractions with different root denominators");
  }
  LaurentScalar a = numerator_;
  LaurentScalar b = other.numerator_;
  const int power = std::max(power_, other.power_);
  if (power > 0) {
    const LaurentScalar qdiff = q_difference(RootConfig(root));
    for (int k = power_; k < power; ++k) a *= qdiff;
    for (int k = other.power_; k < power; ++k) b *= qdiff;
  }
  numerator_ = a + b;
  power_ = power;
  root_ = root;
  canonicalize();
  return *this;
}

LaurentFraction& LaurentFraction::operator*=(const LaurentFraction& other) {
  if (root_ != 0 && other.root_ != 0 && root_ != other.root_) {
    throw RootError("mixing fractions with different root denominators");
  }
  const int root = root_ != 0 ? root_ : other.root_;
  numerator_ *= other.numerator_;
  power_ += other.power_;
  root_ = root;
  canonicalize();
  return *this;
}

LaurentFraction LaurentFraction::operator-() const {
  LaurentFraction out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

// ---------------------------------------------------------------------------

LaurentScalar q_power(QExponent e, RootConfig root) {
  return LaurentScalar::monomial(1, e.t_exponent(root), root);
}

LaurentScalar q_difference(RootConfig root) {
  return q_power(1, root) - q_power(-1, root);
}

LaurentScalar q_integer(long k, RootConfig root) {
  if (k < 0) return -q_integer(-k, root);
  LaurentScalar out;
  for (long j = 0; j < k; ++j) out += q_power(QExponent(k - 1 - 2 * j), root);
  return out;
}

LaurentScalar q_factorial(long k, RootConfig root) {
  if (k < 0) throw Error("q_factorial of a negative integer");
  LaurentScalar out = 1;
  for (long j = 1; j <= k; ++j) out *= q_integer(j, root);
  return out;
}

LaurentFraction q_number(QExponent x, RootConfig root) {
  return LaurentFraction(q_power(x, root) - q_power(-x, root), 1, root);
}

namespace {

Rational rational_power(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw DivisionByZero("negative power of zero");
    Rational inv = 1 / base;
    return rational_power(inv, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  b.canonicalize();
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace

Rational eval_at(const LaurentScalar& p, const Rational& t0) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * rational_power(t0, e);
  return sum;
}

// ---------------------------------------------------------------------------

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const LaurentScalar& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    out += magnitude.get_str();
    if (e != 0) out += "*q^(" + QExponent(e, p.root()).to_string() + ")";
  }
  return out;
}

std::string to_string(const LaurentFraction& f) {
  if (f.qdiff_power() == 0) return to_string(f.numerator());
  std::string out = "(" + to_string(f.numerator()) + ")/(1*q^(1) - 1*q^(-1))";
  if (f.qdiff_power() > 1) out += "^" + std::to_string(f.qdiff_power());
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const LaurentFraction& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, QExponent e) { return os << e.to_string(); }

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, RootConfig root) : root_(root) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  LaurentScalar parse() {
    if (text_.empty()) fail("empty scalar");
    LaurentScalar out;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse scalar '" + text_ + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected integer");
    return std::stoll(text_.substr(start, pos_ - start));
  }

  LaurentScalar term(int sign) {
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      try {
        coeff = Rational(text_.substr(start, pos_ - start));
        coeff.canonicalize();
      } catch (const std::invalid_argument&) {
        fail("bad coefficient");
      }
      if (peek() != '*') return LaurentScalar(Rational(sign * coeff));
      ++pos_;
    }
    if (text_.compare(pos_, 3, "q^(") != 0) fail("expected q^(");
    pos_ += 3;
    std::int64_t num = integer();
    std::int64_t den = 1;
    if (peek() == '/') {
      ++pos_;
      den = integer();
    }
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    try {
      return LaurentScalar::monomial(Rational(sign * coeff), QExponent(num, den).t_exponent(root_),
                                     root_);
    } catch (const RootError& e) {
      fail(e.what());
    }
  }

  std::string text_;
  std::size_t pos_ = 0;
  RootConfig root_;
};

}  // namespace

LaurentScalar parse_scalar(std::string_view text, RootConfig root) {
  return ScalarParser(text, root).parse();
}

}  // namespace qalg
