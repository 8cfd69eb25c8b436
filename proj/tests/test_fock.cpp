#include <doctest.h>

#include <random>

#include "qalg/fock.hpp"

using namespace qalg;

namespace {

const RootConfig D2(2);

std::size_t index(const Sector& s, Occupation occ) { return s.index_of(occ).value(); }

Operator random_operator(std::mt19937& rng, const Sector& s) {
  std::uniform_int_distribution<int> coin(0, 2), c(-3, 3), e(-2, 2);
  Operator out(s, s);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (coin(rng) == 0) out.add_to(i, j, LaurentScalar::monomial(c(rng), e(rng), D2));
  return out;
}

using Dense = std::vector<std::vector<LaurentScalar>>;

Dense dense(const Operator& a) {
  Dense out(a.codomain().dim(), std::vector<LaurentScalar>(a.domain().dim()));
  a.for_each([&](std::size_t i, std::size_t j, const LaurentScalar& v) { out[i][j] = v; });
  return out;
}

Dense kron(const Dense& a, const Dense& b) {
  Dense out(a.size() * b.size(), std::vector<LaurentScalar>(a[0].size() * b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[0].size(); ++l) out[i * b.size() + k][j * b[0].size() + l] = a[i][j] * b[k][l];
  return out;
}

Dense matmul(const Dense& a, const Dense& b) {
  Dense out(a.size(), std::vector<LaurentScalar>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Rational binom(int n, int k) {
  Rational out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("sector dimensions follow the stars-and-bars count") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const Sector s = Sector::make(n, m, D2);
      CHECK(Rational(s.dim()) == binom(n + m - 1, m));
      CHECK(std::is_sorted(s.basis().begin(), s.basis().end()));
      CHECK(std::adjacent_find(s.basis().begin(), s.basis().end()) == s.basis().end());
    }
  }
  CHECK(Sector::make(3, 2, D2).dim() == 6);
  CHECK(Sector::make(1, 5, D2).dim() == 1);
  CHECK(Sector::make(4, 0, D2).basis().front() == Occupation{0, 0, 0, 0});
  CHECK_THROWS_AS(Sector::make(6, 6, D2, 100), DimensionCapError);
}

TEST_CASE("creation and annihilation on the monomial basis") {
  const Sector vac = Sector::make(2, 0, D2);
  const Sector one = Sector::make(2, 1, D2);
  const Sector two = Sector::make(2, 2, D2);

  const Operator a1p = creation(1, vac);
  CHECK(a1p.at(index(one, {1, 0}), 0) == LaurentScalar(1));
  CHECK(creation(2, one).at(index(two, {1, 1}), index(one, {1, 0})) == LaurentScalar(1));

  CHECK(annihilation(1, one).at(0, index(one, {1, 0})) == LaurentScalar(1));
  CHECK(annihilation(1, two).at(index(one, {1, 0}), index(two, {2, 0})) == q_integer(2, D2));
  CHECK(annihilation(2, one).find(0, index(one, {1, 0})) == nullptr);
  CHECK(annihilation(1, vac).is_zero());
  CHECK(annihilation(1, vac).codomain().dim() == 0);

  // Every basis vector has exactly one image under a creation operator.
  const Sector s = Sector::make(3, 2, D2);
  CHECK(creation(2, s).nonzeros() == s.dim());
  CHECK_THROWS_AS(creation(4, s), IndexError);
}

TEST_CASE("annihilation coefficient follows from the defining relation") {
  // a^- (a^+)^k |0> = [k]_q (a^+)^(k-1) |0>, derived by pushing a^- through one a^+ at a time.
  for (int k = 1; k <= 5; ++k) {
    const Sector from = Sector::make(1, k, D2);
    LaurentScalar c;  // coefficient of (a^+)^(k-1)|0>
    for (int j = 0; j < k; ++j) c += q_power(QExponent(-j), D2) * q_power(QExponent(k - 1 - j), D2);
    CHECK(annihilation(1, from).at(0, 0) == c);
  }
}

TEST_CASE("number powers") {
  const Sector s = Sector::make(2, 3, D2);
  CHECK(number_power(1, QExponent(0), s) == Operator::identity(s));
  CHECK(number_power(1, QExponent(1), s).at(index(s, {2, 1}), index(s, {2, 1})) == q_power(QExponent(2), D2));
  CHECK(number_power(2, QExponent(-1, 2), s).at(index(s, {0, 3}), index(s, {0, 3})) ==
        q_power(QExponent(-3, 2), D2));
}

TEST_CASE("oscillator relations hold exactly") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const Sector s = Sector::make(n, m, D2);
      const Sector up = s.shifted(1), down = s.shifted(-1);
      for (int i = 1; i <= n; ++i) {
        for (int sign : {1, -1}) {
          const Operator lhs = annihilation(i, up) * creation(i, s) -
                               scale(q_power(QExponent(-sign), D2), creation(i, down) * annihilation(i, s));
          CHECK((lhs - number_power(i, QExponent(sign), s)).is_zero());
        }
        for (int j = 1; j <= n; ++j) {
          const Operator c = number_operator(i, up) * creation(j, s) - creation(j, s) * number_operator(i, s);
          CHECK(c == (i == j ? creation(j, s) : Operator(s, up)));
          if (i != j) CHECK((creation(i, down) * annihilation(j, s) - annihilation(j, up) * creation(i, s)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("operator algebra") {
  std::mt19937 rng(3);
  const Sector s = Sector::make(2, 2, D2);
  const Operator a = random_operator(rng, s);
  CHECK(Operator::identity(s) * a == a);
  CHECK((a + scale(LaurentScalar(-1), a)).is_zero());
  CHECK(q_commutator(a, a, QExponent()).is_zero());
  CHECK_THROWS_AS(a * creation(1, Sector::make(2, 0, D2)), SectorMismatch);
  CHECK_THROWS_AS(a + Operator::identity(Sector::make(2, 1, D2)), SectorMismatch);

  // [A,B]_q at q = 1 equals the ordinary commutator at q = 1.
  const Operator b = random_operator(rng, s);
  const auto at1 = [](const Operator& x) { return x.map_entries([](const LaurentScalar& v) { return eval_at(v, 1); }); };
  CHECK(at1(q_commutator(a, b, QExponent(1))) == at1(commutator(a, b)));
}

TEST_CASE("tensor products against a dense oracle") {
  std::mt19937 rng(5);
  const Sector s1 = Sector::make(2, 1, D2), s2 = Sector::make(2, 2, D2);
  CHECK(tensor(Operator::identity(s1), Operator::identity(s2)) ==
        Operator::identity(tensor_space(Space(s1), Space(s2))));
  for (int trial = 0; trial < 20; ++trial) {
    const Operator a = random_operator(rng, s1), c = random_operator(rng, s1);
    const Operator b = random_operator(rng, s2), d = random_operator(rng, s2);
    const Operator lhs = tensor(a, b) * tensor(c, d);
    CHECK(lhs.domain().dim() == s1.dim() * s2.dim());
    CHECK(lhs == tensor(a * c, b * d));
    CHECK(dense(lhs) == matmul(kron(dense(a), dense(b)), kron(dense(c), dense(d))));
  }
}

}
