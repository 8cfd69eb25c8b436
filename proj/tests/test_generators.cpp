#include <doctest.h>

#include "qalg/generators.hpp"

using namespace qalg;

namespace {

const RootConfig D2(2);

std::size_t index(const Sector& s, Occupation occ) { return s.index_of(occ).value(); }

LaurentScalar q(QExponent e) { return q_power(e, D2); }

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("Chevalley generators at rank one") {
  const Sector s = Sector::make(2, 1, D2);
  const GeneratorSet g = chevalley(s);
  const Operator c = commutator(g.raising(1, 2), g.lowering(2, 1));
  CHECK(c.at(index(s, {1, 0}), index(s, {1, 0})) == LaurentScalar(1));
  CHECK(c.at(index(s, {0, 1}), index(s, {0, 1})) == LaurentScalar(-1));
  CHECK(g.chevalley_cartan(1).at(index(s, {1, 0}), index(s, {1, 0})) == LaurentScalar(1));

  const Sector vac = Sector::make(2, 0, D2);
  const GeneratorSet v = chevalley(vac);
  CHECK(commutator(v.raising(1, 2), v.lowering(2, 1)).is_zero());
  CHECK(v.cartan_qnumber(1, 2).is_zero());
}

TEST_CASE("Cartan-Weyl generators") {
  const Sector s1 = Sector::make(3, 1, D2);
  const GeneratorSet g = cartan_weyl(s1);
  CHECK(g.raising(1, 2) == chevalley(s1).raising(1, 2));
  CHECK(g.raising(1, 3).at(index(s1, {1, 0, 0}), index(s1, {0, 0, 1})) == LaurentScalar(1));
  CHECK(g.raising(1, 3).nonzeros() == 1);

  const Sector s2 = Sector::make(3, 2, D2);
  const GeneratorSet g2 = cartan_weyl(s2);
  CHECK(q_commutator(g2.raising(1, 2), g2.raising(2, 3), QExponent(1)) == g2.raising(1, 3));
  CHECK(complete_from_chevalley(chevalley(s2)).raising(1, 3) == g2.raising(1, 3));
  CHECK(complete_from_chevalley(chevalley(s2)).lowering(3, 1) == g2.lowering(3, 1));
  CHECK_THROWS(g2.raising(2, 1));
}

TEST_CASE("Cartan diagonals") {
  const Sector s = Sector::make(2, 2, D2);
  CHECK(cartan_power(1, 2, QExponent(0), s) == Operator::identity(s));
  const Sector s6 = Sector::make(2, 2, RootConfig(6));
  CHECK(cartan_power(1, 2, QExponent(1, 3), s6) * cartan_power(2, 1, QExponent(1, 3), s6) ==
        Operator::identity(s6));
  CHECK_THROWS_AS(cartan_power(1, 2, QExponent(1, 3), s), RootError);
  CHECK(cartan_power(1, 2, QExponent(1, 2), s).at(index(s, {2, 0}), index(s, {2, 0})) == q(QExponent(1)));

  const Sector s3 = Sector::make(3, 2, D2);
  const GeneratorSet g = cartan_weyl(s3);
  CHECK(g.cartan(1, 3) == -g.cartan(3, 1));
  CHECK(g.cartan(1, 3) == number_operator(1, s3) - number_operator(3, s3));
}

TEST_CASE("regular functionals") {
  const Sector s = Sector::make(2, 1, D2);
  const LFunctionals lp = l_functionals(s, +1), lm = l_functionals(s, -1);
  CHECK(lp(2, 1).is_zero());
  CHECK(lm(1, 2).is_zero());
  for (const auto& sec : {Sector::make(2, 0, D2), s, Sector::make(3, 2, D2)}) {
    const LFunctionals p = l_functionals(sec, +1), m = l_functionals(sec, -1);
    for (int i = 1; i <= sec.modes(); ++i) {
      CHECK(p(i, i) * m(i, i) == Operator::identity(sec));
      CHECK(m(i, i) * p(i, i) == Operator::identity(sec));
    }
  }

  // l+(1,2) = -q^(1/2)(q - q^-1) Y+(1,2) q^(-(N1 + N2)/2), assembled by hand.
  const Operator y = cartan_weyl(s).raising(1, 2);
  Operator expected(s, s);
  expected.add_to(index(s, {1, 0}), index(s, {0, 1}), -q(QExponent(1, 2)) * q_difference(D2) * q(QExponent(-1, 2)));
  CHECK(y.at(index(s, {1, 0}), index(s, {0, 1})) == LaurentScalar(1));
  CHECK(lp(1, 2) == expected);
}

TEST_CASE("R-matrix") {
  const RMatrix r = r_matrix(2, D2);
  CHECK(r(1, 1, 1, 1) == q(QExponent(1)));
  CHECK(r(1, 2, 1, 2) == LaurentScalar(1));
  CHECK(r(2, 1, 2, 1) == LaurentScalar(1));
  CHECK(r(2, 2, 2, 2) == q(QExponent(1)));
  CHECK(r(1, 2, 2, 1) == q_difference(D2));
  CHECK(r(2, 1, 1, 2).is_zero());
  for (int n = 2; n <= 5; ++n) {
    const RMatrix rn = r_matrix(n, D2);
    CHECK(rn.nonzeros() == static_cast<std::size_t>(n * n + n * (n - 1) / 2));
    for (const auto& [key, v] : rn.entries()) {
      const bool diagonal = key[0] == key[2] && key[1] == key[3];
      CHECK(eval_at(v, 1) == (diagonal ? 1 : 0));
    }
  }
}

TEST_CASE("su_q(2) Casimir") {
  for (int m = 0; m <= 3; ++m) {
    const Sector s = Sector::make(2, m, D2);
    CHECK(casimir_su2(s) == casimir_closed_form(s));
  }
  CHECK(casimir_su2(Sector::make(2, 0, D2)).is_zero());

  // Level one: (q^2 + q^-2 - q - q^-1)/(q - q^-1)^2 on both states.
  const Sector s = Sector::make(2, 1, D2);
  const LaurentFraction expected(q(QExponent(2)) + q(QExponent(-2)) - q(QExponent(1)) - q(QExponent(-1)), 2, D2);
  const auto c = casimir_su2(s);
  CHECK(c.nonzeros() == 2);
  CHECK(c.at(0, 0) == expected);
  CHECK(c.at(1, 1) == expected);
  CHECK(number_from_casimir(s) == Operator::identity(s));
}

TEST_CASE("number operators from Cartan elements") {
  const Sector s = Sector::make(2, 1, D2);
  const auto n = number_from_cartan(s);
  CHECK(n[0] == scale(LaurentScalar(Rational(1, 2)), Operator::identity(s) + chevalley(s).chevalley_cartan(1)));
  for (int modes = 2; modes <= 4; ++modes) {
    for (int m = 0; m <= 3; ++m) {
      const Sector sec = Sector::make(modes, m, D2);
      const auto rebuilt = number_from_cartan(sec);
      for (int i = 1; i <= modes; ++i) CHECK(rebuilt[i - 1] == number_operator(i, sec));
    }
  }
}

TEST_CASE("total-number recurrence") {
  const Sector s = Sector::make(3, 1, D2);
  const auto shifted = total_number_recurrence(s, RecurrenceReading::shifted);
  CHECK(shifted.total == Operator::identity(s));
  CHECK(shifted.residual.is_zero());
  CHECK(total_number_recurrence(Sector::make(4, 0, D2), RecurrenceReading::shifted).total.is_zero());
  for (int n = 3; n <= 5; ++n) {
    const Sector sec = Sector::make(n, 2, D2);
    CHECK(total_number_recurrence(sec, RecurrenceReading::shifted).residual.is_zero());
    CHECK_FALSE(total_number_recurrence(sec, RecurrenceReading::literal).residual.is_zero());
  }
}

TEST_CASE("diagonal Y constants") {
  CHECK(diagonal_y_constant(+1, D2) == LaurentFraction(-q(QExponent(-1, 2)), 1, D2));
  CHECK(diagonal_y_constant(-1, D2) == LaurentFraction(q(QExponent(1, 2)), 1, D2));
}

}
