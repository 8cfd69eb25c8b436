#include <doctest.h>

#include "qalg/hopf.hpp"

using namespace qalg;

namespace {

const RootConfig D2(2);

LaurentScalar q(QExponent e) { return q_power(e, D2); }

}  // namespace

TEST_SUITE("hopf") {

TEST_CASE("coproduct of Cartan atoms") {
  const FormalElement h = FormalElement::h(1, 2);
  CHECK(coproduct(h, D2) == tensor(h, FormalElement::unit()) + tensor(FormalElement::unit(), h));
  CHECK(coproduct(h, D2).to_string() == "[1] 1 (x) H(1,2) + [1] H(1,2) (x) 1");
  const FormalElement k = FormalElement::qh(1, 2, QExponent(1, 2));
  CHECK(coproduct(k, D2) == tensor(k, k));
}

TEST_CASE("coproduct of a Chevalley raising generator") {
  // The k-sum collapses to q^(-H/2) (x) Y + Y (x) q^(H/2).
  const FormalElement y = FormalElement::y(1, 2, +1);
  const FormalElement expected = tensor(FormalElement::qh(1, 2, QExponent(-1, 2)), y) +
                                 tensor(y, FormalElement::qh(1, 2, QExponent(1, 2)));
  CHECK(coproduct(y, D2) == expected);

  const Sector a = Sector::make(2, 1, D2), b = Sector::make(2, 2, D2);
  const Operator ya = cartan_weyl(a).raising(1, 2), yb = cartan_weyl(b).raising(1, 2);
  const Operator oracle = tensor(cartan_power(1, 2, QExponent(-1, 2), a), yb) +
                          tensor(ya, cartan_power(1, 2, QExponent(1, 2), b));
  CHECK(evaluate(coproduct(y, D2), {a, b}) == oracle);
}

TEST_CASE("counit values") {
  CHECK(counit(CartanLinear{1, 3}, D2).is_zero());
  CHECK(counit(YGen{1, 2, +1}, D2).is_zero());
  CHECK(counit(YGen{1, 1, -1}, D2) == LaurentFraction(q(QExponent(1, 2)), 1, D2));
  CHECK(counit(CartanExp{1, 2, QExponent(1, 2)}, D2) == LaurentFraction(Rational(1)));
  const Sector s = Sector::make(3, 1, D2);
  for (const Atom& g : std::vector<Atom>{CartanLinear{1, 2}, YGen{1, 2, +1}, YGen{3, 1, -1}}) {
    CHECK(counit_residual(g, s).is_zero());
  }
}

TEST_CASE("antipode") {
  CHECK(antipode(FormalElement::h(1, 2), D2) == LaurentScalar(-1) * FormalElement::h(1, 2));
  CHECK(antipode(FormalElement::qh(1, 2, QExponent(1, 2)), D2) == FormalElement::qh(1, 2, QExponent(-1, 2)));

  const FormalElement y12 = FormalElement::y(1, 2, +1), y23 = FormalElement::y(2, 3, +1);
  const FormalElement y13 = FormalElement::y(1, 3, +1);
  CHECK(antipode(y12, D2, AntipodeConvention::printed) == (-q(QExponent(-1))) * y12);
  const FormalElement printed13 = (-q(QExponent(-1))) * y13 +
                                  (q_difference(D2) * q(QExponent(1)) * -q(QExponent(-1))) * (y12 * y23);
  CHECK(antipode(y13, D2, AntipodeConvention::printed) == printed13);

  // Antimultiplicative on words.
  const FormalElement word = y12 * FormalElement::h(1, 2);
  CHECK(antipode(word, D2) == antipode(FormalElement::h(1, 2), D2) * antipode(y12, D2));

  CHECK(antipode_axiom_residual(YGen{1, 2, +1}, Sector::make(2, 1, D2)).is_zero());
  CHECK(antipode_axiom_residual(YGen{1, 3, +1}, Sector::make(3, 1, D2)).is_zero());
  CHECK(antipode_axiom_residual(YGen{3, 1, -1}, Sector::make(3, 2, D2)).is_zero());
  CHECK(antipode_axiom_residual(CartanLinear{1, 2}, Sector::make(2, 2, D2)).is_zero());
  CHECK_FALSE(antipode_axiom_residual(YGen{1, 2, +1}, Sector::make(2, 1, D2), AntipodeConvention::printed).is_zero());
}

TEST_CASE("iterated coproducts") {
  const FormalElement h = FormalElement::h(1, 2);
  const FormalElement d2 = delta_power(h, 2, D2);
  CHECK(d2.rank() == 3);
  CHECK(d2.terms().size() == 3);
  CHECK(delta_power(h, 0, D2) == h);
  CHECK(delta_power(FormalElement::y(1, 2, +1), 1, D2) == coproduct(FormalElement::y(1, 2, +1), D2));

  const Sector s0 = Sector::make(2, 0, D2), s1 = Sector::make(2, 1, D2);
  CHECK(coassociativity_residual(YGen{1, 2, +1}, {s1, s0, s1}).is_zero());
  CHECK(coassociativity_residual(YGen{1, 3, +1}, {Sector::make(3, 1, D2), Sector::make(3, 1, D2),
                                                   Sector::make(3, 1, D2)}).is_zero());
}

TEST_CASE("coproduct respects relations") {
  const FormalElement yp = FormalElement::y(1, 2, +1), ym = FormalElement::y(2, 1, -1);
  const FormalElement rel = q_difference(D2) * (yp * ym - ym * yp) - FormalElement::qh(1, 2, QExponent(1)) +
                            FormalElement::qh(1, 2, QExponent(-1));
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      CHECK(homomorphism_residual(rel, Sector::make(2, a, D2), Sector::make(2, b, D2)).is_zero());
    }
  }
  const FormalElement broken = yp * ym - ym * yp;
  CHECK_FALSE(homomorphism_residual(broken, Sector::make(2, 1, D2), Sector::make(2, 1, D2)).is_zero());
}

TEST_CASE("formal text form") {
  CHECK(FormalElement(1).to_string() == "0");
  CHECK(to_string(Atom(CartanExp{1, 2, QExponent(-1, 2)})) == "qH(1,2;-1/2)");
  CHECK(to_string(Atom(YGen{3, 1, -1})) == "Y-(3,1)");
  CHECK(FormalElement::h(2, 1) == LaurentScalar(-1) * FormalElement::h(1, 2));
  CHECK_THROWS(FormalElement::y(2, 1, +1));
}

}
