// Formal elements of A^q_{n-1} and their Hopf structure maps, plus evaluation on
// tensor products of Fock sectors.
#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "qalg/generators.hpp"

namespace qalg {

/// Y^{sign}_{ij}. Inside formal words i != j; the diagonal values are scalars.
struct YGen {
  int i;
  int j;
  int sign;
  friend auto operator<=>(const YGen&, const YGen&) = default;
};

/// H_{ij}.
struct CartanLinear {
  int i;
  int j;
  friend auto operator<=>(const CartanLinear&, const CartanLinear&) = default;
};

/// q^(e * H_{ij}).
struct CartanExp {
  int i;
  int j;
  QExponent e;
  friend auto operator<=>(const CartanExp&, const CartanExp&) = default;
};

using Atom = std::variant<YGen, CartanLinear, CartanExp>;
using Word = std::vector<Atom>;

/// "Y+(1,2)", "H(1,3)", "qH(1,2;-1/2)".
std::string to_string(const Atom& a);

/// Finite sum of coefficient * (word_1 (x) ... (x) word_r). Words are stored in a
/// light canonical form (H_{ji} -> -H_{ij}, adjacent q^H merged) but never reordered.
class FormalElement {
 public:
  using Key = std::vector<Word>;

  explicit FormalElement(int rank = 1);

  static FormalElement unit(int rank = 1);
  static FormalElement constant(const LaurentScalar& c, int rank = 1);
  static FormalElement atom(const Atom& a);
  static FormalElement y(int i, int j, int sign) { return atom(YGen{i, j, sign}); }
  static FormalElement h(int i, int j) { return atom(CartanLinear{i, j}); }
  static FormalElement qh(int i, int j, QExponent e) { return atom(CartanExp{i, j, e}); }

  int rank() const { return rank_; }
  const std::map<Key, LaurentScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(LaurentScalar c, Key legs);

  FormalElement& operator+=(const FormalElement& other);
  FormalElement& operator-=(const FormalElement& other);
  friend FormalElement operator+(FormalElement a, const FormalElement& b) { return a += b; }
  friend FormalElement operator-(FormalElement a, const FormalElement& b) { return a -= b; }
  /// Leg-wise concatenation product.
  friend FormalElement operator*(const FormalElement& a, const FormalElement& b);
  friend FormalElement operator*(const LaurentScalar& c, const FormalElement& a);
  friend bool operator==(const FormalElement&, const FormalElement&) = default;

  /// "[c] word (x) word + ..."; "0" for the zero element.
  std::string to_string() const;

 private:
  int rank_;
  std::map<Key, LaurentScalar> terms_;
};

/// a (x) b, rank a.rank() + b.rank().
FormalElement tensor(const FormalElement& a, const FormalElement& b);

/// a*b - q^c b*a.
FormalElement q_commutator(const FormalElement& a, const FormalElement& b, QExponent c,
                           RootConfig root);

/// Delta on one atom, rank 2. Diagonal Y's inside the k-sum become their scalar values.
FormalElement coproduct(const Atom& a, RootConfig root);
/// Delta of a rank-1 element (algebra homomorphism on words).
FormalElement coproduct(const FormalElement& x, RootConfig root);
/// Delta applied to leg `leg` (0-based); rank grows by one.
FormalElement apply_coproduct(const FormalElement& x, std::size_t leg, RootConfig root);
/// Delta^(r) = (id (x) ... (x) Delta) ... (id (x) Delta) Delta; r = 0 returns x.
FormalElement delta_power(const FormalElement& x, int r, RootConfig root);

/// epsilon(Y_ii^{+-}) = -+ q^(-+1/2) / (q - q^-1); zero for other Y's and H; one on q^H.
LaurentFraction counit(const Atom& a, RootConfig root);
/// epsilon applied to leg `leg`; rank drops by one.
FormalElement apply_counit(const FormalElement& x, std::size_t leg, RootConfig root);

enum class AntipodeConvention {
  /// Leading term -q^(+-1) Y^{+-}_{ij}: satisfies m(id (x) S)Delta = epsilon.
  axiom_consistent,
  /// Leading term -q^(-+1) Y^{+-}_{ij}, as printed.
  printed,
};

/// S on a rank-1 element: antimultiplicative, S(H) = -H, S(q^(eH)) = q^(-eH),
/// S(Y_{ij}) by the recurrence over k strictly between i and j.
FormalElement antipode(const FormalElement& x, RootConfig root,
                       AntipodeConvention convention = AntipodeConvention::axiom_consistent);
FormalElement apply_antipode(const FormalElement& x, std::size_t leg, RootConfig root,
                             AntipodeConvention convention = AntipodeConvention::axiom_consistent);

/// Concatenates all leg words into one word: the multiplication map m.
FormalElement multiply_legs(const FormalElement& x);

/// Realizes formal elements through the Cartan-Weyl generators of each leg sector.
/// Keeps a cache of generator sets and atom matrices.
class Evaluator {
 public:
  Operator evaluate(const FormalElement& x, const std::vector<Sector>& legs);
  Operator word(const Word& w, const Sector& s);
  Operator atom(const Atom& a, const Sector& s);

 private:
  using SectorKey = std::tuple<int, int, int>;
  static SectorKey key(const Sector& s) { return {s.modes(), s.level(), s.root().denominator()}; }
  const GeneratorSet& generators(const Sector& s);

  std::map<SectorKey, GeneratorSet> gens_;
  std::map<std::pair<SectorKey, Atom>, Operator> atoms_;
};

Operator evaluate(const FormalElement& x, const std::vector<Sector>& legs);

struct AxiomResidual {
  Operator left;   // with (id (x) S) resp. (epsilon (x) id)
  Operator right;  // with (S (x) id) resp. (id (x) epsilon)
  bool is_zero() const { return left.is_zero() && right.is_zero(); }
};

/// m(id (x) S)Delta g - epsilon(g) 1 and m(S (x) id)Delta g - epsilon(g) 1 on one sector.
AxiomResidual antipode_axiom_residual(
    const Atom& g, const Sector& s,
    AntipodeConvention convention = AntipodeConvention::axiom_consistent);

/// (epsilon (x) id)Delta g - g and (id (x) epsilon)Delta g - g.
AxiomResidual counit_residual(const Atom& g, const Sector& s);

/// (Delta (x) id)Delta g - (id (x) Delta)Delta g on a sector triple.
Operator coassociativity_residual(const Atom& g, const std::array<Sector, 3>& legs);

/// Delta(rel) evaluated on a sector pair; zero whenever rel vanishes in the algebra.
Operator homomorphism_residual(const FormalElement& relation, const Sector& a, const Sector& b);

}  // namespace qalg
