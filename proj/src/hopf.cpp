#include "qalg/hopf.hpp"

#include <sstream>

namespace qalg {

std::string to_string(const Atom& a) {
  struct Visitor {
    std::string operator()(const YGen& y) const {
      return std::string(y.sign > 0 ? "Y+(" : "Y-(") + std::to_string(y.i) + "," +
             std::to_string(y.j) + ")";
    }
    std::string operator()(const CartanLinear& h) const {
      return "H(" + std::to_string(h.i) + "," + std::to_string(h.j) + ")";
    }
    std::string operator()(const CartanExp& h) const {
      return "qH(" + std::to_string(h.i) + "," + std::to_string(h.j) + ";" + h.e.to_string() + ")";
    }
  };
  return std::visit(Visitor{}, a);
}

namespace {

void check_y(const YGen& y) {
  if (y.i < 1 || y.j < 1) throw IndexError("generator indices are 1-based");
  if (y.i == y.j) throw IndexError("diagonal Y's are scalars and cannot appear in a word");
  if ((y.sign > 0) != (y.i < y.j) || (y.sign != 1 && y.sign != -1)) {
    throw IndexError("Y" + std::string(y.sign > 0 ? "+" : "-") + "(" + std::to_string(y.i) + "," +
                     std::to_string(y.j) + ") violates triangularity");
  }
}

// Canonical word; returns the sign picked up, or 0 if the word vanishes.
int canonicalize(Word& w) {
  int sign = 1;
  Word out;
  out.reserve(w.size());
  for (Atom& a : w) {
    if (auto* y = std::get_if<YGen>(&a)) {
      check_y(*y);
      out.push_back(a);
    } else if (auto* h = std::get_if<CartanLinear>(&a)) {
      if (h->i == h->j) return 0;
      if (h->i > h->j) {
        std::swap(h->i, h->j);
        sign = -sign;
      }
      out.push_back(a);
    } else {
      auto e = std::get<CartanExp>(a);
      if (e.i > e.j) {
        std::swap(e.i, e.j);
        e.e = -e.e;
      }
      if (e.i == e.j || e.e.is_zero()) continue;
      if (!out.empty()) {
        if (auto* prev = std::get_if<CartanExp>(&out.back()); prev && prev->i == e.i && prev->j == e.j) {
          prev->e = prev->e + e.e;
          if (prev->e.is_zero()) out.pop_back();
          continue;
        }
      }
      out.push_back(e);
    }
  }
  w = std::move(out);
  return sign;
}

}  // namespace

FormalElement::FormalElement(int rank) : rank_(rank) {
  if (rank < 1) throw IndexError("formal elements have rank >= 1");
}

FormalElement FormalElement::unit(int rank) { return constant(LaurentScalar(1), rank); }

FormalElement FormalElement::constant(const LaurentScalar& c, int rank) {
  FormalElement out(rank);
  out.add_term(c, Key(static_cast<std::size_t>(rank)));
  return out;
}

FormalElement FormalElement::atom(const Atom& a) {
  FormalElement out(1);
  out.add_term(LaurentScalar(1), Key{Word{a}});
  return out;
}

void FormalElement::add_term(LaurentScalar c, Key legs) {
  if (static_cast<int>(legs.size()) != rank_) throw IndexError("term rank does not match element");
  if (c.is_zero()) return;
  for (Word& w : legs) {
    const int sign = canonicalize(w);
    if (sign == 0) return;
    if (sign < 0) c = -c;
  }
  auto [it, inserted] = terms_.try_emplace(std::move(legs), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalElement& FormalElement::operator+=(const FormalElement& other) {
  if (other.rank_ != rank_) throw IndexError("adding formal elements of different rank");
  for (const auto& [k, c] : other.terms_) add_term(c, k);
  return *this;
}

FormalElement& FormalElement::operator-=(const FormalElement& other) {
  if (other.rank_ != rank_) throw IndexError("subtracting formal elements of different rank");
  for (const auto& [k, c] : other.terms_) add_term(-c, k);
  return *this;
}

FormalElement operator*(const FormalElement& a, const FormalElement& b) {
  if (a.rank_ != b.rank_) throw IndexError("multiplying formal elements of different rank");
  FormalElement out(a.rank_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      FormalElement::Key key = ka;
      for (std::size_t l = 0; l < key.size(); ++l) key[l].insert(key[l].end(), kb[l].begin(), kb[l].end());
      out.add_term(ca * cb, std::move(key));
    }
  }
  return out;
}

FormalElement operator*(const LaurentScalar& c, const FormalElement& a) {
  FormalElement out(a.rank_);
  for (const auto& [k, v] : a.terms_) out.add_term(c * v, k);
  return out;
}

std::string FormalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << qalg::to_string(c) << "]";
    for (std::size_t l = 0; l < key.size(); ++l) {
      os << (l ? " (x) " : " ");
      if (key[l].empty()) os << "1";
      for (std::size_t k = 0; k < key[l].size(); ++k) os << (k ? "*" : "") << qalg::to_string(key[l][k]);
    }
  }
  return os.str();
}

FormalElement tensor(const FormalElement& a, const FormalElement& b) {
  FormalElement out(a.rank() + b.rank());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      FormalElement::Key key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      out.add_term(ca * cb, std::move(key));
    }
  }
  return out;
}

FormalElement q_commutator(const FormalElement& a, const FormalElement& b, QExponent c,
                           RootConfig root) {
  return a * b - q_power(c, root) * (b * a);
}

// ---------------------------------------------------------------------------

FormalElement coproduct(const Atom& a, RootConfig root) {
  FormalElement out(2);
  if (const auto* h = std::get_if<CartanLinear>(&a)) {
    out.add_term(1, {Word{*h}, Word{}});
    out.add_term(1, {Word{}, Word{*h}});
    return out;
  }
  if (const auto* e = std::get_if<CartanExp>(&a)) {
    out.add_term(1, {Word{*e}, Word{*e}});
    return out;
  }
  const YGen y = std::get<YGen>(a);
  check_y(y);
  const int s = y.sign;
  const QExponent half(s, 2);
  // -+ (q - q^-1) q^(+-1/2)
  const LaurentFraction prefactor(-s * q_difference(root) * q_power(half, root));
  const LaurentFraction diagonal = diagonal_y_constant(s, root);
  const int lo = std::min(y.i, y.j);
  const int hi = std::max(y.i, y.j);
  for (int k = lo; k <= hi; ++k) {
    LaurentFraction coeff = prefactor;
    Word left;
    Word right;
    if (k == y.i) {
      coeff *= diagonal;
    } else {
      left.push_back(YGen{y.i, k, s});
    }
    left.push_back(CartanExp{y.j, k, half});
    if (k == y.j) {
      coeff *= diagonal;
    } else {
      right.push_back(YGen{k, y.j, s});
    }
    right.push_back(CartanExp{y.i, k, half});
    const auto c = coeff.to_laurent();
    if (!c) throw Error("coproduct coefficient left the Laurent ring");
    out.add_term(*c, {std::move(left), std::move(right)});
  }
  return out;
}

namespace {

FormalElement coproduct_word(const Word& w, RootConfig root) {
  FormalElement out = FormalElement::unit(2);
  for (const Atom& a : w) out = out * coproduct(a, root);
  return out;
}

// Replaces leg `leg` of every term by f(word), which has rank `grown`.
template <class F>
FormalElement map_leg(const FormalElement& x, std::size_t leg, int grown, F&& f) {
  if (leg >= static_cast<std::size_t>(x.rank())) throw IndexError("leg index out of range");
  FormalElement out(x.rank() - 1 + grown);
  for (const auto& [key, c] : x.terms()) {
    const FormalElement image = f(key[leg]);
    for (const auto& [ikey, ic] : image.terms()) {
      FormalElement::Key next(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
      next.insert(next.end(), ikey.begin(), ikey.end());
      next.insert(next.end(), key.begin() + static_cast<std::ptrdiff_t>(leg) + 1, key.end());
      out.add_term(c * ic, std::move(next));
    }
  }
  return out;
}

}  // namespace

FormalElement coproduct(const FormalElement& x, RootConfig root) {
  if (x.rank() != 1) throw IndexError("coproduct expects a rank-1 element");
  return apply_coproduct(x, 0, root);
}

FormalElement apply_coproduct(const FormalElement& x, std::size_t leg, RootConfig root) {
  return map_leg(x, leg, 2, [&](const Word& w) { return coproduct_word(w, root); });
}

FormalElement delta_power(const FormalElement& x, int r, RootConfig root) {
  if (x.rank() != 1) throw IndexError("delta_power expects a rank-1 element");
  if (r < 0) throw IndexError("delta_power needs r >= 0");
  FormalElement out = x;
  for (int step = 0; step < r; ++step) {
    out = apply_coproduct(out, static_cast<std::size_t>(out.rank() - 1), root);
  }
  return out;
}

LaurentFraction counit(const Atom& a, RootConfig root) {
  if (const auto* y = std::get_if<YGen>(&a)) {
    if (y->i == y->j) return diagonal_y_constant(y->sign, root);
    return LaurentFraction();
  }
  if (std::holds_alternative<CartanLinear>(a)) return LaurentFraction();
  return LaurentFraction(Rational(1));
}

FormalElement apply_counit(const FormalElement& x, std::size_t leg, RootConfig root) {
  if (x.rank() < 2) throw IndexError("counit on a leg needs rank >= 2");
  if (leg >= static_cast<std::size_t>(x.rank())) throw IndexError("leg index out of range");
  FormalElement out(x.rank() - 1);
  for (const auto& [key, c] : x.terms()) {
    LaurentFraction value(Rational(1));
    for (const Atom& a : key[leg]) value *= counit(a, root);
    const auto factor = value.to_laurent();
    if (!factor) throw Error("counit of a word left the Laurent ring");
    FormalElement::Key next = key;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(leg));
    out.add_term(c * *factor, std::move(next));
  }
  return out;
}

namespace {

class AntipodeEngine {
 public:
  AntipodeEngine(RootConfig root, AntipodeConvention convention)
      : root_(root), convention_(convention) {}

  FormalElement atom(const Atom& a) {
    if (const auto* h = std::get_if<CartanLinear>(&a)) {
      return LaurentScalar(-1) * FormalElement::atom(*h);
    }
    if (const auto* e = std::get_if<CartanExp>(&a)) {
      return FormalElement::atom(CartanExp{e->i, e->j, -e->e});
    }
    return y(std::get<YGen>(a));
  }

  FormalElement word(const Word& w) {
    FormalElement out = FormalElement::unit(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = out * atom(*it);
    return out;
  }

 private:
  FormalElement y(const YGen& g) {
    check_y(g);
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    const int s = g.sign;
    const int lead = convention_ == AntipodeConvention::axiom_consistent ? s : -s;
    FormalElement out = -q_power(lead, root_) * FormalElement::atom(g);
    const LaurentScalar c = s * q_difference(root_) * q_power(s, root_);
    const int step = g.i < g.j ? 1 : -1;
    for (int k = g.i + step; k != g.j; k += step) {
      out += c * (FormalElement::atom(YGen{g.i, k, s}) * y(YGen{k, g.j, s}));
    }
    memo_.emplace(g, out);
    return out;
  }

  RootConfig root_;
  AntipodeConvention convention_;
  std::map<YGen, FormalElement> memo_;
};

}  // namespace

FormalElement antipode(const FormalElement& x, RootConfig root, AntipodeConvention convention) {
  if (x.rank() != 1) throw IndexError("antipode expects a rank-1 element");
  return apply_antipode(x, 0, root, convention);
}

FormalElement apply_antipode(const FormalElement& x, std::size_t leg, RootConfig root,
                             AntipodeConvention convention) {
  AntipodeEngine engine(root, convention);
  return map_leg(x, leg, 1, [&](const Word& w) { return engine.word(w); });
}

FormalElement multiply_legs(const FormalElement& x) {
  FormalElement out(1);
  for (const auto& [key, c] : x.terms()) {
    Word w;
    for (const Word& leg : key) w.insert(w.end(), leg.begin(), leg.end());
    out.add_term(c, {std::move(w)});
  }
  return out;
}

// ---------------------------------------------------------------------------

const GeneratorSet& Evaluator::generators(const Sector& s) {
  const SectorKey k = key(s);
  auto it = gens_.find(k);
  if (it == gens_.end()) it = gens_.emplace(k, cartan_weyl(s)).first;
  return it->second;
}

Operator Evaluator::atom(const Atom& a, const Sector& s) {
  const auto cache_key = std::make_pair(key(s), a);
  if (auto it = atoms_.find(cache_key); it != atoms_.end()) return it->second;
  const GeneratorSet& gens = generators(s);
  Operator op(s, s);
  if (const auto* y = std::get_if<YGen>(&a)) {
    check_y(*y);
    op = gens.y(y->i, y->j, y->sign);
  } else if (const auto* h = std::get_if<CartanLinear>(&a)) {
    op = gens.cartan(h->i, h->j);
  } else {
    const auto& e = std::get<CartanExp>(a);
    op = gens.cartan_power(e.i, e.j, e.e);
  }
  atoms_.emplace(cache_key, op);
  return op;
}

Operator Evaluator::word(const Word& w, const Sector& s) {
  Operator out = Operator::identity(s);
  for (const Atom& a : w) out = out * atom(a, s);
  return out;
}

Operator Evaluator::evaluate(const FormalElement& x, const std::vector<Sector>& legs) {
  if (legs.size() != static_cast<std::size_t>(x.rank())) {
    throw SectorMismatch("element of rank " + std::to_string(x.rank()) + " evaluated on " +
                         std::to_string(legs.size()) + " sectors");
  }
  for (const Sector& s : legs) {
    if (s.modes() != legs.front().modes()) throw SectorMismatch("legs with different mode counts");
  }
  const Space space(legs);
  Operator out(space, space);
  for (const auto& [key, c] : x.terms()) {
    Operator term = word(key[0], legs[0]);
    for (std::size_t l = 1; l < legs.size(); ++l) term = tensor(term, word(key[l], legs[l]));
    out = out + scale(c, term);
  }
  return out;
}

Operator evaluate(const FormalElement& x, const std::vector<Sector>& legs) {
  Evaluator ev;
  return ev.evaluate(x, legs);
}

AxiomResidual antipode_axiom_residual(const Atom& g, const Sector& s,
                                      AntipodeConvention convention) {
  const RootConfig root = s.root();
  const FormalElement delta = coproduct(g, root);
  const auto eps = counit(g, root).to_laurent();
  const FormalElement unit_part = FormalElement::constant(*eps, 1);
  const FormalElement left = multiply_legs(apply_antipode(delta, 1, root, convention)) - unit_part;
  const FormalElement right = multiply_legs(apply_antipode(delta, 0, root, convention)) - unit_part;
  Evaluator ev;
  return {ev.evaluate(left, {s}), ev.evaluate(right, {s})};
}

AxiomResidual counit_residual(const Atom& g, const Sector& s) {
  const RootConfig root = s.root();
  const FormalElement delta = coproduct(g, root);
  const FormalElement x = FormalElement::atom(g);
  Evaluator ev;
  return {ev.evaluate(apply_counit(delta, 0, root) - x, {s}),
          ev.evaluate(apply_counit(delta, 1, root) - x, {s})};
}

Operator coassociativity_residual(const Atom& g, const std::array<Sector, 3>& legs) {
  const RootConfig root = legs[0].root();
  const FormalElement delta = coproduct(g, root);
  const FormalElement diff = apply_coproduct(delta, 0, root) - apply_coproduct(delta, 1, root);
  return evaluate(diff, {legs[0], legs[1], legs[2]});
}

Operator homomorphism_residual(const FormalElement& relation, const Sector& a, const Sector& b) {
  return evaluate(coproduct(relation, a.root()), {a, b});
}

}  // namespace qalg
