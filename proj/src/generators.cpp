#include "qalg/generators.hpp"

namespace qalg {

std::string GeneratorRef::label() const {
  switch (kind) {
    case Kind::raising:
      return "Y+(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::lowering:
      return "Y-(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::cartan:
      return "H(" + std::to_string(i) + ")";
  }
  return "?";
}

GeneratorSet::GeneratorSet(int rank_n, Sector sector) : n_(rank_n), sector_(std::move(sector)) {
  if (rank_n < 1) throw IndexError("generator set rank must be positive");
}

void GeneratorSet::check_pair(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw IndexError("generator index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside 1.." + std::to_string(n_));
  }
}

bool GeneratorSet::has(const GeneratorRef& ref) const { return ops_.contains(ref); }

const Operator& GeneratorSet::get(const GeneratorRef& ref) const {
  auto it = ops_.find(ref);
  if (it == ops_.end()) throw IndexError("generator " + ref.label() + " is not in the set");
  return it->second;
}

void GeneratorSet::set(const GeneratorRef& ref, Operator op) {
  if (!(op.domain() == Space(sector_)) || !(op.codomain() == Space(sector_))) {
    throw SectorMismatch("generator " + ref.label() + " must act on " + sector_.label());
  }
  switch (ref.kind) {
    case GeneratorRef::Kind::raising:
      check_pair(ref.i, ref.j);
      if (ref.i >= ref.j) throw IndexError("raising generator needs i < j");
      break;
    case GeneratorRef::Kind::lowering:
      check_pair(ref.i, ref.j);
      if (ref.i <= ref.j) throw IndexError("lowering generator needs i > j");
      break;
    case GeneratorRef::Kind::cartan:
      check_pair(ref.i, ref.i + 1);
      break;
  }
  ops_.insert_or_assign(ref, std::move(op));
}

std::vector<GeneratorRef> GeneratorSet::members() const {
  std::vector<GeneratorRef> out;
  for (const auto& [ref, op] : ops_) out.push_back(ref);
  return out;
}

const Operator& GeneratorSet::y(int i, int j, int sign) const {
  return sign > 0 ? raising(i, j) : lowering(i, j);
}

Operator GeneratorSet::cartan(int i, int j) const {
  check_pair(i, j);
  Operator out(sector_, sector_);
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  for (int k = lo; k < hi; ++k) out = out + chevalley_cartan(k);
  return i < j ? out : -out;
}

std::vector<QExponent> GeneratorSet::cartan_eigenvalues(int i, int j) const {
  const Operator h = cartan(i, j);
  std::vector<QExponent> out;
  out.reserve(sector_.dim());
  for (std::size_t s = 0; s < sector_.dim(); ++s) {
    const LaurentScalar v = h.at(s, s);
    if (!v.is_constant()) throw Error("Cartan element has a non-constant diagonal entry");
    const Rational c = v.coefficient(0);
    out.emplace_back(c.get_num().get_si(), c.get_den().get_si());
  }
  return out;
}

Operator GeneratorSet::cartan_power(int i, int j, QExponent e) const {
  const auto eig = cartan_eigenvalues(i, j);
  Operator out(sector_, sector_);
  for (std::size_t s = 0; s < eig.size(); ++s) out.add_to(s, s, q_power(e * eig[s], root()));
  return out;
}

Operator GeneratorSet::cartan_qnumber(int i, int j) const {
  const auto eig = cartan_eigenvalues(i, j);
  Operator out(sector_, sector_);
  for (std::size_t s = 0; s < eig.size(); ++s) {
    const auto value = q_number(eig[s], root()).to_laurent();
    if (!value) throw Error("q-number of a non-integer Cartan eigenvalue");
    out.add_to(s, s, *value);
  }
  return out;
}

// ---------------------------------------------------------------------------

GeneratorSet chevalley(const Sector& sector) {
  const int n = sector.modes();
  GeneratorSet set(n, sector);
  for (int i = 1; i < n; ++i) {
    set.set({GeneratorRef::Kind::cartan, i, 0}, diagonal_by_state(sector, [i](const Occupation& o) {
              return LaurentScalar(o[i - 1] - o[i]);
            }));
    set.set({GeneratorRef::Kind::raising, i, i + 1}, hop(i, i + 1, sector));
    set.set({GeneratorRef::Kind::lowering, i + 1, i}, hop(i + 1, i, sector));
  }
  return set;
}

GeneratorSet cartan_weyl(const Sector& sector) {
  GeneratorSet set = chevalley(sector);
  const int n = sector.modes();
  const RootConfig root = sector.root();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      // Both Y^+_{ij} and Y^-_{ji} carry the between-modes q^(-+sum N_k).
      auto between = [&](int sign) {
        return diagonal_by_state(sector, [&](const Occupation& o) {
          int total = 0;
          for (int k = i + 1; k < j; ++k) total += o[k - 1];
          return q_power(QExponent(-sign * total), root);
        });
      };
      set.set({GeneratorRef::Kind::raising, i, j}, hop(i, j, sector) * between(+1));
      set.set({GeneratorRef::Kind::lowering, j, i}, hop(j, i, sector) * between(-1));
    }
  }
  return set;
}

GeneratorSet complete_from_chevalley(GeneratorSet partial) {
  const int n = partial.n();
  for (int d = 2; d < n; ++d) {
    for (int i = 1; i + d <= n; ++i) {
      const int j = i + d;
      const int k = j - 1;
      partial.set({GeneratorRef::Kind::raising, i, j},
                  q_commutator(partial.raising(i, k), partial.raising(k, j), QExponent(1)));
      partial.set({GeneratorRef::Kind::lowering, j, i},
                  q_commutator(partial.lowering(j, k), partial.lowering(k, i), QExponent(-1)));
    }
  }
  return partial;
}

Operator cartan_power(int i, int j, QExponent e, const Sector& sector) {
  if (i < 1 || j < 1 || i > sector.modes() || j > sector.modes()) {
    throw IndexError("cartan_power index outside the mode range");
  }
  if (i == j) throw IndexError("cartan_power needs i != j");
  return diagonal_by_state(sector, [&](const Occupation& o) {
    return q_power(e * QExponent(o[i - 1] - o[j - 1]), sector.root());
  });
}

LaurentFraction diagonal_y_constant(int sign, RootConfig root) {
  const int s = sign > 0 ? 1 : -1;
  return LaurentFraction(-s * q_power(QExponent(-s, 2), root), 1, root);
}

LFunctionals l_functionals(const Sector& sector, int sign) {
  const int s = sign > 0 ? 1 : -1;
  const int n = sector.modes();
  const RootConfig root = sector.root();
  const GeneratorSet gens = cartan_weyl(sector);
  // -+ q^(+-1/2) (q - q^-1)
  const LaurentScalar prefactor = -s * q_power(QExponent(s, 2), root) * q_difference(root);
  LFunctionals out{s, n, {}};
  out.entries.reserve(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if ((s > 0 && i > j) || (s < 0 && i < j)) {
        out.entries.emplace_back(sector, sector);
        continue;
      }
      const Operator shift = diagonal_by_state(sector, [&](const Occupation& o) {
        return q_power(QExponent(-s * (o[i - 1] + o[j - 1]), 2), root);
      });
      if (i == j) {
        const auto c = (LaurentFraction(prefactor) * diagonal_y_constant(s, root)).to_laurent();
        if (!c) throw Error("diagonal functional constant left the Laurent ring");
        out.entries.push_back(scale(*c, shift));
      } else {
        out.entries.push_back(scale(prefactor, gens.y(i, j, s) * shift));
      }
    }
  }
  return out;
}

RMatrix::RMatrix(int n, RootConfig root) : n_(n) {
  if (n < 2) throw IndexError("R-matrix needs n >= 2");
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      entries_.emplace(std::array{i, j, i, j}, i == j ? q_power(1, root) : LaurentScalar(1));
      if (i < j) entries_.emplace(std::array{i, j, j, i}, q_difference(root));
    }
  }
}

LaurentScalar RMatrix::operator()(int i, int j, int k, int l) const {
  auto it = entries_.find({i, j, k, l});
  return it == entries_.end() ? LaurentScalar() : it->second;
}

RMatrix r_matrix(int n, RootConfig root) { return RMatrix(n, root); }

// ---------------------------------------------------------------------------

SparseOperator<LaurentFraction> casimir_of_pair(const Sector& sector, int mode) {
  if (mode < 1 || mode + 1 > sector.modes()) throw IndexError("Casimir pair outside the mode range");
  const RootConfig root = sector.root();
  const Operator xx = hop(mode + 1, mode, sector) * hop(mode, mode + 1, sector);
  SparseOperator<LaurentFraction> out =
      xx.map_entries([](const LaurentScalar& v) { return LaurentFraction(v); });
  for (std::size_t s = 0; s < sector.dim(); ++s) {
    const Occupation& o = sector.state(s);
    const int h = o[mode - 1] - o[mode];
    // [H/2]_q [H/2 + 1]_q
    out.add_to(s, s, q_number(QExponent(h, 2), root) * q_number(QExponent(h + 2, 2), root));
  }
  return out;
}

SparseOperator<LaurentFraction> casimir_su2(const Sector& sector) {
  if (sector.modes() != 2) throw IndexError("su_q(2) Casimir needs a 2-mode sector");
  return casimir_of_pair(sector, 1);
}

SparseOperator<LaurentFraction> casimir_closed_form(const Sector& sector) {
  const RootConfig root = sector.root();
  SparseOperator<LaurentFraction> out(sector, sector);
  for (std::size_t s = 0; s < sector.dim(); ++s) {
    int total = 0;
    for (int k : sector.state(s)) total += k;
    const LaurentScalar num = q_power(total + 1, root) + q_power(-total - 1, root) -
                              q_power(1, root) - q_power(-1, root);
    out.add_to(s, s, LaurentFraction(num, 2, root));
  }
  return out;
}

Operator number_from_casimir(const Sector& sector, int mode) {
  const RootConfig root = sector.root();
  const auto c = casimir_of_pair(sector, mode);
  const LaurentFraction cleared_factor(q_difference(root) * q_difference(root));
  Operator out(sector, sector);
  for (std::size_t s = 0; s < sector.dim(); ++s) {
    if (c.rows()[s].size() > 1 || (c.rows()[s].size() == 1 && !c.find(s, s))) {
      throw Error("pair Casimir is not diagonal");
    }
    // q^x + q^-x with x = N + 1
    const auto sum = (c.at(s, s) * cleared_factor).to_laurent();
    if (!sum) throw Error("pair Casimir value is not a Laurent polynomial after clearing");
    const LaurentScalar symmetric = *sum + q_power(1, root) + q_power(-1, root);
    const QExponent x(symmetric.max_exponent(), root.denominator());
    if (!(symmetric == q_power(x, root) + q_power(-x, root)) || x.denominator() != 1) {
      throw Error("pair Casimir value does not have the closed form");
    }
    out.add_to(s, s, LaurentScalar(Rational(x.numerator() - 1)));
  }
  return out;
}

std::vector<Operator> number_from_cartan(const Sector& sector) {
  const int n = sector.modes();
  const GeneratorSet gens = chevalley(sector);
  const Operator identity = Operator::identity(sector);
  Operator double_sum(sector, sector);
  for (int s = 2; s <= n; ++s) {
    for (int j = 1; j < s; ++j) double_sum = double_sum + gens.chevalley_cartan(j);
  }
  const Rational inv_n(1, n);
  const Operator common =
      scale(LaurentScalar(Rational(sector.level() * inv_n)), identity) +
      scale(LaurentScalar(inv_n), double_sum);
  std::vector<Operator> out;
  Operator trailing(sector, sector);
  for (int i = 1; i <= n; ++i) {
    if (i > 1) trailing = trailing + gens.chevalley_cartan(i - 1);
    out.push_back(common - trailing);
  }
  return out;
}

RecurrenceResult total_number_recurrence(const Sector& sector, RecurrenceReading reading) {
  const int n = sector.modes();
  if (n < 2) throw IndexError("the recurrence needs at least 2 modes");
  const GeneratorSet gens = chevalley(sector);
  auto h = [&](int p, int rank_modes) -> Operator {
    // In the literal reading only the r-mode subsystem's own H_p (p < r) exist.
    if (reading == RecurrenceReading::literal && p >= rank_modes) return Operator(sector, sector);
    return gens.chevalley_cartan(p);
  };
  Operator total = number_from_casimir(sector, 1);
  for (int r = 3; r <= n; ++r) {
    // Shifted: paper index n = r - 1 (A_{r-1} on r modes). Literal: paper index n = r.
    const int idx = reading == RecurrenceReading::shifted ? r - 1 : r;
    Operator double_sum(sector, sector);
    for (int t = 2; t <= idx + 1; ++t) {
      for (int p = 1; p < t; ++p) double_sum = double_sum + h(p, r);
    }
    Operator simple_sum(sector, sector);
    for (int p = 1; p <= idx; ++p) simple_sum = simple_sum + h(p, r);
    const Operator bracket =
        total + scale(LaurentScalar(Rational(1, idx + 1)), double_sum) - simple_sum;
    total = scale(LaurentScalar(Rational(idx + 1, idx)), bracket);
  }
  const Operator expected = scale(LaurentScalar(sector.level()), Operator::identity(sector));
  return {total, total - expected};
}

}  // namespace qalg
