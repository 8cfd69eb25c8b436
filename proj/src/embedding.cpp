#include "qalg/embedding.hpp"

#include <functional>

#include "qalg/hopf.hpp"

namespace qalg {

IndexMap::IndexMap(int k1, int k2) : k1_(k1), k2_(k2) {
  if (k1 < 1 || k2 < 1) throw IndexError("embedding parameters must be positive");
}

std::pair<int, int> IndexMap::to_grid(int i) const { return index_to_grid(i, k1_, k2_); }

int IndexMap::to_flat(int mu, int s) const {
  if (mu < 1 || mu > k1_) throw IndexError("grid row " + std::to_string(mu) + " out of range");
  return grid_to_index(mu, s, k2_);
}

std::pair<int, int> index_to_grid(int i, int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw IndexError("embedding parameters must be positive");
  if (i < 1 || i > k1 * k2) throw IndexError("flat index " + std::to_string(i) + " out of range");
  return {1 + (i - 1) / k2, 1 + (i - 1) % k2};
}

int grid_to_index(int mu, int s, int k2) {
  if (mu < 1 || s < 1 || s > k2) throw IndexError("grid cell out of range");
  return (mu - 1) * k2 + s;
}

namespace {

int sign_of(int x) { return (x > 0) - (x < 0); }

void check_shape(int k1, int k2, const Sector& sector) {
  IndexMap map(k1, k2);
  if (sector.modes() != map.size()) {
    throw SectorMismatch("embedding (" + std::to_string(k1) + "," + std::to_string(k2) +
                         ") needs a " + std::to_string(map.size()) + "-mode sector, got " +
                         sector.label());
  }
}

EmbeddedSet empty_set(int k1, int k2, const Sector& sector, std::string route) {
  return EmbeddedSet{k1, k2, sector, std::move(route), {}, {}, {}, {}, {}, {}};
}

}  // namespace

// ---------------------------------------------------------------------------

EmbeddedSet embed_boson_route(int k1, int k2, const Sector& sector) {
  check_shape(k1, k2, sector);
  const IndexMap grid(k1, k2);
  const RootConfig root = sector.root();
  EmbeddedSet out = empty_set(k1, k2, sector, "boson");
  auto occ = [&](const Occupation& o, int mu, int s) { return o[grid.to_flat(mu, s) - 1]; };

  for (int mu = 1; mu < k1; ++mu) {
    Operator xp(sector, sector);
    Operator xm(sector, sector);
    for (int s = 1; s <= k2; ++s) {
      const Operator dress = diagonal_by_state(sector, [&](const Occupation& o) {
        int twice = 0;
        for (int sigma = 1; sigma <= k2; ++sigma) {
          if (sigma != s) twice += sign_of(sigma - s) * (occ(o, mu, sigma) - occ(o, mu + 1, sigma));
        }
        return q_power(QExponent(twice, 2), root);
      });
      xp = xp + hop(grid.to_flat(mu, s), grid.to_flat(mu + 1, s), sector) * dress;
      xm = xm + hop(grid.to_flat(mu + 1, s), grid.to_flat(mu, s), sector) * dress;
    }
    out.x_raise.push_back(std::move(xp));
    out.x_lower.push_back(std::move(xm));
    out.h_mu.push_back(diagonal_by_state(sector, [&](const Occupation& o) {
      int h = 0;
      for (int s = 1; s <= k2; ++s) h += occ(o, mu, s) - occ(o, mu + 1, s);
      return LaurentScalar(h);
    }));
  }

  for (int s = 1; s < k2; ++s) {
    Operator zp(sector, sector);
    Operator zm(sector, sector);
    for (int mu = 1; mu <= k1; ++mu) {
      const Operator dress = diagonal_by_state(sector, [&](const Occupation& o) {
        int twice = 0;
        for (int sigma = 1; sigma <= k1; ++sigma) {
          if (sigma != mu) twice += sign_of(sigma - mu) * (occ(o, sigma, s) - occ(o, sigma, s + 1));
        }
        return q_power(QExponent(twice, 2), root);
      });
      zp = zp + hop(grid.to_flat(mu, s), grid.to_flat(mu, s + 1), sector) * dress;
      zm = zm + hop(grid.to_flat(mu, s + 1), grid.to_flat(mu, s), sector) * dress;
    }
    out.z_raise.push_back(std::move(zp));
    out.z_lower.push_back(std::move(zm));
    out.h_s.push_back(diagonal_by_state(sector, [&](const Occupation& o) {
      int h = 0;
      for (int mu = 1; mu <= k1; ++mu) h += occ(o, mu, s) - occ(o, mu, s + 1);
      return LaurentScalar(h);
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void compositions(int total, int parts, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(current.size()) == parts - 1) {
    current.push_back(total);
    visit(current);
    current.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    current.push_back(k);
    compositions(total - k, parts, current, visit);
    current.pop_back();
  }
}

// Evaluates Delta^(legs-1) of each element on every leg-level composition and relabels
// leg l, local mode a into the flat mode flat(l, a).
std::vector<Operator> delta_family(const std::vector<FormalElement>& elements, int legs,
                                   int leg_modes, const Sector& sector,
                                   const std::function<int(int, int)>& flat) {
  const RootConfig root = sector.root();
  std::vector<FormalElement> expanded;
  for (const auto& e : elements) expanded.push_back(delta_power(e, legs - 1, root));
  std::vector<Operator> out(elements.size(), Operator(sector, sector));
  if (sector.level() < 0) return out;

  Evaluator evaluator;
  std::vector<int> scratch;
  compositions(sector.level(), legs, scratch, [&](const std::vector<int>& levels) {
    std::vector<Sector> leg_sectors;
    for (int lv : levels) leg_sectors.push_back(Sector::make(leg_modes, lv, root));
    const Space space(leg_sectors);
    std::vector<std::size_t> to_flat(space.dim());
    for (std::size_t idx = 0; idx < space.dim(); ++idx) {
      const auto parts = space.split(idx);
      Occupation o(static_cast<std::size_t>(sector.modes()), 0);
      for (int l = 0; l < legs; ++l) {
        const Occupation& local = leg_sectors[l].state(parts[l]);
        for (int a = 0; a < leg_modes; ++a) o[flat(l + 1, a + 1) - 1] = local[a];
      }
      to_flat[idx] = *sector.index_of(o);
    }
    for (std::size_t e = 0; e < expanded.size(); ++e) {
      evaluator.evaluate(expanded[e], leg_sectors).for_each(
          [&](std::size_t i, std::size_t j, const LaurentScalar& v) {
            out[e].add_to(to_flat[i], to_flat[j], v);
          });
    }
  });
  return out;
}

}  // namespace

EmbeddedSet embed_delta_route(int k1, int k2, const Sector& sector) {
  check_shape(k1, k2, sector);
  const IndexMap grid(k1, k2);
  EmbeddedSet out = empty_set(k1, k2, sector, "delta");

  if (k1 > 1) {
    std::vector<FormalElement> gens;
    for (int mu = 1; mu < k1; ++mu) gens.push_back(FormalElement::y(mu, mu + 1, +1));
    for (int mu = 1; mu < k1; ++mu) gens.push_back(FormalElement::y(mu + 1, mu, -1));
    for (int mu = 1; mu < k1; ++mu) gens.push_back(FormalElement::h(mu, mu + 1));
    // leg s carries the k1 bosons of grid column s
    auto ops = delta_family(gens, k2, k1, sector, [&](int s, int mu) { return grid.to_flat(mu, s); });
    const std::size_t r = static_cast<std::size_t>(k1 - 1);
    out.x_raise.assign(ops.begin(), ops.begin() + r);
    out.x_lower.assign(ops.begin() + r, ops.begin() + 2 * r);
    out.h_mu.assign(ops.begin() + 2 * r, ops.end());
  }
  if (k2 > 1) {
    std::vector<FormalElement> gens;
    for (int s = 1; s < k2; ++s) gens.push_back(FormalElement::y(s, s + 1, +1));
    for (int s = 1; s < k2; ++s) gens.push_back(FormalElement::y(s + 1, s, -1));
    for (int s = 1; s < k2; ++s) gens.push_back(FormalElement::h(s, s + 1));
    // leg mu carries the k2 bosons of grid row mu
    auto ops = delta_family(gens, k1, k2, sector, [&](int mu, int s) { return grid.to_flat(mu, s); });
    const std::size_t r = static_cast<std::size_t>(k2 - 1);
    out.z_raise.assign(ops.begin(), ops.begin() + r);
    out.z_lower.assign(ops.begin() + r, ops.begin() + 2 * r);
    out.h_s.assign(ops.begin() + 2 * r, ops.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

EmbeddedSet embed_weyl_route(int k1, int k2, const Sector& sector, LambdaConvention convention,
                             bool number_as_operator) {
  check_shape(k1, k2, sector);
  const RootConfig root = sector.root();
  if (!root.divisible_by(2 * k1 * k2)) {
    throw RootError("the Cartan-Weyl route needs D divisible by " + std::to_string(2 * k1 * k2) +
                    ", got D = " + std::to_string(root.denominator()));
  }
  const int big = k1 * k2;
  const GeneratorSet gens = cartan_weyl(sector);
  EmbeddedSet out = empty_set(k1, k2, sector, "weyl");

  std::map<std::pair<int, int>, std::vector<QExponent>> eig_cache;
  auto eig = [&](int i, int j) -> const std::vector<QExponent>& {
    auto it = eig_cache.find({i, j});
    if (it == eig_cache.end()) it = eig_cache.emplace(std::make_pair(i, j), gens.cartan_eigenvalues(i, j)).first;
    return it->second;
  };
  // Diagonal q^(f(state index)).
  auto dress = [&](const std::function<QExponent(std::size_t)>& f) {
    Operator d(sector, sector);
    for (std::size_t st = 0; st < sector.dim(); ++st) d.add_to(st, st, q_power(f(st), root));
    return d;
  };
  auto total_number = [&](std::size_t st) {
    if (!number_as_operator) return QExponent(sector.level());
    int n = 0;
    for (int k : sector.state(st)) n += k;
    return QExponent(n);
  };

  for (int s = 1; s < k2; ++s) {
    Operator zp(sector, sector);
    Operator zm(sector, sector);
    Operator hs(sector, sector);
    for (int mu = 1; mu <= k1; ++mu) {
      const int i = (mu - 1) * k2 + s;
      const Operator d = dress([&](std::size_t st) {
        QExponent e;
        for (int sigma = 1; sigma <= k1; ++sigma) {
          if (sigma == mu) continue;
          const int p = (sigma - 1) * k2 + s;
          e = e + QExponent(sign_of(sigma - mu), 2) * eig(p, p + 1)[st];
        }
        return e;
      });
      zp = zp + gens.raising(i, i + 1) * d;
      zm = zm + gens.lowering(i + 1, i) * d;
      hs = hs + gens.chevalley_cartan(i);
    }
    out.z_raise.push_back(std::move(zp));
    out.z_lower.push_back(std::move(zm));
    out.h_s.push_back(std::move(hs));
  }

  for (int mu = 1; mu < k1; ++mu) {
    Operator xp(sector, sector);
    Operator xm(sector, sector);
    Operator hm(sector, sector);
    for (int p = (mu - 1) * k2 + 1; p <= mu * k2; ++p) hm = hm + gens.cartan(p, p + k2);
    for (int t = mu * k2 + 1; t <= (mu + 1) * k2; ++t) {
      auto base = [&](std::size_t st) {
        QExponent e;
        for (int nu = mu * k2 + 1; nu <= (mu + 1) * k2; ++nu) {
          if (nu != t) e = e + QExponent(sign_of(nu - t), 2) * eig(nu - k2, nu)[st];
        }
        return e;
      };
      auto a_part = [&](std::size_t st) {
        QExponent e = total_number(st);
        for (int sigma = 2; sigma <= big; ++sigma) e = e + eig(1, sigma)[st];
        return QExponent(k2 - 1, big) * e;
      };
      auto b_part = [&](std::size_t st) {
        QExponent e;
        for (int sigma = t - k2 + 1; sigma <= t - 1; ++sigma) e = e + eig(1, sigma)[st];
        return e;
      };
      auto lambda = [&](int sign, std::size_t st) {
        if (convention == LambdaConvention::printed) {
          return a_part(st) + QExponent(sign) * b_part(st);
        }
        return QExponent(sign) * (a_part(st) - b_part(st));
      };
      xp = xp + gens.raising(t - k2, t) * dress([&](std::size_t st) { return base(st) + lambda(+1, st); });
      xm = xm + gens.lowering(t, t - k2) * dress([&](std::size_t st) { return base(st) + lambda(-1, st); });
    }
    out.x_raise.push_back(std::move(xp));
    out.x_lower.push_back(std::move(xm));
    out.h_mu.push_back(std::move(hm));
  }
  return out;
}

// ---------------------------------------------------------------------------

ClassicalEmbeddedSet classical_limit(const EmbeddedSet& set) {
  auto lower = [](const std::vector<Operator>& ops) {
    std::vector<SparseOperator<Rational>> out;
    for (const auto& op : ops) {
      out.push_back(op.map_entries([](const LaurentScalar& v) { return eval_at(v, Rational(1)); }));
    }
    return out;
  };
  return ClassicalEmbeddedSet{set.k1,          set.k2,           set.sector,
                              set.route,       lower(set.x_raise), lower(set.x_lower),
                              lower(set.h_mu), lower(set.z_raise), lower(set.z_lower),
                              lower(set.h_s)};
}

namespace {

using RationalOperator = SparseOperator<Rational>;

RationalOperator classical_hop(int to, int from, const Sector& sector) {
  RationalOperator out(sector, sector);
  for (std::size_t c = 0; c < sector.dim(); ++c) {
    Occupation o = sector.state(c);
    const int k = o[from - 1];
    if (k == 0) continue;
    --o[from - 1];
    ++o[to - 1];
    out.add_to(*sector.index_of(o), c, Rational(k));
  }
  return out;
}

RationalOperator classical_difference(const Sector& sector, const std::vector<std::pair<int, int>>& pairs) {
  RationalOperator out(sector, sector);
  for (std::size_t c = 0; c < sector.dim(); ++c) {
    const Occupation& o = sector.state(c);
    int h = 0;
    for (auto [a, b] : pairs) h += o[a - 1] - o[b - 1];
    out.add_to(c, c, Rational(h));
  }
  return out;
}

}  // namespace

ClassicalEmbeddedSet classical_display(int k1, int k2, const Sector& sector) {
  check_shape(k1, k2, sector);
  ClassicalEmbeddedSet out{k1, k2, sector, "classical", {}, {}, {}, {}, {}, {}};
  for (int mu = 1; mu < k1; ++mu) {
    RationalOperator xp(sector, sector);
    RationalOperator xm(sector, sector);
    std::vector<std::pair<int, int>> pairs;
    for (int s = 1; s <= k2; ++s) {
      const int i = (mu - 1) * k2 + s;
      xp = xp + classical_hop(i, i + k2, sector);
      xm = xm + classical_hop(i + k2, i, sector);
      pairs.emplace_back(i, i + k2);
    }
    out.x_raise.push_back(std::move(xp));
    out.x_lower.push_back(std::move(xm));
    out.h_mu.push_back(classical_difference(sector, pairs));
  }
  for (int s = 1; s < k2; ++s) {
    RationalOperator zp(sector, sector);
    RationalOperator zm(sector, sector);
    std::vector<std::pair<int, int>> pairs;
    for (int mu = 1; mu <= k1; ++mu) {
      const int i = (mu - 1) * k2 + s;
      zp = zp + classical_hop(i, i + 1, sector);
      zm = zm + classical_hop(i + 1, i, sector);
      pairs.emplace_back(i, i + 1);
    }
    out.z_raise.push_back(std::move(zp));
    out.z_lower.push_back(std::move(zm));
    out.h_s.push_back(classical_difference(sector, pairs));
  }
  return out;
}

std::pair<GeneratorSet, GeneratorSet> embedded_generator_sets(const EmbeddedSet& set) {
  auto build = [&](int rank, const std::vector<Operator>& up, const std::vector<Operator>& down,
                   const std::vector<Operator>& h) {
    GeneratorSet g(rank, set.sector);
    for (int i = 1; i < rank; ++i) {
      g.set({GeneratorRef::Kind::raising, i, i + 1}, up[i - 1]);
      g.set({GeneratorRef::Kind::lowering, i + 1, i}, down[i - 1]);
      g.set({GeneratorRef::Kind::cartan, i, 0}, h[i - 1]);
    }
    return complete_from_chevalley(std::move(g));
  };
  return {build(set.k1, set.x_raise, set.x_lower, set.h_mu),
          build(set.k2, set.z_raise, set.z_lower, set.h_s)};
}

}  // namespace qalg
