#include "qalg/fock.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace qalg {

std::size_t fock_dimension(int modes, int level) {
  if (modes < 1 || level < 0) return 0;
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(modes + level - 1),
               static_cast<unsigned long>(level));
  if (!count.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return count.get_ui();
}

std::size_t default_dimension_cap() { return 100000; }

namespace {

void enumerate(int modes, int remaining, Occupation& current, std::vector<Occupation>& out) {
  const std::size_t pos = current.size();
  if (static_cast<int>(pos) == modes - 1) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    current.push_back(k);
    enumerate(modes, remaining - k, current, out);
    current.pop_back();
  }
}

}  // namespace

Sector Sector::make(int modes, int level, RootConfig root, std::size_t cap) {
  if (modes < 1) throw IndexError("a sector needs at least one mode");
  if (level < 0) return empty(modes, root);
  const std::size_t dim = fock_dimension(modes, level);
  if (dim > cap) {
    throw DimensionCapError("sector with " + std::to_string(modes) + " modes at level " +
                            std::to_string(level) + " has " + std::to_string(dim) +
                            " states, above the cap of " + std::to_string(cap));
  }
  auto data = std::make_shared<Data>(Data{modes, level, root, {}, {}});
  data->basis.reserve(dim);
  Occupation scratch;
  enumerate(modes, level, scratch, data->basis);
  for (std::size_t i = 0; i < data->basis.size(); ++i) data->index.emplace(data->basis[i], i);
  return Sector(std::move(data));
}

Sector Sector::empty(int modes, RootConfig root) {
  if (modes < 1) throw IndexError("a sector needs at least one mode");
  return Sector(std::make_shared<Data>(Data{modes, -1, root, {}, {}}));
}

std::optional<std::size_t> Sector::index_of(const Occupation& occ) const {
  auto it = data_->index.find(occ);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Sector Sector::shifted(int delta) const {
  const int target = level() + delta;
  if (target < 0) return empty(modes(), root());
  return make(modes(), target, root(), std::numeric_limits<std::size_t>::max());
}

std::string Sector::label() const {
  return "F(n=" + std::to_string(modes()) + ",m=" + std::to_string(level()) + ")";
}

// ---------------------------------------------------------------------------

Space::Space(std::vector<Sector> legs) : legs_(std::move(legs)) {
  if (legs_.empty()) throw IndexError("a space needs at least one leg");
  for (const auto& leg : legs_) {
    if (!(leg.root() == legs_.front().root())) {
      throw RootError("tensor legs with different root denominators");
    }
  }
}

std::size_t Space::dim() const {
  std::size_t d = 1;
  for (const auto& leg : legs_) d *= leg.dim();
  return d;
}

const Sector& Space::sector() const {
  if (legs_.size() != 1) throw SectorMismatch("expected a single sector, got " + label());
  return legs_.front();
}

std::vector<std::size_t> Space::split(std::size_t index) const {
  std::vector<std::size_t> out(legs_.size());
  for (std::size_t l = legs_.size(); l-- > 0;) {
    out[l] = index % legs_[l].dim();
    index /= legs_[l].dim();
  }
  return out;
}

std::size_t Space::join(std::span<const std::size_t> leg_indices) const {
  std::size_t index = 0;
  for (std::size_t l = 0; l < legs_.size(); ++l) index = index * legs_[l].dim() + leg_indices[l];
  return index;
}

std::string Space::state_label(std::size_t index) const {
  std::string out;
  const auto parts = split(index);
  for (std::size_t l = 0; l < legs_.size(); ++l) {
    if (l) out += "(x)";
    out += "|";
    const auto& occ = legs_[l].state(parts[l]);
    for (std::size_t k = 0; k < occ.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(occ[k]);
    }
    out += ">";
  }
  return out;
}

std::string Space::label() const {
  std::string out;
  for (std::size_t l = 0; l < legs_.size(); ++l) {
    if (l) out += "(x)";
    out += legs_[l].label();
  }
  return out;
}

Space tensor_space(const Space& a, const Space& b) {
  std::vector<Sector> legs = a.legs();
  legs.insert(legs.end(), b.legs().begin(), b.legs().end());
  return Space(std::move(legs));
}

// ---------------------------------------------------------------------------

Operator q_commutator(const Operator& a, const Operator& b, QExponent c) {
  if (!a.is_square() || !b.is_square() || !(a.domain() == b.domain())) {
    throw SectorMismatch("q-commutator needs square operators on one space: " +
                         detail::space_pair(a.domain(), b.domain()));
  }
  if (c.is_zero()) return commutator(a, b);
  return a * b - scale(q_power(c, a.domain().root()), b * a);
}

namespace {

void check_mode(int mode, const Sector& s) {
  if (mode < 1 || mode > s.modes()) {
    throw IndexError("mode index " + std::to_string(mode) + " outside 1.." +
                     std::to_string(s.modes()));
  }
}

}  // namespace

Operator creation(int mode, const Sector& from) {
  check_mode(mode, from);
  const Sector to = from.shifted(+1);
  Operator out(from, to);
  if (from.level() < 0) return out;
  for (std::size_t c = 0; c < from.dim(); ++c) {
    Occupation occ = from.state(c);
    ++occ[mode - 1];
    out.add_to(*to.index_of(occ), c, 1);
  }
  return out;
}

Operator annihilation(int mode, const Sector& from) {
  check_mode(mode, from);
  const Sector to = from.shifted(-1);
  Operator out(from, to);
  for (std::size_t c = 0; c < from.dim(); ++c) {
    Occupation occ = from.state(c);
    const int k = occ[mode - 1];
    if (k == 0) continue;
    --occ[mode - 1];
    out.add_to(*to.index_of(occ), c, q_integer(k, from.root()));
  }
  return out;
}

Operator number_power(int mode, QExponent e, const Sector& on) {
  check_mode(mode, on);
  return diagonal_by_state(
      on, [&](const Occupation& occ) { return q_power(e * QExponent(occ[mode - 1]), on.root()); });
}

Operator number_operator(int mode, const Sector& on) {
  check_mode(mode, on);
  return diagonal_by_state(on, [&](const Occupation& occ) { return LaurentScalar(occ[mode - 1]); });
}

Operator hop(int to_mode, int from_mode, const Sector& on) {
  check_mode(to_mode, on);
  check_mode(from_mode, on);
  Operator out(on, on);
  for (std::size_t c = 0; c < on.dim(); ++c) {
    Occupation occ = on.state(c);
    const int k = occ[from_mode - 1];
    if (k == 0) continue;
    --occ[from_mode - 1];
    ++occ[to_mode - 1];
    out.add_to(*on.index_of(occ), c, q_integer(k, on.root()));
  }
  return out;
}

}  // namespace qalg
