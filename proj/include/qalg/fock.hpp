// Fixed-total-number sectors of the n-mode q-boson Fock space and exact sparse
// operators between them.
//
// Basis convention: the non-normalized monomial basis |m> = prod_i (a_i^+)^{m_i} |0>.
// Creation has coefficient 1 and annihilation has coefficient [m_i]_q, so every
// matrix entry stays inside the Laurent ring.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qalg/ring.hpp"

namespace qalg {

using Occupation = std::vector<int>;

class IndexError : public Error {
 public:
  using Error::Error;
};

class SectorMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionCapError : public Error {
 public:
  using Error::Error;
};

/// (n+m-1)! / (m! (n-1)!), saturating at SIZE_MAX.
std::size_t fock_dimension(int modes, int level);

/// 100000 states.
std::size_t default_dimension_cap();

/// Ordered basis of all occupation vectors of `modes` modes summing to `level`,
/// lexicographically sorted. Level -1 is the explicit empty sector.
class Sector {
 public:
  static Sector make(int modes, int level, RootConfig root,
                     std::size_t cap = default_dimension_cap());
  static Sector empty(int modes, RootConfig root);

  int modes() const { return data_->modes; }
  int level() const { return data_->level; }
  RootConfig root() const { return data_->root; }
  std::size_t dim() const { return data_->basis.size(); }
  const std::vector<Occupation>& basis() const { return data_->basis; }
  const Occupation& state(std::size_t index) const { return data_->basis.at(index); }
  std::optional<std::size_t> index_of(const Occupation& occ) const;

  /// The sector `delta` levels up (or down); below zero gives the empty sector.
  Sector shifted(int delta) const;

  std::string label() const;

  friend bool operator==(const Sector& a, const Sector& b) {
    return a.modes() == b.modes() && a.level() == b.level() && a.root() == b.root();
  }

 private:
  struct Data {
    int modes;
    int level;
    RootConfig root;
    std::vector<Occupation> basis;
    std::map<Occupation, std::size_t> index;
  };
  explicit Sector(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Ordered tensor product of sectors; basis is left-leg-major lexicographic on leg indices.
class Space {
 public:
  Space(const Sector& sector) : legs_{sector} {}  // NOLINT: a sector is a one-leg space
  explicit Space(std::vector<Sector> legs);

  const std::vector<Sector>& legs() const { return legs_; }
  std::size_t rank() const { return legs_.size(); }
  std::size_t dim() const;
  RootConfig root() const { return legs_.front().root(); }
  const Sector& sector() const;  // throws unless rank() == 1

  std::vector<std::size_t> split(std::size_t index) const;
  std::size_t join(std::span<const std::size_t> leg_indices) const;

  /// Human-readable basis label of a state, e.g. "|1,0>" or "|1,0>(x)|0,1>".
  std::string state_label(std::size_t index) const;
  std::string label() const;

  friend bool operator==(const Space& a, const Space& b) { return a.legs_ == b.legs_; }

 private:
  std::vector<Sector> legs_;
};

Space tensor_space(const Space& a, const Space& b);

/// Exact sparse linear map between spaces, stored by rows. Entries are kept nonzero.
template <class Scalar>
class SparseOperator {
 public:
  using Row = std::map<std::size_t, Scalar>;

  SparseOperator(Space domain, Space codomain)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), rows_(codomain_.dim()) {}

  static SparseOperator identity(const Space& space) {
    SparseOperator out(space, space);
    for (std::size_t i = 0; i < space.dim(); ++i) out.rows_[i].emplace(i, Scalar(Rational(1)));
    return out;
  }

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  bool is_square() const { return domain_ == codomain_; }
  const std::vector<Row>& rows() const { return rows_; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }

  const Scalar* find(std::size_t row, std::size_t col) const {
    const auto& r = rows_.at(row);
    auto it = r.find(col);
    return it == r.end() ? nullptr : &it->second;
  }
  Scalar at(std::size_t row, std::size_t col) const {
    const Scalar* s = find(row, col);
    return s ? *s : Scalar();
  }

  void add_to(std::size_t row, std::size_t col, const Scalar& value) {
    if (col >= domain_.dim()) throw IndexError("column index out of range");
    auto& r = rows_.at(row);
    auto [it, inserted] = r.try_emplace(col, value);
    if (!inserted) it->second += value;
    if (is_zero_scalar(it->second)) r.erase(it);
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (const auto& [j, v] : rows_[i]) f(i, j, v);
    }
  }

  /// Entry-wise image under f, dropping entries that map to zero.
  template <class F>
  auto map_entries(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Scalar&>()))>;
    SparseOperator<Out> out(domain_, codomain_);
    for_each([&](std::size_t i, std::size_t j, const Scalar& v) { out.add_to(i, j, f(v)); });
    return out;
  }

  friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.rows_ == b.rows_;
  }

 private:
  static bool is_zero_scalar(const Scalar& s) { return qalg::is_zero(s); }

  Space domain_;
  Space codomain_;
  std::vector<Row> rows_;
};

using Operator = SparseOperator<LaurentScalar>;

namespace detail {
inline std::string space_pair(const Space& a, const Space& b) {
  return a.label() + " vs " + b.label();
}
}  // namespace detail

/// A then B is compose(B, A): the product B*A with A applied first.
template <class S>
SparseOperator<S> compose(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  if (!(b.codomain() == a.domain())) {
    throw SectorMismatch("compose: " + detail::space_pair(b.codomain(), a.domain()));
  }
  SparseOperator<S> out(b.domain(), a.codomain());
  for (std::size_t i = 0; i < a.rows().size(); ++i) {
    for (const auto& [k, av] : a.rows()[i]) {
      for (const auto& [j, bv] : b.rows()[k]) out.add_to(i, j, av * bv);
    }
  }
  return out;
}

template <class S>
SparseOperator<S> operator*(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  return compose(a, b);
}

template <class S>
SparseOperator<S> operator+(SparseOperator<S> a, const SparseOperator<S>& b) {
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain())) {
    throw SectorMismatch("add: " + detail::space_pair(a.domain(), b.domain()) + " / " +
                         detail::space_pair(a.codomain(), b.codomain()));
  }
  b.for_each([&](std::size_t i, std::size_t j, const S& v) { a.add_to(i, j, v); });
  return a;
}

template <class S>
SparseOperator<S> scale(const S& c, const SparseOperator<S>& a) {
  return a.map_entries([&](const S& v) { return S(c * v); });
}

template <class S>
SparseOperator<S> operator-(const SparseOperator<S>& a) {
  return a.map_entries([](const S& v) { return S(-v); });
}

template <class S>
SparseOperator<S> operator-(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  return a + (-b);
}

template <class S>
SparseOperator<S> commutator(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  return a * b - b * a;
}

/// Kronecker product on the concatenated leg list.
template <class S>
SparseOperator<S> tensor(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  SparseOperator<S> out(tensor_space(a.domain(), b.domain()),
                        tensor_space(a.codomain(), b.codomain()));
  const std::size_t bd = b.domain().dim();
  const std::size_t bc = b.codomain().dim();
  a.for_each([&](std::size_t ai, std::size_t aj, const S& av) {
    b.for_each([&](std::size_t bi, std::size_t bj, const S& bv) {
      out.add_to(ai * bc + bi, aj * bd + bj, av * bv);
    });
  });
  return out;
}

template <class S>
SparseOperator<S> diagonal(const Space& space, std::span<const S> entries) {
  SparseOperator<S> out(space, space);
  for (std::size_t i = 0; i < entries.size(); ++i) out.add_to(i, i, entries[i]);
  return out;
}

/// A*B - q^c B*A; c = 0 is the ordinary commutator.
Operator q_commutator(const Operator& a, const Operator& b, QExponent c);

/// First stored entry in row-major order, if any.
template <class S>
std::optional<std::pair<std::pair<std::size_t, std::size_t>, S>> first_nonzero(
    const SparseOperator<S>& a) {
  for (std::size_t i = 0; i < a.rows().size(); ++i) {
    if (!a.rows()[i].empty()) {
      const auto& [j, v] = *a.rows()[i].begin();
      return std::make_pair(std::make_pair(i, j), v);
    }
  }
  return std::nullopt;
}

/// a_i^+ : sector(n, m) -> sector(n, m+1); 1-based mode index.
Operator creation(int mode, const Sector& from);

/// a_i^- : sector(n, m) -> sector(n, m-1) with coefficient [m_i]_q.
Operator annihilation(int mode, const Sector& from);

/// Diagonal q^(e * N_i).
Operator number_power(int mode, QExponent e, const Sector& on);

/// Diagonal N_i with integer entries.
Operator number_operator(int mode, const Sector& on);

/// a_i^+ a_j^- as an operator on `on`.
Operator hop(int to_mode, int from_mode, const Sector& on);

/// Diagonal operator with entries f(occupation).
template <class F>
Operator diagonal_by_state(const Sector& on, F&& f) {
  Operator out(on, on);
  for (std::size_t i = 0; i < on.dim(); ++i) out.add_to(i, i, f(on.state(i)));
  return out;
}

}  // namespace qalg
