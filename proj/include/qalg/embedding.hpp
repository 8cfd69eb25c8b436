// A^q_{k1-1} (+) A^q_{k2-1} inside A^q_{k1 k2 - 1}: the grid relabeling of the
// k1*k2 bosons and the embedded generator families, built three independent ways.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qalg/generators.hpp"

namespace qalg {

/// i <-> (mu, s) with i = (mu-1) k2 + s.
class IndexMap {
 public:
  IndexMap(int k1, int k2);

  int k1() const { return k1_; }
  int k2() const { return k2_; }
  int size() const { return k1_ * k2_; }
  std::pair<int, int> to_grid(int i) const;
  int to_flat(int mu, int s) const;

 private:
  int k1_;
  int k2_;
};

std::pair<int, int> index_to_grid(int i, int k1, int k2);
int grid_to_index(int mu, int s, int k2);

enum class LambdaConvention {
  /// Lambda_t^{+-} = +-(A - B): reproduces the boson realization.
  corrected,
  /// Lambda_t^{+-} = A +- B, as printed.
  printed,
};

/// Chevalley generators of both embedded families on one flat sector.
/// X family (index mu = 1..k1-1) and Z family (index s = 1..k2-1); vectors are 0-based.
template <class S>
struct BasicEmbeddedSet {
  int k1;
  int k2;
  Sector sector;
  std::string route;
  std::vector<SparseOperator<S>> x_raise;
  std::vector<SparseOperator<S>> x_lower;
  std::vector<SparseOperator<S>> h_mu;
  std::vector<SparseOperator<S>> z_raise;
  std::vector<SparseOperator<S>> z_lower;
  std::vector<SparseOperator<S>> h_s;

  /// Every operator with a stable name ("X+1", "X-1", "HX1", "Z+1", "Z-1", "HZ1"), in that order.
  std::vector<std::pair<std::string, const SparseOperator<S>*>> named() const {
    std::vector<std::pair<std::string, const SparseOperator<S>*>> out;
    auto add = [&](const std::string& prefix, const std::vector<SparseOperator<S>>& ops) {
      for (std::size_t i = 0; i < ops.size(); ++i) out.emplace_back(prefix + std::to_string(i + 1), &ops[i]);
    };
    add("X+", x_raise);
    add("X-", x_lower);
    add("HX", h_mu);
    add("Z+", z_raise);
    add("Z-", z_lower);
    add("HZ", h_s);
    return out;
  }
};

using EmbeddedSet = BasicEmbeddedSet<LaurentScalar>;
using ClassicalEmbeddedSet = BasicEmbeddedSet<Rational>;

/// Sums of grid hops a_mu^{+s} a_{mu+1}^{-s} dressed by q^(1/2 sum sign(sigma-s)(...)).
EmbeddedSet embed_boson_route(int k1, int k2, const Sector& sector);

/// Iterated coproducts of the Chevalley generators of A^q_{k1-1} (k2 legs) and
/// A^q_{k2-1} (k1 legs), evaluated on every leg-level composition of the sector level
/// and relabeled into the flat sector.
EmbeddedSet embed_delta_route(int k1, int k2, const Sector& sector);

/// From the Cartan-Weyl generators of A^q_{k1 k2 - 1} with the Lambda corrections.
/// N is the scalar level unless `number_as_operator` asks for the total-number diagonal.
/// Requires D divisible by 2 k1 k2.
EmbeddedSet embed_weyl_route(int k1, int k2, const Sector& sector,
                             LambdaConvention convention = LambdaConvention::corrected,
                             bool number_as_operator = false);

/// Every entry evaluated at q = 1.
ClassicalEmbeddedSet classical_limit(const EmbeddedSet& set);

/// The q = 1 embedding assembled directly over the rationals: plain sums of
/// classical hops a_i^+ a_j^- (coefficient m_j) and of number differences.
ClassicalEmbeddedSet classical_display(int k1, int k2, const Sector& sector);

/// Names of operators that differ; empty means operator-identical.
template <class S>
std::vector<std::string> route_differences(const BasicEmbeddedSet<S>& a, const BasicEmbeddedSet<S>& b) {
  std::vector<std::string> out;
  const auto na = a.named();
  const auto nb = b.named();
  if (na.size() != nb.size()) return {"<family sizes>"};
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (!(*na[i].second == *nb[i].second)) out.push_back(na[i].first);
  }
  return out;
}

/// The X family as a completed A^q_{k1-1} GeneratorSet and the Z family as A^q_{k2-1};
/// non-adjacent elements are synthesized from the Chevalley ones.
std::pair<GeneratorSet, GeneratorSet> embedded_generator_sets(const EmbeddedSet& set);

}  // namespace qalg
