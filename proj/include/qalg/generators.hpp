// Concrete generator families of A^q_{n-1} realized on a Fock sector.
#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "qalg/fock.hpp"

namespace qalg {

/// Names one stored generator: Y^+_{ij}, Y^-_{ij}, or the Chevalley Cartan H_i (j unused).
struct GeneratorRef {
  enum class Kind { raising, lowering, cartan };
  Kind kind;
  int i;
  int j;

  std::string label() const;
  friend auto operator<=>(const GeneratorRef&, const GeneratorRef&) = default;
};

/// Y^+_{ij} (i<j), Y^-_{ij} (i>j) and the Chevalley Cartan elements H_i of
/// A^q_{n-1}, all square on one sector. H_{ij} is derived as a sum of H_i.
/// A set may be partial (Chevalley only) until completed.
class GeneratorSet {
 public:
  GeneratorSet(int rank_n, Sector sector);

  int n() const { return n_; }
  const Sector& sector() const { return sector_; }
  RootConfig root() const { return sector_.root(); }

  bool has(const GeneratorRef& ref) const;
  const Operator& get(const GeneratorRef& ref) const;
  void set(const GeneratorRef& ref, Operator op);
  std::vector<GeneratorRef> members() const;

  const Operator& raising(int i, int j) const { return get({GeneratorRef::Kind::raising, i, j}); }
  const Operator& lowering(int i, int j) const { return get({GeneratorRef::Kind::lowering, i, j}); }
  /// sign +1 reads raising(i, j), sign -1 reads lowering(i, j).
  const Operator& y(int i, int j, int sign) const;
  const Operator& chevalley_cartan(int i) const { return get({GeneratorRef::Kind::cartan, i, 0}); }

  /// H_{ij} = H_i + ... + H_{j-1} for i < j, H_{ji} = -H_{ij}, H_{ii} = 0.
  Operator cartan(int i, int j) const;
  /// q^(e * H_{ij}) from the diagonal of H_{ij}.
  Operator cartan_power(int i, int j, QExponent e) const;
  /// [H_{ij}]_q applied eigenvalue-wise.
  Operator cartan_qnumber(int i, int j) const;
  /// Diagonal entries of H_{ij}; each must be a rational constant.
  std::vector<QExponent> cartan_eigenvalues(int i, int j) const;

 private:
  void check_pair(int i, int j) const;

  int n_;
  Sector sector_;
  std::map<GeneratorRef, Operator> ops_;
};

/// H_i = N_i - N_{i+1}, Y_i^+ = a_i^+ a_{i+1}^-, Y_i^- = a_{i+1}^+ a_i^-.
GeneratorSet chevalley(const Sector& sector);

/// Y^{+-}_{ij} = a_i^+ a_j^- q^(-+ sum N_k) over k strictly between i and j.
GeneratorSet cartan_weyl(const Sector& sector);

/// Fills in the non-adjacent Y's from the Chevalley ones:
/// Y^+_{ij} = [Y^+_{i,j-1}, Y^+_{j-1,j}]_q and Y^-_{ji} = [Y^-_{j,j-1}, Y^-_{j-1,i}]_{q^-1}.
GeneratorSet complete_from_chevalley(GeneratorSet partial);

/// Diagonal q^(e (m_i - m_j)).
Operator cartan_power(int i, int j, QExponent e, const Sector& sector);

/// Y^{+-}_{ii} = -+ q^(-+1/2) / (q - q^-1).
LaurentFraction diagonal_y_constant(int sign, RootConfig root);

/// Upper (sign +1) or lower (sign -1) triangular matrix of regular functionals.
/// The Cartan shift H~_i is realized as N_i, which makes l^{+-}_{ii} = q^(-+N_i).
struct LFunctionals {
  int sign;
  int n;
  std::vector<Operator> entries;  // row-major n x n, 1-based accessors below

  const Operator& operator()(int i, int j) const { return entries.at((i - 1) * n + (j - 1)); }
};

LFunctionals l_functionals(const Sector& sector, int sign);

/// The bracketed R^+ matrix without its scalar prefactor: q on (ii,ii), 1 on (ij,ij)
/// for i != j, and q - q^-1 on (ij,ji) for i < j.
class RMatrix {
 public:
  RMatrix(int n, RootConfig root);

  int n() const { return n_; }
  /// R_{ij,kl}, 1-based.
  LaurentScalar operator()(int i, int j, int k, int l) const;
  std::size_t nonzeros() const { return entries_.size(); }
  const std::map<std::array<int, 4>, LaurentScalar>& entries() const { return entries_; }

 private:
  int n_;
  std::map<std::array<int, 4>, LaurentScalar> entries_;
};

RMatrix r_matrix(int n, RootConfig root);

/// X^- X^+ + [H/2]_q [H/2 + 1]_q for the su_q(2) pair on modes (mode, mode+1),
/// acting on any sector with at least mode+1 modes.
SparseOperator<LaurentFraction> casimir_of_pair(const Sector& sector, int mode = 1);

/// The su_q(2) Casimir on a 2-mode sector.
SparseOperator<LaurentFraction> casimir_su2(const Sector& sector);

/// (q^(N+1) + q^(-N-1) - q - q^-1) / (q - q^-1)^2 with N the total number.
SparseOperator<LaurentFraction> casimir_closed_form(const Sector& sector);

/// N recovered eigenvalue-wise from the Casimir of the pair (mode, mode+1):
/// the diagonal of N_mode + N_{mode+1}.
Operator number_from_casimir(const Sector& sector, int mode = 1);

/// N_i = N/n + (1/n) sum_{s=2}^n sum_{j<s} H_j - sum_{j<i} H_j, with N = level.
std::vector<Operator> number_from_cartan(const Sector& sector);

enum class RecurrenceReading {
  /// N^(r) is the total number of A_r (r+1 modes), built from r modes.
  shifted,
  /// N^(r) on r modes with the printed bounds; Chevalley H_p with p >= r is absent.
  literal,
};

struct RecurrenceResult {
  Operator total;     // N^(n) on the sector
  Operator residual;  // total - level * identity
};

/// Total-number operator from the su_q(2) Casimir base case and the recurrence.
RecurrenceResult total_number_recurrence(const Sector& sector,
                                         RecurrenceReading reading = RecurrenceReading::shifted);

}  // namespace qalg
