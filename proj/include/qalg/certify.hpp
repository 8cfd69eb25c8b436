// Relation tables as data, exact residual evaluation, and structured reports.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qalg/embedding.hpp"
#include "qalg/generators.hpp"
#include "qalg/hopf.hpp"

namespace qalg {

// ---------------------------------------------------------------------------
// Expression trees over generator names. Leaves refer to index slots of the
// relation's tuple, so one tree serves every admissible index choice.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    raising,         // Y+(a,b)
    lowering,        // Y-(a,b)
    cartan,          // H(a,b)
    cartan_power,    // qH(a,b;e)
    cartan_qnumber,  // [H(a,b)]_q
    zero,
    product,         // args left to right
    qcommutator,     // [x,y]_{q^e}; e = 0 is the plain commutator
    negate,
    qdiff,           // (q - q^-1) x
    weight,          // (e_a - e_b, e_c - e_d) x
  };
  Kind kind;
  std::array<int, 4> slots{};
  QExponent exponent;
  std::vector<ExprPtr> args;
};

namespace expr {
ExprPtr yp(int a, int b);
ExprPtr ym(int a, int b);
ExprPtr h(int a, int b);
ExprPtr qh(int a, int b, QExponent e = QExponent(1));
ExprPtr qnum(int a, int b);
ExprPtr zero();
ExprPtr mul(std::vector<ExprPtr> factors);
ExprPtr qcomm(ExprPtr x, ExprPtr y, QExponent e);
ExprPtr comm(ExprPtr x, ExprPtr y);
ExprPtr neg(ExprPtr x);
ExprPtr qdiff(ExprPtr x);
ExprPtr weight(int a, int b, int c, int d, ExprPtr x);
}  // namespace expr

using IndexTuple = std::vector<int>;

Operator evaluate(const Expr& e, const GeneratorSet& gens, const IndexTuple& idx);
/// Text with slot letters, e.g. "[Y+(i,k),Y+(k,j)]_q".
std::string render(const Expr& e, const std::vector<std::string>& letters);
/// Stored generators a tree touches for a concrete tuple.
std::vector<GeneratorRef> references(const Expr& e, const IndexTuple& idx);

struct RelationSpec {
  std::string name;
  std::string anchor;
  std::vector<std::string> letters;  // slot names; arity = letters.size()
  std::string condition;             // e.g. "i<k<j"
  std::function<bool(const IndexTuple&)> admissible;
  ExprPtr lhs;
  ExprPtr rhs;
  bool interpreted = false;
  std::function<std::size_t(int)> expected_count;

  std::string expression() const;
  /// All admissible tuples over 1..n in lexicographic order.
  std::vector<IndexTuple> tuples(int n) const;
};

/// The Cartan-Weyl relation table: 7 raising Borel, 7 lowering Borel, 1 Cartan,
/// 10 mixed-commutator families.
const std::vector<RelationSpec>& cartan_weyl_relations();

std::size_t binomial(int n, int k);

// ---------------------------------------------------------------------------

enum class Status { pass, fail, deviation };
std::string to_string(Status s);
std::optional<Status> parse_status(const std::string& s);

struct RelationResult {
  std::string name;
  std::string anchor;
  std::string config;      // e.g. "n=3,m=2,D=2"
  std::string expression;  // rendered relation or check description
  int level = 0;
  std::size_t indices_checked = 0;
  Status status = Status::pass;
  std::string witness;  // first failing instance, empty on pass
  std::string note;
};

struct ReportConfig {
  std::string mode;  // "rank" or "embedding"
  int n = 0;
  int k1 = 0;
  int k2 = 0;
  std::vector<int> levels;
  int root = 2;
  std::vector<std::string> families;
};

struct RelationReport {
  ReportConfig config;
  std::vector<std::string> notes;
  std::vector<RelationResult> relations;
  double wall_ms = 0;

  std::size_t count(Status s) const;
  /// Deviations are reported findings, not failures.
  bool passed() const { return count(Status::fail) == 0; }
  void append(const RelationReport& other);
};

/// Header notes every report carries.
std::vector<std::string> standard_report_notes();

/// First nonzero entry of maximal t-degree, as "(row,col) = value".
std::string describe_entry(const Operator& residual);

// ---------------------------------------------------------------------------
// Batteries. Each works on one level; the CLI merges levels.

/// Every Cartan-Weyl family on a (possibly synthesized) generator set.
std::vector<RelationResult> run_relation_battery(const GeneratorSet& gens, const std::string& prefix,
                                                 const std::string& config);

RelationReport check_cartan_weyl(int n, int m, RootConfig root = RootConfig());

/// The three RLL families ("rll.mixed", "rll.raise", "rll.lower") componentwise.
std::vector<RelationResult> run_rll(const LFunctionals& lp, const LFunctionals& lm,
                                    const std::string& config);
RelationReport check_rll(int n, int m, RootConfig root = RootConfig());

/// q-boson oscillator relations on the level-m sector.
RelationReport check_oscillator(int n, int m, RootConfig root = RootConfig());

/// Coassociativity, counit, antipode (both conventions), group-likeness, and the
/// homomorphism property of Delta, for n <= 3. Uses legs of level <= min(m, 1) for
/// coassociativity and level <= min(m, 2) for the homomorphism pairs.
RelationReport check_hopf(int n, int m, RootConfig root = RootConfig());

/// N_i reconstruction, su_q(2) Casimir, total-number recurrence (both readings),
/// diagonal regular functionals.
RelationReport check_identities(int n, int m, RootConfig root = RootConfig());

/// Every relation family must be flipped to fail by some single-entry perturbation.
RelationReport mutation_soundness(int n, int m, RootConfig root = RootConfig());

RelationReport check_prop1(int k1, int k2, int m, RootConfig root);
RelationReport check_prop2(int k1, int k2, int m, RootConfig root, bool include_prop1 = true);
/// Route agreement, Lambda conventions, classical limit, grid bosons.
RelationReport check_embedding(int k1, int k2, int m, RootConfig root);

}  // namespace qalg
