#include "qalg/certify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace qalg {

namespace expr {

namespace {
ExprPtr leaf(Expr::Kind kind, int a, int b, QExponent e = QExponent()) {
  return std::make_shared<const Expr>(Expr{kind, {a, b, 0, 0}, e, {}});
}
}  // namespace

ExprPtr yp(int a, int b) { return leaf(Expr::Kind::raising, a, b); }
ExprPtr ym(int a, int b) { return leaf(Expr::Kind::lowering, a, b); }
ExprPtr h(int a, int b) { return leaf(Expr::Kind::cartan, a, b); }
ExprPtr qh(int a, int b, QExponent e) { return leaf(Expr::Kind::cartan_power, a, b, e); }
ExprPtr qnum(int a, int b) { return leaf(Expr::Kind::cartan_qnumber, a, b); }
ExprPtr zero() { return std::make_shared<const Expr>(Expr{Expr::Kind::zero, {}, {}, {}}); }

ExprPtr mul(std::vector<ExprPtr> factors) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::product, {}, {}, std::move(factors)});
}

ExprPtr qcomm(ExprPtr x, ExprPtr y, QExponent e) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::qcommutator, {}, e, {std::move(x), std::move(y)}});
}

ExprPtr comm(ExprPtr x, ExprPtr y) { return qcomm(std::move(x), std::move(y), QExponent()); }

ExprPtr neg(ExprPtr x) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::negate, {}, {}, {std::move(x)}});
}

ExprPtr qdiff(ExprPtr x) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::qdiff, {}, {}, {std::move(x)}});
}

ExprPtr weight(int a, int b, int c, int d, ExprPtr x) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::weight, {a, b, c, d}, {}, {std::move(x)}});
}

}  // namespace expr

namespace {

int weight_value(const Expr& e, const IndexTuple& idx) {
  const int a = idx[e.slots[0]], b = idx[e.slots[1]], c = idx[e.slots[2]], d = idx[e.slots[3]];
  return (a == c) - (a == d) - (b == c) + (b == d);
}

}  // namespace

Operator evaluate(const Expr& e, const GeneratorSet& gens, const IndexTuple& idx) {
  const int a = idx.empty() ? 0 : idx[e.slots[0]];
  const int b = idx.size() < 2 ? 0 : idx[e.slots[1]];
  switch (e.kind) {
    case Expr::Kind::raising:
      return gens.raising(a, b);
    case Expr::Kind::lowering:
      return gens.lowering(a, b);
    case Expr::Kind::cartan:
      return gens.cartan(a, b);
    case Expr::Kind::cartan_power:
      return gens.cartan_power(a, b, e.exponent);
    case Expr::Kind::cartan_qnumber:
      return gens.cartan_qnumber(a, b);
    case Expr::Kind::zero:
      return Operator(gens.sector(), gens.sector());
    case Expr::Kind::product: {
      Operator out = Operator::identity(gens.sector());
      for (const auto& f : e.args) out = out * evaluate(*f, gens, idx);
      return out;
    }
    case Expr::Kind::qcommutator:
      return q_commutator(evaluate(*e.args[0], gens, idx), evaluate(*e.args[1], gens, idx), e.exponent);
    case Expr::Kind::negate:
      return -evaluate(*e.args[0], gens, idx);
    case Expr::Kind::qdiff:
      return scale(q_difference(gens.root()), evaluate(*e.args[0], gens, idx));
    case Expr::Kind::weight:
      return scale(LaurentScalar(weight_value(e, idx)), evaluate(*e.args[0], gens, idx));
  }
  throw Error("unknown expression kind");
}

std::string render(const Expr& e, const std::vector<std::string>& letters) {
  auto pair = [&] { return "(" + letters[e.slots[0]] + "," + letters[e.slots[1]] + ")"; };
  switch (e.kind) {
    case Expr::Kind::raising:
      return "Y+" + pair();
    case Expr::Kind::lowering:
      return "Y-" + pair();
    case Expr::Kind::cartan:
      return "H" + pair();
    case Expr::Kind::cartan_power:
      if (e.exponent == QExponent(1)) return "q^H" + pair();
      return "q^(" + e.exponent.to_string() + " H" + pair() + ")";
    case Expr::Kind::cartan_qnumber:
      return "[H" + pair() + "]_q";
    case Expr::Kind::zero:
      return "0";
    case Expr::Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? " " : "") + render(*e.args[i], letters);
      return out;
    }
    case Expr::Kind::qcommutator: {
      std::string out = "[" + render(*e.args[0], letters) + "," + render(*e.args[1], letters) + "]";
      if (e.exponent == QExponent(1)) return out + "_q";
      if (e.exponent == QExponent(-1)) return out + "_{q^-1}";
      if (!e.exponent.is_zero()) return out + "_{q^" + e.exponent.to_string() + "}";
      return out;
    }
    case Expr::Kind::negate:
      return "-" + render(*e.args[0], letters);
    case Expr::Kind::qdiff:
      return "(q-q^-1) " + render(*e.args[0], letters);
    case Expr::Kind::weight:
      return "(e_" + letters[e.slots[0]] + "-e_" + letters[e.slots[1]] + ",e_" + letters[e.slots[2]] +
             "-e_" + letters[e.slots[3]] + ") " + render(*e.args[0], letters);
  }
  return "?";
}

std::vector<GeneratorRef> references(const Expr& e, const IndexTuple& idx) {
  std::vector<GeneratorRef> out;
  auto add = [&](GeneratorRef r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  std::function<void(const Expr&)> walk = [&](const Expr& x) {
    switch (x.kind) {
      case Expr::Kind::raising:
        add({GeneratorRef::Kind::raising, idx[x.slots[0]], idx[x.slots[1]]});
        return;
      case Expr::Kind::lowering:
        add({GeneratorRef::Kind::lowering, idx[x.slots[0]], idx[x.slots[1]]});
        return;
      case Expr::Kind::cartan:
      case Expr::Kind::cartan_power:
      case Expr::Kind::cartan_qnumber: {
        const int lo = std::min(idx[x.slots[0]], idx[x.slots[1]]);
        const int hi = std::max(idx[x.slots[0]], idx[x.slots[1]]);
        for (int k = lo; k < hi; ++k) add({GeneratorRef::Kind::cartan, k, 0});
        return;
      }
      default:
        for (const auto& a : x.args) walk(*a);
    }
  };
  walk(e);
  return out;
}

std::string RelationSpec::expression() const {
  return render(*lhs, letters) + " = " + render(*rhs, letters);
}

std::vector<IndexTuple> RelationSpec::tuples(int n) const {
  std::vector<IndexTuple> out;
  const std::size_t arity = letters.size();
  IndexTuple t(arity, 1);
  if (n < 1) return out;
  while (true) {
    if (admissible(t)) out.push_back(t);
    std::size_t pos = arity;
    while (pos > 0 && t[pos - 1] == n) t[--pos] = 1;
    if (pos == 0) break;
    ++t[pos - 1];
  }
  return out;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return out;
}

const std::vector<RelationSpec>& cartan_weyl_relations() {
  using namespace expr;
  static const std::vector<RelationSpec> table = [] {
    const QExponent q1(1);
    const QExponent qm1(-1);
    auto c3 = [](int n) { return binomial(n, 3); };
    auto c4 = [](int n) { return binomial(n, 4); };
    auto lt = [](std::initializer_list<int> slots) {
      std::vector<int> s(slots);
      return [s](const IndexTuple& t) {
        for (std::size_t a = 0; a + 1 < s.size(); ++a) {
          if (!(t[s[a]] < t[s[a + 1]])) return false;
        }
        return true;
      };
    };
    const std::string raise = "cartan-weyl/borel-raising";
    const std::string lower = "cartan-weyl/borel-lowering";
    const std::string mixed = "cartan-weyl/mixed";
    std::vector<RelationSpec> t;

    // Raising Borel subalgebra.
    t.push_back({"raise.borel", raise, {"i", "k", "j"}, "i<k<j", lt({0, 1, 2}),
                 qcomm(yp(0, 1), yp(1, 2), q1), yp(0, 2), false, c3});
    t.push_back({"raise.qcomm-zero-left", raise, {"i", "j", "k"}, "i<j<k", lt({0, 1, 2}),
                 qcomm(yp(0, 2), yp(0, 1), q1), zero(), false, c3});
    t.push_back({"raise.qcomm-zero-right", raise, {"i", "k", "j"}, "i<k<j", lt({0, 1, 2}),
                 qcomm(yp(1, 2), yp(0, 2), q1), zero(), false, c3});
    t.push_back({"raise.commute-disjoint", raise, {"i", "j", "k", "m"}, "i<j<k<m", lt({0, 1, 2, 3}),
                 comm(yp(0, 1), yp(2, 3)), zero(), false, c4});
    t.push_back({"raise.commute-nested", raise, {"i", "k", "m", "j"}, "i<k<m<j", lt({0, 1, 2, 3}),
                 comm(yp(0, 3), yp(1, 2)), zero(), true, c4});
    t.push_back({"raise.crossing", raise, {"i", "k", "j", "m"}, "i<k<j<m", lt({0, 1, 2, 3}),
                 comm(yp(1, 3), yp(0, 2)), qdiff(mul({yp(1, 2), yp(0, 3)})), false, c4});
    t.push_back({"raise.weight", "cartan-weyl/weight", {"i", "k", "j", "s"}, "i!=k, j<s",
                 [](const IndexTuple& x) { return x[0] != x[1] && x[2] < x[3]; },
                 comm(h(0, 1), yp(2, 3)), weight(0, 1, 2, 3, yp(2, 3)), false,
                 [](int n) { return static_cast<std::size_t>(n * (n - 1)) * binomial(n, 2); }});

    // Lowering Borel subalgebra.
    t.push_back({"lower.borel", lower, {"i", "j", "k"}, "i>j>k", lt({2, 1, 0}),
                 qcomm(ym(0, 1), ym(1, 2), qm1), ym(0, 2), false, c3});
    t.push_back({"lower.qcomm-zero-left", lower, {"i", "k", "j"}, "i>k>j", lt({2, 1, 0}),
                 qcomm(ym(1, 2), ym(0, 2), qm1), zero(), false, c3});
    t.push_back({"lower.qcomm-zero-right", lower, {"i", "j", "k"}, "i>j>k", lt({2, 1, 0}),
                 qcomm(ym(0, 2), ym(0, 1), qm1), zero(), false, c3});
    t.push_back({"lower.commute-disjoint", lower, {"i", "j", "k", "m"}, "i>j>k>m", lt({3, 2, 1, 0}),
                 comm(ym(0, 1), ym(2, 3)), zero(), false, c4});
    t.push_back({"lower.commute-nested", lower, {"i", "k", "m", "j"}, "i>k>m>j", lt({3, 2, 1, 0}),
                 comm(ym(0, 3), ym(1, 2)), zero(), true, c4});
    t.push_back({"lower.crossing", lower, {"i", "k", "j", "m"}, "i>k>j>m", lt({3, 2, 1, 0}),
                 comm(ym(0, 2), ym(1, 3)), qdiff(mul({ym(1, 2), ym(0, 3)})), false, c4});
    t.push_back({"lower.weight", "cartan-weyl/weight", {"i", "k", "j", "s"}, "i!=k, j>s",
                 [](const IndexTuple& x) { return x[0] != x[1] && x[2] > x[3]; },
                 comm(h(0, 1), ym(2, 3)), weight(0, 1, 2, 3, ym(2, 3)), false,
                 [](int n) { return static_cast<std::size_t>(n * (n - 1)) * binomial(n, 2); }});

    t.push_back({"cartan.commute", "cartan-weyl/cartan", {"i", "j", "k", "m"}, "i!=j, k!=m",
                 [](const IndexTuple& x) { return x[0] != x[1] && x[2] != x[3]; },
                 comm(h(0, 1), h(2, 3)), zero(), false,
                 [](int n) { return static_cast<std::size_t>(n * (n - 1) * n * (n - 1)); }});

    // Mixed commutators.
    t.push_back({"mixed.cartan", mixed, {"i", "j"}, "i<j", lt({0, 1}), comm(yp(0, 1), ym(1, 0)),
                 qnum(0, 1), false, [](int n) { return binomial(n, 2); }});
    t.push_back({"mixed.crossing-lower-first", mixed, {"i", "j", "k", "m"}, "j>k>i>m",
                 lt({3, 0, 2, 1}), comm(ym(2, 3), yp(0, 1)),
                 qdiff(mul({yp(2, 1), ym(0, 3), qh(0, 2)})), false, c4});
    t.push_back({"mixed.crossing-raise-first", mixed, {"i", "j", "k", "m"}, "k>j>m>i",
                 lt({0, 3, 1, 2}), comm(yp(0, 1), ym(2, 3)),
                 qdiff(mul({ym(2, 1), yp(0, 3), qh(1, 3)})), false, c4});
    t.push_back({"mixed.shared-first", mixed, {"i", "j", "m"}, "j>i>m", lt({2, 0, 1}),
                 comm(yp(0, 1), ym(0, 2)), zero(), false, c3});
    t.push_back({"mixed.shared-second", mixed, {"i", "j", "k"}, "k>j>i", lt({0, 1, 2}),
                 comm(yp(0, 1), ym(2, 1)), zero(), false, c3});
    t.push_back({"mixed.end-to-start-a", mixed, {"i", "j", "k"}, "j>k>i", lt({0, 2, 1}),
                 comm(yp(0, 1), ym(2, 0)), neg(mul({yp(2, 1), qh(0, 2)})), false, c3});
    t.push_back({"mixed.end-to-start-b", mixed, {"i", "j", "k"}, "k>j>i", lt({0, 1, 2}),
                 comm(yp(0, 1), ym(2, 0)), neg(mul({qh(1, 0), ym(2, 1)})), false, c3});
    t.push_back({"mixed.chain-a", mixed, {"i", "j", "m"}, "j>i>m", lt({2, 0, 1}),
                 comm(yp(0, 1), ym(1, 2)), mul({ym(0, 2), qh(0, 1)}), false, c3});
    t.push_back({"mixed.chain-b", mixed, {"i", "j", "m"}, "j>m>i", lt({0, 2, 1}),
                 comm(yp(0, 1), ym(1, 2)), mul({qh(1, 2), yp(0, 2)}), false, c3});
    t.push_back({"mixed.commute", mixed, {"i", "j", "k", "m"},
                 "k>j>i>m; k>m>j>i; j>k>m>i; j>i>k>m",
                 [](const IndexTuple& x) {
                   const int i = x[0], j = x[1], k = x[2], m = x[3];
                   return (k > j && j > i && i > m) || (k > m && m > j && j > i) ||
                          (j > k && k > m && m > i) || (j > i && i > k && k > m);
                 },
                 comm(yp(0, 1), ym(2, 3)), zero(), true, [](int n) { return 4 * binomial(n, 4); }});
    return t;
  }();
  return table;
}

// ---------------------------------------------------------------------------

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::deviation:
      return "deviation";
  }
  return "?";
}

std::optional<Status> parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "deviation") return Status::deviation;
  return std::nullopt;
}

std::size_t RelationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(relations.begin(), relations.end(), [&](const auto& r) { return r.status == s; }));
}

void RelationReport::append(const RelationReport& other) {
  relations.insert(relations.end(), other.relations.begin(), other.relations.end());
  for (const auto& n : other.notes) {
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
  }
  for (int lv : other.config.levels) {
    if (std::find(config.levels.begin(), config.levels.end(), lv) == config.levels.end()) {
      config.levels.push_back(lv);
    }
  }
  wall_ms += other.wall_ms;
}

std::vector<std::string> standard_report_notes() {
  return {
      "identities are certified on exact matrices of the q-boson Fock realization, not in the "
      "abstract algebra",
      "all residuals are exact; pass means the residual is the zero operator",
      "families marked interpreted encode a typographically ambiguous line by the standard "
      "Cartan-Weyl pattern",
      "the component relations of the regular functionals are covered at the RLL level",
  };
}

std::string describe_entry(const Operator& residual) {
  std::optional<std::tuple<int, std::size_t, std::size_t>> best;
  residual.for_each([&](std::size_t i, std::size_t j, const LaurentScalar& v) {
    const int degree = v.max_exponent();
    if (!best || degree > std::get<0>(*best)) best = std::make_tuple(degree, i, j);
  });
  if (!best) return "zero";
  const auto [degree, i, j] = *best;
  return "(" + residual.codomain().state_label(i) + "," + residual.domain().state_label(j) +
         ") = " + to_string(residual.at(i, j));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string rank_config(int n, int m, RootConfig root) {
  return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",D=" + std::to_string(root.denominator());
}

std::string embed_config(int k1, int k2, int m, RootConfig root) {
  return "k1=" + std::to_string(k1) + ",k2=" + std::to_string(k2) + ",m=" + std::to_string(m) +
         ",D=" + std::to_string(root.denominator());
}

std::string tuple_label(const std::vector<std::string>& letters, const IndexTuple& t) {
  std::string out;
  for (std::size_t a = 0; a < t.size(); ++a) {
    out += (a ? "," : "") + letters[a] + "=" + std::to_string(t[a]);
  }
  return out;
}

// Accumulates instances of one check into a result row.
class RowBuilder {
 public:
  RowBuilder(std::string name, std::string anchor, std::string config, std::string expression, int level)
      : row_{std::move(name), std::move(anchor), std::move(config), std::move(expression), level} {}

  void instance(const std::string& label, const Operator& residual) {
    ++row_.indices_checked;
    if (residual.is_zero()) return;
    if (failures_++ == 0) row_.witness = label + ": " + describe_entry(residual);
  }
  void instance(const std::string& label, bool ok, const std::string& detail) {
    ++row_.indices_checked;
    if (ok) return;
    if (failures_++ == 0) row_.witness = label + ": " + detail;
  }

  void note(std::string text) { row_.note = std::move(text); }

  /// Failing instances become `on_failure` (fail or deviation).
  RelationResult finish(Status on_failure = Status::fail) {
    if (failures_ > 0) {
      row_.status = on_failure;
      const std::string tally = std::to_string(failures_) + " of " +
                                std::to_string(row_.indices_checked) + " instances nonzero";
      row_.note = row_.note.empty() ? tally : row_.note + "; " + tally;
    }
    return row_;
  }

  std::size_t failures() const { return failures_; }

 private:
  RelationResult row_;
  std::size_t failures_ = 0;
};

RelationReport make_report(std::string mode, int n, int k1, int k2, int m, RootConfig root,
                           std::vector<std::string> families) {
  RelationReport r;
  r.config = ReportConfig{std::move(mode), n, k1, k2, {m}, root.denominator(), std::move(families)};
  r.notes = standard_report_notes();
  return r;
}

RelationResult run_family(const RelationSpec& spec, const GeneratorSet& gens, const std::string& prefix,
                          const std::string& config, bool stop_at_first = false) {
  RowBuilder row(prefix + spec.name, spec.anchor, config, spec.expression() + "  (" + spec.condition + ")",
                 gens.sector().level());
  const auto tuples = spec.tuples(gens.n());
  for (const auto& t : tuples) {
    row.instance(tuple_label(spec.letters, t), evaluate(*spec.lhs, gens, t) - evaluate(*spec.rhs, gens, t));
    if (stop_at_first && row.failures() > 0) break;
  }
  std::string note = spec.interpreted ? "transcribed under interpretation" : "";
  if (tuples.empty()) {
    const std::string vacuous = "vacuous: no admissible index tuple at n=" + std::to_string(gens.n());
    note = note.empty() ? vacuous : note + "; " + vacuous;
  }
  const std::size_t expected = spec.expected_count(gens.n());
  if (!stop_at_first && tuples.size() != expected) {
    row.instance("coverage", false,
                 "enumerated " + std::to_string(tuples.size()) + " tuples, closed form " +
                     std::to_string(expected));
  }
  row.note(note);
  return row.finish();
}

}  // namespace

std::vector<RelationResult> run_relation_battery(const GeneratorSet& gens, const std::string& prefix,
                                                 const std::string& config) {
  std::vector<RelationResult> out;
  for (const auto& spec : cartan_weyl_relations()) out.push_back(run_family(spec, gens, prefix, config));
  return out;
}

RelationReport check_cartan_weyl(int n, int m, RootConfig root) {
  const auto start = Clock::now();
  RelationReport report = make_report("rank", n, 0, 0, m, root, {"cartan-weyl"});
  const Sector sector = Sector::make(n, m, root);
  report.relations = run_relation_battery(cartan_weyl(sector), "", rank_config(n, m, root));
  report.wall_ms = elapsed_ms(start);
  return report;
}

// ---------------------------------------------------------------------------

std::vector<RelationResult> run_rll(const LFunctionals& lp, const LFunctionals& lm, const std::string& config) {
  const int n = lp.n;
  const Space& space = lp(1, 1).domain();
  const RMatrix r = r_matrix(n, space.root());
  const int level = space.sector().level();

  std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, int>, LaurentScalar>>> by_row;
  std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, int>, LaurentScalar>>> by_col;
  for (const auto& [key, v] : r.entries()) {
    by_row[{key[0], key[1]}].push_back({{key[2], key[3]}, v});
    by_col[{key[2], key[3]}].push_back({{key[0], key[1]}, v});
  }

  struct Family {
    std::string name;
    const LFunctionals* a;
    const LFunctionals* b;
    std::string text;
  };
  const std::vector<Family> families = {
      {"rll.mixed", &lp, &lm, "R(ij,mp) l+(m,k) l-(p,l) = l-(j,p) l+(i,m) R(mp,kl)"},
      {"rll.raise", &lp, &lp, "R(ij,mp) l+(m,k) l+(p,l) = l+(j,p) l+(i,m) R(mp,kl)"},
      {"rll.lower", &lm, &lm, "R(ij,mp) l-(m,k) l-(p,l) = l-(j,p) l-(i,m) R(mp,kl)"},
  };
  std::vector<RelationResult> out;
  for (const auto& f : families) {
    RowBuilder row(f.name, "rll/regular-functionals", config, f.text + "  (summed over m,p)", level);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          for (int l = 1; l <= n; ++l) {
            Operator lhs(space, space);
            Operator rhs(space, space);
            for (const auto& [mp, v] : by_row[{i, j}]) lhs = lhs + scale(v, (*f.a)(mp.first, k) * (*f.b)(mp.second, l));
            for (const auto& [mp, v] : by_col[{k, l}]) rhs = rhs + scale(v, (*f.b)(j, mp.second) * (*f.a)(i, mp.first));
            row.instance("i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k) +
                             ",l=" + std::to_string(l),
                         lhs - rhs);
          }
        }
      }
    }
    out.push_back(row.finish());
  }
  return out;
}

RelationReport check_rll(int n, int m, RootConfig root) {
  const auto start = Clock::now();
  RelationReport report = make_report("rank", n, 0, 0, m, root, {"rll"});
  const Sector sector = Sector::make(n, m, root);
  report.relations = run_rll(l_functionals(sector, +1), l_functionals(sector, -1), rank_config(n, m, root));
  report.wall_ms = elapsed_ms(start);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<RelationResult> oscillator_rows(const Sector& s, const std::string& prefix, const std::string& config,
                                            const std::function<std::string(int)>& mode_label) {
  const int n = s.modes();
  const int m = s.level();
  const RootConfig root = s.root();
  const Sector up = s.shifted(+1);
  const Sector down = s.shifted(-1);
  const std::string anchor = "q-boson/oscillator";
  std::vector<RelationResult> out;

  for (int sign : {+1, -1}) {
    RowBuilder row(prefix + (sign > 0 ? "oscillator.qcomm+" : "oscillator.qcomm-"), anchor, config,
                   sign > 0 ? "a-(i) a+(i) - q^-1 a+(i) a-(i) = q^N(i)" : "a-(i) a+(i) - q a+(i) a-(i) = q^-N(i)", m);
    for (int i = 1; i <= n; ++i) {
      const Operator lhs = annihilation(i, up) * creation(i, s) -
                           scale(q_power(-sign, root), creation(i, down) * annihilation(i, s));
      row.instance("i=" + mode_label(i), lhs - number_power(i, QExponent(sign), s));
    }
    out.push_back(row.finish());
  }

  RowBuilder number(prefix + "oscillator.number", anchor, config, "[N(i), a+-(j)] = +-delta(i,j) a+-(j)", m);
  for (int sign : {+1, -1}) {
    const Sector& target = sign > 0 ? up : down;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const Operator a = sign > 0 ? creation(j, s) : annihilation(j, s);
        Operator res = number_operator(i, target) * a - a * number_operator(i, s);
        if (i == j) res = res - scale(LaurentScalar(sign), a);
        number.instance(std::string(sign > 0 ? "+" : "-") + " i=" + mode_label(i) + ",j=" + mode_label(j), res);
      }
    }
  }
  out.push_back(number.finish());

  RowBuilder same(prefix + "oscillator.same-sign", anchor, config, "[a+-(i), a+-(j)] = 0", m);
  for (int sign : {+1, -1}) {
    const Sector& mid = sign > 0 ? up : down;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        auto op = [&](int k, const Sector& from) { return sign > 0 ? creation(k, from) : annihilation(k, from); };
        same.instance(std::string(sign > 0 ? "+" : "-") + " i=" + mode_label(i) + ",j=" + mode_label(j),
                      op(i, mid) * op(j, s) - op(j, mid) * op(i, s));
      }
    }
  }
  out.push_back(same.finish());

  RowBuilder mixed(prefix + "oscillator.mixed", anchor, config, "[a+(i), a-(j)] = 0 for i != j", m);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      mixed.instance("i=" + mode_label(i) + ",j=" + mode_label(j),
                     creation(i, down) * annihilation(j, s) - annihilation(j, up) * creation(i, s));
    }
  }
  out.push_back(mixed.finish());
  return out;
}

}  // namespace

RelationReport check_oscillator(int n, int m, RootConfig root) {
  const auto start = Clock::now();
  RelationReport report = make_report("rank", n, 0, 0, m, root, {"oscillator"});
  report.relations = oscillator_rows(Sector::make(n, m, root), "", rank_config(n, m, root),
                                     [](int i) { return std::to_string(i); });
  report.wall_ms = elapsed_ms(start);
  return report;
}

// ---------------------------------------------------------------------------

RelationReport check_hopf(int n, int m, RootConfig root) {
  const auto start = Clock::now();
  if (n < 2 || n > 3) throw IndexError("the Hopf battery covers n = 2 and n = 3");
  RelationReport report = make_report("rank", n, 0, 0, m, root, {"hopf"});
  const std::string config = rank_config(n, m, root);
  const Sector sector = Sector::make(n, m, root);

  std::vector<Atom> atoms;
  for (int i = 1; i < n; ++i) {
    atoms.push_back(YGen{i, i + 1, +1});
    atoms.push_back(YGen{i + 1, i, -1});
    atoms.push_back(CartanLinear{i, i + 1});
    atoms.push_back(CartanExp{i, i + 1, QExponent(1, 2)});
  }
  if (n == 3) {
    atoms.push_back(YGen{1, 3, +1});
    atoms.push_back(YGen{3, 1, -1});
    atoms.push_back(CartanLinear{1, 3});
  }

  RowBuilder coassoc("hopf.coassociativity", "hopf/coproduct", config,
                     "(Delta x id) Delta g = (id x Delta) Delta g on leg triples", m);
  const int small = std::min(m, 1);
  for (const Atom& g : atoms) {
    for (int a = 0; a <= small; ++a) {
      for (int b = 0; b <= small; ++b) {
        for (int c = 0; c <= small; ++c) {
          const std::array<Sector, 3> legs{Sector::make(n, a, root), Sector::make(n, b, root),
                                           Sector::make(n, c, root)};
          coassoc.instance(to_string(g) + " levels " + std::to_string(a) + std::to_string(b) + std::to_string(c),
                           coassociativity_residual(g, legs));
        }
      }
    }
  }
  report.relations.push_back(coassoc.finish());

  RowBuilder counit_row("hopf.counit", "hopf/counit", config, "(eps x id) Delta g = g = (id x eps) Delta g", m);
  for (const Atom& g : atoms) {
    const auto r = counit_residual(g, sector);
    counit_row.instance(to_string(g) + " left", r.left);
    counit_row.instance(to_string(g) + " right", r.right);
  }
  report.relations.push_back(counit_row.finish());

  for (auto convention : {AntipodeConvention::axiom_consistent, AntipodeConvention::printed}) {
    const bool printed = convention == AntipodeConvention::printed;
    RowBuilder row(printed ? "hopf.antipode[printed]" : "hopf.antipode", "hopf/antipode", config,
                   printed ? "m (id x S) Delta g = eps(g) with leading term -q^(-+1) Y"
                           : "m (id x S) Delta g = eps(g) = m (S x id) Delta g",
                   m);
    for (const Atom& g : atoms) {
      const auto r = antipode_axiom_residual(g, sector, convention);
      row.instance(to_string(g) + " (id x S)", r.left);
      row.instance(to_string(g) + " (S x id)", r.right);
    }
    if (printed) row.note("leading coefficient as printed; the recurrence sum is shared with the certified form");
    report.relations.push_back(row.finish(printed ? Status::deviation : Status::fail));
  }

  const int pair_max = std::min(m, 2);
  RowBuilder grouplike("hopf.grouplike", "hopf/coproduct", config, "Delta q^(eH) = q^(eH) x q^(eH)", m);
  for (int i = 1; i < n; ++i) {
    const FormalElement g = FormalElement::qh(i, i + 1, QExponent(1, 2));
    for (int a = 0; a <= pair_max; ++a) {
      for (int b = 0; b <= pair_max; ++b) {
        const Sector sa = Sector::make(n, a, root);
        const Sector sb = Sector::make(n, b, root);
        grouplike.instance("H(" + std::to_string(i) + ") levels " + std::to_string(a) + std::to_string(b),
                           homomorphism_residual(g, sa, sb) - tensor(evaluate(g, {sa}), evaluate(g, {sb})));
      }
    }
  }
  report.relations.push_back(grouplike.finish());

  // Relations of the algebra, cleared of denominators, whose Delta-images must vanish.
  std::vector<std::pair<std::string, FormalElement>> relations;
  for (int i = 1; i < n; ++i) {
    const FormalElement yp = FormalElement::y(i, i + 1, +1);
    const FormalElement ym = FormalElement::y(i + 1, i, -1);
    const FormalElement cartan = q_difference(root) * (yp * ym - ym * yp) -
                                 FormalElement::qh(i, i + 1, 1) + FormalElement::qh(i, i + 1, -1);
    relations.emplace_back("(q-q^-1)[Y+,Y-] = q^H - q^-H at " + std::to_string(i), cartan);
    const FormalElement h = FormalElement::h(i, i + 1);
    relations.emplace_back("[H,Y+] = 2Y+ at " + std::to_string(i), h * yp - yp * h - LaurentScalar(2) * yp);
  }
  if (n == 3) {
    const FormalElement y12 = FormalElement::y(1, 2, +1), y23 = FormalElement::y(2, 3, +1);
    const FormalElement y13 = FormalElement::y(1, 3, +1);
    const FormalElement y21 = FormalElement::y(2, 1, -1), y32 = FormalElement::y(3, 2, -1);
    const FormalElement y31 = FormalElement::y(3, 1, -1);
    relations.emplace_back("[Y+(1,2),Y+(2,3)]_q = Y+(1,3)", q_commutator(y12, y23, 1, root) - y13);
    relations.emplace_back("[Y-(3,2),Y-(2,1)]_{q^-1} = Y-(3,1)", q_commutator(y32, y21, -1, root) - y31);
    relations.emplace_back("[Y+(1,3),Y+(1,2)]_q = 0", q_commutator(y13, y12, 1, root));
    relations.emplace_back("[Y+(1,2),Y-(3,2)] = 0", y12 * y32 - y32 * y12);
  }
  RowBuilder hom("hopf.homomorphism", "hopf/coproduct", config, "Delta(L - R) = 0 for algebra relations", m);
  for (const auto& [label, rel] : relations) {
    const FormalElement image = coproduct(rel, root);
    Evaluator ev;
    for (int a = 0; a <= pair_max; ++a) {
      for (int b = 0; b <= pair_max; ++b) {
        hom.instance(label + " levels " + std::to_string(a) + std::to_string(b),
                     ev.evaluate(image, {Sector::make(n, a, root), Sector::make(n, b, root)}));
      }
    }
  }
  report.relations.push_back(hom.finish());

  report.wall_ms = elapsed_ms(start);
  return report;
}

// ---------------------------------------------------------------------------

RelationReport check_identities(int n, int m, RootConfig root) {
  const auto start = Clock::now();
  RelationReport report = make_report("rank", n, 0, 0, m, root, {"identities"});
  const std::string config = rank_config(n, m, root);
  const Sector sector = Sector::make(n, m, root);

  RowBuilder numbers("identity.number-from-cartan", "q-boson/number-from-cartan", config,
                     "N(i) = N/n + (1/n) sum_s sum_{j<s} H(j) - sum_{j<i} H(j)", m);
  const auto rebuilt = number_from_cartan(sector);
  for (int i = 1; i <= n; ++i) {
    numbers.instance("i=" + std::to_string(i), rebuilt[i - 1] - number_operator(i, sector));
  }
  report.relations.push_back(numbers.finish());

  {
    const Sector pair = Sector::make(2, m, root);
    RowBuilder cas("identity.casimir-su2", "su2/casimir", rank_config(2, m, root),
                   "Y-Y+ + [H/2]_q [H/2+1]_q = (q^(N+1) + q^(-N-1) - q - q^-1)/(q-q^-1)^2", m);
    const auto diff = casimir_su2(pair) - casimir_closed_form(pair);
    cas.instance("2 modes", diff.is_zero(), diff.is_zero() ? "" : "Casimir differs from closed form");
    report.relations.push_back(cas.finish());
  }

  if (n >= 2) {
    const auto shifted = total_number_recurrence(sector, RecurrenceReading::shifted);
    RowBuilder rec("identity.total-number-recurrence", "su2/total-number-recurrence", config,
                   "N(r) = r/(r-1) {N(r-1) + (1/r) sum_t sum_{p<t} H(p) - sum_{p<r} H(p)}, base from the Casimir", m);
    rec.instance("n=" + std::to_string(n), shifted.residual);
    rec.note("index read as the rank of the algebra whose total number is built");
    report.relations.push_back(rec.finish());

    const auto literal = total_number_recurrence(sector, RecurrenceReading::literal);
    RowBuilder lit("identity.total-number-recurrence[literal]", "su2/total-number-recurrence", config,
                   "printed index bounds with the index read as the mode count", m);
    lit.instance("n=" + std::to_string(n), literal.residual);
    report.relations.push_back(lit.finish(Status::deviation));
  }

  const auto lp = l_functionals(sector, +1);
  const auto lm = l_functionals(sector, -1);
  RowBuilder diag("identity.diagonal-functionals", "rll/regular-functionals", config,
                  "prod_i l+-(i,i) q^(+-N) = 1", m);
  RowBuilder verbatim("identity.diagonal-functionals[verbatim]", "rll/regular-functionals", config,
                      "prod_i l+-(i,i) = 1", m);
  for (const auto* l : {&lp, &lm}) {
    Operator prod = Operator::identity(sector);
    for (int i = 1; i <= n; ++i) prod = prod * (*l)(i, i);
    const Operator id = Operator::identity(sector);
    const std::string label = l->sign > 0 ? "+" : "-";
    verbatim.instance(label, prod - id);
    diag.instance(label, scale(q_power(QExponent(l->sign * m), root), prod) - id);
  }
  verbatim.note("with the Cartan shift realized as N(i) the product is q^(-+N)");
  report.relations.push_back(diag.finish());
  report.relations.push_back(verbatim.finish(Status::deviation));

  report.wall_ms = elapsed_ms(start);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
std::optional<std::string> find_killing_perturbation(const Space& space, F&& try_entry) {
  for (std::size_t r = 0; r < space.dim(); ++r) {
    for (std::size_t c = 0; c < space.dim(); ++c) {
      if (auto caught = try_entry(r, c)) return caught;
    }
  }
  return std::nullopt;
}

}  // namespace

RelationReport mutation_soundness(int n, int m, RootConfig root) {
  const auto start = Clock::now();
  RelationReport report = make_report("rank", n, 0, 0, m, root, {"mutation"});
  const std::string config = rank_config(n, m, root);
  const Sector sector = Sector::make(n, m, root);
  const GeneratorSet gens = cartan_weyl(sector);
  const Space space(sector);

  for (const auto& spec : cartan_weyl_relations()) {
    RowBuilder row("mutation." + spec.name, spec.anchor, config, "single-entry perturbation must be detected", m);
    const auto tuples = spec.tuples(n);
    if (tuples.empty()) {
      row.instance("coverage", false, "no admissible tuples at n=" + std::to_string(n));
      report.relations.push_back(row.finish());
      continue;
    }
    if (run_family(spec, gens, "", config).status != Status::pass) {
      row.instance("baseline", false, "family fails before mutation");
      report.relations.push_back(row.finish());
      continue;
    }
    std::vector<GeneratorRef> refs;
    for (const auto& t : tuples) {
      for (const auto& g : references(*spec.lhs, t)) {
        if (std::find(refs.begin(), refs.end(), g) == refs.end()) refs.push_back(g);
      }
      for (const auto& g : references(*spec.rhs, t)) {
        if (std::find(refs.begin(), refs.end(), g) == refs.end()) refs.push_back(g);
      }
    }
    std::optional<std::string> caught;
    for (const auto& ref : refs) {
      caught = find_killing_perturbation(space, [&](std::size_t r, std::size_t c) -> std::optional<std::string> {
        GeneratorSet mutated = gens;
        Operator op = gens.get(ref);
        op.add_to(r, c, LaurentScalar(1));
        mutated.set(ref, op);
        const auto result = run_family(spec, mutated, "", config, true);
        if (result.status == Status::pass) return std::nullopt;
        return ref.label() + " entry (" + space.state_label(r) + "," + space.state_label(c) +
               ") + 1 caught at " + result.witness.substr(0, result.witness.find(':'));
      });
      if (caught) break;
    }
    row.instance("perturbation", caught.has_value(), "no single-entry perturbation was detected");
    if (caught) row.note(*caught);
    report.relations.push_back(row.finish());
  }

  const auto lp = l_functionals(sector, +1);
  const auto lm = l_functionals(sector, -1);
  const std::vector<std::pair<std::string, int>> rll_families = {{"rll.mixed", 0}, {"rll.raise", 1}, {"rll.lower", 2}};
  for (const auto& [name, which] : rll_families) {
    RowBuilder row("mutation." + name, "rll/regular-functionals", config, "single-entry perturbation must be detected", m);
    std::optional<std::string> caught;
    const LFunctionals& target = which == 2 ? lm : lp;
    for (int i = 1; i <= n && !caught; ++i) {
      for (int j = 1; j <= n && !caught; ++j) {
        caught = find_killing_perturbation(space, [&](std::size_t r, std::size_t c) -> std::optional<std::string> {
          LFunctionals mutated = target;
          mutated.entries[(i - 1) * n + (j - 1)].add_to(r, c, LaurentScalar(1));
          const auto rows = which == 2 ? run_rll(lp, mutated, config) : run_rll(mutated, lm, config);
          if (rows[which].status == Status::pass) return std::nullopt;
          return std::string(target.sign > 0 ? "l+" : "l-") + "(" + std::to_string(i) + "," + std::to_string(j) +
                 ") entry (" + space.state_label(r) + "," + space.state_label(c) + ") + 1 caught";
        });
      }
    }
    row.instance("perturbation", caught.has_value(), "no single-entry perturbation was detected");
    if (caught) row.note(*caught);
    report.relations.push_back(row.finish());
  }

  report.wall_ms = elapsed_ms(start);
  return report;
}

// ---------------------------------------------------------------------------

RelationReport check_prop1(int k1, int k2, int m, RootConfig root) {
  const auto start = Clock::now();
  RelationReport report = make_report("embedding", 0, k1, k2, m, root, {"prop1"});
  const std::string config = embed_config(k1, k2, m, root);
  const Sector sector = Sector::make(k1 * k2, m, root);
  const EmbeddedSet set = embed_boson_route(k1, k2, sector);

  const std::vector<std::pair<std::string, const std::vector<Operator>*>> xs = {
      {"X+", &set.x_raise}, {"X-", &set.x_lower}, {"HX", &set.h_mu}};
  const std::vector<std::pair<std::string, const std::vector<Operator>*>> zs = {
      {"Z+", &set.z_raise}, {"Z-", &set.z_lower}, {"HZ", &set.h_s}};
  for (const auto& [xn, xops] : xs) {
    for (const auto& [zn, zops] : zs) {
      RowBuilder row("prop1.[" + xn + "," + zn + "]", "embedding/commuting-families", config,
                     "[" + xn + "(mu), " + zn + "(s)] = 0", m);
      for (std::size_t mu = 0; mu < xops->size(); ++mu) {
        for (std::size_t s = 0; s < zops->size(); ++s) {
          row.instance("mu=" + std::to_string(mu + 1) + ",s=" + std::to_string(s + 1),
                       commutator((*xops)[mu], (*zops)[s]));
        }
      }
      report.relations.push_back(row.finish());
    }
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

RelationReport check_prop2(int k1, int k2, int m, RootConfig root, bool include_prop1) {
  const auto start = Clock::now();
  RelationReport report = make_report("embedding", 0, k1, k2, m, root, {"prop2"});
  const std::string config = embed_config(k1, k2, m, root);
  const Sector sector = Sector::make(k1 * k2, m, root);
  const auto [xset, zset] = embedded_generator_sets(embed_boson_route(k1, k2, sector));
  for (auto& row : run_relation_battery(xset, "prop2.X.", config)) report.relations.push_back(std::move(row));
  for (auto& row : run_relation_battery(zset, "prop2.Z.", config)) report.relations.push_back(std::move(row));
  report.notes.push_back("non-adjacent embedded generators are synthesized from the Chevalley ones by the first Borel relation");
  if (include_prop1) report.append(check_prop1(k1, k2, m, root));
  report.wall_ms = elapsed_ms(start);
  return report;
}

RelationReport check_embedding(int k1, int k2, int m, RootConfig root) {
  const auto start = Clock::now();
  RelationReport report = make_report("embedding", 0, k1, k2, m, root, {"routes", "classical", "oscillator"});
  const std::string config = embed_config(k1, k2, m, root);
  const Sector sector = Sector::make(k1 * k2, m, root);
  const EmbeddedSet boson = embed_boson_route(k1, k2, sector);

  auto compare = [&](const std::string& name, const std::string& text, const EmbeddedSet& other,
                     Status on_failure, const std::string& note) {
    RowBuilder row(name, "embedding/routes", config, text, m);
    const auto nb = boson.named();
    const auto no = other.named();
    for (std::size_t i = 0; i < nb.size(); ++i) row.instance(nb[i].first, *no[i].second - *nb[i].second);
    if (!note.empty()) row.note(note);
    report.relations.push_back(row.finish(on_failure));
  };
  compare("route.delta=boson", "iterated coproduct, relabeled = boson realization", embed_delta_route(k1, k2, sector),
          Status::fail, "");
  compare("route.weyl=boson", "Cartan-Weyl realization with Lambda = +-(A - B) = boson realization",
          embed_weyl_route(k1, k2, sector), Status::fail, "");
  compare("route.weyl-number-operator", "Lambda with N as the total-number diagonal = boson realization",
          embed_weyl_route(k1, k2, sector, LambdaConvention::corrected, true), Status::fail, "");
  compare("route.weyl[printed-lambda]", "Cartan-Weyl realization with Lambda = A +- B = boson realization",
          embed_weyl_route(k1, k2, sector, LambdaConvention::printed), Status::deviation,
          "Lambda as printed");

  const ClassicalEmbeddedSet display = classical_display(k1, k2, sector);
  auto classical_compare = [&](const std::string& name, const ClassicalEmbeddedSet& limit) {
    RowBuilder row(name, "embedding/classical-limit", config, "evaluation at q = 1 = plain sums of classical hops", m);
    const auto a = limit.named();
    const auto b = display.named();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto diff = *a[i].second - *b[i].second;
      row.instance(a[i].first, diff.is_zero(), diff.is_zero() ? "" : "classical entries differ");
    }
    report.relations.push_back(row.finish());
  };
  classical_compare("classical.boson-limit=display", classical_limit(boson));
  classical_compare("classical.weyl-limit=display", classical_limit(embed_weyl_route(k1, k2, sector)));

  RowBuilder classical("classical.commutators", "embedding/classical-limit", config,
                       "[X+,X-] = HX, [Z+,Z-] = HZ, [X,Z] = 0 over the rationals", m);
  for (std::size_t mu = 0; mu < display.x_raise.size(); ++mu) {
    const auto d = commutator(display.x_raise[mu], display.x_lower[mu]) - display.h_mu[mu];
    classical.instance("X mu=" + std::to_string(mu + 1), d.is_zero(), "nonzero");
  }
  for (std::size_t s = 0; s < display.z_raise.size(); ++s) {
    const auto d = commutator(display.z_raise[s], display.z_lower[s]) - display.h_s[s];
    classical.instance("Z s=" + std::to_string(s + 1), d.is_zero(), "nonzero");
  }
  for (const auto* x : {&display.x_raise, &display.x_lower}) {
    for (const auto* z : {&display.z_raise, &display.z_lower}) {
      for (std::size_t mu = 0; mu < x->size(); ++mu) {
        for (std::size_t s = 0; s < z->size(); ++s) {
          classical.instance("[X,Z] mu=" + std::to_string(mu + 1) + ",s=" + std::to_string(s + 1),
                             commutator((*x)[mu], (*z)[s]).is_zero(), "nonzero");
        }
      }
    }
  }
  report.relations.push_back(classical.finish());

  const IndexMap grid(k1, k2);
  for (auto& row : oscillator_rows(sector, "grid.", config, [&](int i) {
         const auto [mu, s] = grid.to_grid(i);
         return "(" + std::to_string(mu) + "," + std::to_string(s) + ")";
       })) {
    report.relations.push_back(std::move(row));
  }

  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace qalg
