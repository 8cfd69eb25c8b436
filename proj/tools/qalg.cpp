// qalg: certify relation batteries, export embedded generator bundles, merge reports.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qalg/certify.hpp"
#include "qalg/embedding.hpp"
#include "qalg/report.hpp"

namespace {

using namespace qalg;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_config = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t dimension_cap() {
  if (const char* env = std::getenv("QALG_DIM_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("QALG_DIM_CAP must be a positive integer, got '") + env + "'");
  }
  return 2000;
}

void check_dimension(int modes, int level) {
  const std::size_t cap = dimension_cap();
  const std::size_t dim = fock_dimension(modes, level);
  if (dim > cap) {
    throw ConfigError("dimension cap: " + std::to_string(modes) + " modes at level " + std::to_string(level) +
                      " give " + std::to_string(dim) + " states, above the cap of " + std::to_string(cap) +
                      " (set QALG_DIM_CAP to raise it)");
  }
}

RootConfig choose_root(std::optional<int> requested, int needed_multiple) {
  if (!requested) return RootConfig(needed_multiple);
  if (*requested < 2) throw ConfigError("--root must be at least 2");
  if (*requested % needed_multiple != 0) {
    throw ConfigError("insufficient root: D=" + std::to_string(*requested) + " is not a multiple of " +
                      std::to_string(needed_multiple));
  }
  return RootConfig(*requested);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------------------

struct CertifyOptions {
  std::optional<int> n;
  std::optional<int> k1;
  std::optional<int> k2;
  std::string embed;
  std::vector<int> levels;
  std::optional<int> root;
  std::vector<std::string> families;
  std::string out;
  std::string format = "json";
  bool no_timing = false;
};

const std::vector<std::string> rank_families = {"cartan-weyl", "rll", "oscillator", "hopf", "identities", "mutation"};
const std::vector<std::string> embed_families = {"prop1", "prop2", "embedding"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

int cmd_certify(CertifyOptions o) {
  if (!o.embed.empty()) {
    static const std::regex pattern(R"((\d+)x(\d+))");
    std::smatch m;
    if (!std::regex_match(o.embed, m, pattern)) throw ConfigError("--embed expects AxB, e.g. 3x2");
    if (o.k1 || o.k2) throw ConfigError("use either --embed or --k1/--k2");
    o.k1 = std::stoi(m[1]);
    o.k2 = std::stoi(m[2]);
  }
  const bool embedding = o.k1.has_value() || o.k2.has_value();
  if (embedding == o.n.has_value()) throw ConfigError("give exactly one of --n or --k1/--k2 (--embed)");
  if (embedding && !(o.k1 && o.k2)) throw ConfigError("--k1 and --k2 go together");
  if (o.levels.empty()) throw ConfigError("--levels must not be empty");
  for (int lv : o.levels) {
    if (lv < 0) throw ConfigError("levels must be non-negative");
  }
  if (o.format != "json" && o.format != "text") throw ConfigError("--format is json or text");

  const auto& known = embedding ? embed_families : rank_families;
  for (const auto& f : o.families) {
    if (!contains(known, f)) throw ConfigError("unknown family '" + f + "' for this mode");
  }

  RelationReport report;
  report.config.levels = {};
  std::vector<std::string> selected = o.families;

  if (embedding) {
    const int k1 = *o.k1, k2 = *o.k2;
    if (k1 < 1 || k2 < 1) throw ConfigError("k1 and k2 must be positive");
    const RootConfig root = choose_root(o.root, 2 * k1 * k2);
    if (selected.empty()) selected = {"prop1", "prop2", "embedding"};
    for (int lv : o.levels) {
      check_dimension(k1 * k2, lv);
      check_dimension(k1 * k2, lv + 1);
    }
    report.config = ReportConfig{"embedding", 0, k1, k2, {}, root.denominator(), selected};
    report.notes = standard_report_notes();
    for (int lv : o.levels) {
      if (contains(selected, "prop2")) {
        report.append(check_prop2(k1, k2, lv, root, contains(selected, "prop1")));
      } else if (contains(selected, "prop1")) {
        report.append(check_prop1(k1, k2, lv, root));
      }
      if (contains(selected, "embedding")) report.append(check_embedding(k1, k2, lv, root));
    }
  } else {
    const int n = *o.n;
    if (n < 2) throw ConfigError("--n must be at least 2");
    const RootConfig root = choose_root(o.root, 2);
    if (selected.empty()) {
      selected = {"cartan-weyl", "rll", "oscillator", "identities"};
      if (n <= 3) selected.insert(selected.begin() + 3, "hopf");
    }
    if (contains(selected, "hopf") && n > 3) throw ConfigError("the hopf family covers n <= 3");
    for (int lv : o.levels) {
      check_dimension(n, lv);
      check_dimension(n, lv + 1);
    }
    report.config = ReportConfig{"rank", n, 0, 0, {}, root.denominator(), selected};
    report.notes = standard_report_notes();
    for (int lv : o.levels) {
      if (contains(selected, "cartan-weyl")) report.append(check_cartan_weyl(n, lv, root));
      if (contains(selected, "rll")) report.append(check_rll(n, lv, root));
      if (contains(selected, "oscillator")) report.append(check_oscillator(n, lv, root));
      if (contains(selected, "hopf")) report.append(check_hopf(n, lv, root));
      if (contains(selected, "identities")) report.append(check_identities(n, lv, root));
      if (contains(selected, "mutation")) report.append(mutation_soundness(n, lv, root));
    }
  }

  const std::string text = o.format == "json" ? report_to_json(report, !o.no_timing).dump(2) + "\n"
                                              : render_text(report);
  write_output(text, o.out);
  if (!o.out.empty() && o.out != "-") {
    std::cerr << report.relations.size() << " checks, " << report.count(Status::fail) << " fail, "
              << report.count(Status::deviation) << " deviation -> " << o.out << "\n";
  }
  return report.passed() ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------------------

struct EmbedOptions {
  int k1 = 0;
  int k2 = 0;
  int level = 0;
  std::string route = "all";
  std::optional<int> root;
  std::string out;
};

int cmd_embed(const EmbedOptions& o) {
  if (o.k1 < 1 || o.k2 < 1) throw ConfigError("k1 and k2 must be positive");
  if (o.level < 0) throw ConfigError("--level must be non-negative");
  const bool weyl = o.route == "weyl" || o.route == "all";
  const RootConfig root = choose_root(o.root, weyl ? 2 * o.k1 * o.k2 : 2);
  check_dimension(o.k1 * o.k2, o.level);
  const Sector sector = Sector::make(o.k1 * o.k2, o.level, root);

  std::vector<EmbeddedSet> sets;
  if (o.route == "boson" || o.route == "all") sets.push_back(embed_boson_route(o.k1, o.k2, sector));
  if (o.route == "delta" || o.route == "all") sets.push_back(embed_delta_route(o.k1, o.k2, sector));
  if (weyl) sets.push_back(embed_weyl_route(o.k1, o.k2, sector));
  if (sets.empty()) throw ConfigError("--route is boson, delta, weyl or all");

  Json out = {{"k1", o.k1}, {"k2", o.k2}, {"level", o.level}, {"D", root.denominator()}};
  Json bundles = Json::array();
  for (const auto& s : sets) bundles.push_back(bundle_to_json(s));
  out["bundles"] = bundles;

  bool identical = true;
  Json diffs = Json::object();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    const auto names = route_differences(sets[0], sets[i]);
    if (!names.empty()) identical = false;
    diffs[sets[i].route + " vs " + sets[0].route] = names;
  }
  if (sets.size() < 2) {
    out["route_diff"] = "single route";
  } else if (identical) {
    out["route_diff"] = "identical";
  } else {
    out["route_diff"] = diffs;
  }
  write_output(out.dump(2) + "\n", o.out);
  return identical ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------------------

int cmd_report(const std::vector<std::string>& paths) {
  if (paths.empty()) throw ConfigError("report needs at least one JSON report");
  std::vector<RelationReport> reports;
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) throw ConfigError("cannot read " + p);
    try {
      reports.push_back(report_from_json(Json::parse(in)));
    } catch (const Json::exception& e) {
      throw ConfigError(p + ": " + e.what());
    } catch (const FormatError& e) {
      throw ConfigError(p + ": " + e.what());
    }
  }
  const std::string text = merged_summary(reports);
  std::cout << text;
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return ok ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of q-deformed algebra relations on q-boson Fock sectors"};
  app.require_subcommand(1);

  CertifyOptions certify;
  auto* c = app.add_subcommand("certify", "run relation batteries and write a report");
  c->add_option("--n", certify.n, "number of modes (rank n-1)");
  c->add_option("--k1", certify.k1, "first embedding factor");
  c->add_option("--k2", certify.k2, "second embedding factor");
  c->add_option("--embed", certify.embed, "embedding factors as AxB");
  c->add_option("--levels", certify.levels, "comma-separated total boson numbers")->delimiter(',')->required();
  c->add_option("--root", certify.root, "root denominator D (default 2, or 2*k1*k2)");
  c->add_option("--families", certify.families, "comma-separated families to run")->delimiter(',');
  c->add_option("--out", certify.out, "output path (default stdout)");
  c->add_option("--format", certify.format, "json or text");
  c->add_flag("--no-timing", certify.no_timing, "omit wall-clock timing from JSON");

  EmbedOptions embed;
  auto* e = app.add_subcommand("embed", "export embedded generator bundles");
  e->add_option("--k1", embed.k1)->required();
  e->add_option("--k2", embed.k2)->required();
  e->add_option("--level", embed.level)->required();
  e->add_option("--route", embed.route, "boson, delta, weyl or all");
  e->add_option("--root", embed.root, "root denominator D");
  e->add_option("--out", embed.out, "output path (default stdout)");

  std::vector<std::string> paths;
  auto* r = app.add_subcommand("report", "merge JSON reports into a status table");
  r->add_option("paths", paths, "report files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return exit_config;
  }

  try {
    if (c->parsed()) return cmd_certify(certify);
    if (e->parsed()) return cmd_embed(embed);
    if (r->parsed()) return cmd_report(paths);
  } catch (const ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_config;
  } catch (const DimensionCapError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_config;
  } catch (const RootError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_config;
  } catch (const IndexError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_config;
  }
  return exit_config;
}
