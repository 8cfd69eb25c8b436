#include "qalg/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

namespace qalg {

Json space_to_json(const Space& space) {
  Json legs = Json::array();
  for (const auto& s : space.legs()) legs.push_back({{"modes", s.modes()}, {"level", s.level()}});
  return {{"D", space.root().denominator()}, {"legs", legs}};
}

Space space_from_json(const Json& j) {
  try {
    const RootConfig root(j.at("D").get<int>());
    std::vector<Sector> legs;
    for (const auto& leg : j.at("legs")) {
      const int modes = leg.at("modes").get<int>();
      const int level = leg.at("level").get<int>();
      legs.push_back(level < 0 ? Sector::empty(modes, root) : Sector::make(modes, level, root));
    }
    if (legs.empty()) throw FormatError("space without legs");
    return Space(std::move(legs));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed space: ") + e.what());
  }
}

Json operator_to_json(const Operator& op) {
  Json entries = Json::array();
  op.for_each([&](std::size_t i, std::size_t j, const LaurentScalar& v) {
    entries.push_back(Json::array({i, j, to_string(v)}));
  });
  return {{"domain", space_to_json(op.domain())},
          {"codomain", space_to_json(op.codomain())},
          {"entries", entries}};
}

Operator operator_from_json(const Json& j) {
  try {
    const Space domain = space_from_json(j.at("domain"));
    const Space codomain = space_from_json(j.at("codomain"));
    Operator out(domain, codomain);
    for (const auto& e : j.at("entries")) {
      const auto row = e.at(0).get<std::size_t>();
      const auto col = e.at(1).get<std::size_t>();
      if (row >= codomain.dim() || col >= domain.dim()) throw FormatError("entry index out of range");
      out.add_to(row, col, parse_scalar(e.at(2).get<std::string>(), domain.root()));
    }
    return out;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed operator: ") + e.what());
  }
}

Json bundle_to_json(const GeneratorSet& gens) {
  Json ops = Json::object();
  for (const auto& ref : gens.members()) ops[ref.label()] = operator_to_json(gens.get(ref));
  return {{"kind", "generators"},
          {"n", gens.n()},
          {"level", gens.sector().level()},
          {"D", gens.root().denominator()},
          {"operators", ops}};
}

Json bundle_to_json(const EmbeddedSet& set) {
  Json ops = Json::object();
  for (const auto& [name, op] : set.named()) ops[name] = operator_to_json(*op);
  return {{"kind", "embedding"},
          {"route", set.route},
          {"k1", set.k1},
          {"k2", set.k2},
          {"level", set.sector.level()},
          {"D", set.sector.root().denominator()},
          {"operators", ops}};
}

// ---------------------------------------------------------------------------

Json report_to_json(const RelationReport& report, bool timing) {
  const auto& c = report.config;
  Json config = {{"mode", c.mode}};
  if (c.mode == "embedding") {
    config["k1"] = c.k1;
    config["k2"] = c.k2;
  } else {
    config["n"] = c.n;
  }
  config["levels"] = c.levels;
  config["D"] = c.root;
  config["families"] = c.families;

  Json relations = Json::array();
  for (const auto& r : report.relations) {
    Json row = {{"name", r.name},
                {"anchor", r.anchor},
                {"config", r.config},
                {"expression", r.expression},
                {"level", r.level},
                {"indices_checked", r.indices_checked},
                {"status", to_string(r.status)}};
    if (!r.witness.empty()) row["witness"] = r.witness;
    if (!r.note.empty()) row["note"] = r.note;
    relations.push_back(std::move(row));
  }

  Json out = {{"config", config}, {"notes", report.notes}, {"relations", relations}};
  out["summary"] = {{"total", report.relations.size()},
                    {"pass", report.count(Status::pass)},
                    {"fail", report.count(Status::fail)},
                    {"deviation", report.count(Status::deviation)},
                    {"status", report.passed() ? "pass" : "fail"}};
  if (timing) out["timing"] = {{"wall_ms", std::round(report.wall_ms * 1000.0) / 1000.0}};
  return out;
}

RelationReport report_from_json(const Json& j) {
  try {
    RelationReport out;
    const Json& c = j.at("config");
    out.config.mode = c.at("mode").get<std::string>();
    out.config.n = c.value("n", 0);
    out.config.k1 = c.value("k1", 0);
    out.config.k2 = c.value("k2", 0);
    out.config.levels = c.at("levels").get<std::vector<int>>();
    out.config.root = c.at("D").get<int>();
    out.config.families = c.value("families", std::vector<std::string>{});
    out.notes = j.value("notes", std::vector<std::string>{});
    for (const auto& r : j.at("relations")) {
      RelationResult row;
      row.name = r.at("name").get<std::string>();
      row.anchor = r.value("anchor", "");
      row.config = r.value("config", "");
      row.expression = r.value("expression", "");
      row.level = r.value("level", 0);
      row.indices_checked = r.at("indices_checked").get<std::size_t>();
      const auto status = parse_status(r.at("status").get<std::string>());
      if (!status) throw FormatError("unknown status in relation " + row.name);
      row.status = *status;
      row.witness = r.value("witness", "");
      row.note = r.value("note", "");
      out.relations.push_back(std::move(row));
    }
    if (j.contains("timing")) out.wall_ms = j["timing"].value("wall_ms", 0.0);
    return out;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string upper(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::deviation:
      return "DEV";
  }
  return "?";
}

std::string config_title(const ReportConfig& c) {
  std::ostringstream os;
  if (c.mode == "embedding") {
    os << "embedding k1=" << c.k1 << " k2=" << c.k2;
  } else {
    os << "rank n=" << c.n;
  }
  os << " levels=";
  for (std::size_t i = 0; i < c.levels.size(); ++i) os << (i ? "," : "") << c.levels[i];
  os << " D=" << c.root;
  return os.str();
}

std::string excerpt(const std::string& s, std::size_t width = 100) {
  return s.size() <= width ? s : s.substr(0, width - 3) + "...";
}

}  // namespace

std::string render_text(const RelationReport& report) {
  std::ostringstream os;
  os << config_title(report.config) << "\n";
  for (const auto& n : report.notes) os << "  note: " << n << "\n";
  std::size_t name_w = 4, config_w = 6;
  for (const auto& r : report.relations) {
    name_w = std::max(name_w, r.name.size());
    config_w = std::max(config_w, r.config.size());
  }
  os << "\n";
  for (const auto& r : report.relations) {
    os << std::left << std::setw(5) << upper(r.status) << " " << std::setw(static_cast<int>(name_w)) << r.name
       << "  " << std::setw(static_cast<int>(config_w)) << r.config << "  " << std::right << std::setw(6)
       << r.indices_checked << "\n";
    if (r.status != Status::pass) {
      if (!r.witness.empty()) os << "      witness: " << r.witness << "\n";
      if (!r.note.empty()) os << "      note: " << r.note << "\n";
    }
  }
  os << "\n"
     << report.relations.size() << " checks: " << report.count(Status::pass) << " pass, "
     << report.count(Status::fail) << " fail, " << report.count(Status::deviation) << " deviation\n"
     << "overall: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string merged_summary(const std::vector<RelationReport>& reports) {
  std::vector<std::string> families;
  std::vector<std::string> configs;
  std::map<std::pair<std::string, std::string>, std::vector<const RelationResult*>> cells;
  for (const auto& rep : reports) {
    for (const auto& r : rep.relations) {
      if (std::find(families.begin(), families.end(), r.name) == families.end()) families.push_back(r.name);
      if (std::find(configs.begin(), configs.end(), r.config) == configs.end()) configs.push_back(r.config);
      cells[{r.name, r.config}].push_back(&r);
    }
  }

  auto cell = [&](const std::string& f, const std::string& c) -> std::string {
    auto it = cells.find({f, c});
    if (it == cells.end()) return "-";
    Status worst = Status::pass;
    for (const auto* r : it->second) {
      if (r->status == Status::fail) worst = Status::fail;
      else if (r->status == Status::deviation && worst == Status::pass) worst = Status::deviation;
    }
    return upper(worst);
  };

  std::size_t name_w = 8;
  for (const auto& f : families) name_w = std::max(name_w, f.size());
  std::vector<std::size_t> widths;
  for (const auto& c : configs) widths.push_back(std::max<std::size_t>(c.size(), 4));

  std::ostringstream os;
  auto emit = [&](const std::string& first, const std::function<std::string(std::size_t)>& column) {
    std::ostringstream line;
    line << std::left << std::setw(static_cast<int>(name_w)) << first;
    for (std::size_t i = 0; i < configs.size(); ++i) line << "  " << std::setw(static_cast<int>(widths[i])) << column(i);
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << "\n";
  };
  emit("relation", [&](std::size_t i) { return configs[i]; });
  for (const auto& f : families) emit(f, [&](std::size_t i) { return cell(f, configs[i]); });

  std::size_t fails = 0, deviations = 0, total = 0;
  std::vector<std::string> witnesses;
  for (const auto& rep : reports) {
    for (const auto& r : rep.relations) {
      ++total;
      if (r.status == Status::fail) {
        ++fails;
        witnesses.push_back(r.name + " [" + r.config + "] " + excerpt(r.witness));
      } else if (r.status == Status::deviation) {
        ++deviations;
      }
    }
  }
  os << "\n"
     << reports.size() << " reports, " << total << " checks, " << fails << " fail, " << deviations
     << " deviation\n";
  for (const auto& w : witnesses) os << "  " << w << "\n";
  os << "overall: " << (fails == 0 ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace qalg
