#include "lockit/catalog.hpp"

#include <algorithm>

#include "lockit/catalog_data.hpp"
#include "lockit/invariants.hpp"
#include "lockit/partial_group.hpp"

namespace lockit {

namespace {

struct NamedExample {
  const char* name;
  const char* file;
  const char* locality;
};

constexpr NamedExample kExamples[] = {
    {"free1", "", ""},
    {"delta-s", "delta_s.loc", ""},
    {"o4plus2", "o4plus2.loc", ""},
    {"gl32-small", "gl3_2.loc", "gl32-small"},
    {"gl32-full", "gl3_2.loc", "gl32-full"},
    {"dihedral-demo", "dihedral_demo.loc", ""},
};

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kExamples) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

const std::vector<std::pair<std::string, std::string>>& catalog_files() {
  static const std::vector<std::pair<std::string, std::string>> files(std::begin(detail::kCatalogFiles),
                                                                      std::end(detail::kCatalogFiles));
  return files;
}

CatalogEntry catalog_entry(std::string_view name) {
  for (const auto& e : kExamples) {
    if (name != e.name) continue;
    CatalogEntry out{e.name, e.file, "", e.locality};
    if (!out.file.empty()) {
      const auto& files = catalog_files();
      const auto it = std::find_if(files.begin(), files.end(), [&](const auto& f) { return f.first == out.file; });
      LOCKIT_ENSURE(it != files.end(), "catalog file is embedded");
      out.text = it->second;
    }
    return out;
  }
  fail(ErrorKind::invalid_input, "unknown catalog example '" + std::string(name) + "'");
}

std::vector<BuiltLocality> catalog_localities(std::string_view name, const Limits& limits) {
  const CatalogEntry entry = catalog_entry(name);
  if (entry.file.empty()) return {};
  Workspace ws = build_workspace(parse_spec(entry.text), limits);
  if (entry.locality.empty()) return ws.localities;
  return {ws.locality(entry.locality)};
}

Json run_catalog(std::string_view name, const SuiteOptions& options) {
  const CatalogEntry entry = catalog_entry(name);
  Json out = {{"example", entry.name}};
  if (entry.file.empty()) {
    const FreeOneGenerator free1;
    AxiomOptions ax;
    ax.max_len = std::max<std::size_t>(8, options.max_word_len);
    Json sections = Json::array();
    Json axioms = {{"check", "axioms"}};
    axioms.update(to_json(check_axioms(free1, ax)));
    Json conj = {{"check", "conjugation-laws"}};
    conj.update(to_json(check_conjugation_laws(free1)));
    sections.push_back(std::move(axioms));
    sections.push_back(std::move(conj));
    out["elements"] = {free1.label(0), free1.label(1), free1.label(2)};
    out["sections"] = std::move(sections);
  } else {
    out["file"] = entry.file;
    Json locs = Json::array();
    for (const auto& built : catalog_localities(name, options.limits)) {
      Json named = Json::array();
      for (const auto& [nname, members] : built.normals) named.push_back({{"name", nname}, {"members", to_json(members)}});
      locs.push_back({{"summary", locality_summary(*built.locality)},
                      {"named_normals", named},
                      {"suite", run_suite(*built.locality, Suite::all, options)}});
    }
    out["localities"] = std::move(locs);
  }
  out["passed"] = all_passed(out);
  return out;
}

}  // namespace lockit
