#include "lockit/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lockit/catalog.hpp"
#include "lockit/report.hpp"
#include "lockit/spec_io.hpp"

namespace lockit {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  bool json = false;
  bool strict = false;
  std::string file;
  std::string locality;
  std::vector<std::string> normals;
  std::string suite = "all";
  bool suite_given = false;
  std::size_t max_word_len = 6;
  std::string example;
  Limits limits;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Limits limits_from_env() {
  Limits limits;
  if (const char* v = std::getenv("LOCKIT_MAX_ORDER"); v && *v) {
    const std::string_view s(v);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || value == 0)
      throw InputError("LOCKIT_MAX_ORDER must be a positive integer, got '" + std::string(s) + "'");
    limits.max_group_order = value;
  }
  return limits;
}

struct Loaded {
  std::string text;
  SpecDocument doc;
  Workspace ws;
};

Loaded load(const Settings& s) {
  Loaded l;
  l.text = read_file(s.file);
  try {
    l.doc = parse_spec(l.text);
  } catch (const ParseError& e) {
    throw InputError(s.file + ": " + e.what());
  }
  l.ws = build_workspace(l.doc, s.limits);
  return l;
}

const BuiltLocality& pick_locality(const Loaded& l, const Settings& s) {
  if (!s.locality.empty()) return l.ws.locality(s.locality);
  if (l.ws.localities.size() == 1) return l.ws.localities.front();
  throw InputError(l.ws.localities.empty() ? "the file defines no locality"
                                           : "the file defines several localities; pass --locality");
}

ElementSet resolve_normal(const BuiltLocality& built, const std::string& arg) {
  for (const auto& [name, members] : built.normals)
    if (name == arg) return members;
  return normal_closure(*built.locality, resolve_elements(*built.locality, arg));
}

Json cmd_validate(const Loaded& l, const Settings& s, bool& strict_violation) {
  Json results = Json::array();
  for (const auto& built : l.ws.localities) {
    if (!s.locality.empty() && built.name != s.locality) continue;
    const Locality& loc = *built.locality;
    Json notes = Json::array();
    if (loc.auto_closed()) {
      notes.push_back("delta was not closed under conjugation into S and overgroups; closed automatically to " +
                      std::to_string(loc.delta().size()) + " subgroups");
      strict_violation = true;
    }
    results.push_back({{"summary", locality_summary(loc)},
                       {"validation", to_json(validate_locality(loc))},
                       {"notes", notes}});
  }
  if (!s.locality.empty() && results.empty()) l.ws.locality(s.locality);
  return results;
}

Json cmd_check(const Loaded& l, const Settings& s) {
  SuiteOptions opts;
  opts.max_word_len = s.max_word_len;
  opts.limits = s.limits;
  Json results = Json::array();
  if (!s.suite_given && s.locality.empty() && !l.doc.directives.empty()) {
    for (const auto& d : l.doc.directives)
      results.push_back(run_suite(*l.ws.locality(d.locality).locality, parse_suite(d.suite), opts));
    return results;
  }
  const Suite suite = parse_suite(s.suite);
  for (const auto& built : l.ws.localities)
    if (s.locality.empty() || built.name == s.locality) results.push_back(run_suite(*built.locality, suite, opts));
  if (!s.locality.empty() && results.empty()) l.ws.locality(s.locality);
  return results;
}

Json cmd_products(const Loaded& l, const Settings& s) {
  const BuiltLocality& built = pick_locality(l, s);
  std::vector<ElementSet> list;
  if (s.normals.empty()) {
    list = enumerate_partial_normals(*built.locality).normals;
  } else {
    for (const auto& n : s.normals) list.push_back(resolve_normal(built, n));
  }
  std::vector<std::pair<ElementSet, ElementSet>> pairs;
  for (const auto& m : list)
    for (const auto& n : list) pairs.emplace_back(m, n);
  return {{"locality", built.name}, {"pairs", products_report(*built.locality, pairs)}};
}

void emit(const Json& report, const Settings& s, std::ostream& out) {
  if (s.json)
    out << report.dump(2) << "\n";
  else
    out << render_text(report);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite partial groups and localities: construction and verification", "lockit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  Settings s;
  app.add_flag("--json", s.json, "Emit the report as JSON");
  app.add_flag("--strict", s.strict, "Treat an automatically closed Δ as a failure");

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", s.file, "Spec file")->required(); };
  auto locality_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--locality", s.locality, "Locality name");
    if (required) o->required();
  };

  auto* validate = app.add_subcommand("validate", "Parse a spec file and validate its localities");
  file_arg(validate);
  locality_opt(validate, false);
  auto* omega = app.add_subcommand("omega", "The poset Ω of a locality");
  file_arg(omega);
  locality_opt(omega, false);
  auto* fusion = app.add_subcommand("fusion", "The fusion system of a locality");
  file_arg(fusion);
  locality_opt(fusion, false);
  auto* normals = app.add_subcommand("normals", "Partial normal subgroups of a locality");
  file_arg(normals);
  locality_opt(normals, false);
  auto* quotient_cmd = app.add_subcommand("quotient", "The quotient locality L/N");
  file_arg(quotient_cmd);
  locality_opt(quotient_cmd, false);
  quotient_cmd->add_option("--normal", s.normals, "A named normal subgroup, or elements whose normal closure is N")
      ->required()
      ->expected(1);
  auto* products = app.add_subcommand("products", "Products MN of partial normal subgroups");
  file_arg(products);
  locality_opt(products, false);
  products->add_option("--normal", s.normals, "Named normal subgroups or element lists; all pairs are formed");
  auto* check = app.add_subcommand("check", "Run a verification suite");
  file_arg(check);
  locality_opt(check, false);
  check->add_option("--suite", s.suite, "Suite to run")->check(CLI::IsMember(kSuiteNames));
  check->add_option("--max-word-len", s.max_word_len, "Word length bound for the axiom checks")
      ->check(CLI::Range(1, 12));
  auto* catalog = app.add_subcommand("catalog", "Build a catalog example and run the full suite");
  catalog->add_option("name", s.example, "Example name")->required()->check(CLI::IsMember(catalog_names()));
  catalog->add_option("--max-word-len", s.max_word_len, "Word length bound for the axiom checks")
      ->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  s.suite_given = check->count("--suite") > 0;

  try {
    s.limits = limits_from_env();
    Json report;
    bool strict_violation = false;
    if (catalog->parsed()) {
      const CatalogEntry entry = catalog_entry(s.example);
      SuiteOptions opts;
      opts.max_word_len = s.max_word_len;
      opts.limits = s.limits;
      report = make_report("catalog", entry.text.empty() ? entry.name : entry.text, run_catalog(s.example, opts));
    } else {
      const Loaded l = load(s);
      if (validate->parsed()) {
        report = make_report("validate", l.text, cmd_validate(l, s, strict_violation));
      } else if (omega->parsed()) {
        const auto& b = pick_locality(l, s);
        report = make_report("omega", l.text, {{"locality", b.name}, {"omega", omega_report(*b.locality, compute_omega(*b.locality))}});
      } else if (fusion->parsed()) {
        const auto& b = pick_locality(l, s);
        const Locality& loc = *b.locality;
        report = make_report("fusion", l.text,
                             {{"locality", b.name}, {"fusion", fusion_report(loc, compute_omega(loc), compute_fusion(loc))}});
      } else if (normals->parsed()) {
        const auto& b = pick_locality(l, s);
        report = make_report("normals", l.text,
                             {{"locality", b.name}, {"normals", normals_report(*b.locality, enumerate_partial_normals(*b.locality))}});
      } else if (quotient_cmd->parsed()) {
        const auto& b = pick_locality(l, s);
        SuiteOptions opts;
        opts.max_word_len = s.max_word_len;
        opts.limits = s.limits;
        const ElementSet n = resolve_normal(b, s.normals.front());
        report = make_report("quotient", l.text, {{"locality", b.name}, {"quotient", quotient_report(*b.locality, n, opts)}});
      } else if (products->parsed()) {
        report = make_report("products", l.text, cmd_products(l, s));
      } else if (check->parsed()) {
        report = make_report("check", l.text, cmd_check(l, s));
      }
    }
    emit(report, s, out);
    if (!report["passed"].get<bool>()) return kExitVerificationFailure;
    if (strict_violation) {
      if (s.strict) {
        err << "lockit: delta is not closed (--strict)\n";
        return kExitVerificationFailure;
      }
      err << "lockit: note: delta was closed automatically\n";
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "lockit: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "lockit: " << to_string(e.kind()) << " error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::invalid_input:
      case ErrorKind::resource:
      case ErrorKind::parse: return kExitInputError;
      case ErrorKind::domain:
      case ErrorKind::internal: return kExitVerificationFailure;
    }
    return kExitVerificationFailure;
  }
}

}  // namespace lockit
