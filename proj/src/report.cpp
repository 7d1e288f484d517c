#include "lockit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "lockit/invariants.hpp"
#include "lockit/products.hpp"

#ifndef LOCKIT_VERSION
#define LOCKIT_VERSION "0.0.0"
#endif

namespace lockit {

const char* tool_version() { return LOCKIT_VERSION; }

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::axioms, Suite::frattini, Suite::splitting, Suite::cosets, Suite::quotient, Suite::products,
                  Suite::sylow, Suite::all})
    if (name == to_string(s)) return s;
  fail(ErrorKind::invalid_input, "unknown suite '" + std::string(name) + "'");
}

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::axioms: return "axioms";
    case Suite::frattini: return "frattini";
    case Suite::splitting: return "splitting";
    case Suite::cosets: return "cosets";
    case Suite::quotient: return "quotient";
    case Suite::products: return "products";
    case Suite::sylow: return "sylow";
    case Suite::all: return "all";
  }
  return "?";
}

Json to_json(const ElementSet& x) {
  Json out = Json::array();
  for (Element e : x) out.push_back(e);
  return out;
}

Json mask_json(const Locality& loc, Mask m) { return to_json(loc.to_set(m)); }

namespace {

Json findings_json(const std::vector<Finding>& findings) {
  Json out = Json::array();
  for (const auto& f : findings) out.push_back({{"rule", f.rule}, {"detail", f.detail}});
  return out;
}

Json word_json(const Word& w) {
  Json out = Json::array();
  for (Element e : w) out.push_back(e);
  return out;
}

}  // namespace

Json to_json(const CheckReport& r) {
  return {{"checked", r.checked}, {"failures", r.failures}, {"findings", findings_json(r.findings)},
          {"passed", r.passed()}};
}

Json to_json(const AxiomReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"rule", v.rule}, {"word", word_json(v.word)}, {"detail", v.detail}});
  return {{"method", r.method},
          {"max_len", r.max_len},
          {"covered_len", r.covered_len},
          {"checked", r.checked},
          {"violation_count", r.violation_count},
          {"violations", violations},
          {"passed", r.passed() && r.complete()}};
}

Json to_json(const ValidationReport& r) {
  return {{"chain_words_checked", r.chain_words_checked},
          {"findings", findings_json(r.findings)},
          {"passed", r.passed()}};
}

Json locality_summary(const Locality& loc) {
  const OmegaPoset omega = compute_omega(loc);
  bool is_group = true;
  for (Mask m : omega.members) is_group = is_group && loc.in_delta(m);
  Json rejected = nullptr;
  for (Element x = 0; x < loc.size() && rejected.is_null(); ++x)
    for (Element y = 0; y < loc.size(); ++y)
      if (loc.mul(x, y) == kUndefined) {
        rejected = {x, y};
        break;
      }
  Json delta = Json::array();
  for (Mask d : loc.delta()) delta.push_back(mask_json(loc, d));
  Json labels = Json::array();
  for (Element x = 0; x < loc.size(); ++x) labels.push_back(loc.label(x));
  return {{"name", loc.name()},
          {"kind", loc.kind()},
          {"prime", loc.prime()},
          {"group_order", loc.ambient().order()},
          {"carrier_size", loc.size()},
          {"s_order", loc.s_order()},
          {"s", to_json(loc.s_set())},
          {"delta_mode", to_string(loc.delta_mode())},
          {"auto_closed", loc.auto_closed()},
          {"delta_size", loc.delta().size()},
          {"delta", delta},
          {"is_group", is_group},
          {"rejected_pair", rejected},
          {"elements", labels}};
}

Json omega_report(const Locality& loc, const OmegaPoset& omega) {
  Json members = Json::array();
  for (std::size_t i = 0; i < omega.members.size(); ++i)
    members.push_back({{"subgroup", mask_json(loc, omega.members[i])},
                       {"dim", omega.dims[i]},
                       {"witness", word_json(omega.witnesses[i])}});
  return {{"size", omega.members.size()},
          {"dimension", omega.dimension()},
          {"o_p", mask_json(loc, o_p(loc, omega))},
          {"members", members}};
}

Json fusion_report(const Locality& loc, const OmegaPoset& omega, const FusionData& fusion) {
  Json classes = Json::array();
  std::vector<bool> seen(loc.s_subgroups().size(), false);
  for (std::size_t i = 0; i < loc.s_subgroups().size(); ++i) {
    if (seen[i]) continue;
    const Mask x = loc.s_subgroups()[i];
    std::vector<Mask> cls = f_conjugates(loc, fusion, x);
    std::sort(cls.begin(), cls.end(),
              [&](Mask a, Mask b) { return loc.subgroup_index(a) < loc.subgroup_index(b); });
    Json members = Json::array();
    for (Mask c : cls) {
      seen[loc.subgroup_index(c)] = true;
      members.push_back({{"subgroup", mask_json(loc, c)},
                         {"in_delta", loc.in_delta(c)},
                         {"fully_normalized", is_fully_normalized(loc, omega, fusion, c)}});
    }
    classes.push_back({{"order", popcount(x)}, {"members", members}});
  }
  return {{"maps", fusion.maps.size()}, {"classes", classes}};
}

Json normals_report(const Locality& loc, const NormalEnumeration& normals) {
  Json list = Json::array();
  for (const auto& n : normals.normals)
    list.push_back({{"order", n.count()}, {"members", to_json(n)}, {"t", to_json(n & loc.s_set())}});
  return {{"complete", normals.complete}, {"classes", normals.classes}, {"count", normals.normals.size()},
          {"normals", list}};
}

Json quotient_report(const Locality& loc, const ElementSet& n, const SuiteOptions& options) {
  if (!is_partial_normal(loc, n)) fail(ErrorKind::invalid_input, "N is not a partial normal subgroup");
  const QuotientLocality q = quotient(loc, n);
  Json blocks = Json::array();
  for (std::size_t b = 0; b < q.cosets.blocks.size(); ++b)
    blocks.push_back({{"representative", q.cosets.representatives[b]}, {"members", to_json(q.cosets.blocks[b])}});
  AxiomOptions ax;
  ax.max_len = options.max_word_len;
  return {{"n", to_json(n)},
          {"t", to_json(n & loc.s_set())},
          {"up_maximal", to_json(q.up_max)},
          {"blocks", blocks},
          {"quotient", locality_summary(*q.locality)},
          {"checks",
           {{"quotient-properties", to_json(quotient_properties(loc, q))},
            {"projection", to_json(check_projection(q.projection(loc)))},
            {"validation", to_json(validate_locality(*q.locality))},
            {"axioms", to_json(check_axioms(*q.locality, ax))}}}};
}

Json products_report(const Locality& loc, const std::vector<std::pair<ElementSet, ElementSet>>& pairs) {
  Json out = Json::array();
  for (const auto& [m, n] : pairs) {
    const ElementSet mn = product_set(loc, m, n);
    out.push_back({{"m", to_json(m)},
                   {"n", to_json(n)},
                   {"mn", to_json(mn)},
                   {"s_mn", to_json(mn & loc.s_set())},
                   {"theorem", to_json(check_product_theorem(loc, m, n))},
                   {"lemmas", to_json(check_product_lemmas(loc, m, n))}});
  }
  return out;
}

namespace {

struct SuiteRun {
  SuiteRun(const Locality& l, const SuiteOptions& o) : loc(l), options(o) {}

  const Locality& loc;
  const SuiteOptions& options;
  Json sections = Json::array();
  std::optional<OmegaPoset> omega_;
  std::optional<FusionData> fusion_;
  std::optional<NormalEnumeration> normals_;

  const OmegaPoset& omega() {
    if (!omega_) omega_ = compute_omega(loc);
    return *omega_;
  }
  const FusionData& fusion() {
    if (!fusion_) fusion_ = compute_fusion(loc);
    return *fusion_;
  }
  const NormalEnumeration& normals() {
    if (!normals_) normals_ = enumerate_partial_normals(loc, 18, options.exec);
    return *normals_;
  }

  void add(std::string name, Json check) {
    Json entry = {{"check", std::move(name)}};
    entry.update(check);
    sections.push_back(std::move(entry));
  }
  void add(std::string name, const ElementSet& n, Json check) {
    Json entry = {{"check", std::move(name)}, {"normal", to_json(n)}};
    entry.update(check);
    sections.push_back(std::move(entry));
  }

  void axioms() {
    AxiomOptions ax;
    ax.max_len = options.max_word_len;
    add("validation", to_json(validate_locality(loc)));
    add("axioms", to_json(check_axioms(loc, ax)));
    add("conjugation-laws", to_json(check_conjugation_laws(loc)));
    add("objective-laws", to_json(check_objective_laws(loc)));
    add("domain-identities", to_json(check_domain_identities(loc, 2)));
    add("star-conjugation", to_json(check_star_conjugation(loc, omega(), 2)));
  }

  void sylow() {
    add("sylow", to_json(check_sylow(loc, options.limits)));
    add("omega", to_json(check_omega(loc, omega(), fusion())));
    add("normalized-objects", to_json(check_normalized_objects(loc, omega(), options.limits)));
    add("omega-laws", to_json(check_omega_laws(loc, omega(), fusion(), options.limits)));
    add("invariant-subsets", to_json(check_invariant_subsets(loc, omega())));
    std::vector<ElementSet> family = normals().normals;
    for (Mask d : loc.delta()) family.push_back(loc.normalizer(d));
    family.push_back(loc.s_set());
    add("dedekind", to_json(check_dedekind(loc, family)));
  }

  void per_normal(Suite suite) {
    for (const auto& n : normals().normals) {
      const ElementSet up_max = up_maximal_elements(loc, n, omega(), options.exec);
      if (suite == Suite::frattini || suite == Suite::all)
        add("frattini", n, to_json(check_frattini(loc, n, up_max, options.exec)));
      if (suite == Suite::splitting || suite == Suite::all)
        add("splitting", n, to_json(check_splitting(loc, n, up_max)));
      if (suite == Suite::cosets || suite == Suite::all) {
        const CosetPartition cosets = maximal_cosets(loc, n, up_max);
        add("cosets", n, to_json(check_cosets(loc, n, up_max, cosets)));
        add("normal-properties", n, to_json(check_normal_properties(loc, n, up_max, options.limits)));
        add("up-readings", n, to_json(check_up_readings(loc, n)));
        add("normal-laws", n, to_json(check_normal_laws(loc, n, up_max, cosets)));
      }
    }
  }

  void quotients() {
    AxiomOptions ax;
    ax.max_len = options.max_word_len;
    const auto& all = normals().normals;
    for (const auto& n : all) {
      const QuotientLocality q = quotient(loc, n);
      add("quotient-properties", n, to_json(quotient_properties(loc, q)));
      add("quotient-validation", n, to_json(validate_locality(*q.locality)));
      add("quotient-axioms", n, to_json(check_axioms(*q.locality, ax)));
      const FirstIsomorphism iso = first_isomorphism(loc, q.projection(loc), q);
      CheckReport first = iso.report;
      ++first.checked;
      if (!iso.isomorphism) first.fail("isomorphism", "L/N → L/N induced by ρ is not an isomorphism");
      add("first-isomorphism", n, to_json(first));
      add("correspondence", n, to_json(subgroup_correspondence(loc, q)));
      add("image-lemmas", n, to_json(check_image_lemmas(loc, q, all)));
      add("subgroup-images", n, to_json(check_subgroup_images(loc, q, options.limits)));
      add("ns-locality", n, to_json(check_ns_locality(loc, n)));
    }
    CheckReport third;
    for (const auto& n1 : all)
      for (const auto& n2 : all)
        if (n1.is_subset_of(n2)) third.merge(check_third_isomorphism(loc, n1, n2));
    add("third-isomorphism", to_json(third));
  }

  void products() {
    const auto& all = normals().normals;
    CheckReport theorem, lemmas, assoc;
    for (const auto& m : all)
      for (const auto& n : all) {
        theorem.merge(check_product_theorem(loc, m, n, options.exec));
        lemmas.merge(check_product_lemmas(loc, m, n));
        for (const auto& p : all) assoc.merge(check_product_associativity(loc, m, n, p));
      }
    add("product-theorem", to_json(theorem));
    add("product-lemmas", to_json(lemmas));
    add("product-associativity", to_json(assoc));
    CheckReport joins;
    for (const auto& m : all)
      for (const auto& n : all) joins.merge(check_join_family(loc, {m, n}, 3));
    joins.merge(check_join_family(loc, all, 3));
    add("join-family", to_json(joins));
  }
};

}  // namespace

Json run_suite(const Locality& loc, Suite suite, const SuiteOptions& options) {
  SuiteRun run(loc, options);
  if (suite == Suite::axioms || suite == Suite::all) run.axioms();
  if (suite == Suite::sylow || suite == Suite::all) run.sylow();
  if (suite == Suite::frattini || suite == Suite::splitting || suite == Suite::cosets || suite == Suite::all)
    run.per_normal(suite);
  if (suite == Suite::quotient || suite == Suite::all) run.quotients();
  if (suite == Suite::products || suite == Suite::all) run.products();
  Json out = {{"locality", loc.name()},
              {"suite", to_string(suite)},
              {"max_word_len", options.max_word_len}};
  if (run.normals_) out["normals_complete"] = run.normals_->complete;
  out["sections"] = std::move(run.sections);
  out["passed"] = all_passed(out["sections"]);
  return out;
}

bool all_passed(const Json& j) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "passed" && it.value().is_boolean() && !it.value().get<bool>()) return false;
      if (!all_passed(it.value())) return false;
    }
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (!all_passed(v)) return false;
  }
  return true;
}

Json make_report(std::string_view command, std::string_view input, Json results) {
  Json out = {{"schema", kReportSchema},
              {"tool", "lockit"},
              {"version", tool_version()},
              {"input_hash", "fnv1a64:" + fnv1a64_hex(input)},
              {"command", std::string(command)}};
  const bool passed = all_passed(results);
  out["results"] = std::move(results);
  out["passed"] = passed;
  return out;
}

namespace {

bool is_scalar_array(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
}

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_primitive() || (v.is_array() && is_scalar_array(v))) {
        out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else if (v.empty()) {
        out << pad << it.key() << ": " << v.dump() << "\n";
      } else {
        out << pad << it.key() << ":\n";
        render(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || (v.is_array() && is_scalar_array(v))) {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        out << pad << "-\n";
        render(out, v, indent + 2);
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(out, j, 0);
  return out.str();
}

}  // namespace lockit
