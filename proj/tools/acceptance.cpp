// Acceptance run: one line per criterion, with the time limits pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "golden_check.hpp"
#include "lockit/catalog.hpp"
#include "lockit/report.hpp"

using namespace lockit;

namespace {

constexpr double kOneObjectSeconds = 1.0;  // per locality
constexpr double kAllObjectsSeconds = 5.0;
constexpr double kCarrierSeconds = 30.0;
constexpr double kAxiomsSeconds = 60.0;
constexpr double kObjectiveSuiteSeconds = 300.0;
constexpr std::size_t kAxiomLen = 6;
constexpr std::size_t kFreeAxiomLen = 8;
constexpr std::size_t kJoinLen = 3;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> locality_examples() {
  std::vector<std::string> out;
  for (const auto& n : catalog_names())
    if (n != "free1") out.push_back(n);
  return out;
}

ElementSet ambient_set(const Locality& l) {
  ElementSet out(l.ambient().order());
  for (Element x = 0; x < l.size(); ++x) out.insert(l.rep(x));
  return out;
}

Subgroup ambient_subgroup(const FiniteGroup& g, const std::string& gens) {
  ElementSet seed(g.order());
  for (const auto& p : parse_permutation_list(gens, g.degree())) seed.insert(*g.find(p));
  return subgroup_closure(g, seed);
}

ElementSet ambient_products(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out(g.order());
  for (Element x : a)
    for (Element y : b) out.insert(g.mul(x, y));
  return out;
}

bool axioms_pass(const Locality& l, std::size_t len) {
  AxiomOptions opt;
  opt.max_len = len;
  auto r = check_axioms(l, opt);
  return r.passed() && r.complete();
}

Outcome one_object() {
  Outcome o{true, ""};
  double worst = 0;
  for (const auto& b : catalog_localities("delta-s")) {
    const auto t0 = std::chrono::steady_clock::now();
    // Rebuilt inside the timer from the shipped text.
    auto ws = build_workspace(parse_spec(catalog_entry("delta-s").text));
    const auto& l = *ws.locality(b.name).locality;
    const auto& g = l.ambient();
    ElementSet s(g.order());
    for (Element x : l.s_set()) s.insert(l.rep(x));
    const bool carrier = ambient_set(l) == normalizer(g, Subgroup{s}).members;
    const bool axioms = axioms_pass(l, kAxiomLen);
    const double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    o.passed = o.passed && carrier && axioms && secs < kOneObjectSeconds && l.delta().size() == 1;
    o.detail += b.name + ": |L|=" + std::to_string(l.size()) + (carrier ? "=|N_G(S)|" : "≠|N_G(S)|") +
                (axioms ? " axioms ok; " : " axioms FAIL; ");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max %.3fs < %.0fs", worst, kOneObjectSeconds);
  o.detail += buf;
  return o;
}

Outcome all_objects() {
  const auto t0 = std::chrono::steady_clock::now();
  auto ws = build_workspace(parse_spec(catalog_entry("o4plus2").text));
  const auto& l = *ws.locality("o4plus2").locality;
  std::string witness;
  for (Element x = 0; x < l.size() && witness.empty(); ++x)
    for (Element y = 0; y < l.size() && witness.empty(); ++y)
      if (!l.in_domain(Word{x, y})) witness = "(" + l.label(x) + ", " + l.label(y) + ")";
  const double secs = seconds_since(t0);
  const bool carrier = l.size() == l.ambient().order() && l.size() == 72;
  char buf[160];
  std::snprintf(buf, sizeof buf, "|L|=%zu=|G|, rejected pair %s, %.3fs < %.0fs", l.size(), witness.c_str(), secs,
                kAllObjectsSeconds);
  return {carrier && !witness.empty() && secs < kAllObjectsSeconds, buf};
}

Outcome carriers() {
  const auto t0 = std::chrono::steady_clock::now();
  auto ws = build_workspace(parse_spec(catalog_entry("gl32-small").text));
  const auto& small = *ws.locality("gl32-small").locality;
  const auto& full = *ws.locality("gl32-full").locality;
  const auto& g = small.ambient();
  const auto m1 = normalizer(g, ambient_subgroup(g, "(4 5)(6 7), (4 6)(5 7)")).members;
  const auto m2 = normalizer(g, ambient_subgroup(g, "(4 5)(6 7), (2 3)(6 7)")).members;
  const bool small_ok = small.size() == 40 && ambient_set(small) == (m1 | m2);
  const auto m1m2 = ambient_products(g, m1, m2) | ambient_products(g, m2, m1);
  const bool full_ok = full.size() == 104 && ambient_set(full) == m1m2;
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "Δ={S,P1,P2}: |L|=%zu=|M1∪M2|; all nonidentity: |L|=%zu=|M1M2∪M2M1|; %.3fs < %.0fs",
                small.size(), full.size(), secs, kCarrierSeconds);
  return {small_ok && full_ok && secs < kCarrierSeconds, buf};
}

Outcome axioms_everywhere() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::size_t count = 0;
  for (const auto& ex : locality_examples())
    for (const auto& b : catalog_localities(ex)) {
      ok = ok && axioms_pass(*b.locality, kAxiomLen);
      ++count;
    }
  AxiomOptions opt;
  opt.max_len = kFreeAxiomLen;
  auto free = check_axioms(FreeOneGenerator{}, opt);
  ok = ok && free.passed() && free.complete();
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu localities at length %zu, free1 at length %zu; %.3fs < %.0fs", count, kAxiomLen,
                kFreeAxiomLen, secs, kAxiomsSeconds);
  return {ok && secs < kAxiomsSeconds, buf};
}

Outcome suites(const std::vector<Suite>& which, double limit) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteOptions opt;
  opt.max_word_len = kAxiomLen;
  bool ok = true;
  std::size_t sections = 0;
  std::string failed;
  for (const auto& ex : locality_examples())
    for (const auto& b : catalog_localities(ex))
      for (Suite s : which) {
        auto j = run_suite(*b.locality, s, opt);
        sections += j["sections"].size();
        if (!all_passed(j)) {
          ok = false;
          failed += " " + b.name + "/" + to_string(s);
        }
      }
  const double secs = seconds_since(t0);
  char buf[200];
  if (limit > 0)
    std::snprintf(buf, sizeof buf, "%zu sections; %.3fs < %.0fs", sections, secs, limit);
  else
    std::snprintf(buf, sizeof buf, "%zu sections; %.3fs", sections, secs);
  std::string detail = buf;
  if (!failed.empty()) detail += "; failed:" + failed;
  return {ok && (limit <= 0 || secs < limit), detail};
}

Outcome products() {
  auto o = suites({Suite::products}, 0);
  o.detail = "product theorem by direct search and through L/K, joins at length <= " + std::to_string(kJoinLen) +
             "; " + o.detail;
  return o;
}

Outcome oracle_independence() {
  std::size_t compared = 0;
  std::vector<std::string> bad;
  for (const auto& key : golden::keys()) {
    auto a = golden::check_oracle(LOCKIT_GOLDEN_DIR, key);
    auto b = golden::check_library(LOCKIT_GOLDEN_DIR, key);
    compared += b.compared;
    for (const auto& m : a.mismatches) bad.push_back(key + " oracle: " + m);
    for (const auto& m : b.mismatches) bad.push_back(key + " library: " + m);
  }
  std::string detail = std::to_string(golden::keys().size()) + " golden files with oracle hash " +
                       golden::oracle_hash().substr(0, 12) + ", " + std::to_string(compared) + " values reproduced";
  if (!bad.empty()) detail += "; first mismatch: " + bad.front();
  return {bad.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"one-object-localities", one_object},
      {"all-objects-o4plus2", all_objects},
      {"gl32-carriers", carriers},
      {"axioms-on-catalog", axioms_everywhere},
      {"objective-and-omega-suite", [] { return suites({Suite::axioms, Suite::sylow}, kObjectiveSuiteSeconds); }},
      {"partial-normal-suite", [] { return suites({Suite::frattini, Suite::splitting, Suite::cosets}, 0); }},
      {"quotient-suite", [] { return suites({Suite::quotient}, 0); }},
      {"product-suite", products},
      {"oracle-independence", oracle_independence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("%s %zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
