#include <doctest.h>

#include <algorithm>
#include <functional>
#include <tuple>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lockit/partial_group.hpp"
#include "lockit/word_states.hpp"

using namespace lockit;

namespace {

FiniteGroup cyclic3() {
  std::vector<std::string> gens{"(1 2 3)"};
  return group_from_cycles(3, gens);
}

FiniteGroup s3() {
  std::vector<std::string> gens{"(1 2 3)", "(1 2)"};
  return group_from_cycles(3, gens);
}

TablePartialGroup z3_table() {
  return TablePartialGroup(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 2, 1});
}

bool has_rule(const AxiomReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

// H is closed under inversion and under products of every word of H in D of length <= max_len.
bool closed_on_words(const PartialGroup& pg, const ElementSet& h, std::size_t max_len) {
  for (Element x : h)
    if (!h.contains(pg.invert(x))) return false;
  const auto members = h.to_vector();
  Word w;
  std::function<bool(std::size_t)> extend = [&](std::size_t len) {
    if (!w.empty() && pg.in_domain(w) && !h.contains(pg.product(w))) return false;
    if (len == max_len) return true;
    for (Element x : members) {
      w.push_back(x);
      const bool ok = extend(len + 1);
      w.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return extend(0);
}

}  // namespace

TEST_SUITE("partial_group") {
  TEST_CASE("free partial group on one generator") {
    FreeOneGenerator f;
    const Element a = FreeOneGenerator::a;
    const Element b = FreeOneGenerator::b;
    CHECK(f.in_domain(Word{a, b, a}));
    CHECK_FALSE(f.in_domain(Word{a, a}));
    CHECK(f.product(Word{a, b}) == f.identity());
    CHECK(f.product(Word{a, b, a}) == a);
    CHECK_FALSE(f.try_product(Word{b, b}).has_value());
    CHECK_THROWS_AS(f.product(Word{b, b}), Error);

    AxiomOptions opt;
    opt.max_len = 8;
    auto r = check_axioms(f, opt);
    CHECK(r.passed());
    CHECK(r.complete());
    CHECK(r.covered_len == 8);
    CHECK(r.violations.empty());
  }

  TEST_CASE("a group table passes, a corrupted one is flagged") {
    auto good = z3_table();
    AxiomOptions opt;
    opt.max_len = 4;
    CHECK(check_axioms(good, opt).passed());

    auto bad = z3_table();
    bad.set(1, 1, 0);
    opt.max_recorded = 1000;
    auto r = check_axioms(bad, opt);
    CHECK_FALSE(r.passed());
    CHECK(r.violation_count >= r.violations.size());
    CHECK(has_rule(r, "substitution"));
    CHECK(r.violations.size() <= opt.max_recorded);
  }

  TEST_CASE("word states agree with word enumeration on localities") {
    AxiomOptions opt;
    opt.max_len = 3;
    for (auto [ex, name] : {std::pair{"delta-s", "d8-s"}, {"gl32-small", "gl32-small"}, {"dihedral-demo", "d12"}}) {
      CAPTURE(name);
      const auto& l = fixtures::loc(ex, name);
      auto by_state = check_axioms(l, opt);
      auto by_word = check_axioms_all_words(as_partial_group(l), opt);
      CHECK(by_state.method == "word-states");
      CHECK(by_word.method == "all-words");
      CHECK(by_state.passed());
      CHECK(by_word.passed());
      CHECK(by_state.complete());
      CHECK(by_word.complete());
    }
  }

  TEST_CASE("domain and products of words agree with the state summaries") {
    const auto& l = fixtures::loc("gl32-small", "gl32-small");
    WordStates ws(l);
    const std::size_t n = l.size();
    for (Element x = 0; x < n; x += 3)
      for (Element y = 0; y < n; y += 5)
        for (Element z = 0; z < n; z += 7) {
          Word w{x, y, z};
          auto st = ws.of(w);
          REQUIRE(ws.in_domain(st) == l.in_domain(w));
          if (l.in_domain(w)) REQUIRE(*ws.product(st) == l.product(w));
        }
  }

  TEST_CASE("homomorphisms, kernels and isomorphisms") {
    auto g = s3();
    auto c2 = group_from_cycles(2, std::vector<std::string>{"(1 2)"});
    GroupView gv(g);
    GroupView cv(c2);
    PartialHomomorphism sign{&gv, &cv, {}};
    for (Element x = 0; x < g.order(); ++x) sign.map.push_back(g.element_order(x) == 2 ? 1 : 0);
    CHECK(check_homomorphism(sign).passed());
    CHECK(kernel(sign).count() == 3);
    CHECK_FALSE(is_isomorphism(sign));

    PartialHomomorphism id{&gv, &gv, {}};
    for (Element x = 0; x < g.order(); ++x) id.map.push_back(x);
    CHECK(is_isomorphism(id));

    PartialHomomorphism broken = sign;
    broken.map[1] = 1 - broken.map[1];
    CHECK_FALSE(check_homomorphism(broken).passed());
  }

  TEST_CASE("the free partial group maps onto a cyclic group but not isomorphically") {
    FreeOneGenerator f;
    auto z3 = cyclic3();
    GroupView zv(z3);
    const Element gen = *z3.find(Permutation::parse_cycles("(1 2 3)", 3));
    PartialHomomorphism phi{&f, &zv, {0, gen, z3.inv(gen)}};
    AxiomOptions opt;
    opt.max_len = 6;
    CHECK(check_homomorphism(phi, opt).passed());
    CHECK(kernel(phi).count() == 1);
    CHECK_FALSE(is_isomorphism(phi, opt));
  }

  TEST_CASE("partial subgroups of a group view") {
    auto g = s3();
    GroupView gv(g);
    const Element r = *g.find(Permutation::parse_cycles("(1 2 3)", 3));
    const Element t = *g.find(Permutation::parse_cycles("(1 2)", 3));
    auto a3 = generated_partial_subgroup(gv, ElementSet(g.order(), {r}));
    CHECK(a3.count() == 3);
    CHECK(is_partial_subgroup(gv, a3));
    CHECK(is_partial_normal_in(gv, a3));
    auto c2 = generated_partial_subgroup(gv, ElementSet(g.order(), {t}));
    CHECK(c2.count() == 2);
    CHECK_FALSE(is_partial_normal_in(gv, c2));
    CHECK(generated_partial_subgroup(gv, ElementSet(g.order(), {r, t})).count() == 6);
    CHECK_FALSE(is_partial_subgroup(gv, ElementSet(g.order(), {0, r})));
  }

  TEST_CASE("binary closure decides partial subgroups as all words do") {
    for (auto [ex, name, len] : {std::tuple{"dihedral-demo", "d12", 5}, {"o4plus2", "o4plus2", 4}}) {
      CAPTURE(name);
      const auto& l = fixtures::loc(ex, name);
      std::vector<ElementSet> candidates;
      for (Element x = 1; x < l.size(); ++x) {
        candidates.push_back(ElementSet(l.size(), {0, x, l.invert(x)}));
        candidates.push_back(generated_partial_subgroup(l, ElementSet(l.size(), {x})));
      }
      for (Element x = 1; x < l.size(); x += 5)
        for (Element y = x + 1; y < l.size(); y += 7) {
          auto h = generated_partial_subgroup(l, ElementSet(l.size(), {x, y}));
          if (h.count() <= 20) candidates.push_back(h);
        }
      std::size_t accepted = 0;
      for (const auto& h : candidates) {
        const bool binary = is_partial_subgroup(l, h);
        REQUIRE(binary == closed_on_words(l, h, static_cast<std::size_t>(len)));
        accepted += binary;
      }
      CHECK(accepted > 0);
      CHECK(accepted < candidates.size());
    }
  }

  TEST_CASE("word helpers") {
    FreeOneGenerator f;
    Word w{FreeOneGenerator::a, FreeOneGenerator::b, FreeOneGenerator::a};
    auto inv = f.invert_word(w);
    CHECK(inv == Word{FreeOneGenerator::b, FreeOneGenerator::a, FreeOneGenerator::b});
    CHECK_FALSE(format_word(w).empty());
  }
}
