#include <doctest.h>

#include <chrono>

#include "fixtures.hpp"
#include "lockit/group_algorithms.hpp"
#include "lockit/locality.hpp"

using namespace lockit;

namespace {

ElementSet ambient_set(const Locality& l) {
  ElementSet out(l.ambient().order());
  for (Element x = 0; x < l.size(); ++x) out.insert(l.rep(x));
  return out;
}

ElementSet ambient_of(const Locality& l, const ElementSet& local) {
  ElementSet out(l.ambient().order());
  for (Element x : local) out.insert(l.rep(x));
  return out;
}

// N_G(P) for P given by generators.
ElementSet ambient_normalizer(const FiniteGroup& g, const std::string& gens) {
  auto perms = parse_permutation_list(gens, g.degree());
  ElementSet seed(g.order());
  for (const auto& p : perms) seed.insert(*g.find(p));
  return normalizer(g, subgroup_closure(g, seed)).members;
}

ElementSet ambient_products(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out(g.order());
  for (Element x : a)
    for (Element y : b) out.insert(g.mul(x, y));
  return out;
}

const char* kS = "(2 3)(4 6 5 7), (2 3)(6 7)";
const char* kP1 = "(4 5)(6 7), (4 6)(5 7)";
const char* kP2 = "(4 5)(6 7), (2 3)(6 7)";

}  // namespace

TEST_SUITE("locality") {
  TEST_CASE("one object: the carrier is the normalizer of S") {
    for (const char* name : {"s3-s", "d8-s", "gl32-s"}) {
      CAPTURE(name);
      const auto& l = fixtures::loc("delta-s", name);
      const auto& g = l.ambient();
      Subgroup s{ambient_of(l, l.s_set())};
      CHECK(ambient_set(l) == normalizer(g, s).members);
      CHECK(l.delta().size() == 1);
      CHECK(l.delta().front() == l.full_mask());
      CHECK(validate_locality(l).passed());
      AxiomOptions opt;
      opt.max_len = 6;
      auto r = check_axioms(l, opt);
      CHECK(r.passed());
      CHECK(r.complete());
      for (Element x = 0; x < l.size(); ++x)
        for (Element y = 0; y < l.size(); ++y) REQUIRE(l.mul(x, y) != kUndefined);
    }
    CHECK(fixtures::loc("delta-s", "s3-s").size() == 6);
    CHECK(fixtures::loc("delta-s", "d8-s").size() == 8);
    CHECK(fixtures::loc("delta-s", "gl32-s").size() == 8);
  }

  TEST_CASE("all nonidentity objects in O4+(2)") {
    const auto start = std::chrono::steady_clock::now();
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    CHECK(l.size() == 72);
    CHECK(l.size() == l.ambient().order());
    CHECK(l.s_order() == 8);
    bool rejected = false;
    for (Element x = 0; x < l.size() && !rejected; ++x)
      for (Element y = 0; y < l.size() && !rejected; ++y)
        if (!l.in_domain(Word{x, y})) {
          rejected = true;
          CHECK_FALSE(l.in_delta(l.s_w_mask(Word{x, y})));
        }
    CHECK(rejected);
    CHECK(validate_locality(l).passed());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 5.0);
  }

  TEST_CASE("GL3(2) with three objects: L = M1 ∪ M2") {
    const auto& l = fixtures::loc("gl32-small", "gl32-small");
    const auto& g = l.ambient();
    auto m1 = ambient_normalizer(g, kP1);
    auto m2 = ambient_normalizer(g, kP2);
    CHECK(m1.count() == 24);
    CHECK(m2.count() == 24);
    CHECK((m1 & m2).count() == 8);
    CHECK(l.size() == 40);
    CHECK(ambient_set(l) == (m1 | m2));
    CHECK(l.delta().size() == 3);
    CHECK_FALSE(l.auto_closed());
  }

  TEST_CASE("GL3(2) with all nonidentity objects: L = M1M2 ∪ M2M1") {
    const auto& l = fixtures::loc("gl32-full", "gl32-full");
    const auto& g = l.ambient();
    auto m1 = ambient_normalizer(g, kP1);
    auto m2 = ambient_normalizer(g, kP2);
    auto expected = ambient_products(g, m1, m2) | ambient_products(g, m2, m1);
    CHECK(expected.count() == 104);
    CHECK(l.size() == 104);
    CHECK(ambient_set(l) == expected);
    CHECK(validate_locality(l).passed());
  }

  TEST_CASE("S_g and the domain") {
    const auto& l = fixtures::loc("gl32-small", "gl32-small");
    const auto s = fixtures::subgroup(l, kS);
    CHECK(s == l.full_mask());
    for (Element g = 0; g < l.size(); ++g) {
      const Mask sg = l.s_g_mask(g);
      CHECK(l.in_delta(sg));
      CHECK(l.is_s_subgroup(sg));
      CHECK(l.image(sg, g) == l.s_g_mask(l.invert(g)));
    }
    const Mask p1 = fixtures::subgroup(l, kP1);
    const Mask p2 = fixtures::subgroup(l, kP2);
    CHECK(l.in_delta(p1));
    CHECK(l.in_delta(p2));
    CHECK_FALSE(l.in_delta(p1 & p2));
  }

  TEST_CASE("associativity is weaker than in a group") {
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    bool found = false;
    for (Element f = 0; f < l.size() && !found; ++f)
      for (Element a = 0; a < l.size() && !found; ++a) {
        const auto fa = l.mul(f, a);
        if (fa == kUndefined) continue;
        for (Element h = 0; h < l.size() && !found; ++h)
          if (l.mul(static_cast<Element>(fa), h) != kUndefined && !l.in_domain(Word{f, a, h})) {
            found = true;
            const auto ah = l.mul(a, h);
            if (ah != kUndefined && l.mul(f, static_cast<Element>(ah)) != kUndefined)
              CHECK(l.mul(f, static_cast<Element>(ah)) == l.mul(static_cast<Element>(fa), h));
          }
      }
    CHECK(found);
  }

  TEST_CASE("sylow_auto agrees with the explicit Sylow subgroup up to conjugacy") {
    const auto& l = fixtures::loc("gl32-full", "gl32-full");
    auto g = l.ambient_ptr();
    auto s = sylow_auto(*g, 2);
    CHECK(s.order() == 8);
    DeltaSpec spec;
    spec.mode = DeltaMode::all_nonidentity;
    auto rebuilt = build_locality(g, 2, s, spec, "auto");
    CHECK(rebuilt.size() == 104);
    CHECK(rebuilt.delta().size() == l.delta().size());
    auto explicit_s = ambient_of(l, l.s_set());
    bool conjugate = false;
    for (Element x = 0; x < g->order() && !conjugate; ++x)
      conjugate = conjugate_subgroup(*g, s, x).members == explicit_s;
    CHECK(conjugate);
  }

  TEST_CASE("sylow auto in a spec file matches the explicit generators") {
    const auto& auto_built = fixtures::loc("delta-s", "d8-s");
    auto doc = parse_spec(R"(group d8 degree 4
gen (1 2 3 4)
gen (1 3)

locality d8-x group d8 prime 2
sylow gens (1 2 3 4), (1 3)
delta explicit { (1 2 3 4), (1 3) }
)");
    auto ws = build_workspace(doc);
    const auto& explicit_built = *ws.locality("d8-x").locality;
    CHECK(explicit_built.size() == auto_built.size());
    CHECK(ambient_of(explicit_built, explicit_built.s_set()) == ambient_of(auto_built, auto_built.s_set()));
  }

  TEST_CASE("restriction, normalizer locality and expansion") {
    const auto& full = fixtures::loc("gl32-full", "gl32-full");
    const Mask s = full.full_mask();
    const Mask p1 = fixtures::subgroup(full, kP1);
    const Mask p2 = fixtures::subgroup(full, kP2);
    auto small = restrict_to(full, {p1, p2, s});
    CHECK(small.size() == 40);
    CHECK(validate_locality(small).passed());
    CHECK(is_f_closed_family(full, {p1, p2, s}));
    CHECK_FALSE(is_f_closed_family(full, {p1}));
    auto ns = normalizer_locality(full, p1);
    CHECK(ns.size() == 24);
    CHECK(validate_locality(ns).passed());
  }

  TEST_CASE("building from a non-Sylow subgroup is rejected") {
    const auto& l = fixtures::loc("gl32-small", "gl32-small");
    auto g = l.ambient_ptr();
    auto perms = parse_permutation_list(kP1, g->degree());
    ElementSet seed(g->order());
    for (const auto& p : perms) seed.insert(*g->find(p));
    CHECK_THROWS_AS(build_locality(g, 2, subgroup_closure(*g, seed), DeltaSpec{}), Error);
  }
}
