#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "lockit/normal.hpp"
#include "lockit/omega.hpp"

using namespace lockit;

namespace {

std::vector<std::size_t> sizes(const std::vector<ElementSet>& sets) {
  std::vector<std::size_t> out;
  for (const auto& s : sets) out.push_back(s.count());
  return out;
}

}  // namespace

TEST_SUITE("normal") {
  TEST_CASE("partial normal subgroups of the catalog localities") {
    const auto& o4 = fixtures::loc("o4plus2", "o4plus2");
    auto e = enumerate_partial_normals(o4);
    CHECK(e.complete);
    CHECK(sizes(e.normals) == std::vector<std::size_t>{1, 5, 5, 9, 18, 36, 36, 36, 72});

    auto d12 = enumerate_partial_normals(fixtures::loc("dihedral-demo", "d12"));
    CHECK(d12.complete);
    CHECK(sizes(d12.normals) == std::vector<std::size_t>{1, 2, 3, 6, 6, 6, 12});

    auto small = enumerate_partial_normals(fixtures::loc("gl32-small", "gl32-small"));
    CHECK(small.complete);
    CHECK(sizes(small.normals) == std::vector<std::size_t>{1, 40});
  }

  TEST_CASE("a partial normal subgroup need not be a subgroup") {
    const auto& b = fixtures::built("o4plus2", "o4plus2");
    const auto& l = *b.locality;
    REQUIRE(b.normals.size() == 1);
    const auto& base = b.normals.front().second;
    CHECK(base.count() == 5);
    CHECK(is_partial_normal(l, base));
    CHECK_FALSE(l.is_subgroup(base));
    CHECK(normal_closure(l, base) == base);
    auto pn = make_partial_normal(l, base);
    CHECK(pn.t == l.trivial_mask());
  }

  TEST_CASE("normal closure") {
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    auto s_closure = normal_closure(l, l.s_set());
    CHECK(s_closure.count() == 72);
    const Element r = fixtures::element(l, "(1 2 3)");
    auto c = normal_closure(l, ElementSet(l.size(), {r}));
    CHECK(c.count() == 5);
    CHECK(is_partial_normal(l, c));
    CHECK_FALSE(is_partial_normal(l, ElementSet(l.size(), {0, r, l.invert(r)})));
  }

  TEST_CASE("maximal cosets partition L") {
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    for (const auto& n : enumerate_partial_normals(l).normals) {
      CAPTURE(n.count());
      auto up = up_maximal_elements(l, n);
      auto cosets = maximal_cosets(l, n, up);
      ElementSet covered(l.size());
      std::size_t total = 0;
      for (const auto& b : cosets.blocks) {
        CHECK_FALSE(b.intersects(covered));
        covered |= b;
        total += b.count();
      }
      CHECK(covered == l.all());
      CHECK(total == l.size());
      CHECK(cosets.blocks.front() == n);
      for (std::size_t i = 0; i < cosets.blocks.size(); ++i) {
        CHECK(up.contains(cosets.representatives[i]));
        CHECK(cosets.block_of[cosets.representatives[i]] == i);
      }
      CHECK(check_cosets(l, n, up, cosets).passed());
      CHECK(check_splitting(l, n, up).passed());
      CHECK(check_frattini(l, n, up).passed());
      CHECK(check_normal_properties(l, n, up).passed());
    }
  }

  TEST_CASE("the two readings of ↑ agree") {
    for (auto [ex, name] : {std::pair{"o4plus2", "o4plus2"}, {"dihedral-demo", "d12"}}) {
      CAPTURE(name);
      const auto& l = fixtures::loc(ex, name);
      for (const auto& n : enumerate_partial_normals(l).normals) CHECK(check_up_readings(l, n).passed());
    }
  }

  TEST_CASE("↑ is reflexive and N_L(S) is ↑-maximal") {
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    auto base = fixtures::built("o4plus2", "o4plus2").normals.front().second;
    for (Element f = 0; f < l.size(); ++f) CHECK(up_related(l, base, f, l.s_g_mask(f), f, l.s_g_mask(f)));
    auto up = up_maximal_elements(l, base);
    CHECK(l.normalizer(l.full_mask()).is_subset_of(up));
    auto omega = compute_omega(l);
    CHECK(up_maximal_elements(l, base, omega) == up);
    CHECK(subgroup_dim(l, omega, l.full_mask()) == omega.dimension());
  }
}
