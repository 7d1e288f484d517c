#include <doctest.h>

#include "fixtures.hpp"
#include "lockit/invariants.hpp"
#include "lockit/normal.hpp"
#include "lockit/quotient.hpp"

using namespace lockit;

namespace {

const std::vector<ElementSet>& o4_normals() {
  static const auto normals = enumerate_partial_normals(fixtures::loc("o4plus2", "o4plus2")).normals;
  return normals;
}

}  // namespace

TEST_SUITE("quotient") {
  TEST_CASE("L/N is a locality with the expected size") {
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    const std::vector<std::size_t> expected{72, 40, 40, 8, 4, 2, 2, 2, 1};
    REQUIRE(o4_normals().size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CAPTURE(i);
      const auto& n = o4_normals()[i];
      auto q = quotient(l, n);
      const auto& lq = *q.locality;
      CHECK(lq.size() == expected[i]);
      CHECK(lq.s_order() * (l.s_set() & n).count() == l.s_order());
      CHECK(validate_locality(lq).passed());
      AxiomOptions opt;
      opt.max_len = 4;
      CHECK(check_axioms(lq, opt).passed());
      CHECK(quotient_properties(l, q).passed());
      CHECK(kernel(q.projection(l)) == n);
      CHECK(check_projection(q.projection(l)).passed());
    }
  }

  TEST_CASE("ρ is bijective exactly for the trivial kernel") {
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    auto q = quotient(l, o4_normals().front());
    CHECK(q.locality->size() == l.size());
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y)
        REQUIRE(l.in_domain(Word{x, y}) == q.locality->in_domain(Word{q.rho[x], q.rho[y]}));
  }

  TEST_CASE("first isomorphism theorem") {
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    const auto& base = o4_normals()[1];
    auto q = quotient(l, base);
    auto beta = q.projection(l);
    auto same = first_isomorphism(l, beta, q);
    CHECK(same.report.passed());
    CHECK(same.isomorphism);

    auto trivial = quotient(l, o4_normals().front());
    auto onto = first_isomorphism(l, beta, trivial);
    CHECK(onto.report.passed());
    CHECK_FALSE(onto.isomorphism);
  }

  TEST_CASE("third isomorphism theorem on nested pairs") {
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    std::size_t pairs = 0;
    for (const auto& n1 : o4_normals())
      for (const auto& n2 : o4_normals())
        if (n1.is_subset_of(n2) && n1 != n2 && n2.count() < l.size()) {
          ++pairs;
          CHECK(check_third_isomorphism(l, n1, n2).passed());
        }
    CHECK(pairs > 5);
  }

  TEST_CASE("correspondence and image lemmas") {
    const auto& l = fixtures::loc("o4plus2", "o4plus2");
    for (std::size_t i : {1u, 3u, 4u}) {
      CAPTURE(i);
      auto q = quotient(l, o4_normals()[i]);
      CHECK(subgroup_correspondence(l, q).passed());
      CHECK(check_image_lemmas(l, q, o4_normals()).passed());
      CHECK(check_subgroup_images(l, q).passed());
      CHECK(check_ns_locality(l, o4_normals()[i]).passed());
    }
  }

  TEST_CASE("partial subgroups over N") {
    const auto& l = fixtures::loc("dihedral-demo", "d12");
    auto normals = enumerate_partial_normals(l).normals;
    auto over_trivial = partial_subgroups_over(l, normals.front());
    CHECK(over_trivial.size() == 16);
    auto over_all = partial_subgroups_over(l, l.all());
    CHECK(over_all.size() == 1);
    CHECK_THROWS_AS(partial_subgroups_over(l, normals.front(), 3), Error);
  }
}
