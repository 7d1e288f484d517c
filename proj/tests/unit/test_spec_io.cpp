#include <doctest.h>

#include <string>

#include "lockit/catalog.hpp"
#include "lockit/spec_io.hpp"

using namespace lockit;

namespace {

SourceLocation error_at(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::parse);
    return e.where();
  }
  FAIL("expected a parse error");
  return {};
}

ErrorKind build_error(const std::string& text) {
  try {
    build_workspace(parse_spec(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::internal;
}

const char* kD8 = "group d8 degree 4\ngen (1 2 3 4)\ngen (1 3)\n";

}  // namespace

TEST_SUITE("spec_io") {
  TEST_CASE("every catalog file round-trips") {
    for (const auto& [file, text] : catalog_files()) {
      CAPTURE(file);
      auto doc = parse_spec(text);
      auto again = parse_spec(serialize_spec(doc));
      CHECK(again == doc);
      CHECK(serialize_spec(again) == serialize_spec(doc));
    }
  }

  TEST_CASE("empty and comment-only input") {
    auto empty = parse_spec("");
    CHECK(empty.groups.empty());
    CHECK(empty.localities.empty());
    auto comments = parse_spec("# nothing\n\n   # here\n");
    CHECK(comments == empty);
    CHECK(build_workspace(empty).localities.empty());
  }

  TEST_CASE("document structure") {
    auto doc = parse_spec(std::string(kD8) +
                          "locality l group d8 prime 2\nsylow auto\ndelta overclosure { (1 3) ; (2 4) }\n"
                          "normal z gens (1 3)(2 4)\nrun axioms l\n");
    REQUIRE(doc.groups.size() == 1);
    CHECK(doc.groups[0].gens.size() == 2);
    REQUIRE(doc.localities.size() == 1);
    const auto& l = doc.localities[0];
    CHECK(l.line == 4);
    CHECK(l.sylow_auto);
    CHECK(l.delta_mode == DeltaMode::overclosure);
    CHECK(l.delta_seeds.size() == 2);
    REQUIRE(l.normals.size() == 1);
    CHECK(l.normals[0].name == "z");
    CHECK(doc.directives == std::vector<Directive>{{"axioms", "l"}});
  }

  TEST_CASE("errors carry line and column") {
    auto at = error_at("group c2 degree 2\ngen (1 2)\nlocality l group c2 prime 2\ndelta bogus-mode\n");
    CHECK(at.line == 4);
    CHECK(at.column == 7);
    at = error_at("group g degree 3\ngen (1 2\n");
    CHECK(at.line == 2);
    at = error_at("locality l group nowhere prime 2\n");
    CHECK(at.line == 1);
    CHECK(at.column == 18);
    at = error_at(std::string(kD8) + "locality l group d8 prime 4\n");
    CHECK(at.line == 4);
    at = error_at(std::string(kD8) + "run everything l\n");
    CHECK(at.line == 4);
    at = error_at(std::string(kD8) + "locality l group d8 prime 2\nrun all m\n");
    CHECK(at.line == 5);
    at = error_at("gen (1 2)\n");
    CHECK(at.line == 1);
    at = error_at("frobnicate\n");
    CHECK(at.column == 1);
    at = error_at("group g degree 3\ngen (1 4)\n");
    CHECK(at.line == 2);
  }

  TEST_CASE("the error message names the position") {
    try {
      parse_spec("group c2 degree 2\ngen (1 2)\nlocality l group c2 prime 2\ndelta bogus-mode\n");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 4, column 7") != std::string::npos);
    }
  }

  TEST_CASE("semantic errors at build time") {
    CHECK(build_error(std::string(kD8) + "locality l group d8 prime 2\nsylow gens (1 3)\n") == ErrorKind::invalid_input);
    CHECK(build_error(std::string(kD8) + "locality l group d8 prime 2\ndelta explicit { (1 2) }\n") ==
          ErrorKind::invalid_input);
    Limits tight;
    tight.max_group_order = 4;
    try {
      build_workspace(parse_spec(kD8), tight);
      FAIL("expected a resource error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::resource);
    }
  }

  TEST_CASE("elements and permutation lists") {
    auto perms = parse_permutation_list("(1 2), (3 4), ()", 4);
    CHECK(perms.size() == 3);
    auto ws = build_workspace(parse_spec(std::string(kD8) + "locality l group d8 prime 2\n"));
    const auto& l = *ws.locality("l").locality;
    CHECK(resolve_elements(l, "(1 3), (2 4)").count() == 2);
    CHECK_THROWS_AS(resolve_elements(l, "(1 2)"), Error);
    CHECK_THROWS_AS(resolve_elements(l, "(1 2"), Error);
    CHECK_THROWS_AS(ws.locality("m"), Error);
  }
}
