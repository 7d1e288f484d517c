#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lockit/cli.hpp"

using namespace lockit;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lockit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string source(const std::string& rel) { return std::string(LOCKIT_SOURCE_DIR) + "/" + rel; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("the free partial group passes with an empty violation list") {
    auto r = run({"--json", "catalog", "free1"});
    CHECK(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["tool"] == "lockit");
    CHECK(j["passed"] == true);
    CHECK(j["command"] == "catalog");
    CHECK(j["input_hash"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    const auto& axioms = j["results"]["sections"][0];
    CHECK(axioms["check"] == "axioms");
    CHECK(axioms["max_len"] == 8);
    CHECK(axioms["violations"].is_array());
    CHECK(axioms["violations"].empty());
  }

  TEST_CASE("reports are byte-identical across runs") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"--json", "catalog", "delta-s"},
          std::vector<std::string>{"--json", "normals", source("catalog/dihedral_demo.loc")},
          std::vector<std::string>{"check", source("catalog/gl3_2.loc"), "--locality", "gl32-small", "--suite",
                                   "sylow"}}) {
      auto a = run(args);
      auto b = run(args);
      CHECK(a.code == kExitOk);
      CHECK(a.out == b.out);
      CHECK_FALSE(a.out.empty());
    }
  }

  TEST_CASE("subcommands on the shipped files") {
    CHECK(run({"validate", source("catalog/gl3_2.loc")}).code == kExitOk);
    CHECK(run({"omega", source("catalog/gl3_2.loc"), "--locality", "gl32-full"}).code == kExitOk);
    CHECK(run({"fusion", source("catalog/delta_s.loc"), "--locality", "d8-s"}).code == kExitOk);
    CHECK(run({"quotient", source("catalog/o4plus2.loc"), "--normal", "base"}).code == kExitOk);
    CHECK(run({"quotient", source("catalog/dihedral_demo.loc"), "--normal", "(1 4)(2 5)(3 6)"}).code == kExitOk);
    CHECK(run({"products", source("catalog/dihedral_demo.loc"), "--normal", "rotations3", "--normal",
               "(1 4)(2 5)(3 6)"})
              .code == kExitOk);
    CHECK(run({"check", source("catalog/delta_s.loc")}).code == kExitOk);
    auto j = nlohmann::json::parse(run({"--json", "validate", source("catalog/delta_s.loc"), "--locality", "gl32-s"}).out);
    CHECK(j["results"][0]["summary"]["carrier_size"] == 8);
    CHECK(j["results"][0]["summary"]["is_group"] == true);
  }

  TEST_CASE("an automatically closed Δ is a note, or a failure under --strict") {
    auto r = run({"validate", source("tests/data/broken.loc")});
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("note") != std::string::npos);
    CHECK(run({"--strict", "validate", source("tests/data/broken.loc")}).code == kExitVerificationFailure);
  }

  TEST_CASE("input errors exit with 2") {
    auto bad = run({"validate", source("tests/data/bad_delta.loc")});
    CHECK(bad.code == kExitInputError);
    CHECK(bad.err.find("line 4") != std::string::npos);
    CHECK(run({"validate", source("tests/data/missing.loc")}).code == kExitInputError);
    CHECK(run({"catalog", "no-such-example"}).code == kExitInputError);
    CHECK(run({"frobnicate"}).code == kExitInputError);
    CHECK(run({"validate", source("catalog/gl3_2.loc"), "--locality", "nowhere"}).code == kExitInputError);
    CHECK(run({"quotient", source("catalog/o4plus2.loc"), "--normal", "nothing"}).code == kExitInputError);
    CHECK(run({"check", source("catalog/gl3_2.loc"), "--max-word-len", "40"}).code == kExitInputError);
  }

  TEST_CASE("LOCKIT_MAX_ORDER caps the group order") {
    setenv("LOCKIT_MAX_ORDER", "100", 1);
    CHECK(run({"validate", source("catalog/gl3_2.loc")}).code == kExitInputError);
    setenv("LOCKIT_MAX_ORDER", "abc", 1);
    CHECK(run({"validate", source("catalog/delta_s.loc")}).code == kExitInputError);
    setenv("LOCKIT_MAX_ORDER", "200", 1);
    CHECK(run({"validate", source("catalog/gl3_2.loc")}).code == kExitOk);
    unsetenv("LOCKIT_MAX_ORDER");
  }

  TEST_CASE("version and help") {
    auto v = run({"--version"});
    CHECK(v.code == kExitOk);
    CHECK(v.out.find("0.1.0") != std::string::npos);
    CHECK(run({"--help"}).code == kExitOk);
  }
}
