#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "golden_check.hpp"

TEST_SUITE("golden") {
  TEST_CASE("golden files carry the oracle hash and match a fresh oracle run") {
    for (const auto& key : golden::keys()) {
      CAPTURE(key);
      auto o = golden::check_oracle(LOCKIT_GOLDEN_DIR, key);
      for (const auto& m : o.mismatches) MESSAGE(m);
      CHECK(o.ok());
      std::ifstream in(std::string(LOCKIT_GOLDEN_DIR) + "/" + key + ".json");
      auto j = nlohmann::json::parse(in);
      CHECK(j["oracle_hash"] == golden::oracle_hash());
    }
  }

  TEST_CASE("the library reproduces every frozen value") {
    for (const auto& key : golden::keys()) {
      CAPTURE(key);
      auto o = golden::check_library(LOCKIT_GOLDEN_DIR, key);
      for (const auto& m : o.mismatches) MESSAGE(m);
      CHECK(o.ok());
      CHECK(o.compared > 10);
    }
  }
}
