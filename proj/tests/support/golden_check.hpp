#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace golden {

// Keys of the golden files, one file <key>.json per key.
std::vector<std::string> keys();

// The hash of the oracle sources the goldens must carry.
std::string oracle_hash();

// {"oracle_hash", "example", "values"} for one key, from a fresh oracle run.
nlohmann::json freeze(const std::string& key);

struct Outcome {
  std::size_t compared = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// The golden file exists, carries the current oracle hash, and equals a fresh oracle run.
Outcome check_oracle(const std::string& dir, const std::string& key);
// The library reproduces every frozen value.
Outcome check_library(const std::string& dir, const std::string& key);

}  // namespace golden
