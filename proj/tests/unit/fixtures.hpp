#pragma once

#include <map>
#include <string>

#include "lockit/catalog.hpp"
#include "lockit/group_algorithms.hpp"
#include "lockit/spec_io.hpp"

namespace fixtures {

// A catalog locality, built once per process.
inline const lockit::BuiltLocality& built(const std::string& example, const std::string& name) {
  static std::map<std::string, std::vector<lockit::BuiltLocality>> cache;
  auto it = cache.find(example);
  if (it == cache.end()) it = cache.emplace(example, lockit::catalog_localities(example)).first;
  for (const auto& b : it->second)
    if (b.name == name) return b;
  throw std::runtime_error("no locality " + name + " in " + example);
}

inline const lockit::Locality& loc(const std::string& example, const std::string& name) {
  return *built(example, name).locality;
}

inline lockit::Element element(const lockit::Locality& l, const std::string& cycles) {
  auto s = lockit::resolve_elements(l, cycles);
  return s.first();
}

inline lockit::ElementSet elements(const lockit::Locality& l, const std::string& list) {
  return lockit::resolve_elements(l, list);
}

// The subgroup of S generated by the listed permutations.
inline lockit::Mask subgroup(const lockit::Locality& l, const std::string& gens) {
  lockit::LocalityGroupView view{&l};
  return l.to_mask(lockit::algo::close(view, elements(l, gens)));
}

}  // namespace fixtures
