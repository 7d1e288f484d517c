#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lockit/group.hpp"
#include "lockit/locality.hpp"

namespace lockit {

// Line-oriented spec documents:
//
//   group <name> degree <n>
//   gen <cycles>
//   locality <name> group <gname> prime <p>
//   sylow auto | sylow gens <cycles>; ...
//   delta explicit { <gens>; ... } | delta overclosure { <gens>; ... } | delta all-nonidentity | delta all
//   normal <name> gens <elements>
//   run <suite> <locality>
//
// `#` starts a comment. <gens> and <elements> are comma-separated permutations in cycle
// notation; `()` is the identity. gen lines attach to the last group, sylow/delta/normal lines
// to the last locality.

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

class ParseError : public Error {
 public:
  ParseError(SourceLocation at, const std::string& msg);
  SourceLocation where() const { return at_; }

 private:
  SourceLocation at_;
};

using Generators = std::vector<Permutation>;

struct GroupDef {
  std::string name;
  std::size_t degree = 0;
  Generators gens;
  bool operator==(const GroupDef&) const = default;
};

struct NormalDef {
  std::string name;
  Generators gens;
  std::size_t line = 0;
  bool operator==(const NormalDef& o) const { return name == o.name && gens == o.gens; }
};

struct LocalityDef {
  std::string name;
  std::string group;
  unsigned prime = 2;
  bool sylow_auto = true;
  Generators sylow;
  DeltaMode delta_mode = DeltaMode::all_nonidentity;
  std::vector<Generators> delta_seeds;
  std::vector<NormalDef> normals;
  std::size_t line = 0;
  bool operator==(const LocalityDef& o) const {
    return name == o.name && group == o.group && prime == o.prime && sylow_auto == o.sylow_auto &&
           sylow == o.sylow && delta_mode == o.delta_mode && delta_seeds == o.delta_seeds && normals == o.normals;
  }
};

struct Directive {
  std::string suite;
  std::string locality;
  bool operator==(const Directive&) const = default;
};

struct SpecDocument {
  std::vector<GroupDef> groups;
  std::vector<LocalityDef> localities;
  std::vector<Directive> directives;

  const GroupDef* find_group(std::string_view name) const;
  const LocalityDef* find_locality(std::string_view name) const;
  bool operator==(const SpecDocument&) const = default;
};

extern const std::vector<std::string> kSuiteNames;

// Syntax errors, unresolved references and unsupported Δ modes throw ParseError.
SpecDocument parse_spec(std::string_view text);
// Canonical text; parse_spec(serialize_spec(d)) == d.
std::string serialize_spec(const SpecDocument& doc);

// Comma-separated permutations of the given degree.
Generators parse_permutation_list(std::string_view text, std::size_t degree);

struct BuiltLocality {
  std::string name;
  std::shared_ptr<const Locality> locality;
  std::vector<std::pair<std::string, ElementSet>> normals;  // normal closures, in document order
  std::size_t line = 0;
};

// Groups and localities materialized from a document.
struct Workspace {
  std::map<std::string, std::shared_ptr<const FiniteGroup>> groups;
  std::vector<BuiltLocality> localities;

  // Throws invalid-input for an unknown name.
  const BuiltLocality& locality(std::string_view name) const;
};

// Semantic errors (generators outside the group, S not Sylow, normal generators outside the
// carrier) throw invalid-input naming the line.
Workspace build_workspace(const SpecDocument& doc, const Limits& limits = {});

// Elements of the carrier given as permutations of the ambient group.
ElementSet resolve_elements(const Locality& loc, std::string_view text);

}  // namespace lockit
