#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lockit/locality.hpp"
#include "lockit/normal.hpp"
#include "lockit/omega.hpp"
#include "lockit/quotient.hpp"

namespace lockit {

// Insertion-ordered, so dumps are byte-deterministic.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
const char* tool_version();

// FNV-1a 64, as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

enum class Suite { axioms, frattini, splitting, cosets, quotient, products, sylow, all };
// Throws invalid-input for an unknown name.
Suite parse_suite(std::string_view name);
const char* to_string(Suite suite);

struct SuiteOptions {
  std::size_t max_word_len = 6;
  Limits limits;
  Exec exec = Exec::parallel;
};

// Subgroups and element sets are serialized as sorted element-id lists.
Json to_json(const ElementSet& x);
Json mask_json(const Locality& loc, Mask m);
Json to_json(const CheckReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const ValidationReport& r);

// Carrier, S, Δ, labels, and whether L is a group (D = W(L)), with the least rejected pair.
Json locality_summary(const Locality& loc);
Json omega_report(const Locality& loc, const OmegaPoset& omega);
// F-conjugacy classes of subgroups of S with full normalization flags, and the number of
// distinct chase maps.
Json fusion_report(const Locality& loc, const OmegaPoset& omega, const FusionData& fusion);
Json normals_report(const Locality& loc, const NormalEnumeration& normals);
// Maximal cosets, representatives and the quotient's own summary, with its verdicts.
Json quotient_report(const Locality& loc, const ElementSet& n, const SuiteOptions& options);
// MN, S ∩ MN and the product theorem verdicts for each listed pair.
Json products_report(const Locality& loc, const std::vector<std::pair<ElementSet, ElementSet>>& pairs);

// The named suite on one locality. Per-N suites run over every enumerated partial normal
// subgroup.
Json run_suite(const Locality& loc, Suite suite, const SuiteOptions& options);

// The versioned envelope: schema, tool, version, input hash, command, results, passed.
Json make_report(std::string_view command, std::string_view input, Json results);
// False if any nested "passed" field is false.
bool all_passed(const Json& j);

// Indented plain-text rendering of a report.
std::string render_text(const Json& j);

}  // namespace lockit
