#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lockit/report.hpp"
#include "lockit/spec_io.hpp"

namespace lockit {

// free1, delta-s, o4plus2, gl32-small, gl32-full, dihedral-demo.
const std::vector<std::string>& catalog_names();

struct CatalogEntry {
  std::string name;
  std::string file;      // shipped spec file, empty for free1
  std::string text;      // its contents
  std::string locality;  // the locality of the file to run, empty for all
};

// Throws invalid-input for an unknown name.
CatalogEntry catalog_entry(std::string_view name);

// The shipped spec files, by file name.
const std::vector<std::pair<std::string, std::string>>& catalog_files();

// Localities of a catalog example, built with the given limits (empty for free1).
std::vector<BuiltLocality> catalog_localities(std::string_view name, const Limits& limits = {});

// Builds the named example and runs the full verification suite. free1 is checked against
// the partial group axioms at word length max(8, max_word_len).
Json run_catalog(std::string_view name, const SuiteOptions& options = {});

}  // namespace lockit
