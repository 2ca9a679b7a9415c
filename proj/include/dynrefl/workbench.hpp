#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynrefl/quiver.hpp"
#include "dynrefl/reflection.hpp"

namespace dynrefl {

using json = nlohmann::json;

/// A fully built input document: the paired structure, the module, the hom
/// family and the reflection map, with any overrides applied.
struct Workbench {
  Base base;
  ModuleSetting setting;
  HomFamily family;
  std::string family_kind;
  SetHMorphism k;
  std::vector<std::string> checks;
};

/// Raw text of a compiled-in document ("ex53", "ex89", "zn3"), if any.
std::optional<std::string> builtin_document(const std::string& name);
/// Parse a path, or "@name" for a compiled-in document.
json load_document(const std::string& path_or_builtin);
/// Throws Error on any schema or axiom failure.
Workbench build_workbench(const json& doc);

/// Check groups accepted by verify, in the order `all` runs them.
const std::vector<std::string>& check_groups();
std::vector<Identity> group_identities(const Workbench& wb, const std::string& group);

struct GroupReport {
  std::string group;
  std::vector<CheckResult> results;
  json info;  // verdicts that are reported but do not fail the run
};
GroupReport run_group(const Workbench& wb, const std::string& group);

json witness_json(const Witness& w);
/// True iff the witness still fails against `wb`. Throws on unknown check.
bool replay_witness(const Workbench& wb, const json& witness);

/// Table dumps, one block per λ, labels only.
void dump_sigma(std::ostream& os, const Workbench& wb);
void dump_k(std::ostream& os, const Workbench& wb);
void dump_lifts(std::ostream& os, const Workbench& wb);
void dump_quiver(std::ostream& os, const Workbench& wb);

/// Parsed dump: section -> lambda -> ordered (input, output) rows.
using TableDump =
    std::map<std::string, std::map<std::string, std::vector<std::pair<std::string, std::string>>>>;
TableDump read_table_dump(std::istream& is);

}  // namespace dynrefl
