#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modlab/catalog.hpp"
#include "modlab/io.hpp"
#include "modlab/ttheory.hpp"

namespace modlab {

// Every predicate of one module under its stable identifier, plus the
// independent routes used as cross-checks and internal-consistency flags.
struct PropertyReport {
  std::string module_id;
  Json values;        // predicate id -> bool or "unevaluated"
  Json cross_checks;  // alternative routes, same encoding
  Json counts;        // submodules with each per-submodule property
  Json cosingular;
  std::size_t lattice_size = 0;
  std::optional<std::size_t> end_size;
  std::vector<std::string> flags;

  std::optional<bool> value(const std::string& id) const;
  Json to_json() const;
  static PropertyReport from_json(const Json& j);
};

// Predicate identifiers in report order.
const std::vector<std::string>& predicate_ids();

PropertyReport profile_module(TAnalysis& t, const std::string& module_id);
PropertyReport profile_module(const ModulePtr& m, const std::string& module_id = "M");

enum class SuiteKind {
  Equivalence,  // statements must all have the same truth value
  Implication,  // every statement is a claim that must hold
  Universal,    // catalog-wide statements compared pairwise
};
const char* to_string(SuiteKind kind);

struct InstanceRecord {
  Json subject;
  std::vector<std::optional<bool>> values;  // nullopt: unevaluated
  bool agree = true;
  bool skipped = false;
  std::string note;
  Json witness;  // set iff !agree
};

struct TheoremReport {
  std::string theorem;
  std::string ring_id;
  SuiteKind kind = SuiteKind::Equivalence;
  std::string scope;
  std::vector<std::string> statements;
  std::vector<InstanceRecord> instances;
  Json extra;
  std::size_t agreements = 0, disagreements = 0, skipped = 0;
  double runtime_seconds = 0;  // reported on the console, not serialized

  void tally();
  Json to_json() const;
};

const std::vector<std::string>& suite_ids();
bool is_suite_id(const std::string& id);
// The catalog-wide suite; every other suite runs module by module.
bool is_universal_suite(const std::string& id);

// An empty report for suite id over the catalog's ring.
TheoremReport new_report(const std::string& id, const ModuleCatalog& catalog);
// Instances of a per-module suite contributed by catalog member index.
std::vector<InstanceRecord> module_instances(const std::string& id, const ModuleCatalog& catalog, std::size_t index,
                                             TAnalysis& t);

// Injective hull of a catalog member, matched against the catalog when
// possible and analysed directly otherwise.
struct HullInfo {
  std::size_t size = 0;
  std::optional<std::size_t> catalog_index;
  std::optional<bool> t_lifting;  // nullopt when the hull exceeds the size bound
};
HullInfo hull_info(const ModuleCatalog& catalog, std::size_t index);

// Statements quantified over the whole catalog, from member profiles.
TheoremReport universal_report(const ModuleCatalog& catalog, const std::vector<PropertyReport>& profiles,
                               const std::vector<HullInfo>& hulls);

// Runs one suite over a catalog on the calling thread.
TheoremReport verify_theorem(const std::string& id, const ModuleCatalog& catalog);

struct RunConfig {
  std::vector<std::string> suites;  // empty: all
  std::vector<std::string> rings;   // empty: the default set
  CatalogPolicy policy;
  std::string out_dir;    // empty: no files
  std::string cache_dir;  // empty: no profile cache
  unsigned jobs = 1;
};

struct RunResult {
  int exit_code = 0;
  std::vector<TheoremReport> reports;
  std::size_t disagreements = 0;
  std::size_t flags = 0;
};

// Exit code 0 when nothing disagrees and no profile is flagged, 1 otherwise,
// 2 for an invalid configuration.
RunResult run_all(const RunConfig& config, std::ostream& log);

}  // namespace modlab
