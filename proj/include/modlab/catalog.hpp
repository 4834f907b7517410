#pragma once

#include <string>
#include <vector>

#include "modlab/io.hpp"
#include "modlab/module.hpp"

namespace modlab {

struct CatalogPolicy {
  int max_generators = 2;
  std::size_t max_size = 256;
};

// Modules over one ring, pairwise non-isomorphic, sorted by size.
struct ModuleCatalog {
  std::string ring_id;
  RingPtr ring;
  CatalogPolicy policy;
  std::vector<ModulePtr> modules;
  // Candidates dropped because a limit was hit.
  std::vector<std::string> skipped;
};

// Quotients of R^n for n <= max_generators with at most max_size elements,
// deduplicated up to isomorphism and closed under direct summands.
ModuleCatalog enumerate_modules(const std::string& ring_id, const RingPtr& ring, const CatalogPolicy& policy);

// Position of a module isomorphic to m, if any.
std::optional<std::size_t> find_isomorphic(const ModuleCatalog& catalog, const ModulePtr& m);

Json catalog_to_json(const ModuleCatalog& catalog);

}  // namespace modlab
