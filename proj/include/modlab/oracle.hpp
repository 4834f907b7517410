#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modlab/catalog.hpp"

namespace modlab {

// Agreement count between a fast path and an independent route.
struct OracleResult {
  std::string check;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> examples;  // first few mismatches

  bool ok() const { return mismatches == 0 && checked > 0; }
};

// A <= Rad(M) against the definitional scan, on every (A, M) of the catalogs.
OracleResult check_small_catalog(const std::vector<ModuleCatalog>& catalogs);
// The same on random quotients of R^n and random submodules.
OracleResult check_small_random(const std::vector<RingPtr>& rings, std::size_t samples, std::uint64_t seed);
// Complement scan against the existence of an idempotent with image A.
OracleResult check_summand_catalog(const std::vector<ModuleCatalog>& catalogs);
// Z(M) <= ker g for every hom g from M into a small catalog module.
OracleResult check_zbar_reject(const std::vector<ModuleCatalog>& catalogs);
// D(D(M)) isomorphic to M, M essential in E(M), E(M) injective.
OracleResult check_duality_hulls(const std::vector<ModuleCatalog>& catalogs);

std::vector<ModuleCatalog> default_catalogs(const CatalogPolicy& policy = {});

}  // namespace modlab
