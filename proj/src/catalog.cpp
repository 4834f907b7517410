#include "modlab/catalog.hpp"

#include <algorithm>

#include "modlab/hom.hpp"
#include "modlab/lattice.hpp"
#include "modlab/structure.hpp"

namespace modlab {

namespace {

ModulePtr free_module(const RingPtr& ring, int n) {
  if (n == 0) return zero_module(ring);
  ModulePtr f = regular_module(ring);
  for (int i = 1; i < n; ++i) f = direct_sum_module(f, regular_module(ring));
  return f;
}

bool admit(ModuleCatalog& catalog, const ModulePtr& m) {
  if (m->size() > catalog.policy.max_size) return false;
  if (find_isomorphic(catalog, m)) return false;
  catalog.modules.push_back(m);
  return true;
}

}  // namespace

std::optional<std::size_t> find_isomorphic(const ModuleCatalog& catalog, const ModulePtr& m) {
  for (std::size_t i = 0; i < catalog.modules.size(); ++i)
    if (catalog.modules[i]->size() == m->size() && is_isomorphic(catalog.modules[i], m)) return i;
  return std::nullopt;
}

ModuleCatalog enumerate_modules(const std::string& ring_id, const RingPtr& ring, const CatalogPolicy& policy) {
  if (policy.max_generators < 0 || policy.max_size < 1)
    throw AlgebraError(ErrorCode::InvalidInput, "catalog policy out of range");
  ModuleCatalog catalog{ring_id, ring, policy, {}, {}};
  catalog.modules.push_back(zero_module(ring));
  for (int n = 1; n <= policy.max_generators; ++n) {
    try {
      const ModulePtr f = free_module(ring, n);
      const LatticePtr lat = submodules(f);
      // Largest kernels first, so small quotients enter before large ones.
      for (std::size_t k = lat->size(); k-- > 0;) {
        const Submodule& kernel = (*lat)[k];
        if (f->size() / kernel.size() > policy.max_size) continue;
        admit(catalog, quotient(f, kernel).module);
      }
    } catch (const AlgebraError& e) {
      if (e.code() != ErrorCode::SizeLimitExceeded) throw;
      catalog.skipped.push_back(ring_id + "^" + std::to_string(n) + ": " + e.what());
    }
  }
  // Summands of members; repeat until nothing new appears.
  for (std::size_t i = 0; i < catalog.modules.size(); ++i) {
    const ModulePtr m = catalog.modules[i];
    const LatticePtr lat = submodules(m);
    for (std::size_t a = 1; a < lat->top(); ++a)
      if (is_direct_summand((*lat)[a])) admit(catalog, as_module((*lat)[a]).module);
  }
  std::stable_sort(catalog.modules.begin(), catalog.modules.end(),
                   [](const ModulePtr& a, const ModulePtr& b) { return a->size() < b->size(); });
  return catalog;
}

Json catalog_to_json(const ModuleCatalog& catalog) {
  Json modules = Json::array();
  for (std::size_t i = 0; i < catalog.modules.size(); ++i) {
    const auto& m = catalog.modules[i];
    modules.push_back(Json{{"index", i},
                           {"size", m->size()},
                           {"submodules", submodules(m)->size()},
                           {"module", module_to_json(*m, catalog.ring_id)}});
  }
  return Json{{"ring", catalog.ring_id},
              {"policy", {{"max_generators", catalog.policy.max_generators}, {"max_size", catalog.policy.max_size}}},
              {"modules", modules},
              {"skipped", catalog.skipped}};
}

}  // namespace modlab
