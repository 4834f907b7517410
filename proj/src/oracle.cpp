#include "modlab/oracle.hpp"

#include <random>

#include "modlab/cosingular.hpp"
#include "modlab/hom.hpp"
#include "modlab/lattice.hpp"
#include "modlab/structure.hpp"

namespace modlab {

namespace {

void record(OracleResult& r, bool agree, const std::string& what) {
  ++r.checked;
  if (agree) return;
  ++r.mismatches;
  if (r.examples.size() < 5) r.examples.push_back(what);
}

std::string where(const ModuleCatalog& c, std::size_t i) { return c.ring_id + "#" + std::to_string(i); }

}  // namespace

std::vector<ModuleCatalog> default_catalogs(const CatalogPolicy& policy) {
  std::vector<ModuleCatalog> out;
  for (const auto& id : default_ring_ids()) out.push_back(enumerate_modules(id, ring_from_id(id), policy));
  return out;
}

OracleResult check_small_catalog(const std::vector<ModuleCatalog>& catalogs) {
  OracleResult r{"small", 0, 0, {}};
  for (const auto& c : catalogs)
    for (std::size_t i = 0; i < c.modules.size(); ++i) {
      const SubmoduleLattice& lat = *submodules(c.modules[i]);
      for (std::size_t a = 0; a < lat.size(); ++a)
        record(r, is_small(lat[a]) == is_small_by_scan(lat[a]), where(c, i) + " node " + std::to_string(a));
    }
  return r;
}

OracleResult check_small_random(const std::vector<RingPtr>& rings, std::size_t samples, std::uint64_t seed) {
  OracleResult r{"small-random", 0, 0, {}};
  std::mt19937_64 rng(seed);
  const auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  for (std::size_t s = 0; s < samples; ++s) {
    const RingPtr& ring = rings[pick(rings.size())];
    ModulePtr f = regular_module(ring);
    if (pick(2) == 1 && f->size() * f->size() <= 256) f = direct_sum_module(f, regular_module(ring));
    std::vector<Code> kernel_gens(pick(3));
    for (auto& g : kernel_gens) g = static_cast<Code>(pick(f->size()));
    const ModulePtr m = quotient(f, span(f, kernel_gens)).module;
    std::vector<Code> gens(1 + pick(2));
    for (auto& g : gens) g = static_cast<Code>(pick(m->size()));
    const Submodule a = span(m, gens);
    record(r, is_small(a) == is_small_by_scan(a), ring->name() + " sample " + std::to_string(s));
  }
  return r;
}

OracleResult check_summand_catalog(const std::vector<ModuleCatalog>& catalogs) {
  OracleResult r{"summand", 0, 0, {}};
  for (const auto& c : catalogs)
    for (std::size_t i = 0; i < c.modules.size(); ++i) {
      const auto end = EndRing::create(c.modules[i]);
      const SubmoduleLattice& lat = *submodules(c.modules[i]);
      for (std::size_t a = 0; a < lat.size(); ++a)
        record(r, is_direct_summand(lat[a]) == idempotent_with_image(*end, lat[a]).has_value(),
               where(c, i) + " node " + std::to_string(a));
    }
  return r;
}

OracleResult check_zbar_reject(const std::vector<ModuleCatalog>& catalogs) {
  OracleResult r{"zbar", 0, 0, {}};
  for (const auto& c : catalogs) {
    std::vector<std::size_t> small_targets;
    for (std::size_t j = 0; j < c.modules.size(); ++j)
      if (is_small_module(c.modules[j])) small_targets.push_back(j);
    for (std::size_t i = 0; i < c.modules.size(); ++i) {
      const Submodule z = zbar(c.modules[i]);
      for (std::size_t j : small_targets)
        for (const auto& g : hom_set(c.modules[i], c.modules[j]))
          record(r, z.subset_of(kernel_image(g).first), where(c, i) + " -> " + where(c, j));
    }
  }
  return r;
}

OracleResult check_duality_hulls(const std::vector<ModuleCatalog>& catalogs) {
  OracleResult r{"duality", 0, 0, {}};
  for (const auto& c : catalogs)
    for (std::size_t i = 0; i < c.modules.size(); ++i) {
      const ModulePtr& m = c.modules[i];
      record(r, is_isomorphic(character_dual(character_dual(m)), m), where(c, i) + " double dual");
      const Cover hull = injective_hull(m);
      const auto [kernel, image] = kernel_image(hull.map);
      record(r, kernel.is_zero() && is_essential(image), where(c, i) + " essential in hull");
      record(r, is_injective(hull.module), where(c, i) + " hull injective");
    }
  return r;
}

}  // namespace modlab
