#include "modlab/cosingular.hpp"

#include <algorithm>

#include "modlab/structure.hpp"

namespace modlab {

CosingularCalculator::CosingularCalculator(LatticePtr lattice) : lattice_(std::move(lattice)) {}

bool CosingularCalculator::quotient_is_small(std::size_t y, std::size_t hi) {
  auto it = small_quot_.find(key(y, hi));
  if (it != small_quot_.end()) return it->second;
  const SubmoduleLattice& lat = *lattice_;
  bool small;
  if (y == hi) {
    small = true;
  } else {
    const Subquotient sq = subquotient(lat.module(), lat[hi].element_set(), lat[y].element_set());
    small = is_small_module(sq.module);
  }
  small_quot_.emplace(key(y, hi), small);
  return small;
}

std::vector<std::size_t> CosingularCalculator::small_quotients(std::size_t lo, std::size_t hi) {
  const SubmoduleLattice& lat = *lattice_;
  std::vector<std::size_t> nodes = lat.interval(lo, hi);
  std::vector<std::size_t> small, large;
  // Quotients of small modules are small, so hi/y is small whenever hi/y'
  // is for some y' <= y, and large whenever hi/y' is large for some y' >= y.
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    const std::size_t y = *it;
    bool known = false, value = false;
    for (std::size_t b : large)
      if (lat.leq(y, b)) {
        known = true;
        break;
      }
    if (!known) value = quotient_is_small(y, hi);
    (value ? small : large).push_back(y);
  }
  std::sort(small.begin(), small.end());
  return small;
}

std::size_t CosingularCalculator::zbar_in(std::size_t lo, std::size_t hi) {
  auto it = zbar_.find(key(lo, hi));
  if (it != zbar_.end()) return it->second;
  std::size_t acc = hi;
  for (std::size_t y : small_quotients(lo, hi)) acc = lattice_->meet(acc, y);
  zbar_.emplace(key(lo, hi), acc);
  return acc;
}

std::size_t CosingularCalculator::zbar2_in(std::size_t lo, std::size_t hi) { return zbar_in(lo, zbar_in(lo, hi)); }

const char* to_string(CosingularClass c) {
  switch (c) {
    case CosingularClass::Cosingular:
      return "cosingular";
    case CosingularClass::Noncosingular:
      return "noncosingular";
    case CosingularClass::Mixed:
      return "mixed";
  }
  return "?";
}

Submodule zbar(const ModulePtr& m) {
  CosingularCalculator calc(submodules(m));
  return calc.lattice()[calc.zbar()];
}

Submodule zbar2(const ModulePtr& m) {
  CosingularCalculator calc(submodules(m));
  return calc.lattice()[calc.zbar2()];
}

CosingularProfile classify(const ModulePtr& m) {
  CosingularCalculator calc(submodules(m));
  const SubmoduleLattice& lat = calc.lattice();
  CosingularProfile p;
  const std::size_t z = calc.zbar();
  p.zbar = lat[z];
  p.zbar2 = lat[calc.zbar2()];
  // The zero module is both; report it as noncosingular.
  if (z == lat.top())
    p.classification = CosingularClass::Noncosingular;
  else if (z == 0)
    p.classification = CosingularClass::Cosingular;
  for (std::size_t y : calc.small_quotients(0, lat.top())) p.small_quotient_witnesses.push_back(lat[y]);
  return p;
}

}  // namespace modlab
