#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "modlab/lattice.hpp"

namespace modlab {

// Cosingular radicals of the subquotients hi/lo of one module, computed on
// nodes of its lattice and memoized. Not thread-safe; use one per worker.
class CosingularCalculator {
 public:
  explicit CosingularCalculator(LatticePtr lattice);

  const SubmoduleLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }

  // Whether hi/y is a small module.
  bool quotient_is_small(std::size_t y, std::size_t hi);
  // Nodes y in [lo, hi] with hi/y small.
  std::vector<std::size_t> small_quotients(std::size_t lo, std::size_t hi);
  // Preimage in hi of Z(hi/lo): the meet of all y in [lo, hi] with hi/y small.
  std::size_t zbar_in(std::size_t lo, std::size_t hi);
  // Preimage of Z(Z(hi/lo)).
  std::size_t zbar2_in(std::size_t lo, std::size_t hi);

  std::size_t zbar() { return zbar_in(0, lattice_->top()); }
  std::size_t zbar2() { return zbar2_in(0, lattice_->top()); }

 private:
  std::uint64_t key(std::size_t a, std::size_t b) const { return a * lattice_->size() + b; }

  LatticePtr lattice_;
  std::unordered_map<std::uint64_t, bool> small_quot_;
  std::unordered_map<std::uint64_t, std::size_t> zbar_;
};

enum class CosingularClass { Cosingular, Noncosingular, Mixed };
const char* to_string(CosingularClass c);

struct CosingularProfile {
  Submodule zbar;
  Submodule zbar2;
  CosingularClass classification = CosingularClass::Mixed;
  // Submodules N with M/N small.
  std::vector<Submodule> small_quotient_witnesses;
};

Submodule zbar(const ModulePtr& m);
Submodule zbar2(const ModulePtr& m);
CosingularProfile classify(const ModulePtr& m);

}  // namespace modlab
