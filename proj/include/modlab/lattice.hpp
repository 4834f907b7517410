#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "modlab/module.hpp"

namespace modlab {

// Every submodule of a finite module, sorted by (size, element list). Node 0
// is the zero submodule and the last node is the whole module.
class SubmoduleLattice {
 public:
  static std::shared_ptr<const SubmoduleLattice> build(const ModulePtr& m, const Limits& limits = default_limits());

  const ModulePtr& module() const { return module_; }
  std::size_t size() const { return nodes_.size(); }
  const Submodule& operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<Submodule>& nodes() const { return nodes_; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return nodes_.size() - 1; }

  bool leq(std::size_t i, std::size_t j) const { return (up_[i][j >> 6] >> (j & 63)) & 1u; }
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;

  std::optional<std::size_t> find(const ElementSet& s) const;
  // Throws NotSubmodule when the set is not a node.
  std::size_t index_of(const ElementSet& s) const;
  std::size_t index_of(const Submodule& s) const { return index_of(s.element_set()); }

  // Upper covers of each node (Hasse diagram edges).
  const std::vector<std::size_t>& covers(std::size_t i) const { return covers_[i]; }
  // Nodes generated by a single element.
  const std::vector<std::size_t>& cyclic() const { return cyclic_; }
  // Nodes x with lo <= x <= hi, in lattice order.
  std::vector<std::size_t> interval(std::size_t lo, std::size_t hi) const;
  // radicals()[i] is the node X.J(R) for X = node i. Computed on first use.
  const std::vector<std::size_t>& radicals() const;

  // {"nodes": [{"size", "generators"}], "covers": [[...]]}
  std::string hasse_json() const;

 private:
  ModulePtr module_;
  std::vector<Submodule> nodes_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<std::vector<std::uint64_t>> up_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::size_t> cyclic_;
  std::vector<std::uint32_t> join_, meet_;  // dense tables for moderate lattices
  mutable std::once_flag radicals_once_;
  mutable std::vector<std::size_t> radicals_;
};

using LatticePtr = std::shared_ptr<const SubmoduleLattice>;

// Memoized by module identity; safe to call concurrently.
LatticePtr submodules(const ModulePtr& m);

// J(R) as a set of ring codes: the intersection of the maximal right ideals.
const ElementSet& jacobson_radical(const RingPtr& ring);

// A.J(R), the radical of A viewed as a module.
Submodule radical_of(const Submodule& a);
Submodule radical(const ModulePtr& m);
Submodule socle(const ModulePtr& m);

// Nakayama fast path: A <= Rad(M).
bool is_small(const Submodule& a);
// For every proper submodule B, A + B != M.
bool is_small_by_scan(const Submodule& a);
bool is_essential(const Submodule& a);

// Relative versions inside the subquotient hi/lo of one lattice; a, lo, hi
// are node indices with lo <= a <= hi.
std::size_t radical_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi);
std::size_t socle_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi);
bool small_in(const SubmoduleLattice& lat, std::size_t a, std::size_t lo, std::size_t hi);
bool small_in_by_scan(const SubmoduleLattice& lat, std::size_t a, std::size_t lo, std::size_t hi);

}  // namespace modlab
