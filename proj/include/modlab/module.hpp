#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "modlab/element_set.hpp"
#include "modlab/ring.hpp"

namespace modlab {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

// A finite unitary right module. Coordinates live in Z/m_1 x ... x Z/m_t and
// the action of ring basis element e_b is the matrix A_b: x.e_b = A_b x.
class FiniteModule : public std::enable_shared_from_this<FiniteModule> {
 public:
  static ModulePtr create(RingPtr ring, std::vector<std::int64_t> orders, std::vector<IntMatrix> action,
                          const Limits& limits = default_limits());

  const RingPtr& ring() const { return ring_; }
  const MixedRadix& radix() const { return radix_; }
  const std::vector<std::int64_t>& orders() const { return radix_.orders(); }
  std::size_t rank() const { return radix_.rank(); }
  std::size_t size() const { return radix_.size(); }
  bool is_zero() const { return size() == 1; }
  const std::vector<IntMatrix>& action() const { return action_; }

  Code add(Code a, Code b) const {
    return add_table_.empty() ? radix_.add(a, b) : add_table_[static_cast<std::size_t>(a) * size() + b];
  }
  Code neg(Code a) const { return radix_.neg(a); }
  Code scale(Code a, std::int64_t t) const { return radix_.scale(a, t); }
  Code act_basis(Code x, std::size_t b) const { return act_[b * size() + x]; }
  // x . r for an arbitrary ring element r.
  Code act(Code x, Code r) const;
  // Matrix of right multiplication by r.
  IntMatrix action_matrix(Code r) const;

  // A small generating set as a right module, minimal when one or two
  // generators suffice. Computed once.
  const std::vector<Code>& generators() const;

  // Structural identity (ring key plus presentation).
  const std::string& key() const { return key_; }

 private:
  FiniteModule() = default;

  RingPtr ring_;
  MixedRadix radix_;
  std::vector<IntMatrix> action_;
  std::vector<Code> act_;
  std::vector<Code> add_table_;
  std::string key_;
  mutable std::once_flag generators_once_;
  mutable std::vector<Code> generators_;
};

// The closure of a generating list: its element set and a short list of
// additive generators.
struct Closure {
  ElementSet elements;
  std::vector<Code> additive_generators;
};
Closure close_span(const FiniteModule& m, std::span<const Code> gens);

// An action-closed subgroup of a parent module. Equality is equality of
// element sets within the same parent.
class Submodule {
 public:
  Submodule() = default;
  Submodule(ModulePtr parent, ElementSet elements, std::vector<Code> additive_generators)
      : parent_(std::move(parent)), elements_(std::move(elements)), generators_(std::move(additive_generators)) {}

  const ModulePtr& parent() const { return parent_; }
  const ElementSet& element_set() const { return elements_; }
  std::vector<Code> elements() const { return elements_.to_vector(); }
  const std::vector<Code>& generators() const { return generators_; }
  std::size_t size() const { return elements_.count(); }
  bool contains(Code c) const { return elements_.contains(c); }
  bool is_zero() const { return size() == 1; }
  bool is_whole() const { return size() == parent_->size(); }
  bool subset_of(const Submodule& other) const { return elements_.subset_of(other.elements_); }

  bool operator==(const Submodule& other) const {
    return (parent_ == other.parent_ || parent_->key() == other.parent_->key()) && elements_ == other.elements_;
  }

 private:
  ModulePtr parent_;
  ElementSet elements_;
  std::vector<Code> generators_;
};

Submodule span(const ModulePtr& m, std::span<const Code> gens);
Submodule zero_submodule(const ModulePtr& m);
Submodule whole_submodule(const ModulePtr& m);
// Validates closure; throws NotSubmodule otherwise.
Submodule submodule_from_elements(const ModulePtr& m, const ElementSet& elements);
Submodule sum(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);
// Additive generators of an additive subgroup, taken greedily in code order.
std::vector<Code> additive_generators(const FiniteModule& m, const ElementSet& elements);

// The module upper/lower for submodules lower <= upper of m, with the
// projection of parent codes and representative lifts.
struct Subquotient {
  ModulePtr module;
  std::vector<std::int32_t> project;  // parent code -> code in module, -1 outside upper
  std::vector<Code> lift;             // code in module -> parent representative
};
Subquotient subquotient(const ModulePtr& m, const ElementSet& upper, const ElementSet& lower);

ModulePtr zero_module(const RingPtr& ring);
ModulePtr regular_module(const RingPtr& ring);
// Block-diagonal action; coordinates of a come first.
ModulePtr direct_sum_module(const ModulePtr& a, const ModulePtr& b);

}  // namespace modlab
