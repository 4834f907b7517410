#pragma once

#include <memory>
#include <string>
#include <vector>

#include "modlab/error.hpp"
#include "modlab/radix.hpp"

namespace modlab {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// structure_constants[i][j] holds the coordinates of e_i * e_j.
using StructureConstants = std::vector<std::vector<Coords>>;

// A finite unital associative ring presented by an additive cyclic
// decomposition and the products of basis elements. Immutable once built.
class FiniteRing {
 public:
  static RingPtr create(std::vector<std::int64_t> orders, StructureConstants constants, Coords one,
                        const Limits& limits = default_limits(), std::string name = {});

  // Same, but the identity is located by exhaustive search.
  static RingPtr create_with_search(std::vector<std::int64_t> orders, StructureConstants constants,
                                    const Limits& limits = default_limits(), std::string name = {});

  const MixedRadix& radix() const { return radix_; }
  const std::vector<std::int64_t>& orders() const { return radix_.orders(); }
  std::size_t rank() const { return radix_.rank(); }
  std::size_t size() const { return radix_.size(); }
  const StructureConstants& constants() const { return constants_; }
  const Coords& one_coords() const { return one_; }
  Code one() const { return one_code_; }
  Code zero() const { return 0; }
  Code basis(std::size_t i) const { return radix_.unit(i); }

  Code add(Code a, Code b) const { return radix_.add(a, b); }
  Code neg(Code a) const { return radix_.neg(a); }
  Code mul(Code a, Code b) const;
  Coords mul(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;

  bool is_commutative() const;

  // Structural identity: two rings are the same iff their keys match.
  const std::string& key() const { return key_; }
  const std::string& name() const { return name_; }
  bool same_as(const FiniteRing& other) const { return key_ == other.key_; }

 private:
  FiniteRing() = default;

  MixedRadix radix_;
  StructureConstants constants_;
  Coords one_;
  Code one_code_ = 0;
  std::string key_;
  std::string name_;
  std::vector<Code> table_;  // full product table for small rings
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || a->same_as(*b); }

RingPtr cyclic_ring(std::int64_t n);
RingPtr product_ring(const RingPtr& a, const RingPtr& b);
// Upper triangular 2x2 matrices over Z/p with basis e11, e12, e22.
RingPtr upper_triangular_ring(std::int64_t p);
// Z/p[x]/(x^n) with basis 1, x, ..., x^(n-1).
RingPtr polynomial_quotient_ring(std::int64_t p, int n);
RingPtr opposite_ring(const RingPtr& r);

}  // namespace modlab
