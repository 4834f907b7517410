#pragma once

#include <vector>

#include "modlab/io.hpp"
#include "modlab/module.hpp"

namespace fixtures {

using namespace modlab;

// Module with diagonal action: coordinate i times ring basis element b is
// scalars[b][i] times coordinate i.
inline ModulePtr diagonal(const RingPtr& ring, std::vector<std::int64_t> orders,
                          const std::vector<std::vector<std::int64_t>>& scalars) {
  std::vector<IntMatrix> action;
  for (const auto& s : scalars) {
    IntMatrix a(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) a(i, i) = s[i];
    action.push_back(a);
  }
  return FiniteModule::create(ring, std::move(orders), std::move(action));
}

// Z/n as a module over Z/m with n | m.
inline ModulePtr cyclic(const RingPtr& zm, std::int64_t n) { return diagonal(zm, {n}, {{1}}); }

// Z/a (+) Z/b over Z/m.
inline ModulePtr cyclic2(const RingPtr& zm, std::int64_t a, std::int64_t b) { return diagonal(zm, {a, b}, {{1, 1}}); }

inline RingPtr f2z4() { return ring_from_id("F2xZ4"); }
// The simple F2-block S over F2 x Z4.
inline ModulePtr block_s(const RingPtr& r) { return diagonal(r, {2}, {{1}, {0}}); }
// The Z4-block over F2 x Z4.
inline ModulePtr block_z4(const RingPtr& r) { return diagonal(r, {4}, {{0}, {1}}); }
// S (+) Z4-block.
inline ModulePtr s_plus_z4(const RingPtr& r) { return diagonal(r, {2, 4}, {{1, 0}, {0, 1}}); }

}  // namespace fixtures
