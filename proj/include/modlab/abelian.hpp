#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace modlab {

// A finite abelian group given extensionally: element ids drawn from
// [0, universe), an identity id and an addition callback.
struct AbelianGroupView {
  std::span<const std::uint32_t> members;
  std::uint32_t zero = 0;
  std::size_t universe = 0;
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> add;
};

// Generators g_1..g_k with orders n_1..n_k such that every member is
// uniquely sum t_i g_i with 0 <= t_i < n_i.
struct CyclicBasis {
  std::vector<std::uint32_t> generators;
  std::vector<std::int64_t> orders;
  // codes[id] is the mixed-radix code of the member in this basis, -1 for
  // ids outside the group.
  std::vector<std::int32_t> codes;
  // elements[code] is the member id carrying that code.
  std::vector<std::uint32_t> elements;
};

// Splits off cyclic summands generated by elements of maximal order in
// successive quotients and lifts them back through the chain. Iteration is
// in increasing id order, so the result is deterministic.
CyclicBasis decompose_abelian(const AbelianGroupView& group);

}  // namespace modlab
