#include "modlab/abelian.hpp"

#include <algorithm>

#include "modlab/error.hpp"

namespace modlab {

namespace {

std::uint32_t multiple(const AbelianGroupView& g, std::uint32_t x, std::int64_t n) {
  std::uint32_t acc = g.zero;
  std::uint32_t base = x;
  while (n > 0) {
    if (n & 1) acc = g.add(acc, base);
    base = g.add(base, base);
    n >>= 1;
  }
  return acc;
}

struct Level {
  std::uint32_t generator;
  std::int64_t order;
  std::vector<std::int32_t> rep;  // coset representative modulo H_level
};

}  // namespace

CyclicBasis decompose_abelian(const AbelianGroupView& group) {
  std::vector<std::uint32_t> members(group.members.begin(), group.members.end());
  std::sort(members.begin(), members.end());
  const std::size_t total = members.size();
  if (total == 0) throw AlgebraError(ErrorCode::InvalidInput, "empty group");

  std::vector<std::int32_t> rep(group.universe, -1);
  for (auto x : members) rep[x] = static_cast<std::int32_t>(x);
  std::vector<std::uint32_t> h_list{group.zero};
  std::vector<Level> levels;

  while (h_list.size() < total) {
    const std::int32_t zero_rep = rep[group.zero];
    std::uint32_t best = group.zero;
    std::int64_t best_order = 0;
    for (auto x : members) {
      if (rep[x] != static_cast<std::int32_t>(x)) continue;
      std::int64_t n = 1;
      std::uint32_t y = x;
      while (rep[y] != zero_rep) {
        y = group.add(y, x);
        ++n;
      }
      if (n > best_order) {
        best_order = n;
        best = x;
      }
    }
    levels.push_back(Level{best, best_order, rep});

    std::vector<std::uint32_t> next;
    next.reserve(h_list.size() * static_cast<std::size_t>(best_order));
    std::uint32_t shift = group.zero;
    for (std::int64_t t = 0; t < best_order; ++t) {
      for (auto h : h_list) next.push_back(group.add(h, shift));
      shift = group.add(shift, best);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    h_list = std::move(next);

    std::fill(rep.begin(), rep.end(), -1);
    for (auto x : members) {
      if (rep[x] >= 0) continue;
      for (auto h : h_list) rep[group.add(x, h)] = static_cast<std::int32_t>(x);
    }
  }

  CyclicBasis basis;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    std::uint32_t h = levels[k].generator;
    const std::int64_t o = levels[k].order;
    for (std::size_t j = k; j-- > 0;) {
      const Level& lv = levels[j];
      const std::int32_t zero_rep = lv.rep[group.zero];
      std::uint32_t cand = h;
      bool found = false;
      for (std::int64_t t = 0; t < lv.order; ++t) {
        if (lv.rep[multiple(group, cand, o)] == zero_rep) {
          found = true;
          break;
        }
        cand = group.add(cand, lv.generator);
      }
      if (!found) throw AlgebraError(ErrorCode::InvalidInput, "abelian decomposition failed to lift a generator");
      h = cand;
    }
    basis.generators.push_back(h);
    basis.orders.push_back(o);
  }

  // Enumerate members by basis code.
  basis.elements.assign(total, group.zero);
  basis.codes.assign(group.universe, -1);
  std::vector<std::int64_t> digits(basis.orders.size(), 0);
  std::vector<std::int64_t> strides(basis.orders.size(), 1);
  for (std::size_t i = 1; i < strides.size(); ++i) strides[i] = strides[i - 1] * basis.orders[i - 1];
  for (std::size_t c = 1; c < total; ++c) {
    std::size_t i = 0;
    while (true) {
      if (++digits[i] < basis.orders[i]) break;
      digits[i] = 0;
      ++i;
    }
    basis.elements[c] = group.add(basis.elements[c - static_cast<std::size_t>(strides[i])], basis.generators[i]);
  }
  for (std::size_t c = 0; c < total; ++c) {
    if (basis.codes[basis.elements[c]] != -1)
      throw AlgebraError(ErrorCode::InvalidInput, "abelian decomposition produced a non-basis");
    basis.codes[basis.elements[c]] = static_cast<std::int32_t>(c);
  }
  return basis;
}

}  // namespace modlab
