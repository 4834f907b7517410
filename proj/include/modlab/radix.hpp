#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modlab/element_set.hpp"

namespace modlab {

using Coords = std::vector<std::int64_t>;

inline std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
  x %= m;
  return x < 0 ? x + m : x;
}

// Additive group Z/d_1 x ... x Z/d_k with little-endian mixed-radix codes:
// code = x_1 + d_1 * (x_2 + d_2 * (...)).
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }

  Coords decode(Code c) const;
  void decode_into(Code c, std::span<std::int64_t> out) const;
  // Coordinates are reduced before encoding.
  Code encode(std::span<const std::int64_t> x) const;

  Code add(Code a, Code b) const;
  Code neg(Code a) const;
  Code scale(Code a, std::int64_t t) const;
  std::int64_t element_order(Code a) const;
  Code unit(std::size_t i) const { return static_cast<Code>(strides_[i]); }
  // Least common multiple of the component orders.
  std::int64_t exponent() const;

 private:
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> strides_;
  std::size_t size_ = 1;
};

// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  static IntMatrix identity(std::size_t n);

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool operator==(const IntMatrix&) const = default;
};

// Reduce row i modulo row_orders[i].
void reduce_rows(IntMatrix& m, const std::vector<std::int64_t>& row_orders);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, const std::vector<std::int64_t>& row_orders);
Coords apply(const IntMatrix& m, std::span<const std::int64_t> x, const std::vector<std::int64_t>& row_orders);

std::string to_string(const IntMatrix& m);

}  // namespace modlab
