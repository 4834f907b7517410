#include "modlab/radix.hpp"

#include <numeric>
#include <sstream>

#include "modlab/error.hpp"

namespace modlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::IllFormedConstants: return "IllFormedConstants";
    case ErrorCode::IllFormedAction: return "IllFormedAction";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotSubmodule: return "NotSubmodule";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::IdempotentSearchExceeded: return "IdempotentSearchExceeded";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

const Limits& default_limits() {
  static const Limits limits;
  return limits;
}

MixedRadix::MixedRadix(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  strides_.resize(orders_.size());
  std::int64_t s = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 1) throw AlgebraError(ErrorCode::InvalidInput, "component order must be positive");
    strides_[i] = s;
    s *= orders_[i];
    if (s > (std::int64_t{1} << 30)) throw AlgebraError(ErrorCode::SizeLimitExceeded, "group too large to encode");
  }
  size_ = static_cast<std::size_t>(s);
}

Coords MixedRadix::decode(Code c) const {
  Coords out(orders_.size());
  decode_into(c, out);
  return out;
}

void MixedRadix::decode_into(Code c, std::span<std::int64_t> out) const {
  std::int64_t v = c;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out[i] = v % orders_[i];
    v /= orders_[i];
  }
}

Code MixedRadix::encode(std::span<const std::int64_t> x) const {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) c += mod_reduce(x[i], orders_[i]) * strides_[i];
  return static_cast<Code>(c);
}

Code MixedRadix::add(Code a, Code b) const {
  std::int64_t va = a, vb = b, c = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::int64_t d = orders_[i];
    std::int64_t s = va % d + vb % d;
    if (s >= d) s -= d;
    c += s * strides_[i];
    va /= d;
    vb /= d;
  }
  return static_cast<Code>(c);
}

Code MixedRadix::neg(Code a) const {
  std::int64_t va = a, c = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::int64_t d = orders_[i];
    std::int64_t x = va % d;
    c += (x == 0 ? 0 : d - x) * strides_[i];
    va /= d;
  }
  return static_cast<Code>(c);
}

Code MixedRadix::scale(Code a, std::int64_t t) const {
  std::int64_t va = a, c = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::int64_t d = orders_[i];
    c += mod_reduce((va % d) * mod_reduce(t, d), d) * strides_[i];
    va /= d;
  }
  return static_cast<Code>(c);
}

std::int64_t MixedRadix::element_order(Code a) const {
  std::int64_t va = a, ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::int64_t d = orders_[i];
    std::int64_t x = va % d;
    va /= d;
    if (x != 0) ord = std::lcm(ord, d / std::gcd(d, x));
  }
  return ord;
}

std::int64_t MixedRadix::exponent() const {
  std::int64_t e = 1;
  for (auto d : orders_) e = std::lcm(e, d);
  return e;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void reduce_rows(IntMatrix& m, const std::vector<std::int64_t>& row_orders) {
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = mod_reduce(m(i, j), row_orders[i]);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, const std::vector<std::int64_t>& row_orders) {
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a.cols; ++k) s += a(i, k) * b(k, j);
      out(i, j) = mod_reduce(s, row_orders[i]);
    }
  return out;
}

Coords apply(const IntMatrix& m, std::span<const std::int64_t> x, const std::vector<std::int64_t>& row_orders) {
  Coords y(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
    y[i] = mod_reduce(s, row_orders[i]);
  }
  return y;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace modlab
