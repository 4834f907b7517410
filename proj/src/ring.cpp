#include "modlab/ring.hpp"

#include <sstream>

namespace modlab {

namespace {

std::string make_key(const std::vector<std::int64_t>& orders, const StructureConstants& c, const Coords& one) {
  std::ostringstream os;
  os << "o";
  for (auto d : orders) os << ':' << d;
  os << "|c";
  for (const auto& row : c)
    for (const auto& v : row)
      for (auto x : v) os << ':' << x;
  os << "|1";
  for (auto x : one) os << ':' << x;
  return os.str();
}

}  // namespace

RingPtr FiniteRing::create(std::vector<std::int64_t> orders, StructureConstants constants, Coords one,
                           const Limits& limits, std::string name) {
  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->radix_ = MixedRadix(orders);
  const std::size_t k = orders.size();
  if (ring->radix_.size() > limits.max_ring_size)
    throw AlgebraError(ErrorCode::SizeLimitExceeded, "ring of size " + std::to_string(ring->radix_.size()));
  if (constants.size() != k || one.size() != k)
    throw AlgebraError(ErrorCode::IllFormedConstants, "constant table does not match rank");
  for (std::size_t i = 0; i < k; ++i) {
    if (constants[i].size() != k) throw AlgebraError(ErrorCode::IllFormedConstants, "constant table is not square");
    for (std::size_t j = 0; j < k; ++j) {
      if (constants[i][j].size() != k)
        throw AlgebraError(ErrorCode::IllFormedConstants, "product vector has wrong length");
      for (std::size_t l = 0; l < k; ++l) {
        auto& v = constants[i][j][l];
        v = mod_reduce(v, orders[l]);
        // d_i e_i = 0 and d_j e_j = 0 must annihilate the product.
        if ((orders[i] * v) % orders[l] != 0 || (orders[j] * v) % orders[l] != 0)
          throw AlgebraError(ErrorCode::IllFormedConstants,
                             "product e" + std::to_string(i) + "*e" + std::to_string(j) + " ignores component orders");
      }
    }
  }
  for (std::size_t l = 0; l < k; ++l) one[l] = mod_reduce(one[l], orders[l]);
  ring->constants_ = std::move(constants);
  ring->one_ = std::move(one);
  ring->one_code_ = ring->radix_.encode(ring->one_);

  const auto& self = *ring;
  auto basis_vec = [k](std::size_t i) {
    Coords v(k, 0);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < k; ++i) {
    Coords ei = basis_vec(i);
    if (self.mul(self.one_, ei) != ei || self.mul(ei, self.one_) != ei)
      throw AlgebraError(ErrorCode::NoIdentity, "given identity does not fix e" + std::to_string(i));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Coords ei = basis_vec(i), ej = basis_vec(j), el = basis_vec(l);
        if (self.mul(self.mul(ei, ej), el) != self.mul(ei, self.mul(ej, el)))
          throw AlgebraError(ErrorCode::NonAssociative, "(e" + std::to_string(i) + "e" + std::to_string(j) + ")e" +
                                                            std::to_string(l) + " differs");
      }

  ring->key_ = make_key(ring->radix_.orders(), ring->constants_, ring->one_);
  ring->name_ = name;
  const std::size_t n = ring->radix_.size();
  if (n <= 256) {
    ring->table_.resize(n * n);
    for (Code a = 0; a < n; ++a)
      for (Code b = 0; b < n; ++b) {
        Coords x = ring->radix_.decode(a), y = ring->radix_.decode(b);
        ring->table_[a * n + b] = ring->radix_.encode(ring->mul(x, y));
      }
  }
  return ring;
}

Coords FiniteRing::mul(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
  const std::size_t k = rank();
  Coords out(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      const std::int64_t s = a[i] * b[j];
      const auto& c = constants_[i][j];
      for (std::size_t l = 0; l < k; ++l) out[l] += s * c[l];
    }
  }
  for (std::size_t l = 0; l < k; ++l) out[l] = mod_reduce(out[l], orders()[l]);
  return out;
}

Code FiniteRing::mul(Code a, Code b) const {
  if (!table_.empty()) return table_[a * size() + b];
  Coords x = radix_.decode(a), y = radix_.decode(b);
  return radix_.encode(mul(x, y));
}

bool FiniteRing::is_commutative() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (constants_[i][j] != constants_[j][i]) return false;
  return true;
}

RingPtr FiniteRing::create_with_search(std::vector<std::int64_t> orders, StructureConstants constants,
                                       const Limits& limits, std::string name) {
  const MixedRadix radix(orders);
  if (radix.size() > limits.max_ring_size)
    throw AlgebraError(ErrorCode::SizeLimitExceeded, "ring of size " + std::to_string(radix.size()));
  // Validate the table with a throwaway identity, then look for a real one.
  const std::size_t k = orders.size();
  if (constants.size() != k) throw AlgebraError(ErrorCode::IllFormedConstants, "constant table does not match rank");
  for (const auto& row : constants)
    if (row.size() != k) throw AlgebraError(ErrorCode::IllFormedConstants, "constant table is not square");
  auto probe = std::shared_ptr<FiniteRing>(new FiniteRing());
  probe->radix_ = radix;
  probe->constants_ = constants;
  for (Code u = 0; u < radix.size(); ++u) {
    Coords cu = radix.decode(u);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      Coords ei(k, 0);
      ei[i] = 1;
      Coords l = probe->mul(cu, ei), r = probe->mul(ei, cu);
      for (std::size_t t = 0; t < k; ++t) {
        if (mod_reduce(l[t] - ei[t], orders[t]) != 0 || mod_reduce(r[t] - ei[t], orders[t]) != 0) ok = false;
      }
    }
    if (ok) return create(std::move(orders), std::move(constants), std::move(cu), limits, std::move(name));
  }
  throw AlgebraError(ErrorCode::NoIdentity, "no two-sided identity exists");
}

RingPtr cyclic_ring(std::int64_t n) {
  return FiniteRing::create({n}, {{{1}}}, {1}, default_limits(), "Z" + std::to_string(n));
}

RingPtr product_ring(const RingPtr& a, const RingPtr& b) {
  const std::size_t ka = a->rank(), kb = b->rank(), k = ka + kb;
  std::vector<std::int64_t> orders = a->orders();
  orders.insert(orders.end(), b->orders().begin(), b->orders().end());
  StructureConstants c(k, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j)
      for (std::size_t l = 0; l < ka; ++l) c[i][j][l] = a->constants()[i][j][l];
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j)
      for (std::size_t l = 0; l < kb; ++l) c[ka + i][ka + j][ka + l] = b->constants()[i][j][l];
  Coords one = a->one_coords();
  one.insert(one.end(), b->one_coords().begin(), b->one_coords().end());
  std::string name;
  if (!a->name().empty() && !b->name().empty()) name = a->name() + "x" + b->name();
  return FiniteRing::create(std::move(orders), std::move(c), std::move(one), default_limits(), name);
}

RingPtr upper_triangular_ring(std::int64_t p) {
  // basis: 0 = e11, 1 = e12, 2 = e22
  StructureConstants c(3, std::vector<Coords>(3, Coords(3, 0)));
  c[0][0] = {1, 0, 0};
  c[0][1] = {0, 1, 0};
  c[1][2] = {0, 1, 0};
  c[2][2] = {0, 0, 1};
  return FiniteRing::create({p, p, p}, std::move(c), {1, 0, 1}, default_limits(), "T2F" + std::to_string(p));
}

RingPtr polynomial_quotient_ring(std::int64_t p, int n) {
  if (n < 1) throw AlgebraError(ErrorCode::InvalidInput, "polynomial quotient needs n >= 1");
  const auto k = static_cast<std::size_t>(n);
  StructureConstants c(k, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i + j < k) c[i][j][i + j] = 1;
  Coords one(k, 0);
  one[0] = 1;
  return FiniteRing::create(std::vector<std::int64_t>(k, p), std::move(c), std::move(one), default_limits(),
                            "Z" + std::to_string(p) + "[x]/x^" + std::to_string(n));
}

RingPtr opposite_ring(const RingPtr& r) {
  const std::size_t k = r->rank();
  StructureConstants c(k, std::vector<Coords>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c[i][j] = r->constants()[j][i];
  std::string name = r->name();
  if (!r->is_commutative() && !name.empty()) {
    if (name.ends_with("^op"))
      name.resize(name.size() - 3);
    else
      name += "^op";
  }
  return FiniteRing::create(r->orders(), std::move(c), r->one_coords(), default_limits(), name);
}

}  // namespace modlab
