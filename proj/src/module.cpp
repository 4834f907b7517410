#include "modlab/module.hpp"

#include <deque>
#include <sstream>

#include "modlab/abelian.hpp"

namespace modlab {

ModulePtr FiniteModule::create(RingPtr ring, std::vector<std::int64_t> orders, std::vector<IntMatrix> action,
                               const Limits& limits) {
  auto m = std::shared_ptr<FiniteModule>(new FiniteModule());
  m->radix_ = MixedRadix(std::move(orders));
  const auto& ord = m->radix_.orders();
  const std::size_t t = ord.size();
  const std::size_t k = ring->rank();
  if (m->radix_.size() > limits.max_module_size)
    throw AlgebraError(ErrorCode::SizeLimitExceeded, "module of size " + std::to_string(m->radix_.size()));
  if (action.size() != k) throw AlgebraError(ErrorCode::IllFormedAction, "need one action matrix per ring basis element");
  for (std::size_t b = 0; b < k; ++b) {
    auto& a = action[b];
    if (a.rows != t || a.cols != t) throw AlgebraError(ErrorCode::IllFormedAction, "action matrix has wrong shape");
    reduce_rows(a, ord);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        if ((ord[j] * a(i, j)) % ord[i] != 0)
          throw AlgebraError(ErrorCode::IllFormedAction, "action matrix ignores component orders");
        if ((ring->orders()[b] * a(i, j)) % ord[i] != 0)
          throw AlgebraError(ErrorCode::IllFormedAction, "action does not respect the additive order of e" +
                                                             std::to_string(b));
      }
  }
  const auto& c = ring->constants();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      // x.(e_i e_j) = (x.e_i).e_j, i.e. A_j A_i.
      IntMatrix lhs = multiply(action[j], action[i], ord);
      IntMatrix rhs(t, t);
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t p = 0; p < t * t; ++p) rhs.data[p] += c[i][j][l] * action[l].data[p];
      reduce_rows(rhs, ord);
      if (lhs != rhs)
        throw AlgebraError(ErrorCode::IllFormedAction,
                           "action incompatible with product e" + std::to_string(i) + "*e" + std::to_string(j));
    }
  {
    IntMatrix id(t, t);
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t p = 0; p < t * t; ++p) id.data[p] += ring->one_coords()[l] * action[l].data[p];
    reduce_rows(id, ord);
    IntMatrix expect = IntMatrix::identity(t);
    reduce_rows(expect, ord);
    if (id != expect) throw AlgebraError(ErrorCode::IllFormedAction, "identity of the ring does not act trivially");
  }

  m->ring_ = std::move(ring);
  m->action_ = std::move(action);
  const std::size_t n = m->radix_.size();
  m->act_.resize(k * n);
  Coords x(t);
  for (Code e = 0; e < n; ++e) {
    m->radix_.decode_into(e, x);
    for (std::size_t b = 0; b < k; ++b) m->act_[b * n + e] = m->radix_.encode(apply(m->action_[b], x, ord));
  }
  if (n <= 256) {
    m->add_table_.resize(n * n);
    for (Code a = 0; a < n; ++a)
      for (Code b = 0; b < n; ++b) m->add_table_[a * n + b] = m->radix_.add(a, b);
  }
  std::ostringstream os;
  os << m->ring_->key() << "#o";
  for (auto d : ord) os << ':' << d;
  os << "#a";
  for (const auto& a : m->action_)
    for (auto v : a.data) os << ':' << v;
  m->key_ = os.str();
  return m;
}

Code FiniteModule::act(Code x, Code r) const {
  const auto rc = ring_->radix().decode(r);
  Code acc = 0;
  for (std::size_t b = 0; b < rc.size(); ++b)
    if (rc[b] != 0) acc = add(acc, scale(act_basis(x, b), rc[b]));
  return acc;
}

IntMatrix FiniteModule::action_matrix(Code r) const {
  const auto rc = ring_->radix().decode(r);
  IntMatrix out(rank(), rank());
  for (std::size_t b = 0; b < rc.size(); ++b)
    for (std::size_t p = 0; p < out.data.size(); ++p) out.data[p] += rc[b] * action_[b].data[p];
  reduce_rows(out, orders());
  return out;
}

const std::vector<Code>& FiniteModule::generators() const {
  std::call_once(generators_once_, [this] {
    const std::size_t n = size();
    if (n == 1) return;
    std::vector<std::size_t> cyclic_size(n, 1);
    for (Code x = 1; x < n; ++x) {
      const Code g[1] = {x};
      Closure c = close_span(*this, g);
      cyclic_size[x] = c.elements.count();
      if (cyclic_size[x] == n) {
        generators_ = {x};
        return;
      }
    }
    if (n * n <= (std::size_t{1} << 20)) {
      for (Code x = 1; x < n; ++x)
        for (Code y = x + 1; y < n; ++y) {
          if (cyclic_size[x] * cyclic_size[y] < n) continue;
          const Code g[2] = {x, y};
          if (close_span(*this, g).elements.count() == n) {
            generators_ = {x, y};
            return;
          }
        }
    }
    // Greedy: repeatedly add the element that enlarges the span most.
    std::vector<Code> gens;
    std::size_t current = 1;
    while (current < n) {
      Code best = 0;
      std::size_t best_size = current;
      for (Code x = 1; x < n; ++x) {
        gens.push_back(x);
        std::size_t s = close_span(*this, gens).elements.count();
        gens.pop_back();
        if (s > best_size) {
          best_size = s;
          best = x;
        }
      }
      gens.push_back(best);
      current = best_size;
    }
    generators_ = std::move(gens);
  });
  return generators_;
}

Closure close_span(const FiniteModule& m, std::span<const Code> gens) {
  Closure out{ElementSet(m.size()), {}};
  out.elements.insert(0);
  std::vector<Code> h{0};
  std::deque<Code> work(gens.begin(), gens.end());
  const std::size_t k = m.ring()->rank();
  while (!work.empty()) {
    const Code w = work.front();
    work.pop_front();
    if (out.elements.contains(w)) continue;
    const std::size_t base = h.size();
    Code mult = w;
    while (!out.elements.contains(mult)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Code x = m.add(h[i], mult);
        out.elements.insert(x);
        h.push_back(x);
      }
      mult = m.add(mult, w);
    }
    out.additive_generators.push_back(w);
    for (std::size_t b = 0; b < k; ++b) work.push_back(m.act_basis(w, b));
  }
  return out;
}

Submodule span(const ModulePtr& m, std::span<const Code> gens) {
  for (auto g : gens)
    if (g >= m->size()) throw AlgebraError(ErrorCode::InvalidInput, "generator outside module");
  Closure c = close_span(*m, gens);
  return Submodule(m, std::move(c.elements), std::move(c.additive_generators));
}

Submodule zero_submodule(const ModulePtr& m) { return span(m, {}); }

Submodule whole_submodule(const ModulePtr& m) {
  std::vector<Code> units;
  for (std::size_t i = 0; i < m->rank(); ++i) units.push_back(m->radix().unit(i));
  ElementSet all(m->size());
  for (Code x = 0; x < m->size(); ++x) all.insert(x);
  return Submodule(m, std::move(all), std::move(units));
}

std::vector<Code> additive_generators(const FiniteModule& m, const ElementSet& elements) {
  ElementSet h(m.size());
  h.insert(0);
  std::vector<Code> hl{0}, gens;
  elements.for_each([&](Code w) {
    if (h.contains(w)) return;
    const std::size_t base = hl.size();
    Code mult = w;
    while (!h.contains(mult)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Code x = m.add(hl[i], mult);
        h.insert(x);
        hl.push_back(x);
      }
      mult = m.add(mult, w);
    }
    gens.push_back(w);
  });
  return gens;
}

Submodule submodule_from_elements(const ModulePtr& m, const ElementSet& elements) {
  if (elements.universe() != m->size()) throw AlgebraError(ErrorCode::NotSubmodule, "element set has wrong universe");
  if (!elements.contains(0)) throw AlgebraError(ErrorCode::NotSubmodule, "zero missing");
  bool closed = true;
  const std::size_t k = m->ring()->rank();
  auto gens = additive_generators(*m, elements);
  elements.for_each([&](Code x) {
    if (!closed) return;
    for (std::size_t b = 0; b < k; ++b)
      if (!elements.contains(m->act_basis(x, b))) closed = false;
  });
  // Additive closure: the subgroup generated must not exceed the set.
  if (closed) {
    Closure c = close_span(*m, gens);
    if (!(c.elements == elements)) closed = false;
  }
  if (!closed) throw AlgebraError(ErrorCode::NotSubmodule, "set is not closed under addition and action");
  return Submodule(m, elements, std::move(gens));
}

namespace {

void require_same_parent(const Submodule& a, const Submodule& b) {
  if (a.parent() != b.parent() && a.parent()->key() != b.parent()->key())
    throw AlgebraError(ErrorCode::ParentMismatch, "submodules of different modules");
}

}  // namespace

Submodule sum(const Submodule& a, const Submodule& b) {
  require_same_parent(a, b);
  const auto& m = *a.parent();
  ElementSet h = a.element_set();
  std::vector<Code> hl = a.elements();
  std::vector<Code> gens = a.generators();
  for (Code w : b.generators()) {
    if (h.contains(w)) continue;
    const std::size_t base = hl.size();
    Code mult = w;
    while (!h.contains(mult)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Code x = m.add(hl[i], mult);
        h.insert(x);
        hl.push_back(x);
      }
      mult = m.add(mult, w);
    }
    gens.push_back(w);
  }
  return Submodule(a.parent(), std::move(h), std::move(gens));
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  require_same_parent(a, b);
  ElementSet s = a.element_set() & b.element_set();
  auto gens = additive_generators(*a.parent(), s);
  return Submodule(a.parent(), std::move(s), std::move(gens));
}

Subquotient subquotient(const ModulePtr& m, const ElementSet& upper, const ElementSet& lower) {
  const std::size_t n = m->size();
  std::vector<std::int32_t> rep(n, -1);
  const std::vector<Code> lower_list = lower.to_vector();
  std::vector<std::uint32_t> reps;
  upper.for_each([&](Code x) {
    if (rep[x] >= 0) return;
    reps.push_back(x);
    for (Code y : lower_list) rep[m->add(x, y)] = static_cast<std::int32_t>(x);
  });
  AbelianGroupView view{reps, 0, n, [&](std::uint32_t a, std::uint32_t b) {
                          return static_cast<std::uint32_t>(rep[m->add(a, b)]);
                        }};
  CyclicBasis basis = decompose_abelian(view);
  const std::size_t t = basis.orders.size();
  const std::size_t k = m->ring()->rank();
  const MixedRadix radix(basis.orders);
  std::vector<IntMatrix> action(k, IntMatrix(t, t));
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t j = 0; j < t; ++j) {
      const Code y = static_cast<Code>(rep[m->act_basis(basis.generators[j], b)]);
      const Coords col = radix.decode(static_cast<Code>(basis.codes[y]));
      for (std::size_t i = 0; i < t; ++i) action[b](i, j) = col[i];
    }
  Subquotient out;
  out.module = FiniteModule::create(m->ring(), basis.orders, std::move(action));
  out.project.assign(n, -1);
  upper.for_each([&](Code x) { out.project[x] = basis.codes[static_cast<std::size_t>(rep[x])]; });
  out.lift.assign(basis.elements.begin(), basis.elements.end());
  return out;
}

ModulePtr zero_module(const RingPtr& ring) {
  return FiniteModule::create(ring, {}, std::vector<IntMatrix>(ring->rank(), IntMatrix(0, 0)));
}

ModulePtr regular_module(const RingPtr& ring) {
  const std::size_t k = ring->rank();
  std::vector<IntMatrix> action(k, IntMatrix(k, k));
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) action[b](l, i) = ring->constants()[i][b][l];
  Limits limits = default_limits();
  limits.max_module_size = std::max(limits.max_module_size, ring->size());
  return FiniteModule::create(ring, ring->orders(), std::move(action), limits);
}

ModulePtr direct_sum_module(const ModulePtr& a, const ModulePtr& b) {
  if (!same_ring(a->ring(), b->ring())) throw AlgebraError(ErrorCode::RingMismatch, "direct sum over different rings");
  const std::size_t ta = a->rank(), tb = b->rank(), t = ta + tb;
  std::vector<std::int64_t> orders = a->orders();
  orders.insert(orders.end(), b->orders().begin(), b->orders().end());
  std::vector<IntMatrix> action(a->ring()->rank(), IntMatrix(t, t));
  for (std::size_t r = 0; r < action.size(); ++r) {
    for (std::size_t i = 0; i < ta; ++i)
      for (std::size_t j = 0; j < ta; ++j) action[r](i, j) = a->action()[r](i, j);
    for (std::size_t i = 0; i < tb; ++i)
      for (std::size_t j = 0; j < tb; ++j) action[r](ta + i, ta + j) = b->action()[r](i, j);
  }
  return FiniteModule::create(a->ring(), std::move(orders), std::move(action));
}

}  // namespace modlab
