#include "modlab/hom.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "modlab/abelian.hpp"

namespace modlab {

namespace {

void require_same_ring(const ModulePtr& a, const ModulePtr& b) {
  if (!same_ring(a->ring(), b->ring())) throw AlgebraError(ErrorCode::RingMismatch, "modules over different rings");
}

bool is_linear(const FiniteModule& src, const FiniteModule& tgt, const IntMatrix& h) {
  for (std::size_t i = 0; i < h.rows; ++i)
    for (std::size_t j = 0; j < h.cols; ++j)
      if ((src.orders()[j] * h(i, j)) % tgt.orders()[i] != 0) return false;
  for (std::size_t b = 0; b < src.ring()->rank(); ++b)
    if (multiply(h, src.action()[b], tgt.orders()) != multiply(tgt.action()[b], h, tgt.orders())) return false;
  return true;
}

Code codes_sum(const FiniteModule& m, std::span<const Code> xs) {
  Code acc = 0;
  for (auto x : xs) acc = m.add(acc, x);
  return acc;
}

// Runs visit(matrix) for every hom whose generator images pass `accept`.
// Returning false from visit stops the enumeration.
void enumerate_homs(const ModulePtr& src, const ModulePtr& tgt, const Limits& limits,
                    const std::function<bool(std::size_t gen, Code image, const std::vector<Code>& ann)>& accept,
                    const std::function<bool(IntMatrix&&)>& visit) {
  const auto& ring = *src->ring();
  const std::size_t t = src->rank(), u = tgt->rank();
  if (src->is_zero()) {
    visit(IntMatrix(u, t));
    return;
  }
  const std::vector<Code>& gens = src->generators();
  const std::size_t s = gens.size();
  const std::size_t nr = ring.size();

  std::vector<std::vector<Code>> gr(s, std::vector<Code>(nr));
  for (std::size_t i = 0; i < s; ++i)
    for (Code r = 0; r < nr; ++r) gr[i][r] = src->act(gens[i], r);

  // Express each additive unit of the source as sum_i g_i r_i.
  double space = 1;
  for (std::size_t i = 0; i < s; ++i) space *= static_cast<double>(nr);
  if (space > static_cast<double>(limits.max_hom_candidates))
    throw AlgebraError(ErrorCode::SizeLimitExceeded, "generator preimage search too large");
  std::vector<std::vector<Code>> pre(t);
  std::size_t found = 0;
  std::map<Code, std::size_t> wanted;
  for (std::size_t j = 0; j < t; ++j) wanted.emplace(src->radix().unit(j), j);
  {
    std::vector<Code> digits(s, 0);
    while (found < t) {
      Code value = 0;
      for (std::size_t i = 0; i < s; ++i) value = src->add(value, gr[i][digits[i]]);
      auto it = wanted.find(value);
      if (it != wanted.end() && pre[it->second].empty()) {
        pre[it->second] = digits;
        ++found;
      }
      std::size_t i = 0;
      while (i < s && ++digits[i] == nr) digits[i++] = 0;
      if (i == s) break;
    }
  }
  if (found < t) throw AlgebraError(ErrorCode::InvalidInput, "generators do not span the module");

  std::vector<std::vector<Code>> cand(s);
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Code> ann;
    for (Code r = 0; r < nr; ++r)
      if (gr[i][r] == 0) ann.push_back(r);
    for (Code h = 0; h < tgt->size(); ++h) {
      bool ok = true;
      for (Code r : ann)
        if (tgt->act(h, r) != 0) {
          ok = false;
          break;
        }
      if (ok && accept(i, h, ann)) cand[i].push_back(h);
    }
    if (cand[i].empty()) return;
  }
  double combos = 1;
  for (const auto& c : cand) combos *= static_cast<double>(c.size());
  if (combos > static_cast<double>(limits.max_hom_candidates))
    throw AlgebraError(ErrorCode::SizeLimitExceeded, "hom search space too large");

  // images[i][c][j] = cand[i][c] . pre[j][i]
  std::vector<std::vector<std::vector<Code>>> images(s);
  for (std::size_t i = 0; i < s; ++i) {
    images[i].resize(cand[i].size(), std::vector<Code>(t));
    for (std::size_t c = 0; c < cand[i].size(); ++c)
      for (std::size_t j = 0; j < t; ++j) images[i][c][j] = tgt->act(cand[i][c], pre[j][i]);
  }
  std::vector<Coords> gen_coords(s);
  for (std::size_t i = 0; i < s; ++i) gen_coords[i] = src->radix().decode(gens[i]);

  std::vector<std::size_t> pick(s, 0);
  std::vector<Code> col(s);
  Coords tmp(u);
  while (true) {
    IntMatrix h(u, t);
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t i = 0; i < s; ++i) col[i] = images[i][pick[i]][j];
      tgt->radix().decode_into(codes_sum(*tgt, col), tmp);
      for (std::size_t r = 0; r < u; ++r) h(r, j) = tmp[r];
    }
    bool ok = is_linear(*src, *tgt, h);
    for (std::size_t i = 0; ok && i < s; ++i)
      if (tgt->radix().encode(apply(h, gen_coords[i], tgt->orders())) != cand[i][pick[i]]) ok = false;
    if (ok && !visit(std::move(h))) return;
    std::size_t i = 0;
    while (i < s && ++pick[i] == cand[i].size()) pick[i++] = 0;
    if (i == s) break;
  }
}

}  // namespace

ModuleHom trusted_hom(ModulePtr source, ModulePtr target, IntMatrix matrix) {
  return ModuleHom(std::move(source), std::move(target), std::move(matrix));
}

ModuleHom ModuleHom::create(ModulePtr source, ModulePtr target, IntMatrix matrix) {
  require_same_ring(source, target);
  if (matrix.rows != target->rank() || matrix.cols != source->rank())
    throw AlgebraError(ErrorCode::NotHomomorphism, "matrix shape does not match modules");
  reduce_rows(matrix, target->orders());
  if (!is_linear(*source, *target, matrix))
    throw AlgebraError(ErrorCode::NotHomomorphism, "matrix is not a well-defined R-linear map");
  return ModuleHom(std::move(source), std::move(target), std::move(matrix));
}

ModuleHom ModuleHom::identity(const ModulePtr& m) {
  IntMatrix id = IntMatrix::identity(m->rank());
  reduce_rows(id, m->orders());
  return ModuleHom(m, m, std::move(id));
}

ModuleHom ModuleHom::zero(const ModulePtr& source, const ModulePtr& target) {
  require_same_ring(source, target);
  return ModuleHom(source, target, IntMatrix(target->rank(), source->rank()));
}

Code ModuleHom::apply(Code x) const {
  const Coords c = source_->radix().decode(x);
  return target_->radix().encode(modlab::apply(matrix_, c, target_->orders()));
}

std::vector<Code> ModuleHom::image_table() const {
  std::vector<Code> out(source_->size());
  Coords c(source_->rank());
  for (Code x = 0; x < source_->size(); ++x) {
    source_->radix().decode_into(x, c);
    out[x] = target_->radix().encode(modlab::apply(matrix_, c, target_->orders()));
  }
  return out;
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  if (f.target_->key() != g.source_->key()) throw AlgebraError(ErrorCode::InvalidInput, "maps are not composable");
  return ModuleHom(f.source_, g.target_, multiply(g.matrix_, f.matrix_, g.target_->orders()));
}

ModuleHom add(const ModuleHom& f, const ModuleHom& g) {
  if (f.source_->key() != g.source_->key() || f.target_->key() != g.target_->key())
    throw AlgebraError(ErrorCode::InvalidInput, "maps have different domains");
  IntMatrix m = f.matrix_;
  for (std::size_t p = 0; p < m.data.size(); ++p) m.data[p] += g.matrix_.data[p];
  reduce_rows(m, f.target_->orders());
  return ModuleHom(f.source_, f.target_, std::move(m));
}

std::pair<Submodule, Submodule> kernel_image(const ModuleHom& f) {
  const auto table = f.image_table();
  ElementSet ker(f.source()->size());
  for (Code x = 0; x < table.size(); ++x)
    if (table[x] == 0) ker.insert(x);
  std::vector<Code> units;
  for (std::size_t j = 0; j < f.source()->rank(); ++j) units.push_back(table[f.source()->radix().unit(j)]);
  auto gens = additive_generators(*f.source(), ker);
  return {Submodule(f.source(), std::move(ker), std::move(gens)), span(f.target(), units)};
}

Submodule image_of(const ModuleHom& f, const Submodule& a) {
  std::vector<Code> imgs;
  for (Code g : a.generators()) imgs.push_back(f.apply(g));
  return span(f.target(), imgs);
}

Submodule preimage_of(const ModuleHom& f, const Submodule& b) {
  const auto table = f.image_table();
  ElementSet s(f.source()->size());
  for (Code x = 0; x < table.size(); ++x)
    if (b.contains(table[x])) s.insert(x);
  auto gens = additive_generators(*f.source(), s);
  return Submodule(f.source(), std::move(s), std::move(gens));
}

std::vector<ModuleHom> hom_set(const ModulePtr& source, const ModulePtr& target, const Limits& limits) {
  require_same_ring(source, target);
  std::vector<ModuleHom> out;
  enumerate_homs(
      source, target, limits, [](std::size_t, Code, const std::vector<Code>&) { return true; },
      [&](IntMatrix&& m) {
        out.push_back(trusted_hom(source, target, std::move(m)));
        return true;
      });
  return out;
}

namespace {

std::vector<std::size_t> order_profile(const FiniteModule& m) {
  std::map<std::int64_t, std::size_t> counts;
  for (Code x = 0; x < m.size(); ++x) ++counts[m.radix().element_order(x)];
  std::vector<std::size_t> out;
  for (auto [o, c] : counts) {
    out.push_back(static_cast<std::size_t>(o));
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::optional<ModuleHom> find_isomorphism(const ModulePtr& a, const ModulePtr& b, const Limits& limits) {
  require_same_ring(a, b);
  if (a->size() != b->size()) return std::nullopt;
  if (a->key() == b->key()) return ModuleHom::identity(a);
  if (order_profile(*a) != order_profile(*b)) return std::nullopt;
  const auto& ring = *a->ring();
  std::optional<ModuleHom> result;
  enumerate_homs(
      a, b, limits,
      [&](std::size_t, Code h, const std::vector<Code>& ann) {
        // An isomorphism preserves annihilators exactly.
        std::size_t count = 0;
        for (Code r = 0; r < ring.size(); ++r)
          if (b->act(h, r) == 0) ++count;
        return count == ann.size();
      },
      [&](IntMatrix&& m) {
        ModuleHom f = trusted_hom(a, b, std::move(m));
        const auto table = f.image_table();
        ElementSet seen(b->size());
        for (auto y : table) seen.insert(y);
        if (seen.count() == b->size()) {
          result = std::move(f);
          return false;
        }
        return true;
      });
  return result;
}

bool is_isomorphic(const ModulePtr& a, const ModulePtr& b, const Limits& limits) {
  return find_isomorphism(a, b, limits).has_value();
}

QuotientResult quotient(const ModulePtr& m, const Submodule& a) {
  if (a.parent()->key() != m->key()) throw AlgebraError(ErrorCode::NotSubmodule, "submodule of another module");
  Subquotient sq = subquotient(m, whole_submodule(m).element_set(), a.element_set());
  IntMatrix p(sq.module->rank(), m->rank());
  for (std::size_t j = 0; j < m->rank(); ++j) {
    const Coords c = sq.module->radix().decode(static_cast<Code>(sq.project[m->radix().unit(j)]));
    for (std::size_t i = 0; i < c.size(); ++i) p(i, j) = c[i];
  }
  return {sq.module, trusted_hom(m, sq.module, std::move(p))};
}

SubmoduleModule as_module(const Submodule& a) {
  const ModulePtr& m = a.parent();
  ElementSet zero(m->size());
  zero.insert(0);
  Subquotient sq = subquotient(m, a.element_set(), zero);
  IntMatrix inc(m->rank(), sq.module->rank());
  for (std::size_t j = 0; j < sq.module->rank(); ++j) {
    const Coords c = m->radix().decode(sq.lift[sq.module->radix().unit(j)]);
    for (std::size_t i = 0; i < c.size(); ++i) inc(i, j) = c[i];
  }
  return {sq.module, trusted_hom(sq.module, m, std::move(inc))};
}

DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b) {
  ModulePtr s = direct_sum_module(a, b);
  const std::size_t ta = a->rank(), tb = b->rank();
  IntMatrix ia(ta + tb, ta), ib(ta + tb, tb), pa(ta, ta + tb), pb(tb, ta + tb);
  for (std::size_t i = 0; i < ta; ++i) ia(i, i) = pa(i, i) = 1;
  for (std::size_t i = 0; i < tb; ++i) ib(ta + i, i) = pb(i, ta + i) = 1;
  reduce_rows(ia, s->orders());
  reduce_rows(ib, s->orders());
  reduce_rows(pa, a->orders());
  reduce_rows(pb, b->orders());
  return {s, trusted_hom(a, s, std::move(ia)), trusted_hom(b, s, std::move(ib)), trusted_hom(s, a, std::move(pa)),
          trusted_hom(s, b, std::move(pb))};
}

std::size_t MatrixHash::operator()(const IntMatrix& m) const {
  std::uint64_t h = 1469598103934665603ull ^ m.rows ^ (m.cols << 16);
  for (auto v : m.data) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::shared_ptr<const EndRing> EndRing::create(const ModulePtr& m, const Limits& limits) {
  auto e = std::make_shared<EndRing>();
  e->module_ = m;
  e->elements_ = hom_set(m, m, limits);
  if (e->elements_.size() > limits.max_end_size)
    throw AlgebraError(ErrorCode::SizeLimitExceeded, "End ring of size " + std::to_string(e->elements_.size()));
  for (std::size_t i = 0; i < e->elements_.size(); ++i) e->index_.emplace(e->elements_[i].matrix(), i);
  e->zero_ = e->index_of(IntMatrix(m->rank(), m->rank()));
  e->identity_ = e->index_of(ModuleHom::identity(m).matrix());

  const std::size_t n = e->elements_.size();
  std::vector<std::uint32_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<std::uint32_t>(i);
  const EndRing& self = *e;
  AbelianGroupView view{ids, static_cast<std::uint32_t>(e->zero_), n, [&](std::uint32_t a, std::uint32_t b) {
                          return static_cast<std::uint32_t>(self.add(a, b));
                        }};
  CyclicBasis basis = decompose_abelian(view);
  const std::size_t k = basis.orders.size();
  const MixedRadix radix(basis.orders);
  StructureConstants c(k, std::vector<Coords>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      c[i][j] = radix.decode(static_cast<Code>(basis.codes[e->compose(basis.generators[i], basis.generators[j])]));
  Coords one = radix.decode(static_cast<Code>(basis.codes[e->identity_]));
  Limits ring_limits = limits;
  ring_limits.max_ring_size = std::max(limits.max_ring_size, limits.max_end_size);
  e->ring_ = FiniteRing::create(basis.orders, std::move(c), std::move(one), ring_limits, "End");
  e->to_ring_ = basis.codes;
  e->from_ring_.assign(basis.elements.begin(), basis.elements.end());
  return e;
}

std::size_t EndRing::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw AlgebraError(ErrorCode::InvalidInput, "matrix is not an endomorphism");
  return it->second;
}

std::size_t EndRing::compose(std::size_t f, std::size_t g) const {
  return index_of(multiply(elements_[f].matrix(), elements_[g].matrix(), module_->orders()));
}

std::size_t EndRing::add(std::size_t f, std::size_t g) const {
  IntMatrix m = elements_[f].matrix();
  for (std::size_t p = 0; p < m.data.size(); ++p) m.data[p] += elements_[g].matrix().data[p];
  reduce_rows(m, module_->orders());
  return index_of(m);
}

}  // namespace modlab
