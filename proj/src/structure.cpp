#include "modlab/structure.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

namespace modlab {

namespace {

bool in_interval(const SubmoduleLattice& lat, std::size_t x, std::size_t lo, std::size_t hi) {
  return lat.leq(lo, x) && lat.leq(x, hi);
}

// v * to / from, exact whenever v * to is divisible by from.
std::int64_t rescale(std::int64_t v, std::int64_t from, std::int64_t to) {
  const std::int64_t d = std::gcd(from, to);
  return v * (to / d) / (from / d);
}

ModuleHom matrix_from_table(const ModulePtr& src, const ModulePtr& tgt, const std::vector<Code>& table) {
  IntMatrix h(tgt->rank(), src->rank());
  for (std::size_t j = 0; j < src->rank(); ++j) {
    const Coords c = tgt->radix().decode(table[src->radix().unit(j)]);
    for (std::size_t i = 0; i < c.size(); ++i) h(i, j) = c[i];
  }
  return ModuleHom::create(src, tgt, std::move(h));
}

}  // namespace

std::optional<std::size_t> complement_in(const SubmoduleLattice& lat, std::size_t a, std::size_t lo, std::size_t hi) {
  for (std::size_t b = lo; b <= hi; ++b)
    if (in_interval(lat, b, lo, hi) && lat.join(a, b) == hi && lat.meet(a, b) == lo) return b;
  return std::nullopt;
}

bool summand_in(const SubmoduleLattice& lat, std::size_t a, std::size_t lo, std::size_t hi) {
  return complement_in(lat, a, lo, hi).has_value();
}

bool supplement_in(const SubmoduleLattice& lat, std::size_t x, std::size_t y, std::size_t lo, std::size_t hi) {
  return lat.join(x, y) == hi && small_in(lat, lat.meet(x, y), lo, x);
}

bool amply_supplemented_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi) {
  const auto nodes = lat.interval(lo, hi);
  for (std::size_t a : nodes)
    for (std::size_t b : nodes) {
      if (lat.join(a, b) != hi) continue;
      bool found = false;
      for (std::size_t x : nodes) {
        if (!lat.leq(x, a)) continue;
        if (supplement_in(lat, x, b, lo, hi)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  return true;
}

bool coclosed_in(const SubmoduleLattice& lat, std::size_t c, std::size_t lo, std::size_t hi) {
  for (std::size_t d = lo; d < c; ++d)
    if (in_interval(lat, d, lo, c) && d != c && small_in(lat, c, d, hi)) return false;
  return true;
}

bool lifting_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi) {
  const auto nodes = lat.interval(lo, hi);
  for (std::size_t a : nodes) {
    bool found = false;
    for (std::size_t n : nodes) {
      if (!lat.leq(n, a)) continue;
      if (small_in(lat, a, n, hi) && summand_in(lat, n, lo, hi)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool lifting_by_coclosed_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi) {
  if (!amply_supplemented_in(lat, lo, hi)) return false;
  for (std::size_t c : lat.interval(lo, hi))
    if (coclosed_in(lat, c, lo, hi) && !summand_in(lat, c, lo, hi)) return false;
  return true;
}

std::optional<Submodule> direct_complement(const Submodule& a) {
  const SubmoduleLattice& lat = *submodules(a.parent());
  auto b = complement_in(lat, lat.index_of(a), 0, lat.top());
  if (!b) return std::nullopt;
  return lat[*b];
}

bool is_direct_summand(const Submodule& a) { return direct_complement(a).has_value(); }

Decomposition split(const Submodule& a, const Submodule& b) {
  const ModulePtr& m = a.parent();
  if (intersect(a, b).size() != 1 || a.size() * b.size() != m->size())
    throw AlgebraError(ErrorCode::InvalidInput, "submodules do not split the module");
  std::vector<Code> pa(m->size()), pb(m->size());
  const auto as = a.elements(), bs = b.elements();
  for (Code u : as)
    for (Code v : bs) {
      const Code x = m->add(u, v);
      pa[x] = u;
      pb[x] = v;
    }
  Decomposition d;
  d.parts = {a, b};
  d.witness = {matrix_from_table(m, m, pa), matrix_from_table(m, m, pb)};
  return d;
}

std::optional<ModuleHom> idempotent_with_image(const EndRing& end, const Submodule& a) {
  for (std::size_t i = 0; i < end.size(); ++i) {
    if (!end.is_idempotent(i)) continue;
    if (kernel_image(end[i]).second == a) return end[i];
  }
  return std::nullopt;
}

bool is_supplement(const Submodule& x, const Submodule& y) {
  const SubmoduleLattice& lat = *submodules(x.parent());
  return supplement_in(lat, lat.index_of(x), lat.index_of(y), 0, lat.top());
}

std::vector<Submodule> supplements_of(const Submodule& y) {
  const SubmoduleLattice& lat = *submodules(y.parent());
  const std::size_t yi = lat.index_of(y);
  std::vector<Submodule> out;
  for (std::size_t x = 0; x < lat.size(); ++x)
    if (supplement_in(lat, x, yi, 0, lat.top())) out.push_back(lat[x]);
  return out;
}

bool is_amply_supplemented(const ModulePtr& m) {
  const SubmoduleLattice& lat = *submodules(m);
  return amply_supplemented_in(lat, 0, lat.top());
}

bool is_coclosed(const Submodule& c) {
  const SubmoduleLattice& lat = *submodules(c.parent());
  return coclosed_in(lat, lat.index_of(c), 0, lat.top());
}

bool is_lifting(const ModulePtr& m) {
  const SubmoduleLattice& lat = *submodules(m);
  return lifting_in(lat, 0, lat.top());
}

bool is_lifting_by_coclosed(const ModulePtr& m) {
  const SubmoduleLattice& lat = *submodules(m);
  return lifting_by_coclosed_in(lat, 0, lat.top());
}

RingPtr opposite_of(const RingPtr& ring) {
  static std::mutex mu;
  static std::map<std::string, RingPtr> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(ring->key());
  if (it != memo.end()) return it->second;
  RingPtr op = opposite_ring(ring);
  memo.emplace(ring->key(), op);
  memo.emplace(op->key(), ring);
  return op;
}

ModulePtr character_dual(const ModulePtr& m) {
  const auto& ord = m->orders();
  const std::size_t t = ord.size();
  std::vector<IntMatrix> action;
  for (const IntMatrix& a : m->action()) {
    IntMatrix b(t, t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) b(j, i) = rescale(a(i, j), ord[i], ord[j]);
    action.push_back(std::move(b));
  }
  return FiniteModule::create(opposite_of(m->ring()), ord, std::move(action));
}

ModuleHom dual_hom(const ModuleHom& f) {
  const ModulePtr ds = character_dual(f.target());
  const ModulePtr dt = character_dual(f.source());
  const auto& m = f.source()->orders();
  const auto& n = f.target()->orders();
  const IntMatrix& h = f.matrix();
  IntMatrix g(m.size(), n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) g(j, i) = rescale(h(i, j), n[i], m[j]);
  return ModuleHom::create(ds, dt, std::move(g));
}

const std::vector<Code>& primitive_idempotents(const RingPtr& ring) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const std::vector<Code>>> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(ring->key());
    if (it != memo.end()) return *it->second;
  }
  if (ring->size() > default_limits().max_ring_size)
    throw AlgebraError(ErrorCode::IdempotentSearchExceeded, "ring of size " + std::to_string(ring->size()));
  std::vector<Code> idem;
  for (Code e = 1; e < ring->size(); ++e)
    if (ring->mul(e, e) == e) idem.push_back(e);
  const ModulePtr reg = regular_module(ring);
  std::vector<Code> reps;
  std::vector<ModulePtr> rep_modules;
  for (Code e : idem) {
    bool primitive = true;
    for (Code f : idem)
      if (f != e && ring->mul(e, f) == f && ring->mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (!primitive) continue;
    const Code g[1] = {e};
    ModulePtr er = as_module(span(reg, g)).module;
    bool seen = false;
    for (const auto& other : rep_modules)
      if (is_isomorphic(er, other)) {
        seen = true;
        break;
      }
    if (seen) continue;
    reps.push_back(e);
    rep_modules.push_back(er);
  }
  auto stored = std::make_shared<const std::vector<Code>>(std::move(reps));
  std::lock_guard lock(mu);
  return *memo.emplace(ring->key(), stored).first->second;
}

Cover projective_cover(const ModulePtr& m) {
  const RingPtr& ring = m->ring();
  if (m->is_zero()) return {m, ModuleHom::identity(m)};
  const ModulePtr reg = regular_module(ring);
  Submodule covered = radical(m);
  std::vector<std::pair<Code, Code>> picks;  // (idempotent, element of M.e)
  for (Code e : primitive_idempotents(ring)) {
    for (Code x = 0; x < m->size() && !covered.is_whole(); ++x) {
      const Code y = m->act(x, e);
      if (covered.contains(y)) continue;
      picks.emplace_back(e, y);
      const Code g[1] = {y};
      covered = sum(covered, span(m, g));
    }
  }
  if (!covered.is_whole()) throw AlgebraError(ErrorCode::InvalidInput, "primitive idempotents do not cover the top");

  ModulePtr p;
  std::vector<std::vector<Code>> lifts;  // per block: P-unit -> ring element
  std::vector<Code> images;
  for (auto [e, y] : picks) {
    const Code g[1] = {e};
    SubmoduleModule er = as_module(span(reg, g));
    p = p ? direct_sum_module(p, er.module) : er.module;
    std::vector<Code> units;
    for (std::size_t j = 0; j < er.module->rank(); ++j) units.push_back(er.inclusion.apply(er.module->radix().unit(j)));
    lifts.push_back(std::move(units));
    images.push_back(y);
  }
  IntMatrix h(m->rank(), p->rank());
  std::size_t col = 0;
  for (std::size_t b = 0; b < lifts.size(); ++b)
    for (Code r : lifts[b]) {
      const Coords c = m->radix().decode(m->act(images[b], r));
      for (std::size_t i = 0; i < c.size(); ++i) h(i, col) = c[i];
      ++col;
    }
  return {p, ModuleHom::create(p, m, std::move(h))};
}

Cover injective_hull(const ModulePtr& m) {
  if (m->is_zero()) return {m, ModuleHom::identity(m)};
  const ModulePtr dm = character_dual(m);
  const Cover pc = projective_cover(dm);
  const ModulePtr e = character_dual(pc.module);
  const auto& mo = dm->orders();
  const auto& po = pc.module->orders();
  const IntMatrix& h = pc.map.matrix();
  IntMatrix g(po.size(), mo.size());
  for (std::size_t i = 0; i < mo.size(); ++i)
    for (std::size_t j = 0; j < po.size(); ++j) g(j, i) = rescale(h(i, j), mo[i], po[j]);
  return {e, ModuleHom::create(m, e, std::move(g))};
}

std::optional<ModuleHom> baer_obstruction(const ModulePtr& m) {
  const RingPtr& ring = m->ring();
  const ModulePtr reg = regular_module(ring);
  const SubmoduleLattice& lat = *submodules(reg);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const SubmoduleModule ideal = as_module(lat[i]);
    const ModulePtr& im = ideal.module;
    std::vector<Code> basis;
    for (std::size_t j = 0; j < im->rank(); ++j) basis.push_back(ideal.inclusion.apply(im->radix().unit(j)));
    // Restrictions of x -> m.x, recorded by their values on the basis of I.
    std::set<std::vector<Code>> restricted;
    for (Code x = 0; x < m->size(); ++x) {
      std::vector<Code> vals;
      for (Code r : basis) vals.push_back(m->act(x, r));
      restricted.insert(std::move(vals));
    }
    const auto homs = hom_set(im, m);
    if (homs.size() == restricted.size()) continue;
    for (const auto& g : homs) {
      std::vector<Code> vals;
      for (std::size_t j = 0; j < im->rank(); ++j) vals.push_back(g.apply(im->radix().unit(j)));
      if (!restricted.count(vals)) return g;
    }
  }
  return std::nullopt;
}

bool is_injective(const ModulePtr& m) { return !baer_obstruction(m).has_value(); }

bool is_small_module(const ModulePtr& m) {
  static std::mutex mu;
  static std::map<std::string, bool> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(m->key());
    if (it != memo.end()) return it->second;
  }
  bool small = true;
  if (!m->is_zero()) {
    const Cover hull = injective_hull(m);
    small = kernel_image(hull.map).second.subset_of(radical(hull.module));
  }
  std::lock_guard lock(mu);
  memo.emplace(m->key(), small);
  return small;
}

}  // namespace modlab
