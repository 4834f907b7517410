#include "modlab/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "json.hpp"

namespace modlab {

namespace {

constexpr std::size_t kDenseTableLimit = 2048;

std::size_t first_common(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    const std::uint64_t both = a[w] & b[w];
    if (both) return w * 64 + static_cast<std::size_t>(std::countr_zero(both));
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

std::shared_ptr<const SubmoduleLattice> SubmoduleLattice::build(const ModulePtr& m, const Limits& limits) {
  if (m->size() > std::max(limits.max_module_size, limits.max_end_size))
    throw AlgebraError(ErrorCode::SizeLimitExceeded, "lattice of a module of size " + std::to_string(m->size()));
  auto lat = std::make_shared<SubmoduleLattice>();
  lat->module_ = m;

  std::vector<Submodule> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](Submodule s) {
    auto [it, fresh] = seen.emplace(s.element_set(), found.size());
    if (fresh) found.push_back(std::move(s));
    return it->second;
  };
  add(zero_submodule(m));
  std::vector<std::size_t> cyclic_found;
  for (Code x = 1; x < m->size(); ++x) {
    const Code g[1] = {x};
    cyclic_found.push_back(add(span(m, g)));
  }
  std::sort(cyclic_found.begin(), cyclic_found.end());
  cyclic_found.erase(std::unique(cyclic_found.begin(), cyclic_found.end()), cyclic_found.end());

  // Every submodule is a sum of cyclic ones: fold each cyclic into all sums
  // found so far.
  for (std::size_t c : cyclic_found) {
    const Submodule cyc = found[c];
    const std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i) {
      if (cyc.subset_of(found[i])) continue;
      add(sum(found[i], cyc));
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].size() != found[b].size()) return found[a].size() < found[b].size();
    return found[a].element_set().lex_less(found[b].element_set());
  });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  const std::size_t n = found.size();
  lat->nodes_.reserve(n);
  for (std::size_t i : order) lat->nodes_.push_back(found[i]);
  for (std::size_t i = 0; i < n; ++i) lat->index_.emplace(lat->nodes_[i].element_set(), i);
  for (std::size_t c : cyclic_found) lat->cyclic_.push_back(rank[c]);
  std::sort(lat->cyclic_.begin(), lat->cyclic_.end());

  const std::size_t words = (n + 63) / 64;
  lat->up_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (lat->nodes_[i].subset_of(lat->nodes_[j])) lat->up_[i][j >> 6] |= std::uint64_t{1} << (j & 63);

  lat->covers_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    // In size order, the first remaining upper bound is minimal; drop
    // everything above it and continue.
    std::vector<std::uint64_t> rest = lat->up_[i];
    rest[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    for (std::size_t w = 0; w < words; ++w)
      while (rest[w]) {
        const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(rest[w]));
        lat->covers_[i].push_back(j);
        for (std::size_t v = w; v < words; ++v) rest[v] &= ~lat->up_[j][v];
      }
  }

  if (n <= kDenseTableLimit) {
    lat->join_.assign(n * n, 0);
    lat->meet_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const auto jn = static_cast<std::uint32_t>(first_common(lat->up_[i], lat->up_[j]));
        const auto mt = static_cast<std::uint32_t>(
            lat->index_.at(lat->nodes_[i].element_set() & lat->nodes_[j].element_set()));
        lat->join_[i * n + j] = lat->join_[j * n + i] = jn;
        lat->meet_[i * n + j] = lat->meet_[j * n + i] = mt;
      }
  }
  return lat;
}

std::size_t SubmoduleLattice::join(std::size_t i, std::size_t j) const {
  if (!join_.empty()) return join_[i * nodes_.size() + j];
  return first_common(up_[i], up_[j]);
}

std::size_t SubmoduleLattice::meet(std::size_t i, std::size_t j) const {
  if (!meet_.empty()) return meet_[i * nodes_.size() + j];
  return index_.at(nodes_[i].element_set() & nodes_[j].element_set());
}

std::optional<std::size_t> SubmoduleLattice::find(const ElementSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubmoduleLattice::index_of(const ElementSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw AlgebraError(ErrorCode::NotSubmodule, "set is not a node of the lattice");
  return it->second;
}

std::vector<std::size_t> SubmoduleLattice::interval(std::size_t lo, std::size_t hi) const {
  std::vector<std::size_t> out;
  for (std::size_t x = lo; x <= hi; ++x)
    if (leq(lo, x) && leq(x, hi)) out.push_back(x);
  return out;
}

const std::vector<std::size_t>& SubmoduleLattice::radicals() const {
  std::call_once(radicals_once_, [this] {
    radicals_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) radicals_[i] = index_of(radical_of(nodes_[i]));
  });
  return radicals_;
}

std::string SubmoduleLattice::hasse_json() const {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& s : nodes_) nodes.push_back({{"size", s.size()}, {"generators", s.generators()}});
  return nlohmann::json{{"nodes", nodes}, {"covers", covers_}}.dump();
}

LatticePtr submodules(const ModulePtr& m) {
  static std::mutex mu;
  static std::map<std::string, LatticePtr> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(m->key());
    if (it != memo.end()) return it->second;
  }
  LatticePtr lat = SubmoduleLattice::build(m);
  std::lock_guard lock(mu);
  return memo.emplace(m->key(), lat).first->second;
}

const ElementSet& jacobson_radical(const RingPtr& ring) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const ElementSet>> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(ring->key());
    if (it != memo.end()) return *it->second;
  }
  const ModulePtr reg = regular_module(ring);
  const SubmoduleLattice& lat = *submodules(reg);
  ElementSet j = lat[lat.top()].element_set();
  for (std::size_t i = 0; i < lat.top(); ++i)
    if (lat.covers(i).size() == 1 && lat.covers(i)[0] == lat.top()) j = j & lat[i].element_set();
  auto stored = std::make_shared<const ElementSet>(std::move(j));
  std::lock_guard lock(mu);
  return *memo.emplace(ring->key(), stored).first->second;
}

Submodule radical_of(const Submodule& a) {
  const ModulePtr& m = a.parent();
  const std::vector<Code> jr = jacobson_radical(m->ring()).to_vector();
  std::vector<Code> gens;
  for (Code g : a.generators())
    for (Code r : jr)
      if (r != 0) gens.push_back(m->act(g, r));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return span(m, gens);
}

Submodule radical(const ModulePtr& m) { return radical_of(whole_submodule(m)); }

Submodule socle(const ModulePtr& m) {
  const SubmoduleLattice& lat = *submodules(m);
  return lat[socle_in(lat, 0, lat.top())];
}

bool is_small(const Submodule& a) { return a.subset_of(radical(a.parent())); }

bool is_small_by_scan(const Submodule& a) {
  const SubmoduleLattice& lat = *submodules(a.parent());
  const std::size_t i = lat.index_of(a);
  return small_in_by_scan(lat, i, 0, lat.top());
}

bool is_essential(const Submodule& a) {
  const SubmoduleLattice& lat = *submodules(a.parent());
  const std::size_t i = lat.index_of(a);
  for (std::size_t c : lat.cyclic())
    if (lat.meet(i, c) == 0) return false;
  return true;
}

std::size_t radical_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi) {
  return lat.join(lo, lat.radicals()[hi]);
}

std::size_t socle_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi) {
  std::size_t acc = lo;
  for (std::size_t c : lat.covers(lo))
    if (lat.leq(c, hi)) acc = lat.join(acc, c);
  return acc;
}

bool small_in(const SubmoduleLattice& lat, std::size_t a, std::size_t lo, std::size_t hi) {
  return lat.leq(a, radical_in(lat, lo, hi));
}

bool small_in_by_scan(const SubmoduleLattice& lat, std::size_t a, std::size_t lo, std::size_t hi) {
  for (std::size_t b = lo; b < hi; ++b)
    if (lat.leq(lo, b) && lat.leq(b, hi) && lat.join(a, b) == hi) return false;
  return true;
}

}  // namespace modlab
