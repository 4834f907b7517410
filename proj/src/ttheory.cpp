#include "modlab/ttheory.hpp"

#include <algorithm>
#include <set>

namespace modlab {

bool is_right_ideal(const EndoSubset& s) {
  const EndRing& end = *s.end_ring;
  std::vector<bool> in(end.size(), false);
  for (auto m : s.members) in[m] = true;
  if (!in[end.zero_index()]) return false;
  for (auto a : s.members) {
    for (auto b : s.members)
      if (!in[end.add(a, b)]) return false;
    for (std::size_t t = 0; t < end.size(); ++t)
      if (!in[end.compose(a, t)]) return false;
  }
  return true;
}

TAnalysis::TAnalysis(ModulePtr m, const Limits& limits)
    : module_(std::move(m)), limits_(limits), lattice_(submodules(module_)), cosingular_(lattice_) {}

bool TAnalysis::amply_supplemented() {
  if (!amply_) amply_ = amply_supplemented_in(*lattice_, 0, top());
  return *amply_;
}

bool TAnalysis::lifting() {
  if (!lifting_) lifting_ = lifting_in(*lattice_, 0, top());
  return *lifting_;
}

bool TAnalysis::lifting_by_coclosed() {
  if (!lifting_cc_) lifting_cc_ = lifting_by_coclosed_in(*lattice_, 0, top());
  return *lifting_cc_;
}

bool TAnalysis::regular() const {
  for (std::size_t c : lattice_->cyclic())
    if (!summand(c)) return false;
  return true;
}

bool TAnalysis::semisimple() const { return socle_in(*lattice_, 0, top()) == top(); }

bool TAnalysis::fully_invariant(std::size_t n) {
  if (!end_available()) throw AlgebraError(ErrorCode::SizeLimitExceeded, "endomorphism ring unavailable");
  for (std::size_t phi = 0; phi < end_->size(); ++phi)
    if (!lattice_->leq(image(phi, n), n)) return false;
  return true;
}

bool TAnalysis::t_small_in(std::size_t a, std::size_t lo, std::size_t hi) {
  const auto k = key3(a, lo, hi);
  auto it = t_small_memo_.find(k);
  if (it != t_small_memo_.end()) return it->second;
  const SubmoduleLattice& lat = *lattice_;
  const std::size_t z = cosingular_.zbar2_in(lo, hi);
  bool result = true;
  for (std::size_t b = lo; b <= hi && result; ++b) {
    if (!lat.leq(lo, b) || !lat.leq(b, hi)) continue;
    if (lat.leq(z, lat.join(a, b)) && !lat.leq(z, b)) result = false;
  }
  t_small_memo_.emplace(k, result);
  return result;
}

bool TAnalysis::t_small_meet_small_in_zbar2(std::size_t a) {
  const std::size_t z = zbar2();
  return small_in(*lattice_, lattice_->meet(a, z), 0, z);
}

bool TAnalysis::t_small_meet_small(std::size_t a) { return small(lattice_->meet(a, zbar2())); }

bool TAnalysis::t_small_zbar2_vanishes(std::size_t a) { return cosingular_.zbar2_in(0, a) == 0; }

bool TAnalysis::t_coclosed_in(std::size_t c, std::size_t lo, std::size_t hi) {
  const SubmoduleLattice& lat = *lattice_;
  for (std::size_t d = lo; d < c; ++d) {
    if (!lat.leq(lo, d) || !lat.leq(d, c)) continue;
    if (t_small_in(c, d, hi)) return false;
  }
  return true;
}

bool TAnalysis::t_coclosed_minimal(std::size_t c) {
  const SubmoduleLattice& lat = *lattice_;
  const std::size_t z = zbar2();
  for (std::size_t s = 0; s < lat.size(); ++s) {
    if (!lat.leq(z, lat.join(c, s))) continue;
    bool minimal = true;
    for (std::size_t x = 0; x < c && minimal; ++x)
      if (lat.leq(x, c) && lat.leq(z, lat.join(x, s))) minimal = false;
    if (minimal) return true;
  }
  return false;
}

bool TAnalysis::t_coclosed_coclosed_in_zbar2(std::size_t c) {
  const std::size_t z = zbar2();
  return lattice_->leq(c, z) && coclosed_in(*lattice_, c, 0, z);
}

bool TAnalysis::t_coclosed_coclosed_below_zbar2(std::size_t c) { return lattice_->leq(c, zbar2()) && coclosed(c); }

bool TAnalysis::t_coclosed_noncosingular(std::size_t c) { return cosingular_.zbar_in(0, c) == c; }

bool TAnalysis::t_lifting_in(std::size_t lo, std::size_t hi) {
  const auto k = key3(0, lo, hi);
  auto it = t_lifting_memo_.find(k);
  if (it != t_lifting_memo_.end()) return it->second;
  const SubmoduleLattice& lat = *lattice_;
  const auto nodes = lat.interval(lo, hi);
  bool result = true;
  for (std::size_t a : nodes) {
    bool found = false;
    for (std::size_t n : nodes) {
      if (!lat.leq(n, a)) continue;
      if (summand_in(lat, n, lo, hi) && t_small_in(a, n, hi)) {
        found = true;
        break;
      }
    }
    if (!found) {
      result = false;
      break;
    }
  }
  t_lifting_memo_.emplace(k, result);
  return result;
}

bool TAnalysis::t_lifting_split() {
  const SubmoduleLattice& lat = *lattice_;
  for (std::size_t a = 0; a < lat.size(); ++a) {
    bool found = false;
    for (std::size_t n = 0; n <= a && !found; ++n) {
      if (!lat.leq(n, a) || !summand(n)) continue;
      for (std::size_t n2 = 0; n2 <= a && !found; ++n2)
        if (lat.leq(n2, a) && lat.join(n, n2) == a && lat.meet(n, n2) == 0 && t_small(n2)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool TAnalysis::t_lifting_tcc_summands() {
  for (std::size_t c = 0; c < lattice_->size(); ++c)
    if (t_coclosed(c) && !summand(c)) return false;
  return true;
}

bool TAnalysis::t_lifting_zbar2_summands() {
  for (std::size_t a = 0; a < lattice_->size(); ++a)
    if (!summand(cosingular_.zbar2_in(0, a))) return false;
  return true;
}

bool TAnalysis::t_lifting_coclosed_zbar2_summands() {
  for (std::size_t a = 0; a < lattice_->size(); ++a)
    if (coclosed(a) && !summand(cosingular_.zbar2_in(0, a))) return false;
  return true;
}

bool TAnalysis::t_lifting_zbar2_lifting_summand() {
  const std::size_t z = zbar2();
  return summand(z) && lifting_in(*lattice_, 0, z);
}

bool TAnalysis::t_lifting_small_below_zbar2() {
  const SubmoduleLattice& lat = *lattice_;
  const std::size_t z = zbar2();
  for (std::size_t a = 0; a < lat.size(); ++a) {
    if (!lat.leq(a, z)) continue;
    bool found = false;
    for (std::size_t n = 0; n <= a && !found; ++n)
      if (lat.leq(n, a) && summand(n) && small_in(lat, a, n, top())) found = true;
    if (!found) return false;
  }
  return true;
}

bool TAnalysis::end_available() {
  if (!end_tried_) {
    end_tried_ = true;
    try {
      end_ = EndRing::create(module_, limits_);
      images_.assign(end_->size(), std::vector<std::int32_t>(lattice_->size(), -1));
    } catch (const AlgebraError& e) {
      if (e.code() != ErrorCode::SizeLimitExceeded) throw;
      end_.reset();
    }
  }
  return end_ != nullptr;
}

EndRingPtr TAnalysis::end_ring() {
  end_available();
  return end_;
}

std::optional<std::size_t> TAnalysis::end_size() {
  if (!end_available()) return std::nullopt;
  return end_->size();
}

std::size_t TAnalysis::image(std::size_t phi, std::size_t x) {
  std::int32_t& slot = images_[phi][x];
  if (slot < 0) slot = static_cast<std::int32_t>(lattice_->index_of(image_of((*end_)[phi], (*lattice_)[x])));
  return static_cast<std::size_t>(slot);
}

std::optional<EndoSubset> TAnalysis::d_set(std::size_t n) {
  if (!end_available()) return std::nullopt;
  EndoSubset s{end_, {}, EndoSubsetKind::DSet};
  for (std::size_t phi = 0; phi < end_->size(); ++phi)
    if (lattice_->leq(image(phi, top()), n)) s.members.push_back(phi);
  return s;
}

std::optional<EndoSubset> TAnalysis::t_set(std::size_t n) {
  if (!end_available()) return std::nullopt;
  EndoSubset s{end_, {}, EndoSubsetKind::TSet};
  const std::size_t z = zbar2();
  for (std::size_t phi = 0; phi < end_->size(); ++phi)
    if (lattice_->leq(image(phi, z), n)) s.members.push_back(phi);
  return s;
}

std::optional<std::vector<EndoSubset>> TAnalysis::right_ideals() {
  if (!end_available()) return std::nullopt;
  if (!ideals_) {
    const ModulePtr reg = regular_module(end_->as_ring());
    const SubmoduleLattice& ideals = *submodules(reg);
    std::vector<EndoSubset> out;
    for (const auto& node : ideals.nodes()) {
      EndoSubset s{end_, {}, EndoSubsetKind::RightIdeal};
      node.element_set().for_each([&](Code c) { s.members.push_back(end_->from_ring_code(c)); });
      std::sort(s.members.begin(), s.members.end());
      out.push_back(std::move(s));
    }
    ideals_ = std::move(out);
  }
  return ideals_;
}

std::size_t TAnalysis::ideal_image(const EndoSubset& ideal, std::size_t x) {
  std::size_t acc = 0;
  for (auto phi : ideal.members) acc = lattice_->join(acc, image(phi, x));
  return acc;
}

std::optional<EndoSubset> TAnalysis::dual_baer_witness() {
  const auto ideals = right_ideals();
  if (!ideals) return std::nullopt;
  for (const auto& ideal : *ideals)
    if (!summand(ideal_image(ideal, top()))) return ideal;
  return std::nullopt;
}

std::optional<bool> TAnalysis::dual_baer() {
  if (!end_available()) return std::nullopt;
  return !dual_baer_witness().has_value();
}

std::optional<bool> TAnalysis::t_dual_baer() {
  const auto ideals = right_ideals();
  if (!ideals) return std::nullopt;
  const std::size_t z = zbar2();
  for (const auto& ideal : *ideals)
    if (!summand(ideal_image(ideal, z))) return false;
  return true;
}

std::optional<bool> TAnalysis::t_dual_baer_zbar2_dual_baer_summand() {
  const std::size_t z = zbar2();
  if (!summand(z)) return false;
  return sub_analysis(z).dual_baer();
}

bool TAnalysis::sssp_in_zbar2() {
  const SubmoduleLattice& lat = *lattice_;
  const std::size_t z = zbar2();
  std::vector<std::size_t> inside;
  for (std::size_t x = 0; x < lat.size(); ++x)
    if (lat.leq(x, z) && summand(x)) inside.push_back(x);
  for (std::size_t a : inside)
    for (std::size_t b : inside)
      if (!summand(lat.join(a, b))) return false;
  return true;
}

std::optional<bool> TAnalysis::images_of_zbar2_are_summands() {
  if (!end_available()) return std::nullopt;
  const std::size_t z = zbar2();
  for (std::size_t phi = 0; phi < end_->size(); ++phi)
    if (!summand(image(phi, z))) return false;
  return true;
}

std::optional<bool> TAnalysis::t_dual_baer_sssp_images() {
  const auto images = images_of_zbar2_are_summands();
  if (!images) return std::nullopt;
  return sssp_in_zbar2() && *images;
}

std::optional<bool> TAnalysis::t_dual_baer_image_sums() {
  if (!end_available()) return std::nullopt;
  // Sums over arbitrary subsets of S are the join-closure of single images.
  const std::size_t z = zbar2();
  std::set<std::size_t> closure{0};
  for (std::size_t phi = 0; phi < end_->size(); ++phi) closure.insert(image(phi, z));
  std::vector<std::size_t> work(closure.begin(), closure.end());
  while (!work.empty()) {
    const std::size_t a = work.back();
    work.pop_back();
    std::vector<std::size_t> fresh;
    for (std::size_t b : closure) {
      const std::size_t j = lattice_->join(a, b);
      if (!closure.count(j)) fresh.push_back(j);
    }
    for (std::size_t j : fresh)
      if (closure.insert(j).second) work.push_back(j);
  }
  for (std::size_t x : closure)
    if (!summand(x)) return false;
  return true;
}

std::optional<bool> TAnalysis::dual_baer_quotient_condition() {
  const auto ideals = right_ideals();
  if (!ideals) return std::nullopt;
  const std::size_t z = zbar2();
  for (const auto& ideal : *ideals) {
    const std::size_t lower = ideal_image(ideal, z);
    const std::size_t upper = ideal_image(ideal, top());
    if (!summand_in(*lattice_, upper, lower, top())) return false;
  }
  return true;
}

bool TAnalysis::t_set_trivial(std::size_t n) {
  // T_S(N) = T_S(0): every phi with phi(Z2) <= N already kills Z2.
  return t_set(n)->members == t_set(0)->members;
}

std::optional<KFlags> TAnalysis::k_flags() {
  if (!end_available()) return std::nullopt;
  KFlags f{true, true, true};
  const EndoSubset zero{end_, {end_->zero_index()}, EndoSubsetKind::DSet};
  for (std::size_t n = 0; n < lattice_->size(); ++n) {
    if (d_set(n)->members == zero.members && !small(n)) f.k = false;
    if (t_set_trivial(n)) {
      if (!t_small(n)) f.t_k = false;
      if (!small(n)) f.strongly_t_k = false;
    }
  }
  return f;
}

std::optional<bool> TAnalysis::t_k_below_zbar2() {
  if (!end_available()) return std::nullopt;
  const std::size_t z = zbar2();
  for (std::size_t n = 0; n < lattice_->size(); ++n)
    if (lattice_->leq(n, z) && t_set_trivial(n) && !small(n)) return false;
  return true;
}

std::optional<bool> TAnalysis::t_set_recovers(bool t_coclosed_only) {
  if (!end_available()) return std::nullopt;
  const std::size_t z = zbar2();
  for (std::size_t c = 0; c < lattice_->size(); ++c) {
    if (!(t_coclosed_only ? t_coclosed(c) : coclosed(c))) continue;
    if (ideal_image(*t_set(c), z) != c) return false;
  }
  return true;
}

std::optional<bool> TAnalysis::t_set_detects(bool t_coclosed_only) {
  if (!end_available()) return std::nullopt;
  for (std::size_t c = 0; c < lattice_->size(); ++c) {
    if (!(t_coclosed_only ? t_coclosed(c) : coclosed(c))) continue;
    if (t_set_trivial(c) && c != 0) return false;
  }
  return true;
}

TAnalysis& TAnalysis::sub_analysis(std::size_t node) {
  auto it = subs_.find(node);
  if (it == subs_.end())
    it = subs_.emplace(node, std::make_unique<TAnalysis>(as_module((*lattice_)[node]).module, limits_)).first;
  return *it->second;
}

bool is_tsmall(const Submodule& a) {
  TAnalysis t(a.parent());
  return t.t_small(t.lattice().index_of(a));
}

bool is_tcoclosed(const Submodule& c) {
  TAnalysis t(c.parent());
  return t.t_coclosed(t.lattice().index_of(c));
}

bool is_tlifting(const ModulePtr& m) { return TAnalysis(m).t_lifting(); }
std::optional<bool> is_dual_baer(const ModulePtr& m) { return TAnalysis(m).dual_baer(); }
std::optional<bool> is_tdual_baer(const ModulePtr& m) { return TAnalysis(m).t_dual_baer(); }
bool has_sssp_in_zbar2(const ModulePtr& m) { return TAnalysis(m).sssp_in_zbar2(); }
bool is_regular(const ModulePtr& m) { return TAnalysis(m).regular(); }
bool is_semisimple(const ModulePtr& m) { return TAnalysis(m).semisimple(); }
std::optional<KFlags> k_module_class(const ModulePtr& m) { return TAnalysis(m).k_flags(); }

}  // namespace modlab
