#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "modlab/cosingular.hpp"
#include "modlab/hom.hpp"
#include "modlab/structure.hpp"

namespace modlab {

enum class EndoSubsetKind { RightIdeal, DSet, TSet, Arbitrary };

// A set of endomorphisms, by index into an EndRing.
struct EndoSubset {
  EndRingPtr end_ring;
  std::vector<std::size_t> members;
  EndoSubsetKind kind = EndoSubsetKind::Arbitrary;

  bool operator==(const EndoSubset& other) const { return members == other.members; }
};

// Closed under addition and under composition on the right by all of S.
bool is_right_ideal(const EndoSubset& s);

struct KFlags {
  bool k = false;
  bool t_k = false;
  bool strongly_t_k = false;
};

// Every t-notion for one module M, evaluated on nodes of its submodule
// lattice. Results are memoized; not thread-safe, use one per worker.
// Predicates that need End(M) return nullopt when End(M) exceeds the limit.
class TAnalysis {
 public:
  explicit TAnalysis(ModulePtr m, const Limits& limits = default_limits());

  const ModulePtr& module() const { return module_; }
  const SubmoduleLattice& lattice() const { return *lattice_; }
  CosingularCalculator& cosingular() { return cosingular_; }
  std::size_t top() const { return lattice_->top(); }
  std::size_t zbar() { return cosingular_.zbar(); }
  std::size_t zbar2() { return cosingular_.zbar2(); }
  bool noncosingular() { return zbar() == top(); }

  // --- lattice predicates on M
  bool small(std::size_t a) const { return small_in(*lattice_, a, 0, top()); }
  bool summand(std::size_t a) const { return summand_in(*lattice_, a, 0, top()); }
  bool coclosed(std::size_t c) const { return coclosed_in(*lattice_, c, 0, top()); }
  bool amply_supplemented();
  bool lifting();
  bool lifting_by_coclosed();
  bool regular() const;
  bool semisimple() const;
  bool fully_invariant(std::size_t n);

  // --- t-small
  // Z2(hi/lo) <= (a + b)/lo forces Z2(hi/lo) <= b/lo for every b in [lo, hi].
  bool t_small_in(std::size_t a, std::size_t lo, std::size_t hi);
  bool t_small(std::size_t a) { return t_small_in(a, 0, top()); }
  bool t_small_meet_small_in_zbar2(std::size_t a);
  bool t_small_meet_small(std::size_t a);
  bool t_small_zbar2_vanishes(std::size_t a);

  // --- t-coclosed
  bool t_coclosed_in(std::size_t c, std::size_t lo, std::size_t hi);
  bool t_coclosed(std::size_t c) { return t_coclosed_in(c, 0, top()); }
  bool t_coclosed_minimal(std::size_t c);
  bool t_coclosed_coclosed_in_zbar2(std::size_t c);
  bool t_coclosed_coclosed_below_zbar2(std::size_t c);
  bool t_coclosed_noncosingular(std::size_t c);

  // --- t-lifting and its characterizations for amply supplemented M
  bool t_lifting_in(std::size_t lo, std::size_t hi);
  bool t_lifting() { return t_lifting_in(0, top()); }
  bool t_lifting_split();
  bool t_lifting_tcc_summands();
  bool t_lifting_zbar2_summands();
  bool t_lifting_coclosed_zbar2_summands();
  bool t_lifting_zbar2_lifting_summand();
  bool t_lifting_small_below_zbar2();

  // --- endomorphisms
  EndRingPtr end_ring();
  std::optional<std::size_t> end_size();
  // Node of phi(X) for endomorphism phi and node X.
  std::size_t image(std::size_t phi, std::size_t x);
  std::optional<EndoSubset> d_set(std::size_t n);
  std::optional<EndoSubset> t_set(std::size_t n);
  // Right ideals of S as sets of endomorphism indices, in lattice order.
  std::optional<std::vector<EndoSubset>> right_ideals();
  // sum over phi in I of phi(X).
  std::size_t ideal_image(const EndoSubset& ideal, std::size_t x);

  std::optional<bool> dual_baer();
  // The first right ideal I with I(M) not a summand.
  std::optional<EndoSubset> dual_baer_witness();
  std::optional<bool> t_dual_baer();
  std::optional<bool> t_dual_baer_zbar2_dual_baer_summand();
  std::optional<bool> t_dual_baer_sssp_images();
  std::optional<bool> t_dual_baer_image_sums();
  bool sssp_in_zbar2();
  std::optional<bool> images_of_zbar2_are_summands();
  std::optional<bool> dual_baer_quotient_condition();

  std::optional<KFlags> k_flags();
  // t-K restricted to N <= Z2(M) with conclusion "N small".
  std::optional<bool> t_k_below_zbar2();
  // C = T_S(C)(Z2(M)) for every C passing the filter.
  std::optional<bool> t_set_recovers(bool t_coclosed_only);
  // T_S(C) = T_S(0) forces C = 0 for every C passing the filter.
  std::optional<bool> t_set_detects(bool t_coclosed_only);

  // Analysis of a submodule viewed as a module on its own, cached.
  TAnalysis& sub_analysis(std::size_t node);

 private:
  std::uint64_t key3(std::size_t a, std::size_t b, std::size_t c) const {
    const std::uint64_t n = lattice_->size();
    return (a * n + b) * n + c;
  }
  bool end_available();
  bool t_set_trivial(std::size_t n);

  ModulePtr module_;
  Limits limits_;
  LatticePtr lattice_;
  CosingularCalculator cosingular_;
  std::unordered_map<std::uint64_t, bool> t_small_memo_;
  std::unordered_map<std::uint64_t, bool> t_lifting_memo_;
  std::optional<bool> amply_, lifting_, lifting_cc_;

  bool end_tried_ = false;
  EndRingPtr end_;
  std::vector<std::vector<std::int32_t>> images_;  // images_[phi][x], -1 until computed
  std::optional<std::vector<EndoSubset>> ideals_;
  std::map<std::size_t, std::unique_ptr<TAnalysis>> subs_;
};

// Entry points on whole modules.
bool is_tsmall(const Submodule& a);
bool is_tcoclosed(const Submodule& c);
bool is_tlifting(const ModulePtr& m);
std::optional<bool> is_dual_baer(const ModulePtr& m);
std::optional<bool> is_tdual_baer(const ModulePtr& m);
bool has_sssp_in_zbar2(const ModulePtr& m);
bool is_regular(const ModulePtr& m);
bool is_semisimple(const ModulePtr& m);
std::optional<KFlags> k_module_class(const ModulePtr& m);

}  // namespace modlab
