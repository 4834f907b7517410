#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "modlab/catalog.hpp"
#include "modlab/ttheory.hpp"

using namespace modlab;
using namespace fixtures;

namespace {

std::vector<ModulePtr> sample_modules(std::size_t max_size = 32) {
  std::vector<ModulePtr> out;
  for (const auto& id : {"Z4", "Z8", "F3", "F2xZ4", "T2F2"}) {
    const auto c = enumerate_modules(id, ring_from_id(id), {2, max_size});
    out.insert(out.end(), c.modules.begin(), c.modules.end());
  }
  return out;
}

// Node indices of the lattice: Z2(M/lo) <= (a + b)/lo forces Z2(M/lo) <= b/lo
// for every b >= lo.
bool t_small_over(TAnalysis& t, std::size_t a, std::size_t lo) {
  const auto& lat = t.lattice();
  const std::size_t z = t.cosingular().zbar2_in(lo, lat.top());
  for (std::size_t b = 0; b < lat.size(); ++b)
    if (lat.leq(lo, b) && lat.leq(z, lat.join(a, b)) && !lat.leq(z, b)) return false;
  return true;
}

bool t_coclosed_def(TAnalysis& t, std::size_t c) {
  const auto& lat = t.lattice();
  for (std::size_t d = 0; d < lat.size(); ++d)
    if (d != c && lat.leq(d, c) && t_small_over(t, c, d)) return false;
  return true;
}

bool t_lifting_def(TAnalysis& t) {
  const auto& lat = t.lattice();
  for (std::size_t a = 0; a < lat.size(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < lat.size() && !found; ++b)
      found = lat.leq(b, a) && t.summand(b) && t_small_over(t, a, b);
    if (!found) return false;
  }
  return true;
}

// Right ideals of End(M) as sets of endomorphism indices, grown one generator
// at a time under addition and composition on the right.
std::set<std::vector<std::size_t>> right_ideals(const EndRing& s) {
  const auto close = [&](std::vector<std::size_t> gens) {
    std::vector<bool> in(s.size(), false);
    std::vector<std::size_t> work{s.zero_index()};
    in[s.zero_index()] = true;
    for (std::size_t g : gens)
      if (!in[g]) {
        in[g] = true;
        work.push_back(g);
      }
    std::vector<std::size_t> members(work);
    while (!work.empty()) {
      const std::size_t f = work.back();
      work.pop_back();
      std::vector<std::size_t> next;
      for (std::size_t g = 0; g < s.size(); ++g) next.push_back(s.compose(f, g));
      for (std::size_t g : members) next.push_back(s.add(f, g));
      for (std::size_t g : next)
        if (!in[g]) {
          in[g] = true;
          work.push_back(g);
          members.push_back(g);
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < s.size(); ++f)
      if (in[f]) out.push_back(f);
    return out;
  };
  std::set<std::vector<std::size_t>> seen{close({})};
  std::vector<std::vector<std::size_t>> work(seen.begin(), seen.end());
  while (!work.empty()) {
    const auto ideal = work.back();
    work.pop_back();
    for (std::size_t f = 0; f < s.size(); ++f) {
      auto gens = ideal;
      gens.push_back(f);
      auto next = close(gens);
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  return seen;
}

// Every right ideal I has sum of phi(X) over phi in I a summand.
bool baer_scan(const FiniteModule& m, const EndRing& s, const std::vector<brute::Set>& subs, const brute::Set& x) {
  for (const auto& ideal : right_ideals(s)) {
    std::vector<Code> gens;
    for (std::size_t f : ideal)
      for (Code c : brute::members(x)) gens.push_back(s[f].apply(c));
    if (!brute::is_summand(m, subs, brute::closure(m, gens))) return false;
  }
  return true;
}

brute::Set as_set(const Submodule& s) {
  brute::Set out(s.parent()->size(), false);
  for (Code c : s.elements()) out[c] = true;
  return out;
}

std::size_t node(const ModulePtr& m, std::vector<Coords> gens) {
  std::vector<Code> codes;
  for (const auto& g : gens) codes.push_back(m->radix().encode(g));
  return submodules(m)->index_of(span(m, codes));
}

}  // namespace

TEST_SUITE("ttheory") {
  TEST_CASE("t-small against the definition") {
    for (const auto& m : sample_modules()) {
      TAnalysis t(m);
      for (std::size_t a = 0; a < t.lattice().size(); ++a) {
        const bool expected = t_small_over(t, a, 0);
        CHECK(t.t_small(a) == expected);
        CHECK(is_tsmall(t.lattice()[a]) == expected);
        if (t.small(a)) CHECK(expected);
      }
    }
  }

  TEST_CASE("t-coclosed against the definition") {
    for (const auto& m : sample_modules()) {
      TAnalysis t(m);
      for (std::size_t c = 0; c < t.lattice().size(); ++c) CHECK(t.t_coclosed(c) == t_coclosed_def(t, c));
    }
  }

  TEST_CASE("t-lifting against the definition") {
    for (const auto& m : sample_modules()) {
      TAnalysis t(m);
      CHECK(t.t_lifting() == t_lifting_def(t));
      if (t.lifting()) CHECK(t.t_lifting());
    }
  }

  TEST_CASE("dual Baer and t-dual Baer against a right-ideal scan") {
    for (const auto& m : sample_modules(16)) {
      TAnalysis t(m);
      const auto s = EndRing::create(m);
      if (s->size() > 32) continue;
      const auto subs = brute::all_submodules(*m);
      const bool db = baer_scan(*m, *s, subs, brute::whole(*m));
      const bool tdb = baer_scan(*m, *s, subs, as_set(t.lattice()[t.zbar2()]));
      CHECK(t.dual_baer() == std::optional<bool>(db));
      CHECK(t.t_dual_baer() == std::optional<bool>(tdb));
      CHECK(t.dual_baer_witness().has_value() == !db);
      CHECK(t.right_ideals()->size() == right_ideals(*s).size());
    }
  }

  TEST_CASE("d_set and t_set are right ideals with exact membership") {
    for (const auto& m : sample_modules(16)) {
      TAnalysis t(m);
      const auto s = t.end_ring();
      const auto& lat = t.lattice();
      const Submodule& z2 = lat[t.zbar2()];
      for (std::size_t n = 0; n < lat.size(); ++n) {
        const auto d = t.d_set(n), ts = t.t_set(n);
        REQUIRE(d.has_value());
        REQUIRE(ts.has_value());
        CHECK(is_right_ideal(*d));
        CHECK(is_right_ideal(*ts));
        std::vector<std::size_t> d_expected, t_expected;
        for (std::size_t f = 0; f < s->size(); ++f) {
          bool in_d = true, in_t = true;
          for (Code x = 0; x < m->size(); ++x) in_d = in_d && lat[n].contains((*s)[f].apply(x));
          for (Code x : z2.elements()) in_t = in_t && lat[n].contains((*s)[f].apply(x));
          if (in_d) d_expected.push_back(f);
          if (in_t) t_expected.push_back(f);
        }
        CHECK(d->members == d_expected);
        CHECK(ts->members == t_expected);
      }
      CHECK(t.d_set(lat.top())->members.size() == s->size());
      CHECK(t.d_set(0)->members == std::vector<std::size_t>{s->zero_index()});
    }
  }

  TEST_CASE("K flags against the definitions") {
    for (const auto& m : sample_modules(16)) {
      TAnalysis t(m);
      const auto& lat = t.lattice();
      const auto d0 = t.d_set(0)->members;
      const auto t0 = t.t_set(0)->members;
      KFlags expected{true, true, true};
      for (std::size_t n = 0; n < lat.size(); ++n) {
        if (t.d_set(n)->members == d0 && !t.small(n)) expected.k = false;
        if (t.t_set(n)->members == t0 && !t.t_small(n)) expected.t_k = false;
        if (t.t_set(n)->members == t0 && !t.small(n)) expected.strongly_t_k = false;
      }
      const auto flags = t.k_flags();
      REQUIRE(flags.has_value());
      CHECK(flags->k == expected.k);
      CHECK(flags->t_k == expected.t_k);
      CHECK(flags->strongly_t_k == expected.strongly_t_k);
    }
  }

  TEST_CASE("S + Z4 over F2 x Z4") {
    const RingPtr r = f2z4();
    const ModulePtr m = s_plus_z4(r);
    TAnalysis t(m);
    const std::size_t z4_block = node(m, {{0, 1}});
    const std::size_t s_block = node(m, {{1, 0}});
    const std::size_t two_z4 = node(m, {{0, 2}});
    CHECK(t.t_small(z4_block));
    CHECK_FALSE(t.small(z4_block));
    CHECK(t.t_small(0));
    CHECK(t.t_coclosed(s_block));
    CHECK_FALSE(t.t_coclosed(two_z4));
    CHECK(t.t_coclosed(0));
    CHECK(t.t_lifting());
    CHECK(t.t_set(0)->members.size() == 4);
    CHECK(t.t_set(z4_block)->members == t.t_set(0)->members);
    CHECK(t.t_dual_baer() == std::optional<bool>(true));
    CHECK(t.sssp_in_zbar2());
    CHECK(t.k_flags()->t_k);
    CHECK(is_tdual_baer(zero_module(r)) == std::optional<bool>(true));
    TAnalysis ss(diagonal(r, {2, 2}, {{1, 1}, {0, 0}}));
    CHECK(ss.dual_baer() == std::optional<bool>(true));
  }

  TEST_CASE("Z2 + Z8 over Z8") {
    const ModulePtr m = cyclic2(cyclic_ring(8), 2, 8);
    TAnalysis t(m);
    CHECK(t.zbar2() == 0);
    CHECK(t.t_small(t.top()));
    CHECK_FALSE(t.t_coclosed(t.top()));
    CHECK(t.t_lifting());
    CHECK_FALSE(t.lifting());
    CHECK(t.amply_supplemented());
    const auto flags = k_module_class(m);
    REQUIRE(flags.has_value());
    CHECK(flags->k);
    CHECK(flags->t_k);
    CHECK_FALSE(flags->strongly_t_k);
  }

  TEST_CASE("Z2 + Z4 over Z4") {
    const ModulePtr m = cyclic2(cyclic_ring(4), 2, 4);
    CHECK(is_tlifting(m));
    CHECK(TAnalysis(m).lifting());
  }

  TEST_CASE("regular Z4 is t-dual Baer but not dual Baer") {
    const ModulePtr m = regular_module(cyclic_ring(4));
    TAnalysis t(m);
    CHECK(t.dual_baer() == std::optional<bool>(false));
    CHECK(t.t_dual_baer() == std::optional<bool>(true));
    const auto w = t.dual_baer_witness();
    REQUIRE(w.has_value());
    CHECK(w->members.size() == 2);
    CHECK(t.lattice()[t.ideal_image(*w, t.top())].elements() == std::vector<Code>{0, 2});
    CHECK_FALSE(is_regular(m));
    CHECK_FALSE(is_semisimple(m));
  }

  TEST_CASE("semisimple modules") {
    for (const auto& m : enumerate_modules("F3", ring_from_id("F3"), {2, 64}).modules) {
      CHECK(is_dual_baer(m) == std::optional<bool>(true));
      CHECK(is_regular(m));
      CHECK(is_semisimple(m));
      const auto flags = k_module_class(m);
      REQUIRE(flags.has_value());
      CHECK(flags->k);
      CHECK(flags->strongly_t_k);
    }
  }

  TEST_CASE("regular and semisimple against scans") {
    for (const auto& m : sample_modules()) {
      const auto& lat = *submodules(m);
      bool regular = true;
      for (Code x = 0; x < m->size(); ++x)
        regular = regular && is_direct_summand(span(m, std::vector<Code>{x}));
      CHECK(is_regular(m) == regular);
      CHECK(is_semisimple(m) == socle(m).is_whole());
      bool sssp = true;
      const Submodule z2 = zbar2(m);
      for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b)
          if (lat[a].subset_of(z2) && lat[b].subset_of(z2) && is_direct_summand(lat[a]) &&
              is_direct_summand(lat[b]))
            sssp = sssp && is_direct_summand(sum(lat[a], lat[b]));
      CHECK(has_sssp_in_zbar2(m) == sssp);
    }
  }
}
