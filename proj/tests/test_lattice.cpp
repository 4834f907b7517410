#include "brute.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "modlab/catalog.hpp"
#include "modlab/lattice.hpp"

using namespace modlab;
using namespace fixtures;

namespace {

brute::Set as_set(const Submodule& s) {
  brute::Set out(s.parent()->size(), false);
  for (Code c : s.elements()) out[c] = true;
  return out;
}

std::vector<ModulePtr> sample_modules() {
  std::vector<ModulePtr> out;
  for (const auto& id : {"Z4", "Z8", "F3", "F2xZ4", "T2F2"}) {
    const auto c = enumerate_modules(id, ring_from_id(id), {2, 32});
    out.insert(out.end(), c.modules.begin(), c.modules.end());
  }
  return out;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("submodule counts") {
    const RingPtr z4 = cyclic_ring(4), z8 = cyclic_ring(8);
    CHECK(submodules(cyclic2(z4, 2, 4))->size() == 8);
    CHECK(submodules(cyclic2(z8, 2, 8))->size() == 11);
    CHECK(submodules(regular_module(z4))->size() == 3);
    CHECK(submodules(zero_module(z4))->size() == 1);
  }

  TEST_CASE("nodes match a brute-force enumeration") {
    for (const auto& m : sample_modules()) {
      const auto lat = submodules(m);
      const auto subs = brute::all_submodules(*m);
      REQUIRE(lat->size() == subs.size());
      for (const auto& s : subs) {
        std::vector<Code> gens = brute::members(s);
        CHECK(lat->find(span(m, gens).element_set()).has_value());
      }
    }
  }

  TEST_CASE("order, join and meet") {
    for (const auto& m : sample_modules()) {
      const auto& lat = *submodules(m);
      CHECK(lat[lat.bottom()].is_zero());
      CHECK(lat[lat.top()].is_whole());
      for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j = 0; j < lat.size(); ++j) {
          CHECK(lat.leq(i, j) == lat[i].subset_of(lat[j]));
          CHECK(lat[lat.meet(i, j)] == intersect(lat[i], lat[j]));
          CHECK(as_set(lat[lat.join(i, j)]) == brute::join(*m, as_set(lat[i]), as_set(lat[j])));
        }
    }
  }

  TEST_CASE("modular law") {
    for (const auto& m : sample_modules()) {
      const auto& lat = *submodules(m);
      if (lat.size() > 20) continue;
      for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b)
          for (std::size_t c = 0; c < lat.size(); ++c)
            if (lat.leq(a, c)) CHECK(lat.join(a, lat.meet(b, c)) == lat.meet(lat.join(a, b), c));
    }
  }

  TEST_CASE("covers are the Hasse edges") {
    for (const auto& m : sample_modules()) {
      const auto& lat = *submodules(m);
      for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j : lat.covers(i)) {
          CHECK(lat.leq(i, j));
          CHECK(i != j);
          for (std::size_t k = 0; k < lat.size(); ++k)
            CHECK_FALSE((k != i && k != j && lat.leq(i, k) && lat.leq(k, j)));
        }
    }
  }

  TEST_CASE("radical and socle against maximal and minimal submodules") {
    for (const auto& m : sample_modules()) {
      const auto subs = brute::all_submodules(*m);
      CHECK(as_set(radical(m)) == brute::radical(*m, subs));
      CHECK(as_set(socle(m)) == brute::socle(*m, subs));
    }
    const RingPtr z4 = cyclic_ring(4), z8 = cyclic_ring(8);
    CHECK(radical(cyclic2(z8, 2, 8)).size() == 4);
    CHECK(socle(regular_module(z4)).elements() == std::vector<Code>{0, 2});
    CHECK(jacobson_radical(z4).count() == 2);
    CHECK(jacobson_radical(ring_from_id("F3")).count() == 1);
    CHECK(jacobson_radical(ring_from_id("T2F2")).count() == 2);
  }

  TEST_CASE("smallness against the definition") {
    for (const auto& m : sample_modules()) {
      const auto& lat = *submodules(m);
      const auto subs = brute::all_submodules(*m);
      for (std::size_t a = 0; a < lat.size(); ++a) {
        const bool expected = brute::is_small(*m, subs, as_set(lat[a]));
        CHECK(is_small(lat[a]) == expected);
        CHECK(is_small_by_scan(lat[a]) == expected);
        CHECK(small_in(lat, a, 0, lat.top()) == expected);
      }
    }
  }

  TEST_CASE("relative smallness inside intervals") {
    for (const auto& m : sample_modules()) {
      const auto& lat = *submodules(m);
      if (lat.size() > 16) continue;
      for (std::size_t lo = 0; lo < lat.size(); ++lo)
        for (std::size_t hi = 0; hi < lat.size(); ++hi) {
          if (!lat.leq(lo, hi)) continue;
          for (std::size_t a : lat.interval(lo, hi))
            CHECK(small_in(lat, a, lo, hi) == small_in_by_scan(lat, a, lo, hi));
        }
    }
  }

  TEST_CASE("essential submodules") {
    const RingPtr z4 = cyclic_ring(4), z8 = cyclic_ring(8);
    const ModulePtr reg = regular_module(z4);
    CHECK(is_essential(span(reg, std::vector<Code>{2})));
    CHECK_FALSE(is_essential(zero_submodule(reg)));
    const ModulePtr m = cyclic2(z8, 2, 8);
    CHECK(is_essential(socle(m)));
    CHECK_FALSE(is_essential(span(m, std::vector<Code>{m->radix().encode(Coords{0, 1})})));
    for (const auto& mod : sample_modules()) {
      const auto& lat = *submodules(mod);
      for (std::size_t a = 0; a < lat.size(); ++a) {
        bool expected = true;
        for (std::size_t b = 1; b < lat.size(); ++b)
          if (lat.meet(a, b) == 0) expected = false;
        CHECK(is_essential(lat[a]) == expected);
      }
    }
  }
}
