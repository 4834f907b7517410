#include <numeric>

#include "brute.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "modlab/catalog.hpp"
#include "modlab/hom.hpp"
#include "modlab/lattice.hpp"
#include "modlab/structure.hpp"

using namespace modlab;
using namespace fixtures;

TEST_SUITE("core") {
  TEST_CASE("cyclic ring") {
    const RingPtr r = cyclic_ring(4);
    CHECK(r->size() == 4);
    CHECK(r->orders() == std::vector<std::int64_t>{4});
    CHECK(r->constants()[0][0] == Coords{1});
    for (Code a = 0; a < 4; ++a)
      for (Code b = 0; b < 4; ++b) CHECK(r->mul(a, b) == (a * b) % 4);
  }

  TEST_CASE("product ring multiplies componentwise") {
    const RingPtr r = product_ring(cyclic_ring(2), cyclic_ring(4));
    CHECK(r->size() == 8);
    for (Code a = 0; a < 8; ++a)
      for (Code b = 0; b < 8; ++b) {
        const auto x = r->radix().decode(a), y = r->radix().decode(b);
        CHECK(r->radix().decode(r->mul(a, b)) == Coords{x[0] * y[0] % 2, x[1] * y[1] % 4});
      }
  }

  TEST_CASE("ring axioms hold on the built-in rings") {
    for (const auto& id : default_ring_ids()) {
      const RingPtr r = ring_from_id(id);
      for (Code a = 0; a < r->size(); ++a) {
        CHECK(r->mul(a, r->one()) == a);
        CHECK(r->mul(r->one(), a) == a);
        for (Code b = 0; b < r->size(); ++b)
          for (Code c = 0; c < r->size(); ++c) {
            CHECK(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
            CHECK(r->mul(a, r->add(b, c)) == r->add(r->mul(a, b), r->mul(a, c)));
          }
      }
    }
  }

  TEST_CASE("invalid structure constants are rejected") {
    // e1 * e1 = 0 over Z2 has no identity.
    CHECK_THROWS_AS(FiniteRing::create_with_search({2}, {{{0}}}), AlgebraError);
    try {
      FiniteRing::create_with_search({2}, {{{0}}});
    } catch (const AlgebraError& e) {
      CHECK(e.code() == ErrorCode::NoIdentity);
    }
    // Product coordinates of the wrong length.
    CHECK_THROWS_AS(FiniteRing::create({2}, {{{1, 0}}}, {1}), AlgebraError);
    // A product that does not respect the component order: Z2 basis squared into Z3.
    CHECK_THROWS_AS(FiniteRing::create({2, 3}, {{{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}}, {0, 1}), AlgebraError);
  }

  TEST_CASE("opposite ring") {
    const RingPtr z4 = cyclic_ring(4);
    CHECK(opposite_ring(z4)->same_as(*z4));
    const RingPtr t = upper_triangular_ring(2);
    const RingPtr op = opposite_ring(t);
    CHECK_FALSE(op->same_as(*t));
    CHECK(opposite_ring(op)->same_as(*t));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(op->constants()[i][j] == t->constants()[j][i]);
  }

  TEST_CASE("ring ids") {
    CHECK(ring_from_id("Z6")->size() == 6);
    CHECK(ring_from_id("F5")->size() == 5);
    CHECK(ring_from_id("T2F3")->size() == 27);
    CHECK(ring_from_id("F2[x]/(x^3)")->size() == 8);
    CHECK(ring_from_id("F2xZ4")->size() == 8);
    CHECK(ring_from_id("F2xF3xZ4")->size() == 24);
    CHECK(ring_from_id("F2[x]/(x^2)xZ3")->size() == 12);
    for (const char* bad : {"Q4", "Z", "F4", "T2F6", "Z1", "x", "F2x", "Zabc"})
      CHECK_THROWS_AS(ring_from_id(bad), AlgebraError);
  }

  TEST_CASE("modules") {
    const RingPtr z4 = cyclic_ring(4);
    const ModulePtr reg = regular_module(z4);
    CHECK(reg->size() == 4);
    CHECK(brute::all_submodules(*reg).size() == 3);
    CHECK(regular_module(ring_from_id("F3"))->size() == 3);
    const ModulePtr m = cyclic2(z4, 2, 4);
    CHECK(m->size() == 8);
    CHECK(direct_sum_module(cyclic(z4, 2), reg)->size() == 8);
    CHECK(is_isomorphic(direct_sum_module(cyclic(z4, 2), reg), m));
    CHECK(is_isomorphic(direct_sum_module(m, zero_module(z4)), m));
    // e1 acting as 2 breaks e1 * e1 = e1.
    CHECK_THROWS_AS(diagonal(z4, {4}, {{2}}), AlgebraError);
    CHECK_THROWS_AS(direct_sum_module(reg, regular_module(cyclic_ring(8))), AlgebraError);
  }

  TEST_CASE("span and sums against closure") {
    const RingPtr z4 = cyclic_ring(4);
    const ModulePtr m = cyclic2(z4, 2, 4);
    const auto& rx = m->radix();
    CHECK(span(m, {}).is_zero());
    CHECK(span(regular_module(z4), std::vector<Code>{2}).size() == 2);
    const Code g = rx.encode(Coords{1, 2});
    const Submodule a = span(m, std::vector<Code>{g});
    CHECK(a.size() == brute::count(brute::closure(*m, {g})));
    CHECK(a.size() == 2);
    const Submodule b = span(m, std::vector<Code>{rx.encode(Coords{0, 2})});
    const Submodule s = sum(a, b);
    CHECK(s.size() == brute::count(brute::join(*m, brute::closure(*m, {g}), brute::closure(*m, {rx.encode(Coords{0, 2})}))));
    CHECK(s.size() == 4);
    CHECK(s == span(m, std::vector<Code>{rx.encode(Coords{1, 0}), rx.encode(Coords{0, 2})}));
    CHECK(sum(a, zero_submodule(m)) == a);
    CHECK(intersect(a, whole_submodule(m)) == a);
  }

  TEST_CASE("quotients") {
    const RingPtr z8 = cyclic_ring(8);
    const ModulePtr m = cyclic2(z8, 2, 8);
    const Submodule k = span(m, std::vector<Code>{m->radix().encode(Coords{0, 2})});
    const auto q = quotient(m, k);
    CHECK(q.module->size() == 4);
    CHECK(is_isomorphic(q.module, cyclic2(z8, 2, 2)));
    CHECK(kernel_image(q.projection).first == k);
    CHECK(is_isomorphic(quotient(m, zero_submodule(m)).module, m));
    CHECK(quotient(m, whole_submodule(m)).module->is_zero());
  }

  TEST_CASE("hom counts against brute force") {
    const RingPtr z4 = cyclic_ring(4);
    CHECK(hom_set(cyclic(z4, 2), cyclic(z4, 4)).size() == 2);
    CHECK(brute::count_homs(*cyclic(z4, 2), *cyclic(z4, 4)) == 2);
    const RingPtr r = f2z4();
    CHECK(hom_set(block_s(r), block_z4(r)).size() == 1);
    CHECK(brute::count_homs(*block_s(r), *block_z4(r)) == 1);
    CHECK(hom_set(cyclic2(z4, 2, 4), zero_module(z4)).size() == 1);
    // |Hom(Z/a, Z/b)| = gcd(a, b) over Z/m.
    const RingPtr z8 = cyclic_ring(8);
    for (std::int64_t a : {2, 4, 8})
      for (std::int64_t b : {2, 4, 8})
        CHECK(hom_set(cyclic(z8, a), cyclic(z8, b)).size() == static_cast<std::size_t>(std::gcd(a, b)));
  }

  TEST_CASE("hom sets split over direct sums of targets") {
    const auto catalog = enumerate_modules("Z4", cyclic_ring(4), {2, 16});
    const auto& ms = catalog.modules;
    for (const auto& m : ms)
      for (const auto& n1 : ms)
        for (const auto& n2 : ms) {
          if (m->size() * n1->size() * n2->size() > 512) continue;
          CHECK(hom_set(m, direct_sum_module(n1, n2)).size() == hom_set(m, n1).size() * hom_set(m, n2).size());
        }
    for (const auto& m : ms)
      for (const auto& n : ms)
        if (m->size() * n->size() <= 64) CHECK(hom_set(m, n).size() == brute::count_homs(*m, *n));
  }

  TEST_CASE("endomorphism rings") {
    const RingPtr z4 = cyclic_ring(4);
    const auto e = EndRing::create(regular_module(z4));
    CHECK(e->size() == 4);
    CHECK(e->as_ring()->orders() == std::vector<std::int64_t>{4});
    CHECK(e->as_ring()->is_commutative());
    const ModulePtr m = cyclic2(z4, 2, 4);
    CHECK(EndRing::create(m)->size() == 32);
    CHECK(brute::count_homs(*m, *m) == 32);
    CHECK(EndRing::create(zero_module(z4))->size() == 1);
    const auto end = EndRing::create(m);
    for (std::size_t f = 0; f < end->size(); ++f)
      for (std::size_t g = 0; g < end->size(); ++g)
        for (Code x = 0; x < m->size(); ++x)
          CHECK((*end)[end->compose(f, g)].apply(x) == (*end)[f].apply((*end)[g].apply(x)));
  }

  TEST_CASE("kernel and image") {
    const ModulePtr m = regular_module(cyclic_ring(4));
    const auto [k0, i0] = kernel_image(ModuleHom::identity(m));
    CHECK(k0.is_zero());
    CHECK(i0.is_whole());
    const auto [k1, i1] = kernel_image(ModuleHom::zero(m, m));
    CHECK(k1.is_whole());
    CHECK(i1.is_zero());
    IntMatrix two(1, 1);
    two(0, 0) = 2;
    const auto [k2, i2] = kernel_image(ModuleHom::create(m, m, two));
    CHECK(k2.elements() == std::vector<Code>{0, 2});
    CHECK(i2.elements() == std::vector<Code>{0, 2});
    IntMatrix bad(1, 1);
    bad(0, 0) = 1;
    CHECK_THROWS_AS(ModuleHom::create(cyclic(cyclic_ring(4), 2), m, bad), AlgebraError);
  }

  TEST_CASE("isomorphism") {
    const RingPtr z4 = cyclic_ring(4);
    CHECK(is_isomorphic(regular_module(z4), regular_module(z4)));
    CHECK_FALSE(is_isomorphic(cyclic2(z4, 2, 2), regular_module(z4)));
    const RingPtr r = f2z4();
    CHECK(is_isomorphic(regular_module(r), s_plus_z4(r)));
  }

  TEST_CASE("module JSON round trip") {
    for (const auto& id : {"Z8", "T2F2"}) {
      const auto c = enumerate_modules(id, ring_from_id(id), {2, 64});
      for (const auto& m : c.modules) {
        const ModulePtr back = module_from_json(module_to_json(*m, id));
        CHECK(back->key() == m->key());
        const ModulePtr inline_ring = module_from_json(Json::parse(module_to_json(*m).dump()));
        CHECK(inline_ring->key() == m->key());
      }
    }
    Json j = ring_to_json(*ring_from_id("T2F2"));
    j.erase("one");
    CHECK(ring_from_json(j)->same_as(*ring_from_id("T2F2")));
    CHECK_THROWS_AS(module_from_json(Json{{"ring", "Z4"}, {"orders", {4}}}), AlgebraError);
  }
}
