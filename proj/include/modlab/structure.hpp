#pragma once

#include <optional>
#include <vector>

#include "modlab/hom.hpp"
#include "modlab/lattice.hpp"

namespace modlab {

// Parts pairwise meeting in zero and summing to the module; when present the
// witness holds orthogonal idempotents whose images are the parts.
struct Decomposition {
  std::vector<Submodule> parts;
  std::vector<ModuleHom> witness;
};

// Complement scan over the lattice.
std::optional<Submodule> direct_complement(const Submodule& a);
bool is_direct_summand(const Submodule& a);
// The projections onto a along b and onto b along a, for M = a (+) b.
Decomposition split(const Submodule& a, const Submodule& b);
// Independent route: an idempotent endomorphism with image a.
std::optional<ModuleHom> idempotent_with_image(const EndRing& end, const Submodule& a);

bool is_supplement(const Submodule& x, const Submodule& y);
std::vector<Submodule> supplements_of(const Submodule& y);
bool is_amply_supplemented(const ModulePtr& m);
bool is_coclosed(const Submodule& c);
// Every submodule A contains a summand N with A/N small in M/N.
bool is_lifting(const ModulePtr& m);
// Amply supplemented and every coclosed submodule a summand.
bool is_lifting_by_coclosed(const ModulePtr& m);

// The same notions inside the subquotient hi/lo of one lattice. Arguments
// are node indices; results refer to nodes of the same lattice.
std::optional<std::size_t> complement_in(const SubmoduleLattice& lat, std::size_t a, std::size_t lo, std::size_t hi);
bool summand_in(const SubmoduleLattice& lat, std::size_t a, std::size_t lo, std::size_t hi);
bool supplement_in(const SubmoduleLattice& lat, std::size_t x, std::size_t y, std::size_t lo, std::size_t hi);
bool amply_supplemented_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi);
bool coclosed_in(const SubmoduleLattice& lat, std::size_t c, std::size_t lo, std::size_t hi);
bool lifting_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi);
bool lifting_by_coclosed_in(const SubmoduleLattice& lat, std::size_t lo, std::size_t hi);

// R^op, memoized so that the opposite of the opposite is the original object.
RingPtr opposite_of(const RingPtr& ring);

// Characters x -> sum_j x_j c_j / m_j in Q/Z, a right module over R^op.
// Applying it twice returns the original presentation.
ModulePtr character_dual(const ModulePtr& m);
// D(f): D(target) -> D(source), chi -> chi o f.
ModuleHom dual_hom(const ModuleHom& f);

// One primitive idempotent e for each isomorphism class of eR, in code order.
const std::vector<Code>& primitive_idempotents(const RingPtr& ring);

struct Cover {
  ModulePtr module;
  ModuleHom map;
};
// P = (+) e_i R with a surjection onto M whose kernel is small.
Cover projective_cover(const ModulePtr& m);
// E(M) = D(P(D(M))) with the dual of the cover as an essential embedding.
Cover injective_hull(const ModulePtr& m);

// Baer's criterion over the right ideals of R.
bool is_injective(const ModulePtr& m);
// A hom from a right ideal into M that does not extend to R, if any.
std::optional<ModuleHom> baer_obstruction(const ModulePtr& m);

// Small in its injective hull. Memoized by module identity.
bool is_small_module(const ModulePtr& m);

}  // namespace modlab
