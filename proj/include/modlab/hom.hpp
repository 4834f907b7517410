#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modlab/module.hpp"

namespace modlab {

// A right R-linear map. Target coordinates are matrix * source coordinates;
// entries are reduced, so equal maps have equal matrices.
class ModuleHom {
 public:
  ModuleHom() = default;
  // Validates well-definedness and R-linearity.
  static ModuleHom create(ModulePtr source, ModulePtr target, IntMatrix matrix);
  static ModuleHom identity(const ModulePtr& m);
  static ModuleHom zero(const ModulePtr& source, const ModulePtr& target);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  Code apply(Code x) const;
  // Codes of every source element's image, indexed by source code.
  std::vector<Code> image_table() const;

  bool operator==(const ModuleHom& other) const { return matrix_ == other.matrix_; }

 private:
  ModuleHom(ModulePtr s, ModulePtr t, IntMatrix m) : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)) {}
  friend ModuleHom compose(const ModuleHom&, const ModuleHom&);
  friend ModuleHom add(const ModuleHom&, const ModuleHom&);
  friend ModuleHom trusted_hom(ModulePtr, ModulePtr, IntMatrix);

  ModulePtr source_;
  ModulePtr target_;
  IntMatrix matrix_;
};

// Built without re-validation by code that already guarantees linearity.
ModuleHom trusted_hom(ModulePtr source, ModulePtr target, IntMatrix matrix);

// g after f.
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);
ModuleHom add(const ModuleHom& f, const ModuleHom& g);

std::pair<Submodule, Submodule> kernel_image(const ModuleHom& f);
Submodule image_of(const ModuleHom& f, const Submodule& a);
Submodule preimage_of(const ModuleHom& f, const Submodule& b);

// Every right R-linear map source -> target, in a fixed enumeration order.
std::vector<ModuleHom> hom_set(const ModulePtr& source, const ModulePtr& target, const Limits& limits = default_limits());

std::optional<ModuleHom> find_isomorphism(const ModulePtr& a, const ModulePtr& b,
                                          const Limits& limits = default_limits());
bool is_isomorphic(const ModulePtr& a, const ModulePtr& b, const Limits& limits = default_limits());

struct QuotientResult {
  ModulePtr module;
  ModuleHom projection;
};
QuotientResult quotient(const ModulePtr& m, const Submodule& a);

struct SubmoduleModule {
  ModulePtr module;
  ModuleHom inclusion;
};
SubmoduleModule as_module(const Submodule& a);

struct DirectSum {
  ModulePtr module;
  ModuleHom inject_first, inject_second;
  ModuleHom project_first, project_second;
};
DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b);

struct MatrixHash {
  std::size_t operator()(const IntMatrix& m) const;
};

// All endomorphisms of a module with their ring structure. Endomorphisms act
// on the left: (f g)(x) = f(g(x)).
class EndRing {
 public:
  static std::shared_ptr<const EndRing> create(const ModulePtr& m, const Limits& limits = default_limits());

  const ModulePtr& module() const { return module_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ModuleHom>& elements() const { return elements_; }
  const ModuleHom& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t zero_index() const { return zero_; }
  std::size_t identity_index() const { return identity_; }
  std::size_t index_of(const IntMatrix& m) const;
  std::size_t compose(std::size_t f, std::size_t g) const;
  std::size_t add(std::size_t f, std::size_t g) const;
  bool is_idempotent(std::size_t f) const { return compose(f, f) == f; }

  // The endomorphism ring as a FiniteRing, so its right ideals are the
  // submodules of its regular module.
  const RingPtr& as_ring() const { return ring_; }
  Code ring_code(std::size_t f) const { return static_cast<Code>(to_ring_[f]); }
  std::size_t from_ring_code(Code c) const { return from_ring_[c]; }

 private:
  ModulePtr module_;
  std::vector<ModuleHom> elements_;
  std::unordered_map<IntMatrix, std::size_t, MatrixHash> index_;
  std::size_t zero_ = 0, identity_ = 0;
  RingPtr ring_;
  std::vector<std::int32_t> to_ring_;
  std::vector<std::size_t> from_ring_;
};

using EndRingPtr = std::shared_ptr<const EndRing>;

}  // namespace modlab
