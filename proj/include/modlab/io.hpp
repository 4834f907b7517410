#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "modlab/module.hpp"

namespace modlab {

using Json = nlohmann::ordered_json;

// Ring identifiers: Z<n>, F<p>, T2F<p>, F<p>[x]/(x^<n>), and products A x B
// written "AxB" (e.g. F2xZ4).
RingPtr ring_from_id(const std::string& id);
// The built-in ring set exercised by `verify --ring all`.
const std::vector<std::string>& default_ring_ids();

// {"orders": [...], "constants": [[[...]]], "one": [...]}; "one" may be
// omitted, in which case the identity is searched for.
Json ring_to_json(const FiniteRing& ring);
RingPtr ring_from_json(const Json& j);

// {"ring": <id or ring object>, "orders": [...], "action": [[[...]]]} with
// action[b] the row-major matrix of basis element b.
Json module_to_json(const FiniteModule& m, const std::string& ring_id = {});
ModulePtr module_from_json(const Json& j);

// {"size": n, "generators": [[coords], ...]}
Json submodule_to_json(const Submodule& s);
Json matrix_to_json(const IntMatrix& m);

}  // namespace modlab
