#include "modlab/io.hpp"

#include <cctype>

namespace modlab {

namespace {

std::int64_t parse_positive(const std::string& s, const std::string& id) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw AlgebraError(ErrorCode::InvalidInput, "bad number in ring id '" + id + "'");
  const std::int64_t v = std::stoll(s);
  if (v < 2) throw AlgebraError(ErrorCode::InvalidInput, "ring id '" + id + "' needs a modulus >= 2");
  return v;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Splits "AxB" at the last top-level 'x'.
std::optional<std::pair<std::string, std::string>> split_product(const std::string& id) {
  int depth = 0;
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < id.size(); ++i) {
    const char c = id[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == 'x' && depth == 0) at = i;
  }
  if (!at || *at == 0 || *at + 1 == id.size()) return std::nullopt;
  return std::make_pair(id.substr(0, *at), id.substr(*at + 1));
}

}  // namespace

RingPtr ring_from_id(const std::string& id) {
  if (auto parts = split_product(id)) return product_ring(ring_from_id(parts->first), ring_from_id(parts->second));
  if (id.starts_with("T2F")) {
    const auto p = parse_positive(id.substr(3), id);
    if (!is_prime(p)) throw AlgebraError(ErrorCode::InvalidInput, "T2F<p> needs a prime p");
    return upper_triangular_ring(p);
  }
  const auto bracket = id.find("[x]/(x^");
  if (bracket != std::string::npos && (id[0] == 'F' || id[0] == 'Z') && id.back() == ')') {
    const auto p = parse_positive(id.substr(1, bracket - 1), id);
    const auto n = parse_positive(id.substr(bracket + 7, id.size() - bracket - 8), id);
    return polynomial_quotient_ring(p, static_cast<int>(n));
  }
  if (id.starts_with("F")) {
    const auto p = parse_positive(id.substr(1), id);
    if (!is_prime(p)) throw AlgebraError(ErrorCode::InvalidInput, "F<p> needs a prime p");
    return FiniteRing::create({p}, {{{1}}}, {1}, default_limits(), id);
  }
  if (id.starts_with("Z")) return cyclic_ring(parse_positive(id.substr(1), id));
  throw AlgebraError(ErrorCode::InvalidInput, "unknown ring id '" + id + "'");
}

const std::vector<std::string>& default_ring_ids() {
  static const std::vector<std::string> ids = {"Z4", "Z8", "F3", "Z6", "F2xZ4", "T2F2"};
  return ids;
}

Json ring_to_json(const FiniteRing& ring) {
  Json c = Json::array();
  for (const auto& row : ring.constants()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v);
    c.push_back(r);
  }
  return Json{{"orders", ring.orders()}, {"constants", c}, {"one", ring.one_coords()}};
}

RingPtr ring_from_json(const Json& j) {
  try {
    auto orders = j.at("orders").get<std::vector<std::int64_t>>();
    auto constants = j.at("constants").get<StructureConstants>();
    if (j.contains("one")) return FiniteRing::create(orders, constants, j.at("one").get<Coords>());
    return FiniteRing::create_with_search(orders, constants);
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(ErrorCode::InvalidInput, std::string("ring JSON: ") + e.what());
  }
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols; ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

Json module_to_json(const FiniteModule& m, const std::string& ring_id) {
  Json action = Json::array();
  for (const auto& a : m.action()) action.push_back(matrix_to_json(a));
  Json ring = ring_id.empty() ? ring_to_json(*m.ring()) : Json(ring_id);
  return Json{{"ring", ring}, {"orders", m.orders()}, {"action", action}};
}

ModulePtr module_from_json(const Json& j) {
  try {
    const Json& r = j.at("ring");
    RingPtr ring = r.is_string() ? ring_from_id(r.get<std::string>()) : ring_from_json(r);
    auto orders = j.at("orders").get<std::vector<std::int64_t>>();
    std::vector<IntMatrix> action;
    for (const auto& a : j.at("action")) {
      IntMatrix m(orders.size(), orders.size());
      if (a.size() != orders.size()) throw AlgebraError(ErrorCode::IllFormedAction, "action matrix has wrong shape");
      for (std::size_t i = 0; i < orders.size(); ++i) {
        if (a[i].size() != orders.size())
          throw AlgebraError(ErrorCode::IllFormedAction, "action matrix has wrong shape");
        for (std::size_t k = 0; k < orders.size(); ++k) m(i, k) = a[i][k].get<std::int64_t>();
      }
      action.push_back(std::move(m));
    }
    return FiniteModule::create(ring, orders, std::move(action));
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(ErrorCode::InvalidInput, std::string("module JSON: ") + e.what());
  }
}

Json submodule_to_json(const Submodule& s) {
  Json gens = Json::array();
  for (Code g : s.generators()) gens.push_back(s.parent()->radix().decode(g));
  return Json{{"size", s.size()}, {"generators", gens}};
}

}  // namespace modlab
