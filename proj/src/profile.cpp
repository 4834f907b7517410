#include "modlab/harness.hpp"

#include "modlab/structure.hpp"

namespace modlab {

namespace {

Json encode(std::optional<bool> v) { return v ? Json(*v) : Json("unevaluated"); }

std::optional<bool> decode(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& predicate_ids() {
  static const std::vector<std::string> ids = {
      "amply_supplemented", "lifting",     "t_lifting",   "dual_baer",          "t_dual_baer",
      "k",                  "t_k",         "strongly_t_k", "regular",           "semisimple",
      "sssp_in_zbar2",      "noncosingular", "cosingular", "injective",         "small_module",
      "zbar2_summand",      "zbar2_injective"};
  return ids;
}

std::optional<bool> PropertyReport::value(const std::string& id) const {
  if (!values.contains(id)) throw AlgebraError(ErrorCode::InvalidInput, "unknown predicate '" + id + "'");
  return decode(values.at(id));
}

Json PropertyReport::to_json() const {
  return Json{{"module", module_id},
              {"lattice_size", lattice_size},
              {"end_size", end_size ? Json(*end_size) : Json("unevaluated")},
              {"values", values},
              {"cross_checks", cross_checks},
              {"counts", counts},
              {"cosingular", cosingular},
              {"flags", flags}};
}

PropertyReport PropertyReport::from_json(const Json& j) {
  PropertyReport p;
  p.module_id = j.at("module").get<std::string>();
  p.lattice_size = j.at("lattice_size").get<std::size_t>();
  if (j.at("end_size").is_number()) p.end_size = j.at("end_size").get<std::size_t>();
  p.values = j.at("values");
  p.cross_checks = j.at("cross_checks");
  p.counts = j.at("counts");
  p.cosingular = j.at("cosingular");
  p.flags = j.at("flags").get<std::vector<std::string>>();
  return p;
}

PropertyReport profile_module(TAnalysis& t, const std::string& module_id) {
  const SubmoduleLattice& lat = t.lattice();
  const std::size_t z = t.zbar(), z2 = t.zbar2(), top = t.top();
  PropertyReport p;
  p.module_id = module_id;
  p.lattice_size = lat.size();
  p.end_size = t.end_size();

  const auto k = t.k_flags();
  const bool z2_summand = t.summand(z2);
  const ModulePtr z2_module = as_module(lat[z2]).module;
  const std::map<std::string, std::optional<bool>> v = {
      {"amply_supplemented", t.amply_supplemented()},
      {"lifting", t.lifting()},
      {"t_lifting", t.t_lifting()},
      {"dual_baer", t.dual_baer()},
      {"t_dual_baer", t.t_dual_baer()},
      {"k", k ? std::optional<bool>(k->k) : std::nullopt},
      {"t_k", k ? std::optional<bool>(k->t_k) : std::nullopt},
      {"strongly_t_k", k ? std::optional<bool>(k->strongly_t_k) : std::nullopt},
      {"regular", t.regular()},
      {"semisimple", t.semisimple()},
      {"sssp_in_zbar2", t.sssp_in_zbar2()},
      {"noncosingular", z == top},
      {"cosingular", z == 0},
      {"injective", is_injective(t.module())},
      {"small_module", is_small_module(t.module())},
      {"zbar2_summand", z2_summand},
      {"zbar2_injective", is_injective(z2_module)},
  };
  p.values = Json::object();
  for (const auto& id : predicate_ids()) p.values[id] = encode(v.at(id));

  p.cross_checks = Json{{"lifting_by_coclosed", t.lifting_by_coclosed()},
                        {"t_lifting_zbar2_summands", t.t_lifting_zbar2_summands()},
                        {"t_dual_baer_zbar2_dual_baer_summand", encode(t.t_dual_baer_zbar2_dual_baer_summand())},
                        {"t_k_below_zbar2", encode(t.t_k_below_zbar2())}};

  std::size_t summands = 0, small = 0, t_small = 0, coclosed = 0, t_coclosed = 0;
  bool small_mismatch = false, coclosed_mismatch = false;
  for (std::size_t a = 0; a < lat.size(); ++a) {
    const bool s = t.small(a), ts = t.t_small(a), c = t.coclosed(a), tc = t.t_coclosed(a);
    summands += t.summand(a);
    small += s;
    t_small += ts;
    coclosed += c;
    t_coclosed += tc;
    small_mismatch |= s != ts;
    coclosed_mismatch |= c != tc;
  }
  p.counts = Json{{"submodules", lat.size()}, {"summands", summands}, {"small", small},
                  {"t_small", t_small},       {"coclosed", coclosed}, {"t_coclosed", t_coclosed}};

  CosingularClass cls = CosingularClass::Mixed;
  if (z == top)
    cls = CosingularClass::Noncosingular;
  else if (z == 0)
    cls = CosingularClass::Cosingular;
  p.cosingular = Json{{"class", to_string(cls)},
                      {"zbar", submodule_to_json(lat[z])},
                      {"zbar2", submodule_to_json(lat[z2])}};

  const auto flag = [&](bool bad, const char* what) {
    if (bad) p.flags.emplace_back(what);
  };
  const auto t_dual_baer = v.at("t_dual_baer"), dual_baer = v.at("dual_baer");
  flag(t.lifting() != t.lifting_by_coclosed(), "lifting routes disagree");
  flag(t.t_lifting() != t.t_lifting_zbar2_summands(), "t-lifting routes disagree");
  flag(t.lifting() && !t.t_lifting(), "lifting but not t-lifting");
  flag(t.amply_supplemented() && t.t_lifting() && t_dual_baer == false, "t-lifting but not t-dual Baer");
  flag(z == top && small_mismatch, "noncosingular but t-small differs from small");
  flag(z == top && coclosed_mismatch, "noncosingular but t-coclosed differs from coclosed");
  flag(z == top && dual_baer && t_dual_baer && *dual_baer != *t_dual_baer,
       "noncosingular but dual Baer differs from t-dual Baer");
  flag(k && k->strongly_t_k && !k->t_k, "strongly t-K but not t-K");
  flag(t.cosingular().zbar_in(0, z2) != z2, "Z2 is not noncosingular");
  return p;
}

PropertyReport profile_module(const ModulePtr& m, const std::string& module_id) {
  TAnalysis t(m);
  return profile_module(t, module_id);
}

}  // namespace modlab
