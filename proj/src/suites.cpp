#include <chrono>
#include <map>

#include "modlab/harness.hpp"
#include "modlab/structure.hpp"

namespace modlab {

namespace {

using Value = std::optional<bool>;

Value both(Value a, Value b) {
  if (!a || !b) return std::nullopt;
  return *a && *b;
}

Value implies(Value a, Value b) {
  if (a == false) return true;
  if (!a || !b) return std::nullopt;
  return *b;
}

Json encode(Value v) { return v ? Json(*v) : Json("unevaluated"); }

// A claim that must hold, with the first counterexample found.
struct Claim {
  Value holds = true;
  Json detail;
};

struct Context {
  const ModuleCatalog& catalog;
  std::size_t index;
  TAnalysis& t;

  const SubmoduleLattice& lat() const { return t.lattice(); }
  Json sub(std::size_t node) const { return submodule_to_json(lat()[node]); }
  Json subject() const { return Json{{"module", index}}; }
  Json subject(const char* name, std::size_t node) const { return Json{{"module", index}, {name, sub(node)}}; }
};

void attach_witness(const Context& c, InstanceRecord& r, const Json& detail) {
  if (r.agree) return;
  r.witness = Json{{"ring", c.catalog.ring_id},
                   {"module", module_to_json(*c.t.module(), c.catalog.ring_id)},
                   {"subject", r.subject}};
  if (!detail.is_null()) r.witness["detail"] = detail;
}

InstanceRecord equivalence(const Context& c, Json subject, std::vector<Value> values) {
  InstanceRecord r;
  r.subject = std::move(subject);
  r.values = std::move(values);
  for (const auto& v : r.values)
    if (!v) {
      r.skipped = true;
      r.note = "endomorphism ring over the size limit";
      return r;
    }
  for (const auto& v : r.values) r.agree = r.agree && *v == *r.values.front();
  attach_witness(c, r, Json());
  return r;
}

InstanceRecord claims(const Context& c, Json subject, const std::vector<Claim>& cs) {
  InstanceRecord r;
  r.subject = std::move(subject);
  Json detail = Json::object();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    r.values.push_back(cs[i].holds);
    if (!cs[i].holds) {
      r.skipped = true;
      r.note = "endomorphism ring over the size limit";
    } else if (!*cs[i].holds) {
      r.agree = false;
      detail[std::to_string(i + 1)] = cs[i].detail;
    }
  }
  attach_witness(c, r, detail);
  return r;
}

std::vector<InstanceRecord> not_amply_supplemented(const Context& c) {
  InstanceRecord r;
  r.subject = c.subject();
  r.skipped = true;
  r.note = "module is not amply supplemented";
  return {r};
}

// --- t-small characterizations, one instance per submodule
std::vector<InstanceRecord> t_small_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  std::vector<InstanceRecord> out;
  for (std::size_t a = 0; a < c.lat().size(); ++a)
    out.push_back(equivalence(c, c.subject("A", a),
                              {t.t_small(a), t.t_small_meet_small_in_zbar2(a), t.t_small_meet_small(a),
                               t.t_small_zbar2_vanishes(a)}));
  return out;
}

// --- t-coclosed under quotients, extensions and restriction
std::vector<InstanceRecord> t_coclosed_lemma_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  const SubmoduleLattice& lat = c.lat();
  const std::size_t z2 = t.zbar2(), top = t.top();
  std::vector<Claim> cs(5);
  const auto fail = [&](Claim& claim, Json detail) {
    if (claim.holds == true) claim = {false, std::move(detail)};
  };
  for (std::size_t cc = 0; cc < lat.size(); ++cc)
    if (t.t_coclosed(cc) && !lat.leq(cc, z2)) fail(cs[0], {{"C", c.sub(cc)}});
  if (t.t_coclosed(top) != t.noncosingular()) fail(cs[1], {{"C", c.sub(top)}});
  for (std::size_t cc = 0; cc < lat.size(); ++cc) {
    const bool cc_tcc = t.t_coclosed(cc);
    const bool cc_amply = amply_supplemented_in(lat, 0, cc);
    for (std::size_t a = 0; a <= cc; ++a) {
      if (!lat.leq(a, cc)) continue;
      const bool quotient_tcc = t.t_coclosed_in(cc, a, top);
      if (cc_tcc && !quotient_tcc) fail(cs[2], {{"A", c.sub(a)}, {"C", c.sub(cc)}});
      if (quotient_tcc && t.t_coclosed(a) && !cc_tcc) fail(cs[3], {{"A", c.sub(a)}, {"C", c.sub(cc)}});
      if (cc_amply && t.t_coclosed(a) != t.t_coclosed_in(a, 0, cc))
        fail(cs[4], {{"A", c.sub(a)}, {"C", c.sub(cc)}});
    }
  }
  return {claims(c, c.subject(), cs)};
}

// --- t-coclosed characterizations, one instance per submodule
std::vector<InstanceRecord> t_coclosed_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  std::vector<InstanceRecord> out;
  for (std::size_t cc = 0; cc < c.lat().size(); ++cc)
    out.push_back(equivalence(c, c.subject("C", cc),
                              {t.t_coclosed_minimal(cc), t.t_coclosed(cc), t.t_coclosed_coclosed_in_zbar2(cc),
                               t.t_coclosed_coclosed_below_zbar2(cc), t.t_coclosed_noncosingular(cc)}));
  return out;
}

// --- Z2(M) is t-coclosed and endomorphic images of t-coclosed are t-coclosed
std::vector<InstanceRecord> t_coclosed_images_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  std::vector<Claim> cs(2);
  if (!t.t_coclosed(t.zbar2())) cs[0] = {false, {{"C", c.sub(t.zbar2())}}};
  const auto end = t.end_ring();
  if (!end) {
    cs[1].holds = std::nullopt;
  } else {
    for (std::size_t cc = 0; cc < c.lat().size() && cs[1].holds == true; ++cc) {
      if (!t.t_coclosed(cc)) continue;
      for (std::size_t phi = 0; phi < end->size(); ++phi) {
        const std::size_t img = t.image(phi, cc);
        if (!t.t_coclosed(img)) {
          cs[1] = {false, {{"C", c.sub(cc)}, {"image", c.sub(img)}, {"endomorphism", matrix_to_json((*end)[phi].matrix())}}};
          break;
        }
      }
    }
  }
  return {claims(c, c.subject(), cs)};
}

// --- sums of t-coclosed submodules
std::vector<InstanceRecord> t_coclosed_sums_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  const SubmoduleLattice& lat = c.lat();
  std::vector<std::size_t> tcc;
  for (std::size_t x = 0; x < lat.size(); ++x)
    if (t.t_coclosed(x)) tcc.push_back(x);
  Claim claim;
  for (std::size_t i = 0; i < tcc.size() && claim.holds == true; ++i)
    for (std::size_t j = i + 1; j < tcc.size(); ++j)
      if (!t.t_coclosed(lat.join(tcc[i], tcc[j]))) {
        claim = {false, {{"C1", c.sub(tcc[i])}, {"C2", c.sub(tcc[j])}}};
        break;
      }
  return {claims(c, c.subject(), {claim})};
}

// --- t-lifting characterizations
std::vector<InstanceRecord> t_lifting_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  return {equivalence(c, c.subject(),
                      {t.t_lifting(), t.t_lifting_split(), t.t_lifting_tcc_summands(), t.t_lifting_zbar2_summands(),
                       t.t_lifting_coclosed_zbar2_summands(), t.t_lifting_zbar2_lifting_summand(),
                       t.t_lifting_small_below_zbar2()})};
}

// --- t-lifting passes to amply supplemented submodules and to quotients by
// fully invariant submodules
std::vector<InstanceRecord> t_lifting_inheritance_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  const SubmoduleLattice& lat = c.lat();
  std::vector<Claim> cs(2);
  if (t.t_lifting()) {
    for (std::size_t a = 0; a < lat.size(); ++a)
      if (amply_supplemented_in(lat, 0, a) && !t.t_lifting_in(0, a)) {
        cs[0] = {false, {{"A", c.sub(a)}}};
        break;
      }
    if (!t.end_ring()) {
      cs[1].holds = std::nullopt;
    } else {
      for (std::size_t l = 0; l < lat.size(); ++l)
        if (t.fully_invariant(l) && !t.t_lifting_in(l, t.top())) {
          cs[1] = {false, {{"L", c.sub(l)}}};
          break;
        }
    }
  }
  InstanceRecord r = claims(c, c.subject(), cs);
  if (!t.t_lifting()) r.note = "premise false: module is not t-lifting";
  return {r};
}

// --- t-dual Baer characterizations
std::vector<InstanceRecord> t_dual_baer_suite(Context& c) {
  TAnalysis& t = c.t;
  return {equivalence(c, c.subject(),
                      {t.t_dual_baer(), t.t_dual_baer_zbar2_dual_baer_summand(), t.t_dual_baer_sssp_images(),
                       t.t_dual_baer_image_sums()})};
}

std::vector<InstanceRecord> sssp_regular_suite(Context& c) {
  TAnalysis& t = c.t;
  Claim claim;
  claim.holds = implies(t.sssp_in_zbar2() && t.regular(), t.t_dual_baer());
  return {claims(c, c.subject(), {claim})};
}

std::vector<InstanceRecord> regular_zbar2_semisimple_suite(Context& c) {
  TAnalysis& t = c.t;
  const std::size_t z2 = t.zbar2();
  Claim claim;
  claim.holds = implies(both(t.regular(), t.t_dual_baer()), socle_in(c.lat(), 0, z2) == z2);
  if (claim.holds == false) claim.detail = {{"zbar2", c.sub(z2)}};
  return {claims(c, c.subject(), {claim})};
}

std::vector<InstanceRecord> dual_baer_relation_suite(Context& c) {
  TAnalysis& t = c.t;
  return {equivalence(c, c.subject(),
                      {both(t.dual_baer(), t.summand(t.zbar2())), both(t.t_dual_baer(), t.dual_baer_quotient_condition())})};
}

std::vector<InstanceRecord> t_dual_baer_summands_suite(Context& c) {
  TAnalysis& t = c.t;
  const SubmoduleLattice& lat = c.lat();
  Claim claim;
  const Value tdb = t.t_dual_baer();
  if (!tdb) {
    claim.holds = std::nullopt;
  } else if (*tdb) {
    for (std::size_t n = 0; n < lat.size(); ++n) {
      if (!t.summand(n)) continue;
      const Value sub = t.sub_analysis(n).t_dual_baer();
      if (!sub) {
        claim.holds = std::nullopt;
      } else if (!*sub) {
        claim = {false, {{"N", c.sub(n)}}};
        break;
      }
    }
  }
  InstanceRecord r = claims(c, c.subject(), {claim});
  if (tdb == false) r.note = "premise false: module is not t-dual Baer";
  return {r};
}

std::vector<InstanceRecord> t_k_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  std::vector<Claim> cs(2);
  const auto k = t.k_flags();
  if (!k) {
    cs[0].holds = cs[1].holds = std::nullopt;
  } else {
    const Value below = t.t_k_below_zbar2();
    cs[0].holds = below ? Value(*below == k->t_k) : std::nullopt;
    if (k->t_k) {
      const auto zk = t.sub_analysis(t.zbar2()).k_flags();
      cs[1].holds = zk ? Value(zk->k) : std::nullopt;
      if (cs[1].holds == false) cs[1].detail = {{"zbar2", c.sub(t.zbar2())}};
    }
  }
  return {claims(c, c.subject(), cs)};
}

std::vector<InstanceRecord> t_lifting_endo_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  const Value tdb = t.t_dual_baer();
  const auto k = t.k_flags();
  return {equivalence(c, c.subject(),
                      {t.t_lifting(), both(tdb, k ? Value(k->t_k) : std::nullopt), both(tdb, t.t_set_recovers(true)),
                       both(tdb, t.t_set_detects(true))})};
}

std::vector<InstanceRecord> noncosingular_lifting_suite(Context& c) {
  TAnalysis& t = c.t;
  if (!t.amply_supplemented()) return not_amply_supplemented(c);
  const Value tdb = t.t_dual_baer();
  const auto k = t.k_flags();
  return {equivalence(c, c.subject(),
                      {t.noncosingular() && t.lifting(), both(tdb, k ? Value(k->strongly_t_k) : std::nullopt),
                       both(tdb, t.t_set_recovers(false)), both(tdb, t.t_set_detects(false))})};
}

using SuiteFn = std::vector<InstanceRecord> (*)(Context&);

struct Suite {
  const char* id;
  SuiteKind kind;
  const char* scope;
  std::vector<std::string> statements;
  SuiteFn run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"P2.2", SuiteKind::Equivalence, "every submodule A of every catalog module",
       {"t_small", "meet_zbar2_small_in_zbar2", "meet_zbar2_small", "zbar2_of_submodule_zero"}, t_small_suite},
      {"L2.5", SuiteKind::Implication, "every catalog module; all applicable submodules and pairs A <= C",
       {"t_coclosed_below_zbar2", "whole_t_coclosed_iff_noncosingular", "quotient_of_t_coclosed",
        "extension_of_t_coclosed", "t_coclosed_in_amply_supplemented_submodule"},
       t_coclosed_lemma_suite},
      {"P2.6", SuiteKind::Equivalence, "every submodule C of every catalog module",
       {"minimal_for_zbar2_cover", "t_coclosed", "coclosed_in_zbar2", "coclosed_below_zbar2", "noncosingular"},
       t_coclosed_suite},
      {"C2.7", SuiteKind::Implication, "every catalog module and every endomorphism",
       {"zbar2_t_coclosed", "images_of_t_coclosed_t_coclosed"}, t_coclosed_images_suite},
      {"C2.8", SuiteKind::Implication, "every pair of t-coclosed submodules of every catalog module",
       {"sums_of_t_coclosed_t_coclosed"}, t_coclosed_sums_suite},
      {"T2.11", SuiteKind::Equivalence, "every catalog module",
       {"t_lifting", "split_into_summand_and_t_small", "t_coclosed_are_summands", "zbar2_of_submodules_summands",
        "zbar2_of_coclosed_summands", "zbar2_summand_and_lifting", "below_zbar2_lift_to_summands"},
       t_lifting_suite},
      {"P2.13", SuiteKind::Implication,
       "every catalog module; every amply supplemented submodule and every fully invariant submodule",
       {"amply_supplemented_submodules_t_lifting", "quotients_by_fully_invariant_t_lifting"},
       t_lifting_inheritance_suite},
      {"T3.2", SuiteKind::Equivalence, "every catalog module",
       {"t_dual_baer", "zbar2_summand_and_dual_baer", "sssp_in_zbar2_and_images_summands", "image_sums_summands"},
       t_dual_baer_suite},
      {"C3.3", SuiteKind::Implication, "every catalog module", {"sssp_in_zbar2_and_regular_imply_t_dual_baer"},
       sssp_regular_suite},
      {"C3.4", SuiteKind::Implication, "every catalog module", {"regular_t_dual_baer_zbar2_semisimple"},
       regular_zbar2_semisimple_suite},
      {"P3.5", SuiteKind::Equivalence, "every catalog module; subsets of End(M) through the right ideals they generate",
       {"dual_baer_and_zbar2_summand", "t_dual_baer_and_quotient_summands"}, dual_baer_relation_suite},
      {"T3.6", SuiteKind::Implication, "every direct summand of every catalog module",
       {"summands_of_t_dual_baer_t_dual_baer"}, t_dual_baer_summands_suite},
      {"P3.8", SuiteKind::Implication, "every catalog module",
       {"t_k_iff_condition_below_zbar2", "t_k_implies_zbar2_k_module"}, t_k_suite},
      {"T3.9", SuiteKind::Equivalence, "every catalog module",
       {"t_lifting", "t_dual_baer_and_t_k", "t_dual_baer_and_t_coclosed_recovered", "t_dual_baer_and_t_coclosed_detected"},
       t_lifting_endo_suite},
      {"C3.10", SuiteKind::Equivalence, "every catalog module",
       {"noncosingular_lifting", "t_dual_baer_and_strongly_t_k", "t_dual_baer_and_coclosed_recovered",
        "t_dual_baer_and_coclosed_detected"},
       noncosingular_lifting_suite},
      {"T3.12", SuiteKind::Universal,
       "bounded: catalog members and their injective hulls stand in for every module; an all-true vector is "
       "evidence, not proof",
       {"noncosingular_injective", "zbar2_injective_summand", "all_t_dual_baer", "all_t_lifting",
        "injective_t_lifting", "noncosingular_dual_baer_and_zbar2_summand",
        "noncosingular_lifting_and_zbar2_summand"},
       nullptr},
  };
  return all;
}

const Suite& suite(const std::string& id) {
  for (const auto& s : suites())
    if (id == s.id) return s;
  throw AlgebraError(ErrorCode::InvalidInput, "unknown suite '" + id + "'");
}

}  // namespace

const char* to_string(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::Equivalence:
      return "equivalence";
    case SuiteKind::Implication:
      return "implication";
    case SuiteKind::Universal:
      return "universal";
  }
  return "?";
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.id);
    return out;
  }();
  return ids;
}

bool is_suite_id(const std::string& id) {
  for (const auto& s : suites())
    if (id == s.id) return true;
  return false;
}

bool is_universal_suite(const std::string& id) { return suite(id).kind == SuiteKind::Universal; }

void TheoremReport::tally() {
  agreements = disagreements = skipped = 0;
  for (const auto& r : instances) {
    if (r.skipped)
      ++skipped;
    else if (r.agree)
      ++agreements;
    else
      ++disagreements;
  }
}

Json TheoremReport::to_json() const {
  Json inst = Json::array();
  for (const auto& r : instances) {
    Json values = Json::array();
    for (const auto& v : r.values) values.push_back(encode(v));
    Json j{{"subject", r.subject}, {"values", values}, {"agree", r.agree}};
    if (r.skipped) j["skipped"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.agree) j["witness"] = r.witness;
    inst.push_back(std::move(j));
  }
  Json j{{"theorem", theorem},
         {"ring", ring_id},
         {"kind", to_string(kind)},
         {"scope", scope},
         {"statements", statements},
         {"summary",
          {{"instances", instances.size()},
           {"agreements", agreements},
           {"disagreements", disagreements},
           {"skipped", skipped}}}};
  if (!extra.is_null()) j["details"] = extra;
  j["instances"] = inst;
  return j;
}

TheoremReport new_report(const std::string& id, const ModuleCatalog& catalog) {
  const Suite& s = suite(id);
  TheoremReport r;
  r.theorem = s.id;
  r.ring_id = catalog.ring_id;
  r.kind = s.kind;
  r.scope = s.scope;
  r.statements = s.statements;
  return r;
}

std::vector<InstanceRecord> module_instances(const std::string& id, const ModuleCatalog& catalog, std::size_t index,
                                             TAnalysis& t) {
  const Suite& s = suite(id);
  if (!s.run) throw AlgebraError(ErrorCode::InvalidInput, "suite '" + id + "' is not per-module");
  Context c{catalog, index, t};
  return s.run(c);
}

HullInfo hull_info(const ModuleCatalog& catalog, std::size_t index) {
  const ModulePtr e = injective_hull(catalog.modules[index]).module;
  HullInfo h;
  h.size = e->size();
  h.catalog_index = find_isomorphic(catalog, e);
  if (!h.catalog_index && e->size() <= catalog.policy.max_size) h.t_lifting = TAnalysis(e).t_lifting();
  return h;
}

TheoremReport universal_report(const ModuleCatalog& catalog, const std::vector<PropertyReport>& profiles,
                               const std::vector<HullInfo>& hulls) {
  TheoremReport report = new_report("T3.12", catalog);
  const std::size_t n = catalog.modules.size();
  std::vector<Value> values(7, true);
  std::vector<Json> counterexample(7);
  std::vector<std::string> logs;
  const auto refute = [&](std::size_t s, Json who) {
    if (values[s] == true) {
      values[s] = false;
      counterexample[s] = std::move(who);
    }
  };
  const auto get = [&](std::size_t i, const char* id) { return profiles[i].value(id); };
  for (std::size_t i = 0; i < n; ++i) {
    const Json who{{"module", i}};
    const bool nc = *get(i, "noncosingular"), z2s = *get(i, "zbar2_summand");
    if (nc && !*get(i, "injective")) refute(0, who);
    if (!z2s || !*get(i, "zbar2_injective")) refute(1, who);
    const Value tdb = get(i, "t_dual_baer");
    if (!tdb)
      logs.push_back("module " + std::to_string(i) + ": t_dual_baer unevaluated");
    else if (!*tdb)
      refute(2, who);
    if (!*get(i, "t_lifting")) refute(3, who);
    if (*get(i, "injective") && !*get(i, "t_lifting")) refute(4, who);
    const HullInfo& h = hulls[i];
    const Value hull_tl = h.catalog_index ? get(*h.catalog_index, "t_lifting") : h.t_lifting;
    if (!hull_tl)
      logs.push_back("hull of module " + std::to_string(i) + " (size " + std::to_string(h.size) +
                     ") over the size bound");
    else if (!*hull_tl)
      refute(4, Json{{"hull_of_module", i}});
    const Value db = get(i, "dual_baer");
    if (nc && !db)
      logs.push_back("module " + std::to_string(i) + ": dual_baer unevaluated");
    else if (nc && !*db)
      refute(5, who);
    if (!z2s) refute(5, who);
    if ((nc && !*get(i, "lifting")) || !z2s) refute(6, who);
  }
  Json ces = Json::object();
  for (std::size_t s = 0; s < 7; ++s)
    if (!counterexample[s].is_null()) ces[std::to_string(s + 1)] = counterexample[s];
  InstanceRecord r;
  r.subject = Json{{"catalog_modules", n}, {"hulls", hulls.size()}};
  r.values = values;
  for (const auto& v : values) r.agree = r.agree && *v == *values.front();
  if (!r.agree) r.witness = Json{{"ring", catalog.ring_id}, {"counterexamples", ces}};
  report.instances.push_back(r);

  Json pairwise = Json::array();
  for (std::size_t a = 0; a < 7; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < 7; ++b) row.push_back(*values[a] == *values[b]);
    pairwise.push_back(row);
  }
  Json hull_json = Json::array();
  for (const auto& h : hulls)
    hull_json.push_back(Json{{"size", h.size},
                             {"catalog_index", h.catalog_index ? Json(*h.catalog_index) : Json(nullptr)},
                             {"t_lifting", encode(h.catalog_index ? get(*h.catalog_index, "t_lifting") : h.t_lifting)}});
  report.extra = Json{{"pairwise_agreement", pairwise}, {"counterexamples", ces}, {"hulls", hull_json}, {"log", logs}};
  report.tally();
  return report;
}

TheoremReport verify_theorem(const std::string& id, const ModuleCatalog& catalog) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report = new_report(id, catalog);
  if (is_universal_suite(id)) {
    std::vector<PropertyReport> profiles;
    std::vector<HullInfo> hulls;
    for (std::size_t i = 0; i < catalog.modules.size(); ++i) {
      TAnalysis t(catalog.modules[i]);
      profiles.push_back(profile_module(t, catalog.ring_id + "#" + std::to_string(i)));
      hulls.push_back(hull_info(catalog, i));
    }
    report = universal_report(catalog, profiles, hulls);
  } else {
    for (std::size_t i = 0; i < catalog.modules.size(); ++i) {
      TAnalysis t(catalog.modules[i]);
      auto records = module_instances(id, catalog, i, t);
      report.instances.insert(report.instances.end(), records.begin(), records.end());
    }
    report.tally();
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace modlab
