#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "modlab/harness.hpp"

namespace modlab {

namespace {

constexpr const char* kProfileVersion = "modlab-profile-1";

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string file_stem(const std::string& id) {
  std::string out;
  for (char c : id) out += std::isalnum(static_cast<unsigned char>(c)) || c == '.' ? c : '_';
  return out;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(1) << '\n';
}

class ProfileCache {
 public:
  explicit ProfileCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  std::optional<PropertyReport> load(const ModulePtr& m) const {
    if (dir_.empty()) return std::nullopt;
    std::ifstream in(path(m));
    if (!in) return std::nullopt;
    try {
      return PropertyReport::from_json(Json::parse(in));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const ModulePtr& m, const PropertyReport& p) const {
    if (dir_.empty()) return;
    const auto target = path(m);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    write_json(tmp, p.to_json());
    std::filesystem::rename(tmp, target);
  }

 private:
  std::filesystem::path path(const ModulePtr& m) const {
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0')
         << fnv1a(std::string(kProfileVersion) + "\n" + m->ring()->key() + "\n" + m->key()) << ".json";
    return std::filesystem::path(dir_) / name.str();
  }

  std::string dir_;
};

struct ModuleResult {
  PropertyReport profile;
  std::optional<HullInfo> hull;
  std::vector<std::vector<InstanceRecord>> records;  // per selected suite
};

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs && k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// R_R for a ring that is not semisimple should be lifting, t-lifting and
// t-dual Baer but not dual Baer.
Json regular_module_record(const ModuleCatalog& catalog, const std::vector<ModuleResult>& results,
                           std::vector<std::string>& problems) {
  const auto idx = find_isomorphic(catalog, regular_module(catalog.ring));
  if (!idx) return Json(nullptr);
  TAnalysis t(catalog.modules[*idx]);
  const PropertyReport& p = results[*idx].profile;
  const bool semisimple = *p.value("semisimple");
  Json j{{"module", *idx}, {"semisimple", semisimple}};
  for (const char* id : {"lifting", "t_lifting", "dual_baer", "t_dual_baer"}) j[id] = p.values.at(id);
  if (const auto w = t.dual_baer_witness()) {
    j["dual_baer_witness"] = Json{{"ideal_size", w->members.size()},
                                  {"image", submodule_to_json(t.lattice()[t.ideal_image(*w, t.top())])}};
  }
  if (!semisimple) {
    const bool expected = p.value("lifting") == true && p.value("t_lifting") == true &&
                          p.value("t_dual_baer") == true && p.value("dual_baer") == false;
    j["matches_expectation"] = expected;
    if (!expected) problems.push_back(catalog.ring_id + ": regular module is not lifting, t-dual Baer and non-dual-Baer");
  }
  return j;
}

}  // namespace

RunResult run_all(const RunConfig& config, std::ostream& log) {
  RunResult result;
  const std::vector<std::string> suite_list = config.suites.empty() ? suite_ids() : config.suites;
  const std::vector<std::string> ring_list = config.rings.empty() ? default_ring_ids() : config.rings;
  std::vector<RingPtr> rings;
  try {
    for (const auto& id : suite_list)
      if (!is_suite_id(id)) throw AlgebraError(ErrorCode::InvalidInput, "unknown suite '" + id + "'");
    for (const auto& id : ring_list) rings.push_back(ring_from_id(id));
    if (config.jobs == 0) throw AlgebraError(ErrorCode::InvalidInput, "--jobs must be positive");
    if (config.policy.max_generators < 0 || config.policy.max_size < 1)
      throw AlgebraError(ErrorCode::InvalidInput, "catalog policy out of range");
  } catch (const AlgebraError& e) {
    log << "invalid configuration: " << e.what() << '\n';
    result.exit_code = 2;
    return result;
  }

  const ProfileCache cache(config.cache_dir);
  const std::filesystem::path out(config.out_dir);
  if (!config.out_dir.empty()) std::filesystem::create_directories(out);

  bool want_universal = false;
  std::vector<std::string> module_suites;
  for (const auto& id : suite_list) {
    if (is_universal_suite(id))
      want_universal = true;
    else
      module_suites.push_back(id);
  }

  Json ring_summaries = Json::array();
  Json suite_summaries = Json::array();
  std::vector<std::string> problems;
  Json first_witness;

  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const std::string& ring_id = ring_list[ri];
    const auto start = std::chrono::steady_clock::now();
    const ModuleCatalog catalog = enumerate_modules(ring_id, rings[ri], config.policy);
    for (const auto& s : catalog.skipped) log << "skipped " << s << '\n';

    std::vector<ModuleResult> results(catalog.modules.size());
    parallel_for(catalog.modules.size(), config.jobs, [&](std::size_t i) {
      const ModulePtr& m = catalog.modules[i];
      TAnalysis t(m);
      ModuleResult& r = results[i];
      const std::string module_id = ring_id + "#" + std::to_string(i);
      if (auto cached = cache.load(m)) {
        r.profile = std::move(*cached);
        r.profile.module_id = module_id;
      } else {
        r.profile = profile_module(t, module_id);
        cache.store(m, r.profile);
      }
      for (const auto& id : module_suites) r.records.push_back(module_instances(id, catalog, i, t));
      if (want_universal) r.hull = hull_info(catalog, i);
    });
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Json flagged = Json::array();
    Json profiles = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const PropertyReport& p = results[i].profile;
      profiles.push_back(p.to_json());
      if (!p.flags.empty()) {
        flagged.push_back(Json{{"module", i}, {"flags", p.flags}});
        result.flags += p.flags.size();
        for (const auto& f : p.flags) problems.push_back(p.module_id + ": " + f);
      }
    }

    for (std::size_t s = 0; s < module_suites.size(); ++s) {
      TheoremReport report = new_report(module_suites[s], catalog);
      for (auto& r : results) report.instances.insert(report.instances.end(), r.records[s].begin(), r.records[s].end());
      report.tally();
      result.reports.push_back(std::move(report));
    }
    if (want_universal) {
      std::vector<PropertyReport> ps;
      std::vector<HullInfo> hulls;
      for (auto& r : results) {
        ps.push_back(r.profile);
        hulls.push_back(*r.hull);
      }
      result.reports.push_back(universal_report(catalog, ps, hulls));
    }

    const std::size_t regular_problems = problems.size();
    Json regular = regular_module_record(catalog, results, problems);
    result.flags += problems.size() - regular_problems;

    ring_summaries.push_back(Json{{"ring", ring_id},
                                  {"catalog_size", catalog.modules.size()},
                                  {"skipped", catalog.skipped},
                                  {"flagged_modules", flagged},
                                  {"regular_module", regular}});
    log << ring_id << ": " << catalog.modules.size() << " modules analysed in " << std::fixed << std::setprecision(2)
        << seconds << " s\n";
    if (!config.out_dir.empty()) {
      write_json(out / ("catalog-" + file_stem(ring_id) + ".json"), catalog_to_json(catalog));
      write_json(out / ("profiles-" + file_stem(ring_id) + ".json"), Json{{"ring", ring_id}, {"profiles", profiles}});
    }
  }

  for (const auto& report : result.reports) {
    result.disagreements += report.disagreements;
    suite_summaries.push_back(Json{{"theorem", report.theorem},
                                   {"ring", report.ring_id},
                                   {"kind", to_string(report.kind)},
                                   {"instances", report.instances.size()},
                                   {"agreements", report.agreements},
                                   {"disagreements", report.disagreements},
                                   {"skipped", report.skipped}});
    log << report.theorem << ' ' << report.ring_id << ": " << report.instances.size() << " instances, "
        << report.disagreements << " disagreements, " << report.skipped << " skipped\n";
    if (report.disagreements && first_witness.is_null())
      for (const auto& r : report.instances)
        if (!r.agree) {
          first_witness = Json{{"theorem", report.theorem}, {"witness", r.witness}};
          break;
        }
    if (!config.out_dir.empty())
      write_json(out / (file_stem(report.theorem) + "-" + file_stem(report.ring_id) + ".json"), report.to_json());
  }

  for (const auto& p : problems) log << "flag: " << p << '\n';
  if (!first_witness.is_null()) log << "first disagreement: " << first_witness.dump() << '\n';
  result.exit_code = result.disagreements || result.flags ? 1 : 0;

  if (!config.out_dir.empty()) {
    Json summary{{"policy", {{"max_generators", config.policy.max_generators}, {"max_size", config.policy.max_size}}},
                 {"bounded_quantification",
                  "statements about every module are checked on the catalogs only; agreement is evidence, not proof"},
                 {"rings", ring_summaries},
                 {"suites", suite_summaries},
                 {"totals", {{"disagreements", result.disagreements}, {"flags", result.flags}}},
                 {"problems", problems},
                 {"exit_code", result.exit_code}};
    write_json(out / "summary.json", summary);
  }
  return result;
}

}  // namespace modlab
