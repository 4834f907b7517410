#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "modlab/harness.hpp"
#include "modlab/oracle.hpp"

using namespace modlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

ModulePtr diagonal(const RingPtr& ring, std::vector<std::int64_t> orders) {
  IntMatrix a(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) a(i, i) = 1;
  return FiniteModule::create(ring, std::move(orders), {a});
}

std::string yes(std::optional<bool> v) { return v ? (*v ? "true" : "false") : "unevaluated"; }

Outcome lifting_examples() {
  const PropertyReport a = profile_module(diagonal(cyclic_ring(4), {2, 4}), "Z2+Z4");
  const PropertyReport b = profile_module(diagonal(cyclic_ring(8), {2, 8}), "Z2+Z8");
  const bool pass = a.value("lifting") == true && a.value("t_lifting") == true && b.value("lifting") == false &&
                    b.value("amply_supplemented") == true && b.value("t_lifting") == true;
  return {pass, "Z2+Z4: lifting=" + yes(a.value("lifting")) + " t_lifting=" + yes(a.value("t_lifting")) +
                    "; Z2+Z8: lifting=" + yes(b.value("lifting")) + " amply_supplemented=" +
                    yes(b.value("amply_supplemented")) + " t_lifting=" + yes(b.value("t_lifting"))};
}

Outcome regular_z4() {
  TAnalysis t(regular_module(cyclic_ring(4)));
  const auto w = t.dual_baer_witness();
  bool witness_ok = false;
  if (w) {
    // I = 2S: the zero map and multiplication by 2.
    const auto s = t.end_ring();
    std::vector<Code> at_one;
    for (std::size_t f : w->members) at_one.push_back((*s)[f].apply(1));
    std::sort(at_one.begin(), at_one.end());
    witness_ok = at_one == std::vector<Code>{0, 2} &&
                 t.lattice()[t.ideal_image(*w, t.top())].elements() == std::vector<Code>{0, 2};
  }
  const auto db = t.dual_baer(), tdb = t.t_dual_baer();
  return {db == false && tdb == true && witness_ok,
          "dual_baer=" + yes(db) + " t_dual_baer=" + yes(tdb) + " witness I=2S " + (witness_ok ? "found" : "missing")};
}

Outcome suites_clean(const RunResult& run, const std::vector<std::string>& ids) {
  std::size_t instances = 0, disagreements = 0, skipped = 0, reports = 0;
  for (const auto& r : run.reports)
    if (std::find(ids.begin(), ids.end(), r.theorem) != ids.end()) {
      ++reports;
      instances += r.instances.size();
      disagreements += r.disagreements;
      skipped += r.skipped;
    }
  const bool pass = reports == ids.size() * default_ring_ids().size() && disagreements == 0 && instances > 0;
  return {pass, std::to_string(reports) + " reports, " + std::to_string(instances) + " instances, " +
                    std::to_string(disagreements) + " disagreements, " + std::to_string(skipped) + " skipped"};
}

Outcome universal(const RunResult& run) {
  bool f2z4_all_true = false, pairwise = true;
  std::size_t rings = 0;
  for (const auto& r : run.reports) {
    if (r.theorem != "T3.12") continue;
    ++rings;
    for (const auto& row : r.extra["pairwise_agreement"])
      for (const auto& cell : row) pairwise = pairwise && cell.get<bool>();
    if (r.ring_id == "F2xZ4" && r.instances.size() == 1) {
      f2z4_all_true = r.instances[0].values.size() == 7;
      for (const auto& v : r.instances[0].values) f2z4_all_true = f2z4_all_true && v == true;
    }
  }
  return {f2z4_all_true && pairwise && rings == default_ring_ids().size(),
          std::string("F2xZ4 seven statements ") + (f2z4_all_true ? "all true" : "not all true") +
              "; pairwise agreement on " + std::to_string(rings) + " rings " + (pairwise ? "holds" : "fails")};
}

Outcome oracles(const std::vector<ModuleCatalog>& catalogs) {
  std::vector<RingPtr> rings;
  for (const auto& c : catalogs) rings.push_back(c.ring);
  const std::vector<OracleResult> results{check_small_catalog(catalogs), check_small_random(rings, 1000, 1),
                                          check_summand_catalog(catalogs), check_zbar_reject(catalogs)};
  bool pass = true;
  std::string detail;
  for (const auto& r : results) {
    pass = pass && r.ok() && r.checked > 0;
    detail += (detail.empty() ? "" : "; ") + r.check + " " + std::to_string(r.checked) + " checked " +
              std::to_string(r.mismatches) + " mismatches";
  }
  return {pass, detail};
}

Outcome duality(const std::vector<ModuleCatalog>& catalogs) {
  const OracleResult r = check_duality_hulls(catalogs);
  return {r.ok() && r.checked > 0, std::to_string(r.checked) + " checked, " + std::to_string(r.mismatches) + " mismatches"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& modlab) {
  const fs::path root = fs::temp_directory_path() / "modlab-acceptance";
  fs::remove_all(root);
  fs::create_directories(root);
  unsetenv("MODLAB_CACHE");
  std::vector<fs::path> dirs;
  for (const char* name : {"first", "second"}) {
    dirs.push_back(root / name);
    const std::string cmd = "\"" + modlab + "\" verify --suite all --out \"" + dirs.back().string() + "\" > \"" +
                            (root / (std::string(name) + ".log")).string() + "\" 2>&1";
    if (std::system(cmd.c_str()) != 0) return {false, std::string("verify run '") + name + "' exited nonzero"};
  }
  std::size_t files = 0, differing = 0;
  for (const auto& entry : fs::directory_iterator(dirs[0])) {
    ++files;
    const fs::path other = dirs[1] / entry.path().filename();
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) ++differing;
  }
  const auto second_files = static_cast<std::size_t>(std::distance(fs::directory_iterator(dirs[1]), fs::directory_iterator{}));
  const bool pass = files > 0 && differing == 0 && files == second_files;
  if (pass) fs::remove_all(root);
  return {pass, std::to_string(files) + " files compared, " + std::to_string(differing) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to modlab>\n";
    return 2;
  }
  const std::string modlab = argv[1];
  int failures = 0;
  const auto run = [&](int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& f) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && seconds > limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << " (" << std::fixed << std::setprecision(2)
              << seconds << " s): " << o.detail << std::endl;
  };

  run(1, "lifting examples over Z4 and Z8", 10, lifting_examples);
  run(2, "regular Z4 is t-dual Baer but not dual Baer", 5, regular_z4);

  RunResult all;
  std::ostringstream log;
  const auto start = std::chrono::steady_clock::now();
  all = run_all(RunConfig{}, log);
  const double suite_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "       full verification run: " << std::fixed << std::setprecision(2) << suite_seconds
            << " s, exit code " << all.exit_code << ", " << all.flags << " flags" << std::endl;
  run(3, "equivalence suites", 1800, [&] { return suites_clean(all, {"P2.2", "P2.6", "T2.11", "T3.2", "T3.9", "C3.10"}); });
  run(4, "structural suites", 1800, [&] {
    Outcome o = suites_clean(all, {"L2.5", "C2.7", "C2.8", "P2.13", "C3.3", "C3.4", "P3.5", "T3.6", "P3.8"});
    o.pass = o.pass && all.flags == 0;
    o.detail += ", " + std::to_string(all.flags) + " consistency flags";
    return o;
  });
  run(5, "catalog-wide statements", 0, [&] { return universal(all); });

  const std::vector<ModuleCatalog> catalogs = default_catalogs();
  run(6, "oracle cross-checks", 0, [&] { return oracles(catalogs); });
  run(7, "duality and injective hulls", 0, [&] { return duality(catalogs); });
  run(8, "deterministic report bundles", 0, [&] { return determinism(modlab); });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failures ? 1 : 0;
}
