#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "modlab/harness.hpp"
#include "modlab/oracle.hpp"

using namespace modlab;
using namespace fixtures;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("modlab-test-" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}


}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("small catalogs") {
    const auto f3 = enumerate_modules("F3", ring_from_id("F3"), {1, 256});
    REQUIRE(f3.modules.size() == 2);
    CHECK(f3.modules[0]->is_zero());
    CHECK(f3.modules[1]->size() == 3);
    const RingPtr z4 = cyclic_ring(4);
    const auto c4 = enumerate_modules("Z4", z4, {1, 256});
    REQUIRE(c4.modules.size() == 3);
    CHECK(c4.modules[0]->is_zero());
    CHECK(is_isomorphic(c4.modules[1], cyclic(z4, 2)));
    CHECK(is_isomorphic(c4.modules[2], regular_module(z4)));
  }

  TEST_CASE("Z8 catalog contains Z2 + Z8") {
    const RingPtr z8 = cyclic_ring(8);
    const auto c = enumerate_modules("Z8", z8, {2, 64});
    CHECK(find_isomorphic(c, cyclic2(z8, 2, 8)).has_value());
    // Two-generated abelian groups of exponent dividing 8 and order at most 64.
    CHECK(c.modules.size() == 10);
    for (const auto& m : c.modules) CHECK(m->size() <= 64);
  }

  TEST_CASE("catalog members are pairwise non-isomorphic and summand closed") {
    for (const auto& c : default_catalogs()) {
      for (std::size_t i = 0; i < c.modules.size(); ++i)
        for (std::size_t j = i + 1; j < c.modules.size(); ++j)
          if (c.modules[i]->size() == c.modules[j]->size())
            CHECK_FALSE(is_isomorphic(c.modules[i], c.modules[j]));
      for (const auto& m : c.modules) {
        const auto& lat = *submodules(m);
        for (std::size_t a = 0; a < lat.size(); ++a)
          if (is_direct_summand(lat[a])) {
            const ModulePtr part = subquotient(m, lat[a].element_set(), zero_submodule(m).element_set()).module;
            CHECK(find_isomorphic(c, part).has_value());
          }
      }
    }
  }

  TEST_CASE("enumeration is deterministic") {
    const auto a = enumerate_modules("T2F2", ring_from_id("T2F2"), {2, 256});
    const auto b = enumerate_modules("T2F2", ring_from_id("T2F2"), {2, 256});
    CHECK(catalog_to_json(a).dump() == catalog_to_json(b).dump());
  }

  TEST_CASE("profiles") {
    const PropertyReport p = profile_module(cyclic2(cyclic_ring(8), 2, 8));
    CHECK(p.value("lifting") == false);
    CHECK(p.value("t_lifting") == true);
    CHECK(p.value("amply_supplemented") == true);
    CHECK(p.flags.empty());
    CHECK(p.lattice_size == 11);
    const PropertyReport r = profile_module(regular_module(cyclic_ring(4)));
    CHECK(r.value("dual_baer") == false);
    CHECK(r.value("t_dual_baer") == true);
    const PropertyReport z = profile_module(zero_module(cyclic_ring(4)));
    for (const auto& id : predicate_ids()) CHECK_MESSAGE(z.value(id) == true, id);
    const PropertyReport back = PropertyReport::from_json(p.to_json());
    CHECK(back.to_json().dump() == p.to_json().dump());
  }

  TEST_CASE("the zero-submodule instances of the t-small suite agree") {
    const auto c = enumerate_modules("Z4", cyclic_ring(4), {2, 256});
    const TheoremReport r = verify_theorem("P2.2", c);
    bool seen = false;
    for (const auto& inst : r.instances) {
      if (!inst.subject.contains("A") || inst.subject["A"]["size"] != 1) continue;
      seen = true;
      CHECK(inst.agree);
    }
    CHECK(seen);
    CHECK(r.disagreements == 0);
  }

  TEST_CASE("witness present exactly on disagreement") {
    const auto c = enumerate_modules("F2xZ4", f2z4(), {2, 64});
    for (const auto& id : suite_ids()) {
      const TheoremReport r = verify_theorem(id, c);
      CHECK(r.theorem == id);
      for (const auto& inst : r.instances) CHECK(inst.witness.is_null() == inst.agree);
    }
  }

  TEST_CASE("the catalog-wide suite on F2 x Z4") {
    const auto c = enumerate_modules("F2xZ4", f2z4(), {2, 256});
    const TheoremReport r = verify_theorem("T3.12", c);
    CHECK(r.statements.size() == 7);
    REQUIRE(r.instances.size() >= 1);
    for (const auto& v : r.instances[0].values) CHECK(v == true);
    CHECK(r.disagreements == 0);
  }

  TEST_CASE("run_all exit codes") {
    std::ostringstream log;
    RunConfig bad;
    bad.rings = {"Q7"};
    CHECK(run_all(bad, log).exit_code == 2);
    RunConfig bad_suite;
    bad_suite.suites = {"X9.9"};
    bad_suite.rings = {"Z4"};
    CHECK(run_all(bad_suite, log).exit_code == 2);

    const fs::path out = fresh_dir("z4");
    RunConfig z4;
    z4.rings = {"Z4"};
    z4.out_dir = out.string();
    const RunResult r = run_all(z4, log);
    CHECK(r.exit_code == 0);
    const Json summary = Json::parse(slurp(out / "summary.json"));
    CHECK(summary["exit_code"] == 0);
    const Json& regular = summary["rings"][0]["regular_module"];
    CHECK(regular["dual_baer"] == false);
    CHECK(regular["t_dual_baer"] == true);
    CHECK(regular["matches_expectation"] == true);
    CHECK(regular["dual_baer_witness"]["ideal_size"] == 2);
    fs::remove_all(out);
  }

  TEST_CASE("reports are independent of threads and of the cache") {
    const fs::path a = fresh_dir("a"), b = fresh_dir("b"), cache = fresh_dir("cache");
    std::ostringstream log;
    RunConfig one;
    one.rings = {"Z8", "F2xZ4"};
    one.out_dir = a.string();
    REQUIRE(run_all(one, log).exit_code == 0);
    RunConfig many = one;
    many.out_dir = b.string();
    many.jobs = 3;
    many.cache_dir = cache.string();
    REQUIRE(run_all(many, log).exit_code == 0);
    REQUIRE(run_all(many, log).exit_code == 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
      ++files;
      CHECK_MESSAGE(slurp(entry.path()) == slurp(b / entry.path().filename()), entry.path().filename().string());
    }
    CHECK(files == std::distance(fs::directory_iterator(b), fs::directory_iterator{}));
    CHECK(std::distance(fs::directory_iterator(cache), fs::directory_iterator{}) > 0);
    for (const auto& p : {a, b, cache}) fs::remove_all(p);
  }
}
