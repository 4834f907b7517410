#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "modlab/catalog.hpp"
#include "modlab/harness.hpp"
#include "modlab/lattice.hpp"
#include "modlab/oracle.hpp"
#include "modlab/structure.hpp"

using namespace modlab;

namespace {

int ring_list() {
  for (const auto& id : default_ring_ids()) {
    const RingPtr r = ring_from_id(id);
    std::cout << id << "  order " << r->size() << (r->is_commutative() ? "  commutative" : "  noncommutative") << '\n';
  }
  return 0;
}

int ring_show(const std::string& id) {
  const RingPtr r = ring_from_id(id);
  Json j = ring_to_json(*r);
  j["id"] = id;
  j["order"] = r->size();
  j["commutative"] = r->is_commutative();
  j["jacobson_radical_order"] = jacobson_radical(r).count();
  j["primitive_idempotent_classes"] = primitive_idempotents(r).size();
  std::cout << j.dump(2) << '\n';
  return 0;
}

int enumerate(const std::string& ring_id, const CatalogPolicy& policy, bool json) {
  const ModuleCatalog c = enumerate_modules(ring_id, ring_from_id(ring_id), policy);
  if (json) {
    std::cout << catalog_to_json(c).dump(1) << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < c.modules.size(); ++i) {
    const auto& m = c.modules[i];
    std::cout << i << "  |M|=" << m->size() << "  orders=" << Json(m->orders()).dump()
              << "  submodules=" << submodules(m)->size() << '\n';
  }
  for (const auto& s : c.skipped) std::cout << "skipped " << s << '\n';
  return 0;
}

ModulePtr load_module(const std::string& ring_id, const std::string& source, const CatalogPolicy& policy,
                      std::string& label) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    Json j = Json::parse(in);
    if (!j.contains("ring")) j["ring"] = ring_id;
    label = source;
    try {
      return module_from_json(j);
    } catch (const AlgebraError& e) {
      throw AlgebraError(ErrorCode::InvalidInput, source + ": " + e.what());
    }
  }
  std::size_t pos = 0;
  unsigned long index = 0;
  try {
    index = std::stoul(source, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != source.size() || source.empty())
    throw AlgebraError(ErrorCode::InvalidInput, "--module must be a JSON file or a catalog index");
  const ModuleCatalog c = enumerate_modules(ring_id, ring_from_id(ring_id), policy);
  if (index >= c.modules.size())
    throw AlgebraError(ErrorCode::InvalidInput, "catalog index out of range (catalog has " +
                                                    std::to_string(c.modules.size()) + " modules)");
  label = ring_id + "#" + std::to_string(index);
  return c.modules[index];
}

int profile(const std::string& ring_id, const std::string& source, const CatalogPolicy& policy, bool hasse) {
  std::string label;
  const ModulePtr m = load_module(ring_id, source, policy, label);
  Json j = profile_module(m, label).to_json();
  j["module_data"] = module_to_json(*m, m->ring()->name() == ring_id ? ring_id : std::string());
  if (hasse) j["hasse"] = Json::parse(submodules(m)->hasse_json());
  std::cout << j.dump(2) << '\n';
  return j["flags"].empty() ? 0 : 1;
}

int oracle(const std::string& check, std::size_t samples, std::uint64_t seed) {
  const auto catalogs = default_catalogs();
  std::vector<OracleResult> results;
  if (check == "small") {
    results.push_back(check_small_catalog(catalogs));
    std::vector<RingPtr> rings;
    for (const auto& c : catalogs) rings.push_back(c.ring);
    results.push_back(check_small_random(rings, samples, seed));
  } else if (check == "summand") {
    results.push_back(check_summand_catalog(catalogs));
  } else if (check == "zbar") {
    results.push_back(check_zbar_reject(catalogs));
  } else {
    results.push_back(check_duality_hulls(catalogs));
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.check << ": " << r.checked << " checked, " << r.mismatches << " mismatches\n";
    for (const auto& e : r.examples) std::cout << "  mismatch at " << e << '\n';
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finite rings, finite modules and their cosingular theory"};
  app.require_subcommand(1);

  CatalogPolicy policy;
  const auto add_policy = [&](CLI::App* cmd) {
    cmd->add_option("--gens", policy.max_generators, "Largest number of generators")->check(CLI::Range(0, 4));
    cmd->add_option("--max-size", policy.max_size, "Largest module order")->check(CLI::PositiveNumber);
  };

  auto* ring = app.add_subcommand("ring", "Inspect built-in rings");
  ring->require_subcommand(1);
  ring->add_subcommand("list", "List the default rings");
  std::string show_id;
  auto* show = ring->add_subcommand("show", "Print a ring's presentation");
  show->add_option("id", show_id, "Ring id such as Z4, F2xZ4, T2F2, F2[x]/(x^2)")->required();

  std::string ring_id;
  bool json = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the module catalog of a ring");
  enumerate_cmd->add_option("--ring", ring_id, "Ring id")->required();
  enumerate_cmd->add_flag("--json", json, "Print the catalog as JSON");
  add_policy(enumerate_cmd);

  std::string module_source;
  bool hasse = false;
  auto* profile_cmd = app.add_subcommand("profile", "Evaluate every predicate on one module");
  profile_cmd->add_option("--ring", ring_id, "Ring id")->required();
  profile_cmd->add_option("--module", module_source, "Module JSON file or catalog index")->required();
  profile_cmd->add_flag("--hasse", hasse, "Include the submodule lattice");
  add_policy(profile_cmd);

  std::string suite_arg = "all", ring_arg = "all", out_dir;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run theorem suites over module catalogs");
  verify->add_option("--suite", suite_arg, "Suite id, comma separated list, or all");
  verify->add_option("--ring", ring_arg, "Ring id, comma separated list, or all");
  verify->add_option("--out", out_dir, "Directory for the JSON report bundle");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_policy(verify);

  std::string check;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check fast paths against definitional routes");
  oracle_cmd->add_option("--check", check, "Which check")
      ->required()
      ->check(CLI::IsMember({"small", "summand", "zbar", "duality"}));
  oracle_cmd->add_option("--samples", samples, "Random samples for the smallness check");
  oracle_cmd->add_option("--seed", seed, "Seed for the random samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (ring->parsed()) return show->parsed() ? ring_show(show_id) : ring_list();
    if (enumerate_cmd->parsed()) return enumerate(ring_id, policy, json);
    if (profile_cmd->parsed()) return profile(ring_id, module_source, policy, hasse);
    if (oracle_cmd->parsed()) return oracle(check, samples, seed);
    RunConfig config;
    if (suite_arg != "all") config.suites = split_list(suite_arg);
    if (ring_arg != "all") config.rings = split_list(ring_arg);
    config.policy = policy;
    config.out_dir = out_dir;
    config.jobs = jobs;
    if (const char* cache = std::getenv("MODLAB_CACHE")) config.cache_dir = cache;
    return run_all(config, std::cout).exit_code;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidInput ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
