// Copyright 2026 The rootcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "crosscheck.hpp"
#include "report.hpp"
#include "rootcover/decide.hpp"
#include "rootcover/errors.hpp"
#include "rootcover/groups.hpp"

namespace rootcover::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::yes: return kHolds;
    case Verdict::no: return kFails;
    case Verdict::undecided: return kUndecided;
  }
  return kInternal;
}

Predicate parse_predicate(const std::string& s) { return s == "strong" ? Predicate::strong : Predicate::weak; }

PermGroup load_group(const std::string& path, const Config& cfg) {
  std::size_t degree = 0;
  auto gens = parse_generator_list(read_file(path), &degree);
  return PermGroup::closure(gens, degree, cfg.group_order_cap);
}

// Subgroups separated by blank lines, each a generator list.
std::vector<PermGroup> load_subgroups(const std::string& path, const PermGroup& g, const Config& cfg) {
  std::istringstream in(read_file(path));
  std::vector<std::string> chunks(1);
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (!chunks.back().empty()) chunks.emplace_back();
      continue;
    }
    chunks.back() += line + "\n";
  }
  if (chunks.back().empty()) chunks.pop_back();
  std::vector<PermGroup> subs;
  for (const auto& c : chunks) {
    auto gens = parse_generator_list(c);
    for (auto& p : gens) {
      if (p.degree() > g.degree()) throw InvalidInput("subgroup generator moves points beyond degree " + std::to_string(g.degree()));
      // Pad to the group's degree.
      std::vector<int> img;
      for (std::size_t i = 0; i < g.degree(); ++i) img.push_back(static_cast<int>(i < p.degree() ? p[i] : i) + 1);
      p = Perm::from_images(img);
    }
    auto h = PermGroup::closure(gens, g.degree(), cfg.group_order_cap);
    if (!h.is_subgroup_of(g)) throw InvalidInput("not a subgroup of G: " + c);
    if (h.order() == g.order()) throw InvalidInput("subgroup is not proper: " + c);
    subs.push_back(std::move(h));
  }
  if (subs.empty()) throw InvalidInput("no subgroups in " + path);
  return subs;
}

Json frobenius_json(const std::optional<FrobeniusStructure>& fs) {
  Json j;
  j["frobenius"] = fs.has_value();
  if (!fs) return j;
  j["kernel_order"] = fs->kernel.order();
  j["complement_order"] = fs->complement.order();
  j["kernel_normal"] = fs->kernel_normal;
  j["order_product"] = fs->order_product;
  j["malnormal"] = fs->malnormal;
  j["kernel_nilpotent"] = fs->kernel_nilpotent;
  j["kernel_abelian"] = fs->kernel_abelian;
  j["kernel"] = to_json(fs->kernel);
  j["complement"] = to_json(fs->complement);
  return j;
}

struct Output {
  bool pretty = false;
  std::string report_file;
  std::ostream* out = nullptr;

  void emit(const Json& j) const {
    *out << render(j, pretty);
    if (!report_file.empty()) {
      std::ofstream f(report_file);
      if (!f) throw InvalidInput("cannot write " + report_file);
      f << render(j, false);
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether a product of irreducible polynomials has roots mod p or in Q_p for every p.",
               "rootcover"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  Output o;
  o.out = &out;
  app.add_flag("--pretty", o.pretty, "Human-readable rendering instead of JSON");
  app.add_option("--report-file", o.report_file, "Also write the JSON report to this path");
  app.add_option("--group-order-cap", cfg.group_order_cap)->envname("ROOTCOVER_GROUP_ORDER_CAP")->check(CLI::PositiveNumber);
  app.add_option("--splitting-degree-cap", cfg.splitting_degree_cap)
      ->envname("ROOTCOVER_SPLITTING_DEGREE_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--subgroup-enum-cap", cfg.subgroup_enum_cap)->envname("ROOTCOVER_SUBGROUP_ENUM_CAP")->check(CLI::PositiveNumber);
  app.add_option("--padic-node-cap", cfg.padic_node_cap)->envname("ROOTCOVER_PADIC_NODE_CAP")->check(CLI::PositiveNumber);
  app.add_option("--prime-sample-count", cfg.prime_sample_count)
      ->envname("ROOTCOVER_PRIME_SAMPLE_COUNT")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-scan-bound", cfg.oracle_scan_bound)->envname("ROOTCOVER_ORACLE_SCAN_BOUND")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.prng_seed, "PRNG seed, recorded in every report")->envname("ROOTCOVER_SEED");

  const auto predicates = CLI::IsMember({"weak", "strong"});

  auto* check_cmd = app.add_subcommand("check", "Decide the weak or strong predicate for one instance");
  std::string instance_text, predicate = "weak", group_mode = "auto";
  bool cross = false;
  check_cmd->add_option("instance", instance_text, "Product of factors, e.g. \"(x^3-2)(x^2+x+1)\"")->required();
  check_cmd->add_option("--predicate", predicate)->check(predicates);
  check_cmd->add_option("--group", group_mode, "auto, sample-only, or a supplied-group JSON file");
  check_cmd->add_flag("--cross-check", cross, "Compare with a direct root scan up to the oracle bound");

  auto* group_cmd = app.add_subcommand("group", "Group-side checks on a generator list");
  std::string gens_file, covers_file;
  bool frob = false, lemma = false;
  int min_cover = 0;
  group_cmd->add_option("generators", gens_file, "Cycle-notation generators, one per line")->required()->check(CLI::ExistingFile);
  group_cmd->add_option("--covers", covers_file, "Subgroups, blank-line separated")->check(CLI::ExistingFile);
  group_cmd->add_flag("--frobenius", frob);
  group_cmd->add_flag("--lemma24", lemma, "Subgroups meeting the kernel trivially lie in a complement");
  group_cmd->add_option("--min-cover", min_cover, "Largest m to try")->check(CLI::PositiveNumber);

  auto* family_cmd = app.add_subcommand("family", "Generate known instances and groups");
  family_cmd->require_subcommand(1);
  std::string check_pred;
  family_cmd->add_option("--check", check_pred, "Run weak or strong check on the instance")->check(predicates);
  auto* brandl_cmd = family_cmd->add_subcommand("brandl", "(x^r - 2) Phi_r(x)");
  unsigned r = 0;
  brandl_cmd->add_option("r", r)->required();
  auto* triple_cmd = family_cmd->add_subcommand("quadratic-triple", "(x^2 - a)(x^2 - b)(x^2 - ab)");
  std::string qa, qb;
  triple_cmd->add_option("a", qa)->required();
  triple_cmd->add_option("b", qb)->required();
  auto* catalog_cmd = family_cmd->add_subcommand("frobenius-catalog", "Frobenius groups of order <= N");
  std::size_t max_order = 0;
  catalog_cmd->add_option("N", max_order)->required();

  auto* search_cmd = app.add_subcommand("search", "Try every m-subset of a pool of factors");
  std::string pool_file;
  std::size_t m = 0, budget = 10000;
  search_cmd->add_option("pool", pool_file, "One polynomial per line")->required()->check(CLI::ExistingFile);
  search_cmd->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--predicate", predicate)->check(predicates);
  search_cmd->add_option("--budget", budget)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  try {
    if (check_cmd->parsed()) {
      Instance inst = verify_instance(instance_text, cfg);
      GroupMode mode = GroupMode::automatic;
      if (group_mode == "sample-only") {
        mode = GroupMode::sample_only;
      } else if (group_mode != "auto") {
        auto sg = parse_supplied_group(read_file(group_mode), cfg.group_order_cap);
        inst.evidence = check_supplied(inst, sg);
        inst.supplied = std::move(sg);
        mode = GroupMode::supplied;
      }
      auto rep = check(inst, parse_predicate(predicate), cfg, mode);
      Json j = to_json(rep, inst, cfg);
      int code = verdict_code(rep.decision().verdict);
      if (cross) {
        bool strong = rep.predicate == Predicate::strong;
        auto found = strong ? scan_rootless_modulus(inst.product, cfg.oracle_scan_bound)
                            : scan_rootless_prime(inst.product, cfg.oracle_scan_bound);
        // YES forbids a rootless modulus; a NO witness prime inside the bound must be seen.
        bool agrees = true;
        if (rep.decision().verdict == Verdict::yes) agrees = !found;
        if (rep.decision().verdict == Verdict::no && !strong && rep.witness_prime &&
            *rep.witness_prime <= cfg.oracle_scan_bound)
          agrees = found && *found <= *rep.witness_prime;
        j["cross_check"] = {{"bound", cfg.oracle_scan_bound},
                            {"scan", strong ? "root mod every n" : "root mod every prime"},
                            {"first_rootless", found ? Json(*found) : Json(nullptr)},
                            {"agrees", agrees}};
        if (!agrees) {
          o.emit(j);
          err << "rootcover: internal error: cross-check disagrees with the verdict\n";
          return kInternal;
        }
      }
      o.emit(j);
      return code;
    }

    if (group_cmd->parsed()) {
      int chosen = !covers_file.empty() + frob + lemma + (min_cover > 0);
      if (chosen != 1) {
        err << "rootcover: group needs exactly one of --covers, --frobenius, --lemma24, --min-cover\n";
        return kUsage;
      }
      PermGroup g = load_group(gens_file, cfg);
      Json j;
      j["group"] = to_json(g);
      int code = kHolds;
      if (!covers_file.empty()) {
        auto subs = load_subgroups(covers_file, g, cfg);
        Json js = Json::array();
        for (const auto& h : subs) js.push_back(to_json(h));
        j["subgroups"] = std::move(js);
        auto cov = covers(g, subs);
        j["covering"] = to_json(cov);
        j["joint_core_trivial"] = joint_core_trivial(g, subs);
        code = cov.covered ? kHolds : kFails;
      } else if (frob || lemma) {
        auto fs = frobenius_structure(g);
        j.update(frobenius_json(fs));
        code = fs && fs->all_checks() ? kHolds : kFails;
        if (lemma && fs) {
          auto rep = lemma24_check(g, *fs, cfg.subgroup_enum_cap);
          Json v = Json::array();
          for (const auto& d : rep.violations) v.push_back(to_json(d));
          j["lemma24"] = {{"classes_checked", rep.classes_checked}, {"violations", std::move(v)}, {"passed", rep.passed()}};
          if (!rep.passed()) code = kFails;
        }
      } else {
        auto mc = min_cover_m(g, min_cover, cfg.subgroup_enum_cap);
        j["max_m"] = min_cover;
        j["cyclic"] = g.is_cyclic();
        j["found"] = mc.has_value();
        if (mc) {
          j["m"] = mc->m;
          Json js = Json::array();
          for (const auto& h : mc->subgroups) js.push_back(to_json(h));
          j["subgroups"] = std::move(js);
          j["covering"] = to_json(covers(g, mc->subgroups));
          j["joint_core_trivial"] = joint_core_trivial(g, mc->subgroups);
        }
        code = mc ? kHolds : kFails;
      }
      o.emit(j);
      return code;
    }

    if (family_cmd->parsed()) {
      if (catalog_cmd->parsed()) {
        auto cat = frobenius_catalog(max_order, cfg.subgroup_enum_cap);
        Json list = Json::array();
        bool all_pass = true;
        for (const auto& c : cat) {
          Json e;
          e["name"] = c.name;
          e["order"] = c.group.order();
          e["degree"] = c.group.degree();
          e["kernel_order"] = c.kernel_order;
          e["complement_order"] = c.group.order() / c.kernel_order;
          e["complement_cyclic"] = c.complement_cyclic;
          e["generators"] = to_json(c.group)["generators"];
          if (!check_pred.empty()) {
            auto fs = frobenius_structure(c.group);
            bool frob_ok = fs && fs->all_checks();
            bool lemma_ok = fs && lemma24_check(c.group, *fs, cfg.subgroup_enum_cap).passed();
            e["frobenius_checks"] = frob_ok;
            e["lemma24"] = lemma_ok;
            all_pass = all_pass && frob_ok && lemma_ok;
          }
          list.push_back(std::move(e));
        }
        o.emit(Json{{"max_order", max_order}, {"count", cat.size()}, {"groups", std::move(list)}});
        return all_pass ? kHolds : kFails;
      }
      Instance inst;
      if (brandl_cmd->parsed()) {
        inst = gen_brandl(r, cfg);
      } else {
        mpz_class a, b;
        if (a.set_str(qa, 10) != 0 || b.set_str(qb, 10) != 0) throw InvalidInput("quadratic-triple: a and b must be integers");
        inst = gen_quadratic_triple(a, b, cfg);
      }
      Json j;
      j["instance"] = instance_json(inst);
      j["supplied_group"] = to_json(*inst.supplied);
      j["evidence"] = to_json(*inst.evidence);
      int code = kHolds;
      if (!check_pred.empty()) {
        auto rep = check(inst, parse_predicate(check_pred), cfg);
        j["report"] = to_json(rep, inst, cfg);
        code = verdict_code(rep.decision().verdict);
      }
      o.emit(j);
      return code;
    }

    if (search_cmd->parsed()) {
      std::vector<IntPoly> pool;
      std::istringstream in(read_file(pool_file));
      for (std::string line; std::getline(in, line);) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        pool.push_back(parse_poly(line));
      }
      auto pred = parse_predicate(predicate);
      auto res = search(pool, m, pred, budget, cfg, [&err](std::size_t done, std::size_t total) {
        err << "search: " << done << "/" << total << "\n";
      });
      Json hits = Json::array();
      for (const auto& h : res.hits) hits.push_back(to_json(h.report, verify_instance(h.factors, cfg), cfg));
      Json j;
      j["predicate"] = to_string(pred);
      j["m"] = m;
      j["pool_size"] = pool.size();
      j["subsets_total"] = res.subsets_total;
      j["subsets_tried"] = res.subsets_tried;
      j["budget_exhausted"] = res.budget_exhausted;
      j["hits"] = std::move(hits);
      j["seed"] = cfg.prng_seed;
      o.emit(j);
      if (res.budget_exhausted) {
        err << "rootcover: budget exhausted after " << res.subsets_tried << " of " << res.subsets_total << " subsets\n";
        return kResource;
      }
      return res.hits.empty() ? kFails : kHolds;
    }
  } catch (const InvalidInput& e) {
    err << "rootcover: invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "rootcover: resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "rootcover: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace rootcover::cli
