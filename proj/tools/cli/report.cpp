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


#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "rootcover/errors.hpp"

namespace rootcover::cli {

Json big(const mpz_class& n) {
  if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
  return n.get_str();
}

Json to_json(const PadicReport& r) {
  Json j;
  j["prime"] = big(r.prime);
  j["has_root"] = r.has_root;
  j["depth_used"] = r.depth_used;
  j["horizon"] = r.horizon;
  Json c;
  if (const auto* h = std::get_if<HenselCertificate>(&r.certificate)) {
    c["kind"] = "hensel";
    c["residue"] = big(h->residue);
    c["modulus_exponent"] = h->modulus_exponent;
    c["val_g"] = h->val_g ? Json(*h->val_g) : Json(nullptr);
    c["val_gprime"] = h->val_gprime;
  } else {
    c["kind"] = "exhausted";
    c["level"] = std::get<Exhausted>(r.certificate).level;
  }
  j["certificate"] = std::move(c);
  return j;
}

Json to_json(const CoverReport& c) {
  Json j;
  j["covered"] = c.covered;
  if (c.witness) j["witness"] = c.witness->to_string();
  j["per_subgroup"] = c.per_subgroup;
  j["conjugate_stabilizers"] = c.has_conjugate_pair;
  return j;
}

Json to_json(const ConsistencyEvidence& e) {
  Json j;
  j["consistent"] = e.consistent();
  j["orbits_match"] = e.orbits_match;
  j["cycle_types_match"] = e.all_matched;
  j["primes"] = e.primes;
  if (!e.mismatch.empty()) j["mismatch"] = e.mismatch;
  return j;
}

Json to_json(const Config& c) {
  Json j;
  j["group_order_cap"] = c.group_order_cap;
  j["splitting_degree_cap"] = c.splitting_degree_cap;
  j["subgroup_enum_cap"] = c.subgroup_enum_cap;
  j["padic_node_cap"] = c.padic_node_cap;
  j["prime_sample_count"] = c.prime_sample_count;
  j["oracle_scan_bound"] = c.oracle_scan_bound;
  return j;
}

Json to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order();
  Json gens = Json::array();
  for (const auto& p : greedy_generators(g.degree(), g.elements())) gens.push_back(p.to_string());
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const SuppliedGroup& sg) {
  Json j = to_json(sg.group);
  Json blocks = Json::array();
  for (std::size_t i = 0; i < sg.blocks.size(); ++i) {
    Json labels = Json::array();
    for (auto l : sg.blocks[i]) labels.push_back(l + 1);
    blocks.push_back(Json{{"factor", sg.block_factors[i].to_string()}, {"labels", std::move(labels)}});
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json instance_json(const Instance& inst) {
  Json j;
  if (!inst.family.empty()) j["family"] = inst.family;
  Json fs = Json::array();
  for (const auto& f : inst.factors) fs.push_back(f.to_string());
  j["factors"] = std::move(fs);
  j["expanded"] = inst.product.to_string();
  j["disc"] = inst.disc.get_str();
  Json ex = Json::array();
  for (const auto& p : inst.exceptional) ex.push_back(big(p));
  j["exceptional_primes"] = std::move(ex);
  return j;
}

Json to_json(const InstanceReport& r, const Instance& inst, const Config& config) {
  const Decision& d = r.decision();
  Json j;
  j["predicate"] = to_string(r.predicate);
  j["verdict"] = to_string(d.verdict);
  if (d.verdict == Verdict::undecided) j["reason"] = d.reason;
  if (r.predicate == Predicate::strong) j["weak_verdict"] = to_string(r.weak.verdict);
  j["mode"] = to_string(r.mode);
  if (r.mode == GroupSource::supplied) j["conditional_on_supplied_group"] = true;
  j["instance"] = instance_json(inst);
  j["group"] = {{"order", r.group_order ? Json(*r.group_order) : Json(nullptr)}, {"source", to_string(r.mode)}};
  j["covering"] = r.covering ? to_json(*r.covering) : Json(nullptr);
  j["joint_core_trivial"] = r.joint_core_trivial ? Json(*r.joint_core_trivial) : Json(nullptr);

  Json ex = Json::array();
  for (const auto& e : r.exceptional) {
    Json je;
    je["p"] = big(e.p);
    Json roots = Json::array();
    for (const auto& per : e.mod_p_roots) {
      if (!per) {
        roots.push_back(nullptr);
        continue;
      }
      Json rs = Json::array();
      for (const auto& x : *per) rs.push_back(big(x));
      roots.push_back(std::move(rs));
    }
    je["mod_p_roots"] = std::move(roots);
    if (r.predicate == Predicate::strong) {
      Json pad = Json::array();
      for (std::size_t i = 0; i < e.padic.size(); ++i)
        pad.push_back(e.padic[i] ? to_json(*e.padic[i]) : Json{{"error", e.padic_errors[i]}});
      je["padic"] = std::move(pad);
    }
    ex.push_back(std::move(je));
  }
  j["exceptional"] = std::move(ex);
  if (r.witness_prime) j["witness_prime"] = big(*r.witness_prime);
  if (r.uncovered_witness) j["uncovered_element"] = r.uncovered_witness->to_string();
  if (r.evidence) j["evidence"] = to_json(*r.evidence);
  j["real_root_sanity"] = r.real_root_sanity;
  j["config"] = to_json(config);
  j["seed"] = r.seed;
  return j;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render_text(v, indent + 2, os);
      } else {
        os << pad << k << ": " << (v.is_structured() ? std::string("(none)") : scalar(v)) << '\n';
      }
    }
  } else if (j.is_array()) {
    // Scalars and arrays of scalars print on one line.
    bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) {
      return v.is_object() || (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& w) { return w.is_structured(); }));
    });
    if (flat) {
      os << pad;
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << (j[i].is_array() ? j[i].dump() : scalar(j[i]));
      os << '\n';
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "- [" << i << "]\n";
      render_text(j[i], indent + 2, os);
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

}  // namespace

std::string render(const Json& j, bool pretty) {
  if (!pretty) return j.dump(2) + "\n";
  std::ostringstream os;
  render_text(j, 0, os);
  return os.str();
}

SuppliedGroup parse_supplied_group(const std::string& text, std::size_t order_cap) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("supplied group: ") + e.what());
  }
  try {
    auto degree = j.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto& g : j.at("generators")) gens.push_back(Perm::parse(g.get<std::string>(), degree));
    SuppliedGroup sg{PermGroup::closure(gens, degree, order_cap), {}, {}};
    for (const auto& b : j.at("blocks")) {
      sg.block_factors.push_back(parse_poly(b.at("factor").get<std::string>()));
      std::vector<Perm::Point> labels;
      for (const auto& l : b.at("labels")) {
        auto v = l.get<std::size_t>();
        if (v < 1 || v > degree) throw InvalidInput("supplied group: label " + std::to_string(v) + " out of range");
        labels.push_back(static_cast<Perm::Point>(v - 1));
      }
      if (labels.empty()) throw InvalidInput("supplied group: empty block");
      sg.blocks.push_back(std::move(labels));
    }
    return sg;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("supplied group: ") + e.what());
  }
}

}  // namespace rootcover::cli
