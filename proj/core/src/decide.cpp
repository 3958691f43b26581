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


#include "rootcover/decide.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rootcover/errors.hpp"
#include "rootcover/factor.hpp"
#include "rootcover/modpoly.hpp"
#include "rootcover/splitfield.hpp"

namespace rootcover {

namespace {

constexpr unsigned long kMaxWordPrime = 1UL << 31;

// Classifies a claimed-irreducible factor; throws InstanceRejected.
void require_irreducible(const IntPoly& g, const Config& config) {
  if (g.degree() < 1) throw InstanceRejected("non-monic", g.to_string());
  if (!g.is_monic()) throw InstanceRejected("non-monic", g.to_string());
  if (g.degree() == 1) throw InstanceRejected("rational root", g.to_string());
  if (is_irreducible(g, config.prng_seed)) return;
  auto fac = factor_over_rationals(g, std::max(g.degree(), kDefaultFactorDegreeCap), config.prng_seed);
  for (const auto& q : fac.factors)
    if (q.poly.degree() == 1) throw InstanceRejected("rational root", g.to_string());
  for (const auto& q : fac.factors)
    if (q.multiplicity > 1) throw InstanceRejected("repeated factor", g.to_string());
  throw InstanceRejected("reducible factor", g.to_string());
}

// Per-block cycle types of sigma, blocks in the given order.
std::vector<std::vector<int>> block_cycle_types(const Perm& sigma,
                                                const std::vector<std::vector<Perm::Point>>& blocks) {
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks) {
    std::set<Perm::Point> seen;
    std::vector<int> ct;
    for (Perm::Point start : b) {
      if (seen.count(start)) continue;
      int len = 0;
      for (Perm::Point j = start; !seen.count(j); j = sigma[j]) {
        seen.insert(j);
        ++len;
      }
      ct.push_back(len);
    }
    std::sort(ct.begin(), ct.end());
    out.push_back(std::move(ct));
  }
  return out;
}

struct GroupView {
  PermGroup group;
  std::vector<PermGroup> stabilizers;
};

struct Acquired {
  std::optional<GroupView> view;
  GroupSource source = GroupSource::sampled_only;
  std::string unavailable;  // why no group is available
  std::optional<ConsistencyEvidence> evidence;
};

std::optional<GroupView> supplied_view(const Instance& inst, const SuppliedGroup& sg) {
  GroupView v{sg.group, {}};
  for (const auto& f : inst.factors) {
    auto it = std::find(sg.block_factors.begin(), sg.block_factors.end(), f);
    if (it == sg.block_factors.end()) return std::nullopt;
    auto& labels = sg.blocks[static_cast<std::size_t>(it - sg.block_factors.begin())];
    v.stabilizers.push_back(sg.group.stabilizer(labels.front()));
  }
  return v;
}

Acquired acquire_group(const Instance& inst, const Config& config, GroupMode mode) {
  Acquired a;
  if (mode == GroupMode::sample_only) {
    a.unavailable = "group not requested (sample-only)";
    return a;
  }
  if (mode == GroupMode::automatic) {
    int cap = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(config.splitting_degree_cap),
                                                     config.group_order_cap));
    try {
      auto sd = splitting_data(inst.factors, cap);
      a.view = GroupView{std::move(sd.group), std::move(sd.stabilizers)};
      a.source = GroupSource::computed;
      return a;
    } catch (const ResourceError& e) {
      a.unavailable = e.what();
      if (!inst.supplied) return a;
    }
  }
  if (!inst.supplied) throw InvalidInput("decide: no supplied group for this instance");
  a.source = GroupSource::supplied;
  a.evidence = inst.evidence ? *inst.evidence : check_supplied(inst, *inst.supplied);
  if (!a.evidence->consistent()) {
    a.unavailable = "supplied group inconsistent: " + a.evidence->mismatch;
    return a;
  }
  a.view = supplied_view(inst, *inst.supplied);
  if (!a.view) a.unavailable = "supplied group lacks a block for some factor";
  return a;
}

std::optional<std::vector<mpz_class>> roots_mod(const IntPoly& g, const mpz_class& p, std::uint64_t seed) {
  if (p >= kMaxWordPrime) return std::nullopt;
  std::vector<mpz_class> out;
  for (auto r : roots_mod_p(ModPoly(p.get_ui(), g), seed)) out.emplace_back(static_cast<unsigned long>(r));
  return out;
}

void min_prime(std::optional<mpz_class>& cur, const mpz_class& p) {
  if (!cur || p < *cur) cur = p;
}

// Shared verdict logic once witnesses and local results are known.
Decision decide(const Acquired& acq, const std::optional<CoverReport>& cov, const std::optional<mpz_class>& witness,
                const std::string& local_undecided) {
  if (witness) return {Verdict::no, ""};
  if (!acq.view) return {Verdict::undecided, acq.unavailable};
  if (!cov->covered) return {Verdict::no, ""};
  if (!local_undecided.empty()) return {Verdict::undecided, local_undecided};
  return {Verdict::yes, ""};
}

InstanceReport run(const Instance& inst, const Config& config, GroupMode mode, bool strong) {
  InstanceReport rep;
  rep.predicate = strong ? Predicate::strong : Predicate::weak;
  rep.seed = config.prng_seed;
  rep.real_root_sanity = real_root_sanity(inst.factors);

  Acquired acq = acquire_group(inst, config, mode);
  rep.mode = acq.source;
  rep.evidence = acq.evidence;
  if (acq.view) {
    rep.group_order = acq.view->group.order();
    rep.covering = covers(acq.view->group, acq.view->stabilizers);
    rep.joint_core_trivial = joint_core_trivial(acq.view->group, acq.view->stabilizers);
    if (!rep.covering->covered) rep.uncovered_witness = rep.covering->witness;
  }

  std::optional<mpz_class> weak_witness;
  std::optional<mpz_class> strong_witness;
  std::string weak_undecided;
  std::string strong_undecided;
  PadicLimits limits;
  limits.node_cap = config.padic_node_cap;

  for (const auto& p : inst.exceptional) {
    ExceptionalPrime ep;
    ep.p = p;
    bool any_root = false;
    bool all_known = true;
    for (const auto& g : inst.factors) {
      ep.mod_p_roots.push_back(roots_mod(g, p, config.prng_seed));
      if (!ep.mod_p_roots.back()) all_known = false;
      else if (!ep.mod_p_roots.back()->empty()) any_root = true;
    }
    if (!any_root && all_known) min_prime(weak_witness, p);
    if (!any_root && !all_known && weak_undecided.empty())
      weak_undecided = "roots mod " + p.get_str() + " not computable (prime exceeds 2^31)";

    if (strong) {
      bool any_qp = false;
      bool all_decided = true;
      for (std::size_t i = 0; i < inst.factors.size(); ++i) {
        try {
          ep.padic.push_back(has_qp_root(inst.factors[i], p, limits));
          ep.padic_errors.emplace_back();
          if (ep.padic.back()->has_root) any_qp = true;
        } catch (const ResourceError& e) {
          ep.padic.push_back(std::nullopt);
          ep.padic_errors.emplace_back(e.what());
          all_decided = false;
        }
      }
      if (!any_qp && all_decided) min_prime(strong_witness, p);
      if (!any_qp && !all_decided && strong_undecided.empty())
        strong_undecided = "p-adic decision at " + p.get_str() + " hit a resource cap";
    }
    rep.exceptional.push_back(std::move(ep));
  }

  // Unramified witnesses; also a cross-check of the computed group.
  if (auto s = sample_no_witness(inst.product, config.prime_sample_count)) {
    mpz_class sp(*s);
    min_prime(weak_witness, sp);
    if (rep.covering && rep.covering->covered && acq.source == GroupSource::computed)
      throw InternalError("decide: covering holds but " + sp.get_str() + " has no root");
  }
  if (weak_witness) min_prime(strong_witness, *weak_witness);

  rep.weak = decide(acq, rep.covering, weak_witness, weak_undecided);
  if (strong) {
    // A ramified prime undecided for the weak predicate is undecided here too.
    rep.strong = decide(acq, rep.covering, strong_witness, strong_undecided.empty() ? weak_undecided : strong_undecided);
    if (rep.strong->verdict == Verdict::yes && rep.weak.verdict != Verdict::yes)
      throw InternalError("decide: strong YES without weak YES");
  }
  rep.witness_prime = strong ? strong_witness : weak_witness;
  rep.weak_witness_prime = weak_witness;

  // Complex conjugation lies in G, so covering forces a real root.
  if (rep.covering && rep.covering->covered && !rep.real_root_sanity) {
    if (acq.source == GroupSource::computed)
      throw InternalError("decide: covering holds but no factor has a real root");
    for (Decision* d : {&rep.weak, rep.strong ? &*rep.strong : nullptr})
      if (d && d->verdict == Verdict::yes) *d = {Verdict::undecided, "supplied group covers but no real root"};
  }
  return rep;
}

std::vector<std::vector<Perm::Point>> sorted_blocks(std::vector<std::vector<Perm::Point>> bs) {
  for (auto& b : bs) std::sort(b.begin(), b.end());
  std::sort(bs.begin(), bs.end());
  return bs;
}

}  // namespace

const char* to_string(GroupSource s) {
  switch (s) {
    case GroupSource::computed: return "computed";
    case GroupSource::supplied: return "supplied";
    case GroupSource::sampled_only: return "sampled-only";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "YES";
    case Verdict::no: return "NO";
    case Verdict::undecided: return "UNDECIDED";
  }
  return "?";
}

const char* to_string(Predicate p) { return p == Predicate::weak ? "weak" : "strong"; }

Instance verify_instance(const std::vector<IntPoly>& factors, const Config& config) {
  if (factors.empty()) throw InvalidInput("verify_instance: no factors");
  Instance inst;
  for (const auto& g : factors) {
    if (g.degree() == 0 && g == IntPoly{1}) continue;
    require_irreducible(g, config);
    if (std::find(inst.factors.begin(), inst.factors.end(), g) != inst.factors.end())
      throw InstanceRejected("repeated factor", g.to_string());
    inst.factors.push_back(g);
  }
  if (inst.factors.empty()) throw InvalidInput("verify_instance: no nonconstant factors");
  std::sort(inst.factors.begin(), inst.factors.end(), [](const IntPoly& a, const IntPoly& b) { return canonical_less(a, b); });

  // disc(gh) = disc(g) disc(h) Res(g, h)^2 for monic g, h.
  inst.product = IntPoly{1};
  inst.disc = 1;
  for (std::size_t i = 0; i < inst.factors.size(); ++i) {
    inst.product = inst.product * inst.factors[i];
    inst.disc *= discriminant(inst.factors[i]);
    for (std::size_t j = i + 1; j < inst.factors.size(); ++j) {
      mpz_class r = resultant(inst.factors[i], inst.factors[j]);
      if (r == 0) throw InstanceRejected("common factor", inst.factors[i].to_string() + ", " + inst.factors[j].to_string());
      inst.disc *= r * r;
    }
  }
  inst.exceptional = prime_divisors(inst.disc);
  return inst;
}

Instance verify_instance(std::string_view text, const Config& config) {
  auto parts = parse_factors(text);
  std::size_t nonconstant = 0;
  for (const auto& g : parts) nonconstant += g.degree() > 0;
  if (nonconstant == 0) throw InvalidInput("verify_instance: no nonconstant factors in '" + std::string(text) + "'");
  if (nonconstant > 1 || parts.size() > 1) return verify_instance(parts, config);

  const IntPoly& f = parts.front();
  if (!f.is_monic()) throw InstanceRejected("non-monic", f.to_string());
  auto fac = factor_over_rationals(f, kDefaultFactorDegreeCap, config.prng_seed);
  std::vector<IntPoly> gs;
  for (const auto& q : fac.factors) {
    if (q.poly.degree() == 1) throw InstanceRejected("rational root", q.poly.to_string());
    if (q.multiplicity > 1) throw InstanceRejected("repeated factor", q.poly.to_string());
    gs.push_back(q.poly);
  }
  return verify_instance(gs, config);
}

std::optional<unsigned long> sample_no_witness(const IntPoly& f, std::size_t prime_budget) {
  for (unsigned long p : first_primes(prime_budget)) {
    ModPoly fp(p, f);
    if (fp.degree() != f.degree() || !is_squarefree(fp)) continue;
    if (roots_mod_p(fp).empty()) return p;
  }
  return std::nullopt;
}

bool real_root_sanity(const std::vector<IntPoly>& factors) {
  for (const auto& g : factors)
    if (g.degree() % 2 == 1 || count_real_roots(g) > 0) return true;
  return false;
}

ConsistencyEvidence check_supplied(const Instance& inst, const SuppliedGroup& sg, std::size_t primes) {
  ConsistencyEvidence ev;
  auto fail_orbits = [&](std::string why) {
    ev.orbits_match = false;
    ev.mismatch = std::move(why);
    return ev;
  };
  if (sg.blocks.size() != sg.block_factors.size()) return fail_orbits("block map size mismatch");
  std::vector<std::vector<Perm::Point>> blocks;
  for (const auto& f : inst.factors) {
    auto it = std::find(sg.block_factors.begin(), sg.block_factors.end(), f);
    if (it == sg.block_factors.end()) return fail_orbits("no block for factor " + f.to_string());
    const auto& b = sg.blocks[static_cast<std::size_t>(it - sg.block_factors.begin())];
    if (static_cast<int>(b.size()) != f.degree())
      return fail_orbits("block size " + std::to_string(b.size()) + " differs from degree of " + f.to_string());
    blocks.push_back(b);
  }
  for (const auto& b : blocks)
    for (auto l : b)
      if (l >= sg.group.degree()) return fail_orbits("label " + std::to_string(l + 1) + " out of range");
  if (sorted_blocks(blocks) != sorted_blocks(sg.group.orbits())) return fail_orbits("orbits differ from root blocks");

  std::set<std::vector<std::vector<int>>> types;
  for (const auto& s : sg.group.elements()) types.insert(block_cycle_types(s, blocks));

  for (unsigned long p : first_primes(std::max<std::size_t>(primes * 4, 64))) {
    if (ev.primes.size() == primes) break;
    if (inst.disc % p == 0) continue;
    std::vector<std::vector<int>> observed;
    for (const auto& f : inst.factors) observed.push_back(cycle_type(f, p));
    ev.primes.push_back(p);
    if (!types.count(observed)) {
      ev.all_matched = false;
      ev.mismatch = "Frobenius cycle type at " + std::to_string(p) + " matches no element";
      break;
    }
  }
  return ev;
}

InstanceReport weak_check(const Instance& inst, const Config& config, GroupMode mode) {
  return run(inst, config, mode, false);
}

InstanceReport strong_check(const Instance& inst, const Config& config, GroupMode mode) {
  return run(inst, config, mode, true);
}

InstanceReport check(const Instance& inst, Predicate predicate, const Config& config, GroupMode mode) {
  return run(inst, config, mode, predicate == Predicate::strong);
}

Instance gen_brandl(unsigned r, const Config& config) {
  if (r < 3 || !is_prime(mpz_class(r))) throw InvalidInput("brandl: r must be a prime >= 3, got " + std::to_string(r));
  if (2 * r - 1 > 0xffff) throw InvalidInput("brandl: r too large");
  std::vector<mpz_class> xr(r + 1, 0), phi(r, 1);
  xr[0] = -2;
  xr[r] = 1;
  IntPoly radical(xr), cyclo(phi);

  unsigned g = 2;
  for (;; ++g) {
    unsigned o = 1;
    for (unsigned long v = g; v != 1; v = v * g % r) ++o;
    if (o == r - 1) break;
  }
  // Labels 1..r: 2^(1/r) zeta^i; r+1..2r-1: zeta^j. sigma_{a,b}: i -> b + a i, j -> a j.
  auto sigma = [r](unsigned a, unsigned b) {
    std::vector<int> img(2 * r - 1);
    for (unsigned i = 0; i < r; ++i) img[i] = static_cast<int>((b + a * i) % r) + 1;
    for (unsigned j = 1; j < r; ++j) img[r + j - 1] = static_cast<int>(r + a * j % r);
    return Perm::from_images(img);
  };
  SuppliedGroup sg{PermGroup::closure({sigma(1, 1), sigma(g, 0)}, 2 * r - 1, config.group_order_cap),
                   {radical, cyclo}, {{}, {}}};
  for (unsigned i = 0; i < r; ++i) sg.blocks[0].push_back(static_cast<Perm::Point>(i));
  for (unsigned j = 1; j < r; ++j) sg.blocks[1].push_back(static_cast<Perm::Point>(r + j - 1));

  Instance inst = verify_instance(std::vector<IntPoly>{radical, cyclo}, config);
  inst.evidence = check_supplied(inst, sg);
  inst.supplied = std::move(sg);
  inst.family = "brandl " + std::to_string(r);
  return inst;
}

Instance gen_quadratic_triple(const mpz_class& a, const mpz_class& b, const Config& config) {
  // a, b, ab non-squares forces the three squarefree parts apart.
  for (const mpz_class& n : {a, b, mpz_class(a * b)})
    if (n >= 0 && mpz_perfect_square_p(n.get_mpz_t()))
      throw InvalidInput("quadratic-triple: " + n.get_str() + " is a square");
  auto quad = [](const mpz_class& c) { return IntPoly(std::vector<mpz_class>{-c, 0, 1}); };
  IntPoly fa = quad(a), fb = quad(b), fab = quad(a * b);
  // Labels: +-sqrt(a) = 1, 2; +-sqrt(b) = 3, 4; +-sqrt(ab) = 5, 6.
  SuppliedGroup sg{PermGroup::closure({Perm::parse("(1 2)(5 6)", 6), Perm::parse("(3 4)(5 6)", 6)}, 6,
                                      config.group_order_cap),
                   {fa, fb, fab}, {{0, 1}, {2, 3}, {4, 5}}};
  Instance inst = verify_instance(std::vector<IntPoly>{fa, fb, fab}, config);
  inst.evidence = check_supplied(inst, sg);
  inst.supplied = std::move(sg);
  inst.family = "quadratic-triple " + a.get_str() + " " + b.get_str();
  return inst;
}

SearchResult search(const std::vector<IntPoly>& pool, std::size_t m, Predicate predicate, std::size_t budget,
                    const Config& config, const std::function<void(std::size_t, std::size_t)>& progress) {
  if (pool.empty()) throw InvalidInput("search: empty pool");
  if (m == 0 || m > pool.size()) throw InvalidInput("search: m must be in [1, " + std::to_string(pool.size()) + "]");
  SearchResult res;
  mpz_class total;
  mpz_bin_uiui(total.get_mpz_t(), pool.size(), m);
  res.subsets_total = total.fits_ulong_p() ? total.get_ui() : static_cast<std::size_t>(-1);

  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    if (res.subsets_tried == budget) {
      res.budget_exhausted = true;
      break;
    }
    ++res.subsets_tried;
    std::vector<IntPoly> chosen;
    for (auto i : idx) chosen.push_back(pool[i]);
    try {
      Instance inst = verify_instance(chosen, config);
      InstanceReport rep = check(inst, predicate, config);
      if (rep.decision().verdict == Verdict::yes) res.hits.push_back({inst.factors, std::move(rep)});
    } catch (const InvalidInput&) {
    } catch (const ResourceError&) {
    }
    if (progress) progress(res.subsets_tried, res.subsets_total);
    // Next combination in lexicographic order.
    std::size_t k = m;
    while (k > 0 && idx[k - 1] == pool.size() - m + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return res;
}

}  // namespace rootcover
