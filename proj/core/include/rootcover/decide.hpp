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


#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootcover/config.hpp"
#include "rootcover/errors.hpp"
#include "rootcover/groups.hpp"
#include "rootcover/intpoly.hpp"
#include "rootcover/padic.hpp"
#include "rootcover/perm.hpp"

namespace rootcover {

/// verify_instance rejection, naming the reason and the offending factor.
class InstanceRejected : public InvalidInput {
 public:
  InstanceRejected(std::string reason, std::string factor)
      : InvalidInput(reason + ": " + factor), reason_(std::move(reason)), factor_(std::move(factor)) {}
  const std::string& reason() const { return reason_; }
  const std::string& factor() const { return factor_; }

 private:
  std::string reason_;
  std::string factor_;
};

enum class GroupSource { computed, supplied, sampled_only };
const char* to_string(GroupSource s);

/// A permutation group on the roots given by family knowledge, with the
/// labels (0-based) of each factor's roots.
struct SuppliedGroup {
  PermGroup group;
  std::vector<IntPoly> block_factors;
  std::vector<std::vector<Perm::Point>> blocks;
};

/// Dedekind sampling against a supplied group.
struct ConsistencyEvidence {
  std::vector<unsigned long> primes;  // sampled primes, all not dividing disc
  bool all_matched = true;
  bool orbits_match = true;
  std::string mismatch;  // first failure, empty when consistent
  bool consistent() const { return all_matched && orbits_match; }
};

struct Instance {
  std::vector<IntPoly> factors;  // canonical order
  IntPoly product;
  mpz_class disc;
  std::vector<mpz_class> exceptional;  // primes dividing disc
  std::optional<SuppliedGroup> supplied;
  std::optional<ConsistencyEvidence> evidence;
  std::string family;  // e.g. "brandl 5", empty otherwise

  std::size_t m() const { return factors.size(); }
};

/// Parses a product ("(x^3-2)(x^2+x+1)") or a single polynomial, which is
/// then factored over Q. Throws InstanceRejected for a rational root, a
/// repeated factor, a reducible factor or a non-monic input.
Instance verify_instance(std::string_view text, const Config& config = {});
Instance verify_instance(const std::vector<IntPoly>& factors, const Config& config = {});

enum class Verdict { yes, no, undecided };
const char* to_string(Verdict v);
enum class Predicate { weak, strong };
const char* to_string(Predicate p);

struct Decision {
  Verdict verdict = Verdict::undecided;
  std::string reason;  // for UNDECIDED
};

struct ExceptionalPrime {
  mpz_class p;
  std::vector<std::optional<std::vector<mpz_class>>> mod_p_roots;  // per factor; nullopt if p too large
  std::vector<std::optional<PadicReport>> padic;                   // per factor; strong only, nullopt on cap
  std::vector<std::string> padic_errors;                           // per factor, empty when decided
};

struct InstanceReport {
  Predicate predicate = Predicate::weak;
  Decision weak;
  std::optional<Decision> strong;  // strong_check only
  GroupSource mode = GroupSource::computed;
  std::optional<std::size_t> group_order;
  std::optional<CoverReport> covering;
  std::optional<bool> joint_core_trivial;
  std::vector<ExceptionalPrime> exceptional;
  std::optional<Perm> uncovered_witness;
  std::optional<mpz_class> witness_prime;       // for the chosen predicate
  std::optional<mpz_class> weak_witness_prime;  // no root mod p
  bool real_root_sanity = false;
  std::uint64_t seed = 0;
  std::optional<ConsistencyEvidence> evidence;

  const Decision& decision() const { return predicate == Predicate::weak ? weak : *strong; }
};

enum class GroupMode { automatic, supplied, sample_only };

/// Root mod p at every exceptional prime, plus covering.
InstanceReport weak_check(const Instance& inst, const Config& config = {}, GroupMode mode = GroupMode::automatic);
/// Q_p root of some factor at every exceptional prime, plus covering. Also
/// fills the weak verdict and asserts strong YES implies weak YES.
InstanceReport strong_check(const Instance& inst, const Config& config = {}, GroupMode mode = GroupMode::automatic);
InstanceReport check(const Instance& inst, Predicate predicate, const Config& config = {},
                     GroupMode mode = GroupMode::automatic);

/// Least prime among the first `prime_budget` primes that does not divide
/// disc(f) and at which f has no root.
std::optional<unsigned long> sample_no_witness(const IntPoly& f, std::size_t prime_budget);

/// Some factor has odd degree or a real root.
bool real_root_sanity(const std::vector<IntPoly>& factors);

/// Dedekind and orbit checks of a supplied group against `inst`.
ConsistencyEvidence check_supplied(const Instance& inst, const SuppliedGroup& sg, std::size_t primes = 25);

/// (x^r - 2) Phi_r(x) with its affine group of order r(r-1).
Instance gen_brandl(unsigned r, const Config& config = {});
/// (x^2 - a)(x^2 - b)(x^2 - ab) with group C2 x C2.
Instance gen_quadratic_triple(const mpz_class& a, const mpz_class& b, const Config& config = {});

struct SearchHit {
  std::vector<IntPoly> factors;
  InstanceReport report;
};
struct SearchResult {
  std::vector<SearchHit> hits;
  std::size_t subsets_tried = 0;
  std::size_t subsets_total = 0;
  bool budget_exhausted = false;
};

/// Every m-subset of the pool (in pool order) that forms a valid instance
/// and satisfies the predicate, trying at most `budget` subsets.
/// `progress` is called after each subset with (tried, total).
SearchResult search(const std::vector<IntPoly>& pool, std::size_t m, Predicate predicate, std::size_t budget,
                    const Config& config = {},
                    const std::function<void(std::size_t, std::size_t)>& progress = {});

}  // namespace rootcover
