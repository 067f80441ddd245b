#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "artinian/integer.hpp"
#include "artinian/inverse_system.hpp"
#include "artinian/polyring.hpp"
#include "artinian/socle_bounds.hpp"

namespace artinian {

/// Which constructive argument a plan follows. kThm34 uses the critical degree b
/// as threshold; kThmB uses t + 1.
enum class Branch { kThm34, kThmB };

/// kGeneric: every socle generator is a power sum with N(r, deg) summands, enough to
/// behave like a generic form. kPowerSums: counts are tuned so the degree just below
/// the threshold receives an exact number of derivatives.
enum class Route { kGeneric, kPowerSums };

std::string_view to_string(Branch b);
std::string_view to_string(Route r);

struct SummandPlan {
  Branch branch = Branch::kThmB;
  Route route = Route::kGeneric;
  Verdict verdict = Verdict::kUnknown;
  int threshold = 0;
  /// degree -> number of powers in each generator of that degree
  std::map<int, std::vector<Integer>, std::greater<>> counts;
  /// degree -> number of single pure powers L^degree
  std::map<int, Integer, std::greater<>> pure_powers;
  int complement_degree = -1;
  Integer complement_count = 0;
  /// Derivatives the power sums are planned to contribute in degree threshold - 1.
  Integer critical_derivatives = 0;
};

/// Deterministic summand counts for the given branch; throws Error(kNotAdmissible)
/// when classify does not support the branch and Error(kInfeasible) when no counts
/// meet the constraints.
SummandPlan plan_summands(const SocleData& data, Branch branch);

/// `count` random forms of degree `degree` that raise the degree-`degree` span of M
/// by exactly `count`. Throws Error(kImpossible) if there is no room and
/// Error(kDegeneracyLimit) when random draws keep landing in the span.
std::vector<Form> complement_forms(const InverseSystemModule& M, int degree, int count,
                                   std::mt19937_64& rng, long bound = kDefaultCoefficientBound,
                                   int max_retries = kDefaultResampleLimit);

/// Assembles the inverse system the plan describes, drawing randomness from `seed`.
/// Throws Error(kNotAdmissible) unless classify reports an admissible verdict.
InverseSystemModule construct(const SocleData& data, std::uint64_t seed,
                              long bound = kDefaultCoefficientBound);

struct Certificate {
  SocleData input;
  Verdict verdict = Verdict::kUnknown;
  InverseSystemModule module;
  HVector bound;
  HVector achieved_h;
  std::vector<Integer> achieved_socle;
  std::uint64_t seed = 0;  // seed of the accepted draw
  int retries = 0;
};

/// construct, then recompute h and socle by exact rank; redraws until both match
/// (thm_a_bound, s). Throws Error(kDegeneracyLimit) with the last observation.
Certificate certified_construct(const SocleData& data, std::uint64_t seed,
                                int max_retries = kDefaultResampleLimit,
                                long bound = kDefaultCoefficientBound);

nlohmann::ordered_json to_json(const Certificate& cert);
nlohmann::ordered_json to_json(const SummandPlan& plan);

/// Best-effort evidence outside the theorem hypotheses: random power-sum modules
/// with the prescribed socle degrees. Any hit is a realizable h-vector for (r, s),
/// so it bounds the maximum from below; it certifies the bound only when equal.
struct SearchEvidence {
  int attempts = 0;
  int socle_matches = 0;
  std::optional<InverseSystemModule> best_module;
  HVector best_h;
  bool matches_bound = false;
};

SearchEvidence random_search(const SocleData& data, std::uint64_t seed, int attempts,
                             long bound = kDefaultCoefficientBound);

}  // namespace artinian
