#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artinian/integer.hpp"

namespace artinian {

/// Embedding dimension r and socle-vector s = (s_0, ..., s_e).
struct SocleData {
  int r = 0;
  std::vector<Integer> s;

  int e() const { return static_cast<int>(s.size()) - 1; }

  /// Throws Error(kInvalidInput) naming the first violated condition:
  /// r > 1, e > 1, s_0 = 0, entries non-negative, 1 <= s_e <= N(r, e).
  void validate() const;

  bool operator==(const SocleData&) const = default;
};

SocleData make_socle(int r, std::initializer_list<long> s);

/// r_d = N(r,d) - sum_{j >= d} N(r, j - d) s_j for d = 0..e.
std::vector<Integer> r_numbers(const SocleData& data);

/// The unique b in [1, e] with r_b >= 0 > r_{b-1}.
int critical_degree_b(const SocleData& data);

/// Entrywise min{N(r,i) - r_i, N(r,i)}.
HVector fl_bound(const SocleData& data);

/// h_0 = 1, h_1 = r, h_i = min{ growth(h_{i-1} - s_{i-1}, i-1), N(r,i) - r_i }.
/// Throws Error(kNegativeRemainder) when some s_i exceeds the bound entry h_i.
HVector thm_a_bound(const SocleData& data);

/// The two-part criterion for the Froberg-Laksov and sharper bounds to agree,
/// together with an independent entrywise comparison of the two vectors.
struct CoincidenceCheck {
  bool low_socle_zero = false;  // s_0 = ... = s_{b-2} = 0
  Integer threshold;            // N(r,b-1) - ((N(r,b) - r_b)_(b))^{-1}_{-1}
  bool within_threshold = false;
  bool predicate = false;
  bool entrywise_equal = false;
};

/// Evaluates the coincidence predicate and cross-checks it against the entrywise
/// comparison; a disagreement throws std::logic_error.
CoincidenceCheck bounds_coincide(const SocleData& data);

struct CriticalIndices {
  int c = 0;  // largest i with h_i = N(r, i)
  int t = 0;  // largest i where the Macaulay branch strictly wins
};

CriticalIndices c_t_indices(const SocleData& data);

/// Stanley's characterization for embedding dimension <= 3: symmetric, and the
/// first difference of the first half is an O-sequence. Rejects h_1 > 3.
bool gorenstein_r3_valid(const HVector& h);

struct RefutationWitness {
  HVector sequence;        // forced Gorenstein sequence of the top-degree generator
  std::vector<bool> forced;  // which entries of `sequence` are determined
  int pivot = 0;           // j*, the highest socle degree below e
  std::string reason;
};

/// Looks for the two documented obstructions to a bound H when the socle has a
/// single top generator: a symmetry clash, or (r <= 3) an invalid Gorenstein
/// sequence. Throws Error(kNotApplicable) when the pattern's preconditions fail.
std::optional<RefutationWitness> refute_bound(const SocleData& data, const HVector& bound);

enum class Verdict {
  kAdmissibleBI,
  kAdmissibleBII,
  kAdmissibleBIII,
  kAdmissibleThm34,
  kRefuted,
  kUnknown,
};

std::string_view to_string(Verdict v);
bool is_admissible(Verdict v);

struct ClassificationReport {
  SocleData input;
  std::vector<Integer> r_numbers;
  HVector fl_bound;
  HVector thm_a_bound;
  int b = 0;
  int c = 0;
  int t = 0;
  CoincidenceCheck coincidence;
  Verdict verdict = Verdict::kUnknown;
  std::vector<Verdict> applicable;  // every admissibility case whose hypothesis holds
  std::optional<RefutationWitness> refutation;
  std::vector<std::string> notes;
};

/// Throws Error(kNegativeRemainder) exactly when thm_a_bound does.
ClassificationReport classify(const SocleData& data);

}  // namespace artinian
