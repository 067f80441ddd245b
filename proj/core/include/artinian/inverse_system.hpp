#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "artinian/integer.hpp"
#include "artinian/polyring.hpp"

namespace artinian {

struct Generator {
  int degree = 0;
  Form form;

  bool operator==(const Generator&) const = default;
};

/// The R-submodule M of S generated by a list of forms; R/Ann(M) is the algebra it
/// describes. Generators are kept sorted by degree, highest first.
class InverseSystemModule {
 public:
  InverseSystemModule(int num_vars, std::vector<Generator> generators,
                      nlohmann::ordered_json provenance = nullptr,
                      std::optional<std::uint64_t> seed = std::nullopt);

  int num_vars() const { return num_vars_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const nlohmann::ordered_json& provenance() const { return provenance_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  int top_degree() const;

  /// The bare forms, in canonical order.
  std::vector<Form> forms() const;

  bool operator==(const InverseSystemModule&) const = default;

 private:
  int num_vars_;
  std::vector<Generator> generators_;
  nlohmann::ordered_json provenance_;
  std::optional<std::uint64_t> seed_;
};

/// Per-degree dimensions of M_c and of R_1 o M_{c+1} (first partials of the part
/// one degree up), computed by exact rank.
struct GradedProfile {
  HVector h;
  std::vector<Integer> socle;
  std::vector<Integer> from_above;
};

/// Walks down from the top degree: M_c = R_1 o M_{c+1} + <generators of degree c>.
GradedProfile graded_profile(const InverseSystemModule& M);

/// h_c = dim M_c for c = 0..top degree.
HVector h_vector(const InverseSystemModule& M);

/// s_c = dim M_c - dim(R_1 o M_{c+1}); s_0 is reported as 0.
std::vector<Integer> socle_vector(const InverseSystemModule& M);

/// Echelon basis of M_c, the degree-c part of M.
RowEchelon degree_span(const InverseSystemModule& M, int c);

/// Closed form for the generic Gorenstein h-vector of a sum of m d-th powers:
/// h_s = min{m, N(r,s), N(r,d-s)}.
HVector h_power_sum(const Integer& m, int d, int r);

struct PowerSumTerm {
  Integer count;  // m_i, number of powers
  int degree = 0;  // d_i

  bool operator==(const PowerSumTerm&) const = default;
};

/// Summands (m_i, d_i) sorted by degree ascending.
class PowerSumSpec {
 public:
  explicit PowerSumSpec(std::vector<PowerSumTerm> terms);
  const std::vector<PowerSumTerm>& terms() const { return terms_; }

 private:
  std::vector<PowerSumTerm> terms_;
};

struct CombinedHVector {
  HVector h;
  /// Whether sum_i h_s(m_i, d_i) <= N(r, s) holds at every s in {d_1, ..., d_n}.
  /// When false the closed form is not claimed to be the generic h-vector.
  bool valid = false;
};

CombinedHVector h_combined(const PowerSumSpec& spec, int r);

inline constexpr int kDefaultResampleLimit = 5;

/// Deterministic successor seed for resampling.
std::uint64_t next_seed(std::uint64_t seed);

/// Realizes each spec term as F_i = sum of m_i powers of random linear forms.
InverseSystemModule realize_power_sums(const PowerSumSpec& spec, int r, std::uint64_t seed,
                                       long bound = kDefaultCoefficientBound);

struct PowerSumCertificate {
  InverseSystemModule module;
  HVector h;
  int resamples = 0;
};

/// Draws power sums until the rank-computed h-vector equals h_combined; requires
/// the spec's proviso to hold. Throws Error(kDegeneracyLimit) after
/// `max_resamples` failed redraws.
PowerSumCertificate certify_power_sums(const PowerSumSpec& spec, int r, std::uint64_t seed,
                                       int max_resamples = kDefaultResampleLimit,
                                       long bound = kDefaultCoefficientBound);

/// {num_vars, generators: [{degree, form}], provenance, seed}
nlohmann::ordered_json to_json(const InverseSystemModule& M);
/// Throws Error(kParse) naming the offending location.
InverseSystemModule module_from_json(const nlohmann::ordered_json& doc);

}  // namespace artinian
