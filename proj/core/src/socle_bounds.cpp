#include "artinian/socle_bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "artinian/binomial.hpp"
#include "artinian/error.hpp"

namespace artinian {

void SocleData::validate() const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kInvalidInput, why); };
  if (r <= 1) fail("embedding dimension must satisfy r > 1 (got r = " + std::to_string(r) + ")");
  if (s.size() < 3) fail("socle degree must satisfy e > 1 (got e = " + std::to_string(e()) + ")");
  if (s[0] != 0) fail("s_0 must be 0");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0) fail("s_" + std::to_string(i) + " is negative");
  if (s.back() < 1) fail("s_e must be positive (e is the last socle degree)");
  if (s.back() > ring_dim(r, e()))
    fail("s_e = " + s.back().get_str() + " exceeds N(r,e) = " + ring_dim(r, e()).get_str());
}

SocleData make_socle(int r, std::initializer_list<long> s) {
  SocleData out{r, {}};
  for (long v : s) out.s.emplace_back(v);
  return out;
}

std::vector<Integer> r_numbers(const SocleData& data) {
  data.validate();
  const int e = data.e();
  std::vector<Integer> out;
  out.reserve(e + 1);
  for (int d = 0; d <= e; ++d) {
    Integer v = ring_dim(data.r, d);
    for (int j = d; j <= e; ++j) v -= ring_dim(data.r, j - d) * data.s[j];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

int critical_degree(const std::vector<Integer>& rn) {
  for (std::size_t b = 1; b < rn.size(); ++b)
    if (rn[b] >= 0 && rn[b - 1] < 0) return static_cast<int>(b);
  throw std::logic_error("r-numbers have no sign change");
}

// N(r,i) - r_i = sum_{j >= i} N(r, j - i) s_j
Integer derivative_cap(const SocleData& data, const std::vector<Integer>& rn, int i) {
  return ring_dim(data.r, i) - rn[i];
}

}  // namespace

int critical_degree_b(const SocleData& data) { return critical_degree(r_numbers(data)); }

HVector fl_bound(const SocleData& data) {
  const auto rn = r_numbers(data);
  HVector h;
  for (int i = 0; i <= data.e(); ++i) {
    Integer generic = ring_dim(data.r, i);
    h.push_back(std::min(Integer(generic - rn[i]), generic));
  }
  return h;
}

HVector thm_a_bound(const SocleData& data) {
  const auto rn = r_numbers(data);
  const int e = data.e();
  HVector h{1, data.r};
  bool capped = false;
  for (int i = 2; i <= e; ++i) {
    Integer remainder = h[i - 1] - data.s[i - 1];
    if (remainder < 0)
      throw Error(ErrorCode::kNegativeRemainder,
                  "s_" + std::to_string(i - 1) + " = " + data.s[i - 1].get_str() +
                      " exceeds h_" + std::to_string(i - 1) + " = " + h[i - 1].get_str());
    Integer grown = macaulay_growth(remainder, i - 1);
    Integer cap = derivative_cap(data, rn, i);
    if (capped && grown < cap)
      throw std::logic_error("bound left the N(r,i) - r_i regime at degree " + std::to_string(i));
    capped = capped || cap <= grown;
    h.push_back(std::min(grown, cap));
  }
  if (h[e] < data.s[e])
    throw Error(ErrorCode::kNegativeRemainder, "s_e = " + data.s[e].get_str() + " exceeds h_e = " +
                                                   h[e].get_str());
  return h;
}

CoincidenceCheck bounds_coincide(const SocleData& data) {
  const auto rn = r_numbers(data);
  const int b = critical_degree(rn);
  CoincidenceCheck out;

  out.low_socle_zero = true;
  for (int i = 0; i <= b - 2; ++i) out.low_socle_zero = out.low_socle_zero && data.s[i] == 0;

  // The lower Macaulay bound is read off the shifted expansion directly so that
  // b = 1 (where the expansion is in degree 1) is covered as well.
  Integer top = derivative_cap(data, rn, b);
  out.threshold = ring_dim(data.r, b - 1) - shift(expand(top, b), -1);
  out.within_threshold = data.s[b - 1] <= out.threshold;
  out.predicate = out.low_socle_zero && out.within_threshold;

  out.entrywise_equal = fl_bound(data) == thm_a_bound(data);
  if (out.predicate != out.entrywise_equal)
    throw std::logic_error("coincidence predicate disagrees with entrywise comparison for s = " +
                           to_tuple(data.s));
  return out;
}

namespace {

CriticalIndices indices_from(const SocleData& data, const std::vector<Integer>& rn, const HVector& h) {
  CriticalIndices out;
  const int e = data.e();
  for (int i = 0; i <= e; ++i)
    if (h[i] == ring_dim(data.r, i)) out.c = i;
  for (int i = 0; i <= e; ++i) {
    Integer grown;
    if (i == 0)
      grown = 1;
    else if (i == 1)
      grown = data.r;
    else
      grown = macaulay_growth(h[i - 1] - data.s[i - 1], i - 1);
    if (h[i] == grown && grown < derivative_cap(data, rn, i)) out.t = i;
  }
  return out;
}

}  // namespace

CriticalIndices c_t_indices(const SocleData& data) {
  return indices_from(data, r_numbers(data), thm_a_bound(data));
}

bool gorenstein_r3_valid(const HVector& h) {
  if (h.size() >= 2 && h[1] > 3)
    throw Error(ErrorCode::kInvalidInput, "Gorenstein characterization is only used for h_1 <= 3");
  if (h.empty() || h.back() != 1 || !is_o_sequence(h)) return false;
  const std::size_t e = h.size() - 1;
  for (std::size_t i = 0; i <= e; ++i)
    if (h[i] != h[e - i]) return false;
  HVector diff{h[0]};
  for (std::size_t i = 1; i <= (e + 1) / 2; ++i) {
    Integer d = h[i] - h[i - 1];
    if (d < 0) return false;
    diff.push_back(std::move(d));
  }
  return is_o_sequence(diff);
}

std::optional<RefutationWitness> refute_bound(const SocleData& data, const HVector& bound) {
  data.validate();
  const int e = data.e();
  auto not_applicable = [](const std::string& why) { throw Error(ErrorCode::kNotApplicable, why); };
  if (static_cast<int>(bound.size()) != e + 1) not_applicable("bound length differs from e + 1");
  if (data.s[e] != 1) not_applicable("needs a single socle generator in the top degree");

  int pivot = -1;
  for (int i = e - 1; i >= 0 && pivot < 0; --i)
    if (data.s[i] > 0) pivot = i;
  if (pivot < 0) not_applicable("no socle below the top degree");
  if (bound[pivot] != ring_dim(data.r, pivot))
    not_applicable("bound is not generic in degree " + std::to_string(pivot));

  RefutationWitness w;
  w.pivot = pivot;
  w.sequence.assign(e + 1, 0);
  w.forced.assign(e + 1, false);
  for (int i = pivot + 1; i <= e; ++i) {
    w.sequence[i] = bound[i];
    w.forced[i] = true;
  }
  w.sequence[pivot] = bound[pivot] - data.s[pivot];
  w.forced[pivot] = true;

  for (int i = pivot; i <= e - i; ++i) {
    if (!w.forced[e - i] || w.sequence[i] == w.sequence[e - i]) continue;
    w.reason = "symmetry forces g_" + std::to_string(i) + " = g_" + std::to_string(e - i) + " = " +
               w.sequence[e - i].get_str() + " but the socle leaves only " + w.sequence[i].get_str();
    for (int k = 0; k < pivot; ++k)
      if (e - k >= pivot) {
        w.sequence[k] = w.sequence[e - k];
        w.forced[k] = true;
      }
    return w;
  }

  bool complete = true;
  for (int i = 0; i < pivot; ++i) {
    if (e - i >= pivot) {
      w.sequence[i] = w.sequence[e - i];
      w.forced[i] = true;
    } else {
      complete = false;
    }
  }

  if (data.r == 3 && complete && w.sequence[1] <= 3 && !gorenstein_r3_valid(w.sequence)) {
    w.reason = "forced Gorenstein sequence " + to_tuple(w.sequence) +
               " violates the embedding-dimension-3 characterization";
    return w;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kAdmissibleBI: return "ADMISSIBLE_B_I";
    case Verdict::kAdmissibleBII: return "ADMISSIBLE_B_II";
    case Verdict::kAdmissibleBIII: return "ADMISSIBLE_B_III";
    case Verdict::kAdmissibleThm34: return "ADMISSIBLE_THM34";
    case Verdict::kRefuted: return "REFUTED";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

bool is_admissible(Verdict v) {
  return v == Verdict::kAdmissibleBI || v == Verdict::kAdmissibleBII ||
         v == Verdict::kAdmissibleBIII || v == Verdict::kAdmissibleThm34;
}

ClassificationReport classify(const SocleData& data) {
  ClassificationReport rep;
  rep.input = data;
  rep.r_numbers = r_numbers(data);
  rep.fl_bound = fl_bound(data);
  rep.thm_a_bound = thm_a_bound(data);
  rep.b = critical_degree(rep.r_numbers);
  const auto idx = indices_from(data, rep.r_numbers, rep.thm_a_bound);
  rep.c = idx.c;
  rep.t = idx.t;
  rep.coincidence = bounds_coincide(data);

  const int r = data.r;
  const auto& h = rep.thm_a_bound;
  const auto& s = data.s;
  const int b = rep.b, c = rep.c, t = rep.t;

  if (c == t + 1) rep.applicable.push_back(Verdict::kAdmissibleBI);
  if (c == t && s[c] <= std::max(Integer(ring_dim(r, c) - h[c + 1]), Integer(0)))
    rep.applicable.push_back(Verdict::kAdmissibleBII);
  if (c <= t - 1 && s[c] >= ring_dim(r, c) - c) rep.applicable.push_back(Verdict::kAdmissibleBIII);
  if (rep.coincidence.predicate) {
    Integer slack = ring_dim(r, b - 1) - derivative_cap(data, rep.r_numbers, b);
    if (s[b - 1] <= std::max(slack, Integer(0))) rep.applicable.push_back(Verdict::kAdmissibleThm34);
  }

  if (s[1] > 0)
    rep.notes.push_back("s_1 > 0: in degrees above 1 only r - s_1 variables are effectively in play; "
                        "the bound is reported without that reduction");

  if (!rep.applicable.empty()) {
    rep.verdict = rep.applicable.front();
    return rep;
  }

  try {
    rep.refutation = refute_bound(data, h);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kNotApplicable) throw;
    rep.notes.push_back(std::string("refutation pattern not applicable: ") + err.what());
  }
  rep.verdict = rep.refutation ? Verdict::kRefuted : Verdict::kUnknown;
  return rep;
}

}  // namespace artinian
