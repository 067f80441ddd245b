#include "artinian/constructor.hpp"

#include <algorithm>
#include <numeric>

#include "artinian/binomial.hpp"
#include "artinian/error.hpp"

namespace artinian {

std::string_view to_string(Branch b) { return b == Branch::kThm34 ? "THM34" : "THM_B"; }
std::string_view to_string(Route r) { return r == Route::kGeneric ? "generic" : "power_sums"; }

namespace {

bool contains(const std::vector<Verdict>& v, Verdict x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Integer sum_of(const std::vector<Integer>& v) { return std::accumulate(v.begin(), v.end(), Integer(0)); }

SummandPlan generic_plan(const SocleData& data, SummandPlan plan, int threshold) {
  plan.route = Route::kGeneric;
  plan.threshold = threshold;
  for (int h = 1; h <= data.e(); ++h)
    if (data.s[h] > 0) plan.counts[h].assign(data.s[h].get_ui(), ring_dim(data.r, h));
  return plan;
}

void check_plan(const SocleData& data, const SummandPlan& plan, const HVector& bound) {
  if (plan.route == Route::kGeneric) return;
  const int r = data.r;
  for (const auto& [h, counts] : plan.counts)
    for (const auto& m : counts)
      if (m < ring_dim(r, h - plan.threshold) || m > ring_dim(r, h - plan.threshold + 1))
        throw std::logic_error("summand count outside [N(r,h-θ), N(r,h-θ+1)] in degree " + std::to_string(h));
  const int q = plan.threshold - 1;
  Integer fresh = plan.complement_degree == q ? plan.complement_count : Integer(0);
  if (auto it = plan.pure_powers.find(q); it != plan.pure_powers.end()) fresh += it->second;
  if (plan.critical_derivatives + fresh != bound[q])
    throw std::logic_error("planned derivatives in the critical degree miss the bound entry");
}

}  // namespace

SummandPlan plan_summands(const SocleData& data, Branch branch) {
  const auto rep = classify(data);
  const int r = data.r;
  const auto& s = data.s;
  const auto& H = rep.thm_a_bound;

  SummandPlan plan;
  plan.branch = branch;

  if (branch == Branch::kThm34) {
    if (!contains(rep.applicable, Verdict::kAdmissibleThm34))
      throw Error(ErrorCode::kNotAdmissible, "critical-degree construction does not apply to s = " + to_tuple(s));
    plan.verdict = Verdict::kAdmissibleThm34;
    Integer slack = ring_dim(r, rep.b - 1) - (ring_dim(r, rep.b) - rep.r_numbers[rep.b]);
    if (slack <= 0) {
      auto out = generic_plan(data, plan, rep.b);
      check_plan(data, out, H);
      return out;
    }
    plan.threshold = rep.b;
  } else {
    const Verdict cases[] = {Verdict::kAdmissibleBI, Verdict::kAdmissibleBII, Verdict::kAdmissibleBIII};
    auto it = std::find_if(std::begin(cases), std::end(cases), [&](Verdict v) { return contains(rep.applicable, v); });
    if (it == std::end(cases))
      throw Error(ErrorCode::kNotAdmissible, "no case of the general construction applies to s = " + to_tuple(s));
    plan.verdict = *it;
    const int c = rep.c, t = rep.t;
    if (plan.verdict == Verdict::kAdmissibleBI ||
        (plan.verdict == Verdict::kAdmissibleBII && ring_dim(r, c) <= H[c + 1])) {
      auto out = generic_plan(data, plan, rep.b);
      check_plan(data, out, H);
      return out;
    }
    plan.threshold = t + 1;
    if (plan.verdict == Verdict::kAdmissibleBIII)
      for (int i = c + 1; i <= t; ++i)
        if (s[i] > 0) plan.pure_powers[i] = s[i];
  }

  plan.route = Route::kPowerSums;
  const int theta = plan.threshold;
  const int q = theta - 1;
  for (int i = 1; i < q; ++i)
    if (s[i] > 0 && !(plan.verdict == Verdict::kAdmissibleBIII && i >= rep.c))
      throw Error(ErrorCode::kInfeasible, "socle in degree " + std::to_string(i) + " below the construction's reach");

  Integer baseline = 0;
  Integer capacity = 0;
  for (int h = theta; h <= data.e(); ++h) {
    if (s[h] == 0) continue;
    plan.counts[h].assign(s[h].get_ui(), ring_dim(r, h - theta));
    baseline += s[h] * ring_dim(r, h - theta);
    capacity += s[h] * (ring_dim(r, h - theta + 1) - ring_dim(r, h - theta));
  }
  Integer deficit = H[q] - s[q] - baseline;
  if (deficit < 0 || deficit > capacity)
    throw Error(ErrorCode::kInfeasible, "need " + deficit.get_str() + " extra derivatives in degree " +
                                            std::to_string(q) + ", capacity " + capacity.get_str());

  // Highest degree first; within a degree, earliest generator first.
  for (auto& [h, counts] : plan.counts) {
    const Integer room = ring_dim(r, h - theta + 1) - ring_dim(r, h - theta);
    for (auto& m : counts) {
      if (deficit == 0) break;
      Integer raise = std::min(room, deficit);
      m += raise;
      deficit -= raise;
    }
  }
  plan.critical_derivatives = H[q] - s[q];

  if (plan.verdict == Verdict::kAdmissibleBIII) {
    plan.complement_degree = rep.c;
    plan.complement_count = s[rep.c];
  } else {
    plan.complement_degree = q;
    plan.complement_count = s[q];
  }
  check_plan(data, plan, H);
  return plan;
}

std::vector<Form> complement_forms(const InverseSystemModule& M, int degree, int count, std::mt19937_64& rng,
                                   long bound, int max_retries) {
  if (count < 0) throw Error(ErrorCode::kInvalidInput, "count must be non-negative");
  auto span = degree_span(M, degree);
  const Integer room = ring_dim(M.num_vars(), degree) - static_cast<unsigned long>(span.rank());
  if (room < count)
    throw Error(ErrorCode::kImpossible, "degree-" + std::to_string(degree) + " span has room for " + room.get_str() +
                                            " forms, " + std::to_string(count) + " requested");
  std::vector<Form> out;
  for (int k = 0; k < count; ++k) {
    bool placed = false;
    for (int attempt = 0; attempt <= max_retries && !placed; ++attempt) {
      Form f = random_form(M.num_vars(), degree, rng, bound);
      const auto coords = f.coefficient_vector();
      if (span.insert(std::span<const Rational>(coords))) {
        out.push_back(std::move(f));
        placed = true;
      }
    }
    if (!placed) throw Error(ErrorCode::kDegeneracyLimit, "random complement forms stayed inside the span");
  }
  return out;
}

nlohmann::ordered_json to_json(const SummandPlan& plan) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [h, v] : plan.counts) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& m : v) arr.push_back(m.get_si());
    counts[std::to_string(h)] = std::move(arr);
  }
  nlohmann::ordered_json pure = nlohmann::ordered_json::object();
  for (const auto& [h, n] : plan.pure_powers) pure[std::to_string(h)] = n.get_si();
  return {{"branch", to_string(plan.branch)},
          {"route", to_string(plan.route)},
          {"verdict", to_string(plan.verdict)},
          {"threshold", plan.threshold},
          {"summand_counts", std::move(counts)},
          {"pure_powers", std::move(pure)},
          {"complement_degree", plan.complement_degree},
          {"complement_count", plan.complement_count.get_si()},
          {"critical_derivatives", plan.critical_derivatives.get_si()}};
}

InverseSystemModule construct(const SocleData& data, std::uint64_t seed, long bound) {
  const auto rep = classify(data);
  if (!is_admissible(rep.verdict))
    throw Error(ErrorCode::kNotAdmissible, "verdict " + std::string(to_string(rep.verdict)) + " for s = " +
                                               to_tuple(data.s));
  const Branch branch = rep.verdict == Verdict::kAdmissibleThm34 ? Branch::kThm34 : Branch::kThmB;
  const auto plan = plan_summands(data, branch);
  const int r = data.r;

  std::mt19937_64 rng(seed);
  std::vector<Generator> gens;
  for (const auto& [h, counts] : plan.counts) {
    for (const auto& m : counts) {
      Form f(r, h);
      for (const auto& L : random_linear_forms(r, static_cast<int>(m.get_si()), rng, bound))
        f += power_of_linear(L, h);
      gens.push_back({h, std::move(f)});
    }
  }
  for (const auto& [h, n] : plan.pure_powers)
    for (unsigned long k = 0; k < n.get_ui(); ++k)
      gens.push_back({h, power_of_linear(random_linear_forms(r, 1, rng, bound).front(), h)});

  nlohmann::ordered_json prov = {{"kind", "certified_construction"},
                                 {"r", r},
                                 {"socle", to_tuple(data.s)},
                                 {"plan", to_json(plan)},
                                 {"coefficient_bound", bound}};
  if (plan.complement_count > 0) {
    InverseSystemModule partial(r, gens);
    for (auto& f : complement_forms(partial, plan.complement_degree,
                                    static_cast<int>(plan.complement_count.get_si()), rng, bound))
      gens.push_back({plan.complement_degree, std::move(f)});
  }
  return InverseSystemModule(r, std::move(gens), std::move(prov), seed);
}

Certificate certified_construct(const SocleData& data, std::uint64_t seed, int max_retries, long bound) {
  const auto rep = classify(data);
  GradedProfile last;
  std::uint64_t current = seed;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    auto module = construct(data, current, bound);
    last = graded_profile(module);
    if (last.h == rep.thm_a_bound && last.socle == data.s)
      return Certificate{data, rep.verdict, std::move(module), rep.thm_a_bound, last.h, last.socle, current, attempt};
    current = next_seed(current);
  }
  throw Error(ErrorCode::kDegeneracyLimit, "no certified construction after " + std::to_string(max_retries) +
                                               " retries; last h = " + to_tuple(last.h) + ", socle = " +
                                               to_tuple(last.socle) + ", wanted h = " + to_tuple(rep.thm_a_bound));
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  auto vec = [](const std::vector<Integer>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(x.get_si());
    return a;
  };
  return {{"input", {{"r", cert.input.r}, {"s", vec(cert.input.s)}}},
          {"verdict", to_string(cert.verdict)},
          {"bound", vec(cert.bound)},
          {"achieved_h", vec(cert.achieved_h)},
          {"achieved_socle", vec(cert.achieved_socle)},
          {"seed", cert.seed},
          {"retries", cert.retries}};
}

SearchEvidence random_search(const SocleData& data, std::uint64_t seed, int attempts, long bound) {
  data.validate();
  std::optional<HVector> target;
  try {
    target = thm_a_bound(data);
  } catch (const Error&) {
  }
  SearchEvidence ev;
  Integer best_total = -1;
  std::uint64_t current = seed;
  for (int a = 0; a < attempts; ++a, current = next_seed(current)) {
    std::mt19937_64 rng(current);
    std::vector<Generator> gens;
    for (int h = 1; h <= data.e(); ++h) {
      if (data.s[h] == 0) continue;
      std::uniform_int_distribution<long> count(1, ring_dim(data.r, h).get_si());
      for (unsigned long k = 0; k < data.s[h].get_ui(); ++k) {
        Form f(data.r, h);
        for (const auto& L : random_linear_forms(data.r, static_cast<int>(count(rng)), rng, bound))
          f += power_of_linear(L, h);
        gens.push_back({h, std::move(f)});
      }
    }
    InverseSystemModule module(data.r, std::move(gens), {{"kind", "random_search"}}, current);
    ++ev.attempts;
    const auto prof = graded_profile(module);
    if (prof.socle != data.s || prof.h.size() < 2 || prof.h[1] != data.r) continue;
    ++ev.socle_matches;
    const Integer total = sum_of(prof.h);
    if (total > best_total) {
      best_total = total;
      ev.best_h = prof.h;
      ev.best_module.emplace(std::move(module));
    }
  }
  ev.matches_bound = target && ev.best_module && ev.best_h == *target;
  return ev;
}

}  // namespace artinian
