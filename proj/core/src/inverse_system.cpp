#include "artinian/inverse_system.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "artinian/binomial.hpp"
#include "artinian/error.hpp"

namespace artinian {

InverseSystemModule::InverseSystemModule(int num_vars, std::vector<Generator> generators,
                                         nlohmann::ordered_json provenance,
                                         std::optional<std::uint64_t> seed)
    : num_vars_(num_vars),
      generators_(std::move(generators)),
      provenance_(std::move(provenance)),
      seed_(seed) {
  if (num_vars_ < 1) throw Error(ErrorCode::kInvalidInput, "module needs at least one variable");
  for (const auto& g : generators_) {
    if (g.form.num_vars() != num_vars_)
      throw Error(ErrorCode::kInvalidInput, "generator lives in a ring with a different number of variables");
    if (g.form.degree() != g.degree)
      throw Error(ErrorCode::kInvalidInput, "generator form is not homogeneous of its declared degree");
  }
  std::stable_sort(generators_.begin(), generators_.end(),
                   [](const Generator& a, const Generator& b) { return a.degree > b.degree; });
}

int InverseSystemModule::top_degree() const {
  return generators_.empty() ? -1 : generators_.front().degree;
}

std::vector<Form> InverseSystemModule::forms() const {
  std::vector<Form> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.form);
  return out;
}

namespace {

// For each degree-d monomial and each variable: where its partial lands in the
// degree-(d-1) basis and with which factor (0 when the variable is absent).
struct PartialTable {
  std::vector<std::vector<std::pair<std::size_t, int>>> entries;
  std::size_t target_size = 0;

  PartialTable(int r, int d) {
    const auto lower = monomial_basis(r, d - 1);
    target_size = lower.size();
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < lower.size(); ++k) index.emplace(lower[k], k);
    for (const auto& m : monomial_basis(r, d)) {
      std::vector<std::pair<std::size_t, int>> row(r, {0, 0});
      for (int v = 0; v < r; ++v) {
        if (m.exponents[v] == 0) continue;
        Monomial low = m;
        --low.exponents[v];
        row[v] = {index.at(low), m.exponents[v]};
      }
      entries.push_back(std::move(row));
    }
  }
};

void require_nonempty(const InverseSystemModule& M) {
  if (M.generators().empty()) throw Error(ErrorCode::kInvalidInput, "module has no generators");
}

// Walks from the top degree down to `stop`, reporting each degree's dimensions.
template <typename OnDegree>
RowEchelon walk_down(const InverseSystemModule& M, int stop, OnDegree&& on_degree) {
  const int r = M.num_vars();
  const int top = M.top_degree();
  const auto& gens = M.generators();
  auto gen = gens.begin();

  auto add_generators = [&](RowEchelon& ech, int c) {
    for (; gen != gens.end() && gen->degree == c; ++gen) {
      const auto coords = gen->form.coefficient_vector();
      ech.insert(std::span<const Rational>(coords));
    }
  };

  RowEchelon current(ring_dim(r, top).get_ui());
  add_generators(current, top);
  on_degree(top, current.rank(), std::size_t{0});

  for (int c = top - 1; c >= stop; --c) {
    PartialTable table(r, c + 1);
    RowEchelon next(table.target_size);
    for (const auto& row : current.rows()) {
      for (int v = 0; v < r; ++v) {
        std::vector<Integer> d(table.target_size, 0);
        bool any = false;
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (row[j] == 0) continue;
          const auto [target, factor] = table.entries[j][v];
          if (factor == 0) continue;
          d[target] += row[j] * factor;
          any = true;
        }
        if (any) next.insert(std::move(d));
      }
    }
    const std::size_t from_above = next.rank();
    add_generators(next, c);
    on_degree(c, next.rank(), from_above);
    current = std::move(next);
  }
  return current;
}

}  // namespace

GradedProfile graded_profile(const InverseSystemModule& M) {
  require_nonempty(M);
  const int top = M.top_degree();
  GradedProfile out;
  out.h.assign(top + 1, 0);
  out.socle.assign(top + 1, 0);
  out.from_above.assign(top + 1, 0);
  walk_down(M, 0, [&](int c, std::size_t dim, std::size_t above) {
    out.h[c] = static_cast<unsigned long>(dim);
    out.from_above[c] = static_cast<unsigned long>(above);
    out.socle[c] = out.h[c] - out.from_above[c];
  });
  out.socle[0] = 0;
  return out;
}

HVector h_vector(const InverseSystemModule& M) { return graded_profile(M).h; }

std::vector<Integer> socle_vector(const InverseSystemModule& M) { return graded_profile(M).socle; }

RowEchelon degree_span(const InverseSystemModule& M, int c) {
  if (c < 0) throw Error(ErrorCode::kInvalidInput, "degree must be non-negative");
  if (M.generators().empty() || c > M.top_degree())
    return RowEchelon(ring_dim(M.num_vars(), c).get_ui());
  return walk_down(M, c, [](int, std::size_t, std::size_t) {});
}

HVector h_power_sum(const Integer& m, int d, int r) {
  if (m < 1 || d < 1) throw Error(ErrorCode::kInvalidInput, "h_power_sum requires m >= 1 and d >= 1");
  HVector h;
  for (int s = 0; s <= d; ++s) h.push_back(std::min({m, ring_dim(r, s), ring_dim(r, d - s)}));
  return h;
}

PowerSumSpec::PowerSumSpec(std::vector<PowerSumTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidInput, "power-sum spec is empty");
  for (const auto& t : terms_)
    if (t.count < 1 || t.degree < 1)
      throw Error(ErrorCode::kInvalidInput, "power-sum terms need m_i >= 1 and d_i >= 1");
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const PowerSumTerm& a, const PowerSumTerm& b) { return a.degree < b.degree; });
}

CombinedHVector h_combined(const PowerSumSpec& spec, int r) {
  const int top = spec.terms().back().degree;
  std::vector<Integer> sums(top + 1, 0);
  for (const auto& term : spec.terms()) {
    const auto part = h_power_sum(term.count, term.degree, r);
    for (int s = 0; s <= term.degree; ++s) sums[s] += part[s];
  }
  CombinedHVector out;
  out.valid = true;
  for (const auto& term : spec.terms())
    out.valid = out.valid && sums[term.degree] <= ring_dim(r, term.degree);
  for (int s = 0; s <= top; ++s) out.h.push_back(std::min(ring_dim(r, s), sums[s]));
  return out;
}

std::uint64_t next_seed(std::uint64_t seed) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

InverseSystemModule realize_power_sums(const PowerSumSpec& spec, int r, std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  std::vector<Generator> gens;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& term : spec.terms()) {
    Form f(r, term.degree);
    for (const auto& L : random_linear_forms(r, static_cast<int>(term.count.get_si()), rng, bound))
      f += power_of_linear(L, term.degree);
    gens.push_back({term.degree, std::move(f)});
    terms.push_back({{"count", term.count.get_si()}, {"degree", term.degree}});
  }
  nlohmann::ordered_json prov = {{"kind", "power_sums"}, {"terms", terms}, {"coefficient_bound", bound}};
  return InverseSystemModule(r, std::move(gens), std::move(prov), seed);
}

PowerSumCertificate certify_power_sums(const PowerSumSpec& spec, int r, std::uint64_t seed,
                                       int max_resamples, long bound) {
  const auto expected = h_combined(spec, r);
  if (!expected.valid)
    throw Error(ErrorCode::kInvalidInput, "closed form does not apply: proviso fails for this spec");
  HVector last;
  for (int attempt = 0; attempt <= max_resamples; ++attempt) {
    auto module = realize_power_sums(spec, r, seed, bound);
    last = h_vector(module);
    if (last == expected.h) return {std::move(module), std::move(last), attempt};
    seed = next_seed(seed);
  }
  throw Error(ErrorCode::kDegeneracyLimit, "power sums stayed degenerate after " +
                                               std::to_string(max_resamples) + " resamples; last h = " +
                                               to_tuple(last) + ", expected " + to_tuple(expected.h));
}

nlohmann::ordered_json to_json(const InverseSystemModule& M) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : M.generators()) gens.push_back({{"degree", g.degree}, {"form", to_text(g.form)}});
  nlohmann::ordered_json doc;
  doc["num_vars"] = M.num_vars();
  doc["generators"] = std::move(gens);
  doc["provenance"] = M.provenance();
  doc["seed"] = M.seed() ? nlohmann::ordered_json(*M.seed()) : nlohmann::ordered_json(nullptr);
  return doc;
}

InverseSystemModule module_from_json(const nlohmann::ordered_json& doc) {
  auto fail = [](const std::string& where, const std::string& what) -> void {
    throw Error(ErrorCode::kParse, where + ": " + what);
  };
  if (!doc.is_object()) fail("$", "module document must be an object");
  if (!doc.contains("num_vars") || !doc["num_vars"].is_number_integer()) fail("$.num_vars", "missing integer");
  const int r = doc["num_vars"].get<int>();
  if (r < 1) fail("$.num_vars", "must be positive");
  if (!doc.contains("generators") || !doc["generators"].is_array()) fail("$.generators", "missing array");

  std::vector<Generator> gens;
  const auto& arr = doc["generators"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "$.generators[" + std::to_string(i) + "]";
    const auto& g = arr[i];
    if (!g.is_object()) fail(where, "must be an object");
    if (!g.contains("degree") || !g["degree"].is_number_integer()) fail(where + ".degree", "missing integer");
    if (!g.contains("form") || !g["form"].is_string()) fail(where + ".form", "missing string");
    const int degree = g["degree"].get<int>();
    if (degree < 0) fail(where + ".degree", "must be non-negative");
    try {
      gens.push_back({degree, parse_form(g["form"].get<std::string>(), r, degree)});
    } catch (const Error& err) {
      fail(where + ".form", err.what());
    }
  }

  nlohmann::ordered_json provenance = nullptr;
  if (doc.contains("provenance")) provenance = doc["provenance"];
  std::optional<std::uint64_t> seed;
  if (doc.contains("seed") && !doc["seed"].is_null()) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) fail("$.seed", "must be an integer");
    seed = doc["seed"].get<std::uint64_t>();
  }
  return InverseSystemModule(r, std::move(gens), std::move(provenance), seed);
}

}  // namespace artinian
