#include "artinian/binomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>

#include "artinian/error.hpp"

namespace artinian {

Integer binom(const Integer& n, long k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer ring_dim(int r, int d) {
  if (r < 1) throw Error(ErrorCode::kInvalidInput, "ring_dim requires r >= 1");
  if (d < 0) return 0;
  return binom(Integer(r - 1 + d), d);
}

namespace {

// Largest m >= k with C(m, k) <= n, for n >= 1 and k >= 1.
Integer largest_top(const Integer& n, int k) {
  Integer lo = k;
  Integer step = 1;
  while (binom(lo + step, k) <= n) {
    lo += step;
    step *= 2;
  }
  // C(lo, k) <= n < C(lo + step, k)
  Integer hi = lo + step;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (binom(mid, k) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

BinomialExpansion expand(const Integer& n, int i) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "expand requires n >= 1");
  if (i < 1) throw Error(ErrorCode::kInvalidInput, "expand requires i >= 1");

  BinomialExpansion out{n, i, {}};
  Integer rest = n;
  for (int k = i; k >= 1 && rest > 0; --k) {
    Integer top = largest_top(rest, k);
    rest -= binom(top, k);
    out.terms.push_back({std::move(top), k});
  }
  return out;
}

Integer shift(const BinomialExpansion& exp, int a) {
  if (a != 1 && a != -1)
    throw Error(ErrorCode::kInvalidInput, "shift only supports a = +1 or a = -1");
  Integer sum = 0;
  for (const auto& term : exp.terms) sum += binom(term.top + a, term.bottom + a);
  return sum;
}

Integer macaulay_growth(const Integer& h, int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidInput, "macaulay_growth requires d >= 1");
  if (h < 0) throw Error(ErrorCode::kInvalidInput, "macaulay_growth requires h >= 0");
  if (h == 0) return 0;
  return shift(expand(h, d), 1);
}

Integer macaulay_lower(const Integer& a, int b) {
  if (b <= 1) throw Error(ErrorCode::kInvalidInput, "macaulay_lower requires b > 1");
  if (a < 1) throw Error(ErrorCode::kInvalidInput, "macaulay_lower requires a >= 1");
  return shift(expand(a, b), -1);
}

bool is_o_sequence(const std::vector<Integer>& h) {
  if (h.empty() || h[0] != 1) return false;
  bool ended = false;
  for (std::size_t d = 1; d < h.size(); ++d) {
    if (h[d] < 0) return false;
    if (ended) {
      if (h[d] != 0) return false;
      continue;
    }
    if (h[d] == 0) {
      ended = true;
      continue;
    }
    // h_1 is unconstrained; from degree 1 on, Macaulay's bound applies.
    if (d >= 2 && h[d] > macaulay_growth(h[d - 1], static_cast<int>(d - 1))) return false;
  }
  return true;
}

namespace {

using Exponents = std::vector<int>;

std::vector<Exponents> monomials(int r, int d) {
  std::vector<Exponents> out;
  Exponents cur(r, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == r - 1) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[var] = a;
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

class OrderIdealEnumerator {
 public:
  OrderIdealEnumerator(int r, int e) : r_(r), e_(e) {
    for (int d = 0; d <= e; ++d) {
      basis_.push_back(monomials(r, d));
      std::map<Exponents, int> index;
      for (std::size_t k = 0; k < basis_.back().size(); ++k) index[basis_.back()[k]] = static_cast<int>(k);
      index_.push_back(std::move(index));
    }
  }

  std::set<HVector> run() {
    std::set<HVector> out;
    for (const auto& tail : suffixes(0, 1)) {
      HVector h{1};
      for (long v : tail) h.emplace_back(v);
      while (h.size() > 1 && h.back() == 0) h.pop_back();
      out.insert(std::move(h));
    }
    return out;
  }

 private:
  using Mask = std::uint32_t;

  // Degree-(d+1) monomials all of whose divisors lie in the chosen degree-d set.
  Mask candidates(int d, Mask chosen) const {
    Mask out = 0;
    const auto& next = basis_[d + 1];
    for (std::size_t k = 0; k < next.size(); ++k) {
      bool ok = true;
      Exponents m = next[k];
      for (int v = 0; v < r_ && ok; ++v) {
        if (m[v] == 0) continue;
        --m[v];
        ok = (chosen >> index_[d].at(m)) & 1u;
        ++m[v];
      }
      if (ok) out |= Mask{1} << k;
    }
    return out;
  }

  // Hilbert function values in degrees d+1..e reachable from the chosen degree-d set.
  const std::set<std::vector<long>>& suffixes(int d, Mask chosen) {
    auto key = std::make_pair(d, chosen);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::set<std::vector<long>> out;
    if (d == e_) {
      out.insert({});
    } else {
      Mask cand = candidates(d, chosen);
      if (d + 1 == e_) {
        for (int k = 0; k <= std::popcount(cand); ++k) out.insert({k});
      } else {
        // Walk every subset of the candidate mask.
        Mask sub = cand;
        while (true) {
          for (const auto& tail : suffixes(d + 1, sub)) {
            std::vector<long> seq{std::popcount(sub)};
            seq.insert(seq.end(), tail.begin(), tail.end());
            out.insert(std::move(seq));
          }
          if (sub == 0) break;
          sub = (sub - 1) & cand;
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  int r_;
  int e_;
  std::vector<std::vector<Exponents>> basis_;
  std::vector<std::map<Exponents, int>> index_;
  std::map<std::pair<int, Mask>, std::set<std::vector<long>>> memo_;
};

}  // namespace

std::set<HVector> enumerate_hilbert_functions(int r, int e) {
  if (r < 1 || r > 3) throw Error(ErrorCode::kInvalidInput, "enumeration supports 1 <= r <= 3");
  if (e < 0 || e > 4) throw Error(ErrorCode::kInvalidInput, "enumeration supports 0 <= e <= 4");
  return OrderIdealEnumerator(r, e).run();
}

std::set<HVector> o_sequences_up_to(int r, int e) {
  if (r < 1 || r > 3) throw Error(ErrorCode::kInvalidInput, "enumeration supports 1 <= r <= 3");
  if (e < 0 || e > 4) throw Error(ErrorCode::kInvalidInput, "enumeration supports 0 <= e <= 4");

  std::set<HVector> out;
  HVector cur{1};
  auto rec = [&](auto&& self, int d) -> void {
    if (d > e) {
      HVector h = cur;
      while (h.size() > 1 && h.back() == 0) h.pop_back();
      if (is_o_sequence(h)) out.insert(std::move(h));
      return;
    }
    Integer cap = d == 1 ? Integer(r) : ring_dim(r, d);
    for (Integer v = 0; v <= cap; ++v) {
      cur.push_back(v);
      self(self, d + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace artinian
