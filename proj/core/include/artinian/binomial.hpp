#pragma once

#include <set>
#include <vector>

#include "artinian/integer.hpp"

namespace artinian {

/// One binomial coefficient C(top, bottom) inside an i-binomial expansion.
struct BinomialTerm {
  Integer top;
  int bottom = 0;

  bool operator==(const BinomialTerm&) const = default;
};

/// The unique representation
///   n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j),  n_i > ... > n_j >= j >= 1.
struct BinomialExpansion {
  Integer target;
  int index = 0;
  std::vector<BinomialTerm> terms;

  bool operator==(const BinomialExpansion&) const = default;
};

/// C(n, k); zero when k < 0 or n < k.
Integer binom(const Integer& n, long k);

/// N(r, d) = C(r - 1 + d, d), the dimension of the degree-d forms in r variables.
Integer ring_dim(int r, int d);

/// Greedy i-binomial expansion of n. Requires n >= 1 and i >= 1.
BinomialExpansion expand(const Integer& n, int i);

/// Sum of C(top + a, bottom + a) over the terms. Only a = +1 and a = -1 are accepted.
Integer shift(const BinomialExpansion& exp, int a);

/// Largest legal successor of h in degree d (Macaulay's bound). Zero maps to zero.
Integer macaulay_growth(const Integer& h, int d);

/// Smallest s with a <= macaulay_growth(s, b - 1). Requires a >= 1 and b > 1.
Integer macaulay_lower(const Integer& a, int b);

/// True iff h is the Hilbert function of some standard graded artinian algebra.
/// Trailing zeros are read as the end of the algebra; a positive entry after a zero
/// is rejected.
bool is_o_sequence(const std::vector<Integer>& h);

/// Brute-force oracle: Hilbert functions (trailing zeros dropped) of all monomial
/// quotients of k[x_1..x_r], truncated at degree e. Every order ideal of monomials
/// of degree <= e containing 1 is enumerated. Accepts 1 <= r <= 3 and 0 <= e <= 4.
std::set<HVector> enumerate_hilbert_functions(int r, int e);

/// All sequences of length <= e + 1 with h_0 = 1, h_1 <= r and no trailing zeros that
/// is_o_sequence accepts. Candidates are bounded by N(r, i) only, so this set does
/// not depend on macaulay_growth for its enumeration.
std::set<HVector> o_sequences_up_to(int r, int e);

}  // namespace artinian
