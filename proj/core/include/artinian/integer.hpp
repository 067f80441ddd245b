#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace artinian {

/// Arbitrary-precision integer used for every dimension count.
using Integer = mpz_class;
/// Exact rational standing in for a characteristic-zero ground field.
using Rational = mpq_class;

/// A finite sequence of vector-space dimensions h_0..h_e.
using HVector = std::vector<Integer>;

inline HVector make_hvector(std::initializer_list<long> values) {
  HVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

/// Renders a vector in tuple notation, e.g. "(1,3,6,10)".
std::string to_tuple(const std::vector<Integer>& v);

}  // namespace artinian
