#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artinian/integer.hpp"

namespace artinian {

/// Exponent vector of a monomial y_1^a_1 ... y_r^a_r in the dual ring S.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  int num_vars() const { return static_cast<int>(exponents.size()); }

  auto operator<=>(const Monomial&) const = default;
};

/// All monomials of degree d in r variables, in descending lexicographic order
/// (y_1^d first). This order fixes coefficient-vector coordinates and the text format.
std::vector<Monomial> monomial_basis(int r, int d);

/// Homogeneous polynomial with exact rational coefficients. Zero coefficients are
/// never stored.
class Form {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  Form(int num_vars, int degree);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  /// Adds c to the coefficient of m; m must have the form's degree.
  void add_term(const Monomial& m, const Rational& c);

  Form& operator+=(const Form& other);
  Form& operator*=(const Rational& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }

  /// Coordinates over monomial_basis(num_vars, degree).
  std::vector<Rational> coefficient_vector() const;

  bool operator==(const Form&) const = default;

 private:
  int num_vars_;
  int degree_;
  Terms terms_;
};

/// L = b_1 y_1 + ... + b_r y_r.
struct LinearForm {
  std::vector<Rational> coefficients;

  int num_vars() const { return static_cast<int>(coefficients.size()); }
  bool is_zero() const;
};

/// Multinomial expansion of L^d. Rejects d < 1 and the zero form.
Form power_of_linear(const LinearForm& L, int d);

/// Partial derivative with respect to y_{var+1} (var is 0-based). Degree-0 input
/// yields the zero form of degree 0.
Form differentiate(const Form& f, int var);

/// All partial derivatives of order `order` of f, one per multi-index of that
/// degree, in monomial_basis order.
std::vector<Form> partials(const Form& f, int order);

/// Incrementally maintained row-echelon basis over the integers. Rows are kept
/// primitive (content divided out), so no fractions are ever formed.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  /// Reduces `row` against the basis; returns true when it was independent.
  bool insert(std::vector<Integer> row);
  bool insert(std::span<const Rational> row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

  /// True when `row` lies outside the current span. The basis is not modified.
  bool is_independent(std::vector<Integer> row) const;

 private:
  void reduce(std::vector<Integer>& row) const;

  std::size_t columns_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Exact rank over the rationals of a rectangular matrix given by rows.
std::size_t rank_exact(const std::vector<std::vector<Rational>>& rows);

/// Dimension of the span in S_c of every order-(deg F - c) partial derivative of
/// every generator F with deg F >= c.
std::size_t derivative_space_dim(const std::vector<Form>& generators, int c);

inline constexpr long kDefaultCoefficientBound = 50;

/// m linear forms with integer coefficients drawn uniformly from [-bound, bound];
/// an all-zero draw is redrawn. Rejects bound < 1.
std::vector<LinearForm> random_linear_forms(int r, int m, std::mt19937_64& rng,
                                            long bound = kDefaultCoefficientBound);

/// Dense random form of degree d with integer coefficients in [-bound, bound].
Form random_form(int r, int d, std::mt19937_64& rng, long bound = kDefaultCoefficientBound);

/// Text format: terms `coeff*y1^a1*y2^a2...` in monomial_basis order, joined by
/// `+` / `-`, with coefficients printed as p or p/q. The zero form prints as "0".
std::string to_text(const Form& f);

/// Parses the text format. Also accepts omitted unit coefficients, whitespace and
/// explicit `^1` exponents. `degree` is required only to type the zero form; pass
/// -1 to infer it from the terms. Throws Error(kParse) with the offending offset.
Form parse_form(std::string_view text, int num_vars, int degree = -1);

}  // namespace artinian
