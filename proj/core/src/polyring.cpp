#include "artinian/polyring.hpp"

#include <algorithm>
#include <numeric>

#include "artinian/binomial.hpp"
#include "artinian/error.hpp"

namespace artinian {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::vector<Monomial> monomial_basis(int r, int d) {
  if (r < 1) throw Error(ErrorCode::kInvalidInput, "monomial_basis requires r >= 1");
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur{std::vector<int>(r, 0)};
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == r - 1) {
      cur.exponents[var] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur.exponents[var] = a;
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

Form::Form(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 1) throw Error(ErrorCode::kInvalidInput, "a form needs at least one variable");
  if (degree < 0) throw Error(ErrorCode::kInvalidInput, "form degree must be non-negative");
}

Rational Form::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Monomial& m, const Rational& c) {
  if (m.num_vars() != num_vars_ || m.degree() != degree_)
    throw Error(ErrorCode::kInvalidInput, "monomial does not match the form's ring or degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Form& Form::operator+=(const Form& other) {
  if (other.num_vars_ != num_vars_ || other.degree_ != degree_)
    throw Error(ErrorCode::kInvalidInput, "adding forms of different shape");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& [m, coeff] : terms_) coeff *= k;
  return *this;
}

std::vector<Rational> Form::coefficient_vector() const {
  const auto basis = monomial_basis(num_vars_, degree_);
  std::vector<Rational> out(basis.size());
  // Terms and basis share the same descending order.
  auto it = terms_.begin();
  for (std::size_t k = 0; k < basis.size() && it != terms_.end(); ++k) {
    if (basis[k] == it->first) {
      out[k] = it->second;
      ++it;
    }
  }
  return out;
}

bool LinearForm::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; });
}

namespace {

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Form power_of_linear(const LinearForm& L, int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidInput, "power_of_linear requires d >= 1");
  if (L.num_vars() < 1 || L.is_zero())
    throw Error(ErrorCode::kInvalidInput, "cannot raise the zero linear form to a power");

  const int r = L.num_vars();
  // Powers of each coefficient are reused across monomials.
  std::vector<std::vector<Rational>> pow(r);
  for (int k = 0; k < r; ++k) {
    pow[k].resize(d + 1);
    for (int e = 0; e <= d; ++e) pow[k][e] = power(L.coefficients[k], e);
  }
  const Integer top = factorial(d);
  Form out(r, d);
  for (const auto& m : monomial_basis(r, d)) {
    Rational c = top;
    for (int k = 0; k < r; ++k) {
      if (pow[k][m.exponents[k]] == 0) {
        c = 0;
        break;
      }
      c *= pow[k][m.exponents[k]];
      c /= factorial(m.exponents[k]);
    }
    out.add_term(m, c);
  }
  return out;
}

Form differentiate(const Form& f, int var) {
  if (var < 0 || var >= f.num_vars()) throw Error(ErrorCode::kInvalidInput, "variable index out of range");
  if (f.degree() == 0) return Form(f.num_vars(), 0);
  Form out(f.num_vars(), f.degree() - 1);
  for (const auto& [m, c] : f.terms()) {
    const int a = m.exponents[var];
    if (a == 0) continue;
    Monomial lowered = m;
    --lowered.exponents[var];
    out.add_term(lowered, c * a);
  }
  return out;
}

std::vector<Form> partials(const Form& f, int order) {
  if (order < 0) throw Error(ErrorCode::kInvalidInput, "derivative order must be non-negative");
  std::vector<Form> out;
  if (order > f.degree()) return out;
  const int r = f.num_vars();
  for (const auto& alpha : monomial_basis(r, order)) {
    Form d(r, f.degree() - order);
    for (const auto& [m, c] : f.terms()) {
      Rational coeff = c;
      Monomial lowered = m;
      bool vanishes = false;
      for (int k = 0; k < r && !vanishes; ++k) {
        const int a = m.exponents[k], b = alpha.exponents[k];
        if (a < b) {
          vanishes = true;
          break;
        }
        // falling factorial a (a-1) ... (a-b+1)
        for (int j = 0; j < b; ++j) coeff *= a - j;
        lowered.exponents[k] = a - b;
      }
      if (!vanishes) d.add_term(lowered, coeff);
    }
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

void make_primitive(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row) {
    if (v == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : row)
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::vector<Integer> clear_denominators(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& v : row) out.push_back(Integer(v.get_num() * (l / v.get_den())));
  return out;
}

}  // namespace

void RowEchelon::reduce(std::vector<Integer>& row) const {
  Integer g, a, b;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p] == 0) continue;
    const auto& basis = rows_[k];
    mpz_gcd(g.get_mpz_t(), row[p].get_mpz_t(), basis[p].get_mpz_t());
    a = basis[p] / g;
    b = row[p] / g;
    // Basis row k is zero left of p, so only the scaling reaches those columns.
    if (a != 1)
      for (std::size_t j = 0; j < p; ++j)
        if (row[j] != 0) row[j] *= a;
    for (std::size_t j = p; j < columns_; ++j) {
      row[j] *= a;
      if (basis[j] != 0) row[j] -= b * basis[j];
    }
    make_primitive(row);
  }
}

bool RowEchelon::insert(std::vector<Integer> row) {
  if (row.size() != columns_) throw Error(ErrorCode::kInvalidInput, "row length does not match column count");
  reduce(row);
  auto nz = std::find_if(row.begin(), row.end(), [](const Integer& v) { return v != 0; });
  if (nz == row.end()) return false;
  const auto pivot = static_cast<std::size_t>(nz - row.begin());
  if (*nz < 0)
    for (auto& v : row) v = -v;
  make_primitive(row);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto at = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + at, std::move(row));
  return true;
}

bool RowEchelon::insert(std::span<const Rational> row) { return insert(clear_denominators(row)); }

bool RowEchelon::is_independent(std::vector<Integer> row) const {
  if (row.size() != columns_) throw Error(ErrorCode::kInvalidInput, "row length does not match column count");
  reduce(row);
  return std::any_of(row.begin(), row.end(), [](const Integer& v) { return v != 0; });
}

std::size_t rank_exact(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  RowEchelon ech(rows.front().size());
  for (const auto& row : rows) {
    if (row.size() != ech.columns()) throw Error(ErrorCode::kInvalidInput, "rank_exact needs a rectangular matrix");
    ech.insert(std::span<const Rational>(row));
  }
  return ech.rank();
}

std::size_t derivative_space_dim(const std::vector<Form>& generators, int c) {
  if (c < 0) throw Error(ErrorCode::kInvalidInput, "degree must be non-negative");
  if (generators.empty()) return 0;
  const int r = generators.front().num_vars();
  RowEchelon ech(static_cast<std::size_t>(ring_dim(r, c).get_ui()));
  for (const auto& f : generators) {
    if (f.num_vars() != r) throw Error(ErrorCode::kInvalidInput, "generators live in different rings");
    if (f.degree() < c) continue;
    for (const auto& d : partials(f, f.degree() - c)) {
      const auto coords = d.coefficient_vector();
      ech.insert(std::span<const Rational>(coords));
    }
  }
  return ech.rank();
}

std::vector<LinearForm> random_linear_forms(int r, int m, std::mt19937_64& rng, long bound) {
  if (bound < 1) throw Error(ErrorCode::kInvalidInput, "coefficient bound must allow a nonzero value");
  if (r < 1 || m < 1) throw Error(ErrorCode::kInvalidInput, "random_linear_forms requires r >= 1 and m >= 1");
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<LinearForm> out;
  out.reserve(m);
  while (static_cast<int>(out.size()) < m) {
    LinearForm L;
    L.coefficients.reserve(r);
    for (int k = 0; k < r; ++k) L.coefficients.emplace_back(coeff(rng));
    if (!L.is_zero()) out.push_back(std::move(L));
  }
  return out;
}

Form random_form(int r, int d, std::mt19937_64& rng, long bound) {
  if (bound < 1) throw Error(ErrorCode::kInvalidInput, "coefficient bound must allow a nonzero value");
  std::uniform_int_distribution<long> coeff(-bound, bound);
  Form out(r, d);
  for (const auto& m : monomial_basis(r, d)) out.add_term(m, Rational(coeff(rng)));
  return out;
}

}  // namespace artinian
