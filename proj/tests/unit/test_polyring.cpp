#include <gtest/gtest.h>

#include <random>

#include "artinian/binomial.hpp"
#include "artinian/error.hpp"
#include "artinian/polyring.hpp"
#include "support/oracles.hpp"

using namespace artinian;

namespace {

LinearForm lf(std::initializer_list<long> c) {
  LinearForm L;
  for (long v : c) L.coefficients.emplace_back(v);
  return L;
}

Monomial mono(std::initializer_list<int> e) { return Monomial{std::vector<int>(e)}; }

// L^d by repeated multiplication of term maps.
Form power_by_multiplication(const LinearForm& L, int d) {
  const int r = L.num_vars();
  std::map<std::vector<int>, Rational> acc{{std::vector<int>(r, 0), 1}};
  for (int k = 0; k < d; ++k) {
    std::map<std::vector<int>, Rational> next;
    for (const auto& [e, c] : acc)
      for (int v = 0; v < r; ++v) {
        if (L.coefficients[v] == 0) continue;
        auto f = e;
        ++f[v];
        next[f] += c * L.coefficients[v];
      }
    acc = std::move(next);
  }
  Form out(r, d);
  for (const auto& [e, c] : acc) out.add_term(Monomial{e}, c);
  return out;
}

}  // namespace

TEST(MonomialBasis, SizeAndOrder) {
  for (int r = 1; r <= 4; ++r)
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(monomial_basis(r, d).size(), ring_dim(r, d).get_ui());
  const auto b = monomial_basis(2, 2);
  EXPECT_EQ(b, (std::vector<Monomial>{mono({2, 0}), mono({1, 1}), mono({0, 2})}));
}

TEST(Form, ZeroCoefficientsAreDropped) {
  Form f(2, 1);
  f.add_term(mono({1, 0}), 3);
  f.add_term(mono({1, 0}), -3);
  EXPECT_TRUE(f.is_zero());
  EXPECT_THROW(f.add_term(mono({2, 0}), 1), Error);
}

TEST(PowerOfLinear, Examples) {
  const auto p = power_of_linear(lf({1, 0, 0}), 5);
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.coefficient(mono({5, 0, 0})), 1);

  Form sq(2, 2);
  sq.add_term(mono({2, 0}), 1);
  sq.add_term(mono({1, 1}), 2);
  sq.add_term(mono({0, 2}), 1);
  EXPECT_EQ(power_of_linear(lf({1, 1}), 2), sq);

  Form cube(3, 3);
  cube.add_term(mono({3, 0, 0}), 8);
  cube.add_term(mono({2, 0, 1}), -12);
  cube.add_term(mono({1, 0, 2}), 6);
  cube.add_term(mono({0, 0, 3}), -1);
  EXPECT_EQ(power_of_linear(lf({2, 0, -1}), 3), cube);

  EXPECT_THROW(power_of_linear(lf({0, 0}), 3), Error);
  EXPECT_THROW(power_of_linear(lf({1, 0}), 0), Error);
}

TEST(PowerOfLinear, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 2 + trial % 3;
    const int d = 1 + trial % 7;
    const auto L = random_linear_forms(r, 1, rng, 5).front();
    ASSERT_EQ(power_of_linear(L, d), power_by_multiplication(L, d));
  }
}

TEST(Differentiate, Examples) {
  const auto y1_5 = power_of_linear(lf({1, 0}), 5);
  Form expected(2, 4);
  expected.add_term(mono({4, 0}), 5);
  EXPECT_EQ(differentiate(y1_5, 0), expected);
  EXPECT_TRUE(differentiate(power_of_linear(lf({1, 0}), 3), 1).is_zero());
  Form constant(2, 0);
  constant.add_term(mono({0, 0}), 7);
  EXPECT_TRUE(differentiate(constant, 0).is_zero());
}

TEST(Differentiate, ChainRuleOnPowers) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 2 + trial % 3;
    const int d = 2 + trial % 6;
    const auto L = random_linear_forms(r, 1, rng, 7).front();
    for (int v = 0; v < r; ++v) {
      Form rhs = power_of_linear(L, d - 1) * (Rational(d) * L.coefficients[v]);
      ASSERT_EQ(differentiate(power_of_linear(L, d), v), rhs);
    }
  }
}

TEST(Differentiate, PartialsCommute) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + trial % 3;
    const auto f = random_form(r, 5, rng, 9);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) ASSERT_EQ(differentiate(differentiate(f, a), b), differentiate(differentiate(f, b), a));
  }
}

TEST(Partials, CountAndOrderZero) {
  std::mt19937_64 rng(6);
  const auto f = random_form(3, 4, rng);
  EXPECT_EQ(partials(f, 2).size(), ring_dim(3, 2).get_ui());
  ASSERT_EQ(partials(f, 0).size(), 1u);
  EXPECT_EQ(partials(f, 0).front(), f);
}

TEST(RankExact, Basics) {
  std::vector<std::vector<Rational>> id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(rank_exact(id), 3u);
  id.push_back(id[1]);
  EXPECT_EQ(rank_exact(id), 3u);
  std::vector<std::vector<Rational>> frac = {{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}};
  EXPECT_EQ(rank_exact(frac), 1u);
  EXPECT_EQ(rank_exact({}), 0u);
}

TEST(RankExact, AgreesWithMinorOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> shape(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 3 + shape(rng), cols = 4 + shape(rng);
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (auto& row : m)
      for (auto& x : row) x = coeff(rng);
    // Force some dependence half the time.
    if (trial % 2 == 0)
      for (std::size_t j = 0; j < cols; ++j) m[rows - 1][j] = m[0][j] * 2 - m[1][j];
    ASSERT_EQ(rank_exact(m), oracle::minor_rank(m)) << "trial " << trial;
  }
  // 6 x 10 case with a planted dependency; the oracle is checked on a 6 x 6 slice.
  std::vector<std::vector<Rational>> wide(6, std::vector<Rational>(10));
  for (auto& row : wide)
    for (auto& x : row) x = coeff(rng);
  for (std::size_t j = 0; j < 10; ++j) wide[5][j] = wide[0][j] + wide[2][j];
  std::vector<std::vector<Rational>> slice;
  for (const auto& row : wide) slice.emplace_back(row.begin(), row.begin() + 6);
  EXPECT_EQ(rank_exact(wide), 5u);
  EXPECT_LE(rank_exact(slice), 5u);
  EXPECT_EQ(rank_exact(slice), oracle::minor_rank(slice));
}

TEST(RowEchelon, IndependenceQueryDoesNotMutate) {
  RowEchelon ech(3);
  EXPECT_TRUE(ech.insert(std::vector<Integer>{2, 4, 6}));
  EXPECT_FALSE(ech.is_independent({1, 2, 3}));
  EXPECT_TRUE(ech.is_independent({0, 1, 0}));
  EXPECT_EQ(ech.rank(), 1u);
  EXPECT_FALSE(ech.insert(std::vector<Integer>{-3, -6, -9}));
  EXPECT_FALSE(ech.insert(std::vector<Integer>{0, 0, 0}));
  EXPECT_THROW(ech.insert(std::vector<Integer>{1, 2}), Error);
}

TEST(DerivativeSpace, PurePowerHasOneDerivativePerDegree) {
  const auto L = lf({3, -1, 2});
  const auto f = power_of_linear(L, 6);
  for (int c = 0; c <= 6; ++c) EXPECT_EQ(derivative_space_dim({f}, c), 1u);
  EXPECT_EQ(derivative_space_dim({f}, 7), 0u);
}

TEST(DerivativeSpace, GenericSexticAndPowerSums) {
  std::mt19937_64 rng(8);
  EXPECT_EQ(derivative_space_dim({random_form(3, 6, rng)}, 4), 6u);
  Form F(4, 7);
  for (const auto& L : random_linear_forms(4, 10, rng)) F += power_of_linear(L, 7);
  EXPECT_EQ(derivative_space_dim({F}, 4), 10u);
  Form G(3, 7);
  for (const auto& L : random_linear_forms(3, 10, rng)) G += power_of_linear(L, 7);
  EXPECT_EQ(derivative_space_dim({G}, 3), 10u);
}

TEST(RandomLinearForms, DeterministicAndChecked) {
  std::mt19937_64 a(42), b(42);
  const auto x = random_linear_forms(3, 2, a);
  const auto y = random_linear_forms(3, 2, b);
  ASSERT_EQ(x.size(), 2u);
  for (int k = 0; k < 2; ++k) EXPECT_EQ(x[k].coefficients, y[k].coefficients);
  for (const auto& L : x) EXPECT_FALSE(L.is_zero());
  std::mt19937_64 c(1);
  EXPECT_THROW(random_linear_forms(3, 1, c, 0), Error);
}

TEST(TextFormat, RenderingConventions) {
  Form f(3, 2);
  f.add_term(mono({2, 0, 0}), 1);
  f.add_term(mono({1, 0, 1}), Rational(-3, 2));
  f.add_term(mono({0, 1, 1}), 4);
  EXPECT_EQ(to_text(f), "1*y1^2-3/2*y1*y3+4*y2*y3");
  Form g(2, 1);
  g.add_term(mono({0, 1}), -1);
  EXPECT_EQ(to_text(g), "-1*y2");
  EXPECT_EQ(to_text(Form(2, 3)), "0");
}

TEST(TextFormat, ParseAcceptsLooseSyntax) {
  const auto f = parse_form(" y1^2 - 3/2 * y1^1*y3 + 4*y2*y3 ", 3);
  EXPECT_EQ(to_text(f), "1*y1^2-3/2*y1*y3+4*y2*y3");
  EXPECT_EQ(parse_form("0", 2, 3), Form(2, 3));
  EXPECT_EQ(parse_form("2/4*y1", 1).coefficient(mono({1})), Rational(1, 2));
}

TEST(TextFormat, ParseErrors) {
  auto code = [](std::string_view text, int r) {
    try {
      parse_form(text, r);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(code("y1^2+y2", 2).find("degree"), std::string::npos);
  EXPECT_NE(code("y3", 2).find("outside"), std::string::npos);
  EXPECT_NE(code("1/0*y1", 2).find("zero denominator"), std::string::npos);
  EXPECT_NE(code("", 2).find("empty"), std::string::npos);
  EXPECT_NE(code("y1 y2", 2).find("offset"), std::string::npos);
  EXPECT_NE(code("x1", 2).find("PARSE"), std::string::npos);
}

TEST(TextFormat, RoundTripsRandomForms) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 1 + trial % 4;
    const int d = trial % 6;
    auto f = random_form(r, d, rng, 20);
    f *= Rational(1 + trial, 7);
    ASSERT_EQ(parse_form(to_text(f), r, d), f) << to_text(f);
  }
}
