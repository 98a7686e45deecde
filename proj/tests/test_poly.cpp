#include <chowkit/poly.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using chowkit::Integer;
using chowkit::Polynomial;

namespace {

Polynomial from_roots(const std::vector<int>& roots) {
  Polynomial p = 1;
  for (int r : roots) p *= Polynomial{-r, 1};
  return p;
}

Polynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), c(-20, 20);
  std::vector<Integer> coeffs(deg(rng) + 1);
  for (auto& k : coeffs) k = c(rng);
  return Polynomial(coeffs);
}

}  // namespace

TEST(Polynomial, PrintsAscendingWithSigns) {
  EXPECT_EQ((Polynomial{3, 11, 3}).to_string(), "3 + 11x + 3x^2");
  EXPECT_EQ((Polynomial{1, -2, 1}).to_string(), "1 - 2x + x^2");
  EXPECT_EQ((Polynomial{0, -1}).to_string(), "-x");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ((Polynomial{1, 1}).to_compact_string(), "1+y");
}

TEST(Polynomial, TrimsAndCompares) {
  EXPECT_EQ(Polynomial(std::vector<Integer>{1, 2, 0, 0}), (Polynomial{1, 2}));
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_TRUE((Polynomial{1, -1} + Polynomial{-1, 1}).is_zero());
  EXPECT_THROW(Polynomial().leading(), chowkit::Error);
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    Polynomial acc = a;
    acc.add_product(b, c);
    EXPECT_EQ(acc, a + b * c);
    EXPECT_EQ((a * b).evaluate(3), a.evaluate(3) * b.evaluate(3));
  }
}

TEST(Polynomial, ComposeAndDerivative) {
  const Polynomial p{1, 2, 3};
  EXPECT_EQ(p.compose(Polynomial{1, 1}), (Polynomial{6, 8, 3}));
  EXPECT_EQ(p.derivative(), (Polynomial{2, 6}));
  EXPECT_EQ(Polynomial::binomial_power(-1, 3), (Polynomial{-1, 3, -3, 1}));
  EXPECT_EQ(Polynomial::geometric(3), (Polynomial{1, 1, 1, 1}));
  EXPECT_TRUE(Polynomial::geometric(-1).is_zero());
}

TEST(Polynomial, ReverseAndDivision) {
  EXPECT_EQ(chowkit::reverse(Polynomial{1, 2}, 3), (Polynomial{0, 0, 2, 1}));
  EXPECT_THROW(chowkit::reverse(Polynomial{1, 2, 3}, 1), chowkit::Error);
  EXPECT_EQ(chowkit::exact_div_x_minus_1(Polynomial{-1, 0, 1}), (Polynomial{1, 1}));
  EXPECT_THROW(chowkit::exact_div_x_minus_1(Polynomial{1, 1}), chowkit::Error);
  EXPECT_EQ(chowkit::divide_exact(Polynomial{2, 3, 1}, Polynomial{1, 1}), (Polynomial{2, 1}));
  EXPECT_THROW(chowkit::divide_exact(Polynomial{1, 0, 1}, Polynomial{1, 1}), chowkit::Error);
  EXPECT_THROW(chowkit::divide_exact(Polynomial{1, 1}, Polynomial{0, 2}), chowkit::Error);
}

TEST(Polynomial, ShapePredicates) {
  EXPECT_TRUE(chowkit::is_palindromic(Polynomial{3, 11, 3}, 2));
  EXPECT_TRUE(chowkit::is_palindromic(Polynomial{0, 1, 1}, 3));
  EXPECT_FALSE(chowkit::is_palindromic(Polynomial{1, 2}, 1));
  EXPECT_TRUE(chowkit::is_unimodal(Polynomial{3, 11, 3}));
  EXPECT_FALSE(chowkit::is_unimodal(Polynomial{1, -2, 1}));
  EXPECT_FALSE(chowkit::is_nonnegative(Polynomial{1, -2, 1}));
  EXPECT_TRUE(chowkit::is_unimodal(Polynomial{1, 1, 1, 1}));
  EXPECT_FALSE(chowkit::is_unimodal(Polynomial{1, 0, 1}));
}

TEST(Polynomial, GammaExpansion) {
  const auto g = chowkit::gamma_expansion(Polynomial{3, 11, 3}, 2);
  EXPECT_EQ(g.gammas, (std::vector<Integer>{3, 5}));
  EXPECT_EQ(g.reconstruct(), (Polynomial{3, 11, 3}));
  const auto h = chowkit::gamma_expansion(Polynomial{1, 1, 1, 1}, 3);
  EXPECT_EQ(h.gammas, (std::vector<Integer>{1, -2}));
  EXPECT_FALSE(h.is_nonnegative());
  const auto one = chowkit::gamma_expansion(Polynomial::binomial_power(1, 4), 4);
  EXPECT_EQ(one.gammas, (std::vector<Integer>{1, 0, 0}));
  EXPECT_THROW(chowkit::gamma_expansion(Polynomial{1, 2}, 1), chowkit::Error);
}

TEST(Polynomial, RealRootsAgainstKnownFactorisations) {
  EXPECT_EQ(chowkit::count_real_roots(from_roots({-1, -2, -3})), 3);
  EXPECT_EQ(chowkit::count_real_roots(from_roots({-1, -1, -2})), 2);
  EXPECT_TRUE(chowkit::is_real_rooted(from_roots({-1, -1, -2})));
  EXPECT_EQ(chowkit::count_real_roots(Polynomial{1, 0, 1}), 0);
  EXPECT_FALSE(chowkit::is_real_rooted(Polynomial{1, 0, 1} * from_roots({2})));
  EXPECT_EQ(chowkit::count_real_roots(Polynomial{1, 0, 1} * from_roots({2})), 1);
  EXPECT_TRUE(chowkit::is_real_rooted(Polynomial{5}));
  EXPECT_THROW(chowkit::count_real_roots(Polynomial()), chowkit::Error);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> root(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> roots;
    for (int k = 0; k < 5; ++k) roots.push_back(root(rng));
    std::vector<int> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    const int distinct = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    EXPECT_EQ(chowkit::count_real_roots(from_roots(roots) * Polynomial{3, 1, 1}), distinct);
  }
}

TEST(Polynomial, SquareFreeDecomposition) {
  const Polynomial p = from_roots({1}) * from_roots({2, 2}) * from_roots({3, 3, 3});
  const auto f = chowkit::square_free_decomposition(p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], from_roots({1}));
  EXPECT_EQ(f[1], from_roots({2}));
  EXPECT_EQ(f[2], from_roots({3}));
}

TEST(Polynomial, GcdIsPrimitive) {
  EXPECT_EQ(chowkit::primitive_gcd(from_roots({1, 2}) * Polynomial{6}, from_roots({2, 3}) * Polynomial{4}), from_roots({2}));
}

TEST(Polynomial, EulerianFamiliesMatchPermutationCounts) {
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(chowkit::eulerian(n), oracle::eulerian_by_permutations(n)) << n;
    EXPECT_EQ(chowkit::binomial_eulerian(n), oracle::binomial_eulerian_by_definition(n)) << n;
  }
  EXPECT_EQ(chowkit::eulerian(4), (Polynomial{1, 11, 11, 1}));
}

TEST(Polynomial, Combinatorics) {
  EXPECT_EQ(chowkit::binomial(6, 2), 15);
  EXPECT_EQ(chowkit::binomial(3, 5), 0);
  EXPECT_EQ(chowkit::factorial(20), Integer("2432902008176640000"));
}
