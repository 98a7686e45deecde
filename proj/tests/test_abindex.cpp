#include <chowkit/abindex.hpp>
#include <chowkit/fixtures.hpp>
#include <chowkit/kls.hpp>

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using chowkit::AbPolynomial;
using chowkit::Polynomial;
using chowkit::Poset;

namespace {

AbPolynomial w(const std::string& word, Polynomial c = 1) { return AbPolynomial::word(word, std::move(c)); }

// Psi = sum_S alpha(S) u_S with u_i = b for i in S and a - b otherwise.
AbPolynomial psi_from_flag_f_vector(const Poset& p) {
  const int r = p.rank();
  if (r == 0) return 1;
  AbPolynomial out;
  for (chowkit::Subset s = 0; s < (chowkit::Subset{1} << (r - 1)); ++s) {
    const chowkit::Integer alpha = oracle::flag_alpha_by_chains(p, s);
    if (alpha == 0) continue;
    AbPolynomial term = 1;
    for (int i = 0; i < r - 1; ++i) {
      term = term * ((s & (chowkit::Subset{1} << i)) ? AbPolynomial::letter('b') : chowkit::a_minus_b());
    }
    out += Polynomial(alpha) * term;
  }
  return out;
}

}  // namespace

TEST(AbIndex, PrintsWithCoefficientsInY) {
  const AbPolynomial p = w("ab", Polynomial{1, 1}) + w("ba", Polynomial{0, 1, 1});
  EXPECT_EQ(p.to_string(), "(1+y)*ab + (y+y^2)*ba");
  EXPECT_EQ((w("a", 2) - w("bb")).to_string(), "2*a - bb");
  EXPECT_THROW(AbPolynomial::word("ac"), chowkit::InputError);
}

TEST(AbIndex, AlgebraIsNoncommutative) {
  const AbPolynomial a = AbPolynomial::letter('a'), b = AbPolynomial::letter('b');
  EXPECT_NE(a * b, b * a);
  EXPECT_EQ(chowkit::power(chowkit::a_minus_b(), 2), w("aa") - w("ab") - w("ba") + w("bb"));
  EXPECT_EQ(chowkit::iota(w("ab") + w("ba")), w("b") + w("a"));
  EXPECT_EQ(chowkit::iota_r(w("ab")), w("a"));
  EXPECT_EQ(chowkit::iota(AbPolynomial(1)), AbPolynomial(1));
}

TEST(AbIndex, Omega) {
  EXPECT_EQ(chowkit::omega(w("ab")), (Polynomial{1, 1} * (w("ab") + Polynomial{0, 1} * w("ba"))));
  EXPECT_EQ(chowkit::omega(w("a")), (w("a") + Polynomial{0, 1} * w("b")));
  EXPECT_EQ(chowkit::omega(w("b")), (w("b") + Polynomial{0, 1} * w("a")));
  EXPECT_EQ(chowkit::omega(w("ba")), chowkit::omega(w("b")) * chowkit::omega(w("a")));
  EXPECT_THROW(chowkit::omega(w("a", Polynomial{0, 1})), chowkit::Error);
}

TEST(AbIndex, UniformRankThree) {
  EXPECT_EQ(chowkit::ab_index(chowkit::poset_fixture("u34")), w("aa") + w("ab", 5) + w("ba", 3) + w("bb", 3));
  EXPECT_EQ(chowkit::ab_index(chowkit::chain(1)), AbPolynomial(1));
  EXPECT_EQ(chowkit::ab_index(chowkit::chain(2)), AbPolynomial(1));
}

TEST(AbIndex, MatchesFlagFVectorExpansion) {
  for (const auto& [name, p] : corpus::posets(5)) {
    EXPECT_EQ(chowkit::ab_index(p), psi_from_flag_f_vector(p)) << name;
    EXPECT_EQ(chowkit::ab_index(p), chowkit::ab_index_via_chains(p, p.bottom(), p.top())) << name;
  }
}

TEST(AbIndex, FlagVectors) {
  const Poset b3 = chowkit::boolean_lattice(3);
  EXPECT_EQ(chowkit::flag_alpha(b3, {1}), 3);
  EXPECT_EQ(chowkit::flag_alpha(b3, {1, 2}), 6);
  EXPECT_EQ(chowkit::flag_beta(b3, {1}), 2);
  EXPECT_EQ(chowkit::flag_beta(b3, {}), 1);
  EXPECT_THROW(chowkit::flag_alpha(b3, {3}), chowkit::InputError);
  const std::vector<chowkit::Cover> covers = {{0, 1}, {1, 2}};
  const std::vector<int> ranks = {0, 1, 3};
  EXPECT_THROW(chowkit::ab_index(Poset::from_covers(3, covers, ranks)), chowkit::InputError);
}

TEST(AbIndex, BooleanFlagHVectorCountsDescents) {
  for (int n = 1; n <= 5; ++n) {
    const auto table = chowkit::flag_beta_table(chowkit::boolean_lattice(n));
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
      std::vector<int> d;
      for (int i = 0; i < n - 1; ++i) {
        if (mask & (std::size_t{1} << i)) d.push_back(i + 1);
      }
      EXPECT_EQ(table[mask], oracle::descent_set_count(n, d));
    }
  }
}

TEST(AbIndex, Specialisations) {
  for (const auto& [name, p] : corpus::posets(5)) {
    const auto ctx = chowkit::KernelContext::characteristic(p);
    const int s = p.bottom(), t = p.top();
    EXPECT_EQ(chowkit::dual_chow_via_abindex(p, s, t), ctx.dual().chow().value()) << name;
    EXPECT_EQ(chowkit::fstar_via_abindex(p, s, t), ctx.dual().right_augmented().value()) << name;
    EXPECT_EQ(chowkit::chow_via_abindex(p, s, t), ctx.chow().value()) << name;
    EXPECT_EQ(chowkit::left_augmented_via_abindex(p, s, t), ctx.left_augmented().value()) << name;
  }
}

TEST(AbIndex, ExtendedIndicesTwoRoutes) {
  for (const auto& name : {"b3", "u34", "figure1", "k4"}) {
    const Poset p = chowkit::poset_fixture(name);
    const auto ext = chowkit::extended_indices(p);
    const auto [exa, tilde] = chowkit::extended_indices_via_poincare(p, p.bottom(), p.top());
    EXPECT_EQ(ext.exa, exa) << name;
    EXPECT_EQ(ext.tilde, tilde) << name;
    EXPECT_EQ(chowkit::iota(ext.exa), ext.tilde) << name;
    EXPECT_EQ(chowkit::iota_r(ext.b), ext.tilde) << name;
  }
  const auto one = chowkit::extended_indices(chowkit::chain(1));
  EXPECT_EQ(one.exa, AbPolynomial(1));
  EXPECT_EQ(one.exa_b, AbPolynomial(1));
}

TEST(AbIndex, PoincarePolynomial) {
  const Poset b2 = chowkit::boolean_lattice(2);
  EXPECT_EQ(chowkit::poincare(b2, b2.bottom(), b2.top()), (Polynomial{1, 2, 1}));
}

TEST(AbIndex, GammaFromFlagVectors) {
  for (const auto& [name, p] : corpus::posets(5)) {
    if (p.rank() < 1) continue;
    const auto ctx = chowkit::KernelContext::characteristic(p);
    const auto g = chowkit::gamma_via_flags(p);
    const Polynomial h = ctx.dual().chow().value(), f = ctx.dual().right_augmented().value();
    EXPECT_EQ(g.dual_chow.reconstruct(), h) << name;
    EXPECT_EQ(g.fstar.reconstruct(), f) << name;
    EXPECT_EQ(g.dual_chow, chowkit::gamma_expansion(h, p.rank() - 1)) << name;
  }
  EXPECT_EQ(chowkit::gamma_via_flags(chowkit::poset_fixture("figure3")).dual_chow.gammas,
            (std::vector<chowkit::Integer>{1, -2}));
}

TEST(AbIndex, IdentitySuites) {
  for (const auto& [name, p] : corpus::posets(5)) {
    const auto r = chowkit::abindex_identities(p);
    EXPECT_TRUE(r.passed()) << name << " " << (r.first_failure() ? r.first_failure()->detail : "");
    if (p.rank() >= 2) {
      const auto t = chowkit::truncation_ab_identities(p);
      EXPECT_TRUE(t.passed()) << name << " " << (t.first_failure() ? t.first_failure()->detail : "");
    }
  }
  EXPECT_THROW(chowkit::truncation_ab_identities(chowkit::chain(2)), chowkit::InputError);
}
