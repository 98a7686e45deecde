#include <chowkit/fixtures.hpp>
#include <chowkit/kls.hpp>

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using chowkit::IncidenceFunction;
using chowkit::KernelContext;
using chowkit::Polynomial;
using chowkit::Poset;

namespace {

std::string first_failure(const chowkit::VerificationReport& r) {
  const auto* f = r.first_failure();
  return f ? f->name + ": " + f->detail : "";
}

}  // namespace

TEST(Kls, DualChowGoldenValues) {
  EXPECT_EQ(chowkit::dual_chow_polynomial(chowkit::poset_fixture("u34")), (Polynomial{3, 11, 3}));
  EXPECT_EQ(chowkit::dual_chow_polynomial(chowkit::poset_fixture("figure3")), (Polynomial{1, 1, 1, 1}));
  EXPECT_EQ(chowkit::dual_chow_polynomial(chowkit::poset_fixture("figure4")), (Polynomial{4, 39, 120, 120, 39, 4}));
  EXPECT_EQ(chowkit::dual_chow_polynomial(chowkit::chain(2)), Polynomial(1));
  EXPECT_EQ(chowkit::dual_chow_polynomial(chowkit::boolean_lattice(2)), (Polynomial{1, 1}));
}

TEST(Kls, Figure1AgreesWithChainSum) {
  // The chain sum before its (-1)^rank prefactor is 1 - 2x + x^2; the rank is 3.
  const Poset p = chowkit::poset_fixture("figure1");
  const Polynomial h = chowkit::dual_chow_polynomial(p);
  EXPECT_EQ(h, chowkit::dual_chow_chain_formula(p));
  EXPECT_EQ(h, (Polynomial{-1, 2, -1}));
  EXPECT_EQ(h.leading(), p.mobius(p.bottom(), p.top()) * (p.rank() % 2 ? -1 : 1));
}

TEST(Kls, PartitionLattices) {
  const std::vector<Polynomial> expected = {
      Polynomial{1},
      Polynomial{2, 2},
      Polynomial{6, 18, 6},
      Polynomial{24, 154, 154, 24},
      Polynomial{120, 1440, 3000, 1440, 120},
  };
  for (int n = 1; n <= 5; ++n) {
    const Polynomial h = chowkit::dual_chow_polynomial(chowkit::partition_lattice(n));
    EXPECT_EQ(h, expected[n - 1]) << n;
    EXPECT_EQ(h.coeff(0), chowkit::factorial(n));
  }
}

TEST(Kls, BooleanLattices) {
  for (int r = 1; r <= 5; ++r) {
    const auto ctx = KernelContext::characteristic(chowkit::boolean_lattice(r));
    EXPECT_EQ(ctx.chow().value(), chowkit::eulerian(r)) << r;
    EXPECT_EQ(ctx.dual().chow().value(), chowkit::eulerian(r)) << r;
    EXPECT_EQ(ctx.left_augmented().value(), chowkit::binomial_eulerian(r)) << r;
    EXPECT_EQ(ctx.dual().right_augmented().value(), chowkit::binomial_eulerian(r)) << r;
    EXPECT_EQ(ctx.right_kls().value(), Polynomial(1)) << r;
  }
}

TEST(Kls, ChainFormulaSpecExamples) {
  EXPECT_EQ(chowkit::dual_chow_chain_formula(chowkit::chain(2)), Polynomial(1));
  EXPECT_EQ(chowkit::dual_chow_chain_formula(chowkit::boolean_lattice(2)), (Polynomial{1, 1}));
  EXPECT_EQ(chowkit::dual_chow_chain_formula(chowkit::poset_fixture("u34")), (Polynomial{3, 11, 3}));
}

TEST(Kls, ChowEqualsNegatedInverseOfKappaBarByChains) {
  for (const auto& name : {"figure1", "figure3", "b3", "u34", "k4"}) {
    const Poset p = chowkit::poset_fixture(name);
    const auto ctx = KernelContext::characteristic(p);
    EXPECT_EQ(ctx.chow(), oracle::chain_inverse(-chowkit::kappa_bar(ctx.kernel()))) << name;
  }
}

TEST(Kls, KlsOfCharacteristicKernel) {
  const auto ctx = KernelContext::characteristic(chowkit::poset_fixture("u34"));
  EXPECT_EQ(ctx.left_kls(), chowkit::zeta(ctx.poset()));
  EXPECT_EQ(ctx.dual().right_kls(), chowkit::sgn(chowkit::mobius(ctx.poset())));
}

TEST(Kls, AugTopKillsDualChow) {
  for (const auto& name : {"b2", "b3", "u34", "figure1"}) {
    EXPECT_TRUE(chowkit::dual_chow_polynomial(chowkit::aug_top(chowkit::poset_fixture(name))).is_zero()) << name;
  }
}

TEST(Kls, FstarInverseClosedForm) {
  const Poset p = chowkit::poset_fixture("k4");
  const auto ctx = KernelContext::characteristic(p);
  EXPECT_EQ(ctx.dual().right_augmented(), chowkit::invert(chowkit::fstar_inverse(p)));
}

TEST(Kls, IdentitySuitesOnCorpus) {
  for (const auto& [name, p] : corpus::posets(5)) {
    const auto ctx = KernelContext::characteristic(p);
    const auto k = chowkit::kernel_identities(ctx);
    EXPECT_TRUE(k.passed()) << name << " " << first_failure(k);
    const auto c = chowkit::characteristic_identities(ctx);
    EXPECT_TRUE(c.passed()) << name << " " << first_failure(c);
  }
}

TEST(Kls, EulerianKernelOnBooleanLattices) {
  for (int r = 2; r <= 4; ++r) {
    const auto ctx = KernelContext::eulerian(chowkit::boolean_lattice(r));
    EXPECT_TRUE(chowkit::satisfies_skew_symmetry(ctx.kernel()));
    EXPECT_EQ(ctx.chow(), ctx.dual().chow());
    EXPECT_TRUE(chowkit::kernel_identities(ctx).passed());
  }
  EXPECT_THROW(KernelContext::eulerian(chowkit::poset_fixture("u34")), chowkit::InputError);
}

TEST(Kls, OperationAndTruncationIdentities) {
  const auto r = chowkit::operation_identities(chowkit::poset_fixture("u34"), chowkit::poset_fixture("b2"));
  EXPECT_TRUE(r.passed()) << first_failure(r);
  const auto t = chowkit::truncation_identities(chowkit::poset_fixture("figure4"));
  EXPECT_TRUE(t.passed()) << first_failure(t);
  const std::vector<chowkit::Cover> covers = {{0, 1}, {1, 2}};
  const std::vector<int> ranks = {0, 2, 3};
  const Poset weak = Poset::from_covers(3, covers, ranks);
  EXPECT_THROW(chowkit::operation_identities(weak, weak), chowkit::InputError);
}

TEST(Kls, MoebiusSignUnimodality) {
  for (const auto& [name, p] : corpus::posets(5)) {
    bool alternates = true;
    for (int k = 0; k < p.interval_count(); ++k) {
      const auto [s, t] = p.interval_at(k);
      if ((p.interval_rank(s, t) % 2 ? -1 : 1) * p.mobius(s, t) < 0) alternates = false;
    }
    if (corpus::cohen_macaulay(name)) {
      EXPECT_TRUE(alternates) << name;
    }
    if (!alternates) continue;
    const auto h = KernelContext::characteristic(p).dual().chow();
    for (const auto& v : h.values()) {
      EXPECT_TRUE(chowkit::is_nonnegative(v) && chowkit::is_unimodal(v)) << name << " " << v;
    }
  }
}
