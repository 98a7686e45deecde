#pragma once

// KLS functions, Chow functions and their augmented and dual variants.

#include <chowkit/incidence.hpp>
#include <chowkit/report.hpp>

#include <memory>

namespace chowkit {

// A kernel together with its lazily computed, write-once derived functions.
// Copies share the same caches.
class KernelContext {
 public:
  // Throws InputError("not a kernel") unless is_kernel(kernel).
  explicit KernelContext(IncidenceFunction kernel);
  static KernelContext characteristic(const Poset& p);
  static KernelContext eulerian(const Poset& p);

  const Poset& poset() const;
  const IncidenceFunction& kernel() const;

  // f with kernel = f^rev f^-1, diagonal 1, deg f_st < rho_st / 2.
  const IncidenceFunction& right_kls() const;
  // g with kernel = g^-1 g^rev, diagonal 1, deg g_st < rho_st / 2.
  const IncidenceFunction& left_kls() const;
  // H = -(kappa_bar)^-1
  const IncidenceFunction& chow() const;
  // F = H f^rev
  const IncidenceFunction& right_augmented() const;
  // G = g^rev H
  const IncidenceFunction& left_augmented() const;
  // Z = g^rev f
  const IncidenceFunction& z() const;

  // Context of the kernel sgn(rev(kernel)). Its members are the dual
  // functions f*, g*, H*, F*, G*, Z*.
  const KernelContext& dual() const;

  struct State;

 private:
  explicit KernelContext(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

// Dual characteristic Chow polynomial H*_P.
Polynomial dual_chow_polynomial(const Poset& p);
// Characteristic Chow polynomial H_P.
Polynomial chow_polynomial(const Poset& p);

// Literal evaluation of the chain sum
//   H*_st = (-1)^rho_st sum_{s <= c0 < ... < cm = t} mu_{s c0} prod_i mu_{c(i-1) ci} (x^rho - x)/(x - 1).
Polynomial dual_chow_chain_formula(const Poset& p, int s, int t);
Polynomial dual_chow_chain_formula(const Poset& p);

// The closed form (-1)^rho (1 + x + ... + x^rho) of (F*)^-1 for the
// characteristic kernel.
IncidenceFunction fstar_inverse(const Poset& p);

// mu~_st = mu_st (-x)^(rho_st - 1) for s < t, 1 on the diagonal.
IncidenceFunction mu_tilde(const Poset& p);

// Defining identities of the KLS family and of the dual family for an
// arbitrary kernel: KLS degree bounds and reconstruction, symmetry of H and
// H*, rev-invariance of F, G, Z, f* = (g^-1)^sgn, g* = (f^-1)^sgn,
// Z* = (Z^-1)^sgn, F* sgn(G) = H* sgn(H) and sgn(F) G* = sgn(H) H*.
VerificationReport kernel_identities(const KernelContext& ctx);

// Identities specific to the characteristic kernel: g = zeta, f* = sgn(mu),
// leading coefficient of H*, the chain formula, the closed form of (F*)^-1
// and the three H* / F* bridges. ctx must be characteristic.
VerificationReport characteristic_identities(const KernelContext& ctx);
VerificationReport hstar_fstar_bridge(const KernelContext& ctx);

// Behaviour of H* and F* under joins, augmentations, duality and products.
// Both posets must be graded; checks whose hypotheses fail are skipped.
VerificationReport operation_identities(const Poset& p, const Poset& q);

// (H* . mu~)_[0,w] against the truncation of [0, w] for every w, and the
// resulting recursion for H*_P. p must be graded.
VerificationReport truncation_identities(const Poset& p);

}  // namespace chowkit
