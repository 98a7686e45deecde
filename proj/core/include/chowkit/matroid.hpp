#pragma once

// Matroids given by their bases, lattices of flats, minors and the deletion
// identities for ab-indices, dual Chow and Bergman h-polynomials.

#include <chowkit/abindex.hpp>
#include <chowkit/poset.hpp>
#include <chowkit/report.hpp>

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chowkit {

// Subset of the ground set {0, ..., n-1} as a bitmask (n <= 30).
using Subset = std::uint32_t;

std::vector<int> subset_elements(Subset s);
Subset subset_of(const std::vector<int>& elements);

struct FlatLattice {
  Poset poset;
  // flats[k] is the flat of poset element k.
  std::vector<Subset> flats;
  std::unordered_map<Subset, int> index;
};

class Matroid {
 public:
  // Validates element range, equal basis sizes and the exchange axiom.
  static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases);
  static Matroid from_masks(int n, std::vector<Subset> bases);
  static Matroid uniform(int r, int n);
  static Matroid boolean(int n);
  // Cycle matroid of the complete graph on four vertices; edges
  // 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3).
  static Matroid graphic_k4();

  int size() const;
  int rank() const;
  int rank(Subset a) const;
  Subset ground() const { return size() == 32 ? ~Subset{0} : (Subset{1} << size()) - 1; }
  Subset closure(Subset a) const;
  const std::vector<Subset>& bases() const;
  // Original element names of the ground set (minors keep the names of their
  // parent's elements).
  const std::vector<int>& names() const;

  bool is_loop(int i) const;
  bool is_coloop(int i) const;
  bool has_loops() const;
  // Some other element lies in the closure of {i}.
  bool has_parallel(int i) const;

  // Throws "matroid has loops" for matroids with loops.
  const FlatLattice& flats() const;

  Matroid deletion(int i) const;
  Matroid contraction(int i) const;
  Matroid contraction(Subset t) const;
  Matroid restriction(Subset s) const;

  struct Impl;

 private:
  explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Flats F with i not in F and F + i a flat; `proper` omits the empty flat.
struct SSets {
  std::vector<Subset> all;
  std::vector<Subset> proper;
};

// Requires i to be neither a loop, a coloop, nor parallel to another element.
SSets s_sets(const Matroid& m, int i);
// Elements admissible for the deletion identities, smallest first.
std::vector<int> admissible_elements(const Matroid& m);

Polynomial dual_chow(const Matroid& m);
Polynomial dual_aug_chow(const Matroid& m);
Polynomial chow(const Matroid& m);
Polynomial characteristic_polynomial(const Matroid& m);
// Psi of the lattice of flats at a = 1, b = x.
Polynomial bergman_h(const Matroid& m);

VerificationReport verify_ab_deletion(const Matroid& m, int i);
VerificationReport verify_extended_deletions(const Matroid& m, int i);
VerificationReport verify_dual_chow_deletion(const Matroid& m, int i);
// Requires only that i is not a coloop.
VerificationReport verify_bergman_deletion(const Matroid& m, int i);

// H*_M by the deletion recursion on the smallest admissible element,
// falling back to the lattice when no element is admissible.
Polynomial dual_chow_by_deletion(const Matroid& m);
Polynomial dual_aug_chow_by_deletion(const Matroid& m);

// Closed forms for U_{r,n}, 1 <= r <= n.
Polynomial uniform_dual_chow(int r, int n);
Polynomial uniform_dual_aug_chow(int r, int n);

// Number of permutations of [n] with descent set exactly d (positions 1..n-1).
Integer eulerian_number(int n, const std::vector<int>& d);
// Sum of x^des(w) over w in S_{m+1} with w(1) = k + 1 and a stable descent
// set contained in t.
Polynomial p_poly(int m, int k, const std::vector<int>& t);

struct UniformGamma {
  GammaExpansion dual_chow;
  GammaExpansion dual_aug_chow;
};

// gamma-vectors of H* and F* of U_{r,n} from the p-polynomials.
UniformGamma uniform_gamma(int r, int n);

}  // namespace chowkit
