#pragma once

// Noncommutative polynomials in a, b with Z[y] coefficients, the ab-index
// and its extended variants.

#include <chowkit/poset.hpp>
#include <chowkit/report.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chowkit {

// A word over {a, b}; the empty word is the unit.
using AbWord = std::string;

// Words ordered by length, then lexicographically with a < b.
struct AbWordLess {
  bool operator()(const AbWord& u, const AbWord& v) const {
    return u.size() != v.size() ? u.size() < v.size() : u < v;
  }
};

class AbPolynomial {
 public:
  using Terms = std::map<AbWord, Polynomial, AbWordLess>;

  AbPolynomial() = default;
  // Constant c times the empty word.
  AbPolynomial(int c);  // NOLINT(google-explicit-constructor)
  static AbPolynomial word(const AbWord& w, Polynomial coeff = 1);
  static AbPolynomial letter(char c);

  const Terms& terms() const { return terms_; }
  Polynomial coeff(const AbWord& w) const;
  bool is_zero() const { return terms_.empty(); }
  // Length of the longest word, -1 for zero.
  int max_length() const;
  // True when every coefficient is constant in y.
  bool is_y_free() const;

  void add(const AbWord& w, const Polynomial& c);
  AbPolynomial& operator+=(const AbPolynomial& o);
  AbPolynomial& operator-=(const AbPolynomial& o);
  AbPolynomial& operator*=(const Polynomial& c);
  AbPolynomial operator-() const;
  friend AbPolynomial operator+(AbPolynomial p, const AbPolynomial& q) { return p += q; }
  friend AbPolynomial operator-(AbPolynomial p, const AbPolynomial& q) { return p -= q; }
  // Concatenation product.
  friend AbPolynomial operator*(const AbPolynomial& p, const AbPolynomial& q);
  friend AbPolynomial operator*(const Polynomial& c, AbPolynomial p) { return p *= c; }
  friend bool operator==(const AbPolynomial&, const AbPolynomial&) = default;

  // Sorted terms, e.g. "(1+y)*ab + (y+y^2)*ba"; "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const AbPolynomial& p);

// a - b
AbPolynomial a_minus_b();
// p^k under concatenation.
AbPolynomial power(const AbPolynomial& p, int k);

// Flag f- and h-vectors of a graded poset of rank r. Rank sets are subsets of
// {1, ..., r-1} given as sorted vectors.
Integer flag_alpha(const Poset& p, const std::vector<int>& ranks);
Integer flag_beta(const Poset& p, const std::vector<int>& ranks);
// beta for every subset of [r-1], indexed by bitmask (bit i-1 for rank i).
std::vector<Integer> flag_beta_table(const Poset& p);

// Psi = sum_S beta(S) m_S over the flag h-vector. Requires a graded poset.
AbPolynomial ab_index(const Poset& p);
AbPolynomial ab_index(const Poset& p, int s, int t);
// Same index from the chain weights, expanding each a - b.
AbPolynomial ab_index_via_chains(const Poset& p, int s, int t);

// ab -> (1+y)(ab + y ba), remaining a -> a + yb, b -> b + ya. The input must
// have y-free coefficients.
AbPolynomial omega(const AbPolynomial& p);
// Deletes the leftmost (rightmost) letter of every word; iota(1) = 1.
AbPolynomial iota(const AbPolynomial& p);
AbPolynomial iota_r(const AbPolynomial& p);

struct ExtendedIndices {
  AbPolynomial exa;    // omega(a Psi)
  AbPolynomial tilde;  // (1+y) omega(Psi)
  AbPolynomial b;      // omega(Psi b)
  AbPolynomial exa_b;  // omega(a Psi b)
};

// All four are 1 when s = t.
ExtendedIndices extended_indices(const Poset& p, int s, int t);
ExtendedIndices extended_indices(const Poset& p);

// Poin_st(y) = chi^rev_st(-y).
Polynomial poincare(const Poset& p, int s, int t);
// exa and tilde from the chain-Poincare expansion.
std::pair<AbPolynomial, AbPolynomial> extended_indices_via_poincare(const Poset& p, int s, int t);

// Commutative evaluation at a, b, y.
Polynomial specialize(const AbPolynomial& p, const Polynomial& a, const Polynomial& b, const Polynomial& y);

// Exact quotients of the specializations by (1 - x)^rho; throw
// "specialization identity violated" when the division is inexact.
Polynomial dual_chow_via_abindex(const Poset& p, int s, int t);   // tilde(-x, x, 1)
Polynomial fstar_via_abindex(const Poset& p, int s, int t);       // b(-x, x, 1)
Polynomial chow_via_abindex(const Poset& p, int s, int t);        // tilde(-x, 1, x)
Polynomial left_augmented_via_abindex(const Poset& p, int s, int t);  // exa(-x, 1, x)

struct FlagGamma {
  GammaExpansion dual_chow;
  GammaExpansion fstar;
};

// gamma-expansions of H*_P and F*_P as sums of beta(S^c) over stable S.
FlagGamma gamma_via_flags(const Poset& p);

// Interval-wise consistency of the ab-index machinery: both routes for Psi,
// both routes for exa and tilde, iota(exa) = tilde = iota_r(b), the word
// length bound, and the four specializations against the KLS family.
VerificationReport abindex_identities(const Poset& p);

// exa_trunc (a-b) = (exa . M)_P and the tilde analogue with its (1 - b)
// iota(M_P) correction. p must be graded of rank >= 2.
VerificationReport truncation_ab_identities(const Poset& p);

}  // namespace chowkit
