#pragma once

// The incidence algebra of a weakly ranked poset over Z[x].

#include <chowkit/poset.hpp>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace chowkit {

class IncidenceFunction {
 public:
  // The zero function.
  explicit IncidenceFunction(Poset p);
  // values are indexed by Poset::interval_index.
  IncidenceFunction(Poset p, std::vector<Polynomial> values);
  static IncidenceFunction tabulate(const Poset& p, const std::function<Polynomial(int, int)>& f);

  const Poset& poset() const { return poset_; }
  // Zero for incomparable pairs.
  const Polynomial& operator()(int s, int t) const;
  Polynomial& at(int s, int t);
  // Value on [0, 1] of the whole poset.
  const Polynomial& value() const { return (*this)(poset_.bottom(), poset_.top()); }
  std::span<const Polynomial> values() const { return values_; }
  std::vector<Polynomial>& mutable_values() { return values_; }

  IncidenceFunction& operator+=(const IncidenceFunction& o);
  IncidenceFunction& operator-=(const IncidenceFunction& o);
  IncidenceFunction operator-() const;
  friend IncidenceFunction operator+(IncidenceFunction a, const IncidenceFunction& b) { return a += b; }
  friend IncidenceFunction operator-(IncidenceFunction a, const IncidenceFunction& b) { return a -= b; }
  // Convolution.
  friend IncidenceFunction operator*(const IncidenceFunction& a, const IncidenceFunction& b);
  friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b);

 private:
  Poset poset_;
  std::vector<Polynomial> values_;
};

IncidenceFunction delta(const Poset& p);
IncidenceFunction zeta(const Poset& p);
IncidenceFunction mobius(const Poset& p);

// (ab)_st = sum_{s <= w <= t} a_sw b_wt. Rows are computed in parallel.
IncidenceFunction convolve(const IncidenceFunction& a, const IncidenceFunction& b);
// Two-sided inverse; every diagonal value must be +1 or -1.
IncidenceFunction invert(const IncidenceFunction& a);
// x^rho a(1/x) interval-wise; throws when some deg a_st > rho_st.
IncidenceFunction rev(const IncidenceFunction& a);
// (-1)^rho a interval-wise.
IncidenceFunction sgn(const IncidenceFunction& a);
// p * a interval-wise.
IncidenceFunction scale(const Polynomial& p, const IncidenceFunction& a);

IncidenceFunction characteristic_kernel(const Poset& p);
// (x - 1)^rho; a kernel exactly when the poset is Eulerian.
IncidenceFunction eulerian_kernel(const Poset& p);

bool is_kernel(const IncidenceFunction& k);
bool is_nondegenerate(const IncidenceFunction& k);
// k^rev = k^sgn.
bool satisfies_skew_symmetry(const IncidenceFunction& k);

// k_st / (x - 1) off the diagonal, -1 on it.
IncidenceFunction kappa_bar(const IncidenceFunction& k);

struct Mismatch {
  int s = 0;
  int t = 0;
  Polynomial lhs;
  Polynomial rhs;
};

// First interval (in index order) where a and b differ.
std::optional<Mismatch> first_mismatch(const IncidenceFunction& a, const IncidenceFunction& b);

// Worker count for internal parallel loops: hardware concurrency, capped by
// the CHOWKIT_THREADS environment variable when set.
int thread_count();

}  // namespace chowkit
