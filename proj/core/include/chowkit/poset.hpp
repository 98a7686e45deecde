#pragma once

// Finite bounded posets carrying a weak rank function (stored as element
// ranks with rank(bottom) = 0), together with the structural operations used
// throughout the library.

#include <chowkit/poly.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chowkit {

using Cover = std::pair<int, int>;

class Poset {
 public:
  // Validates acyclicity and boundedness. Without explicit ranks the poset
  // must be graded and ranks are longest-chain lengths from the bottom.
  // The supplied relations may contain non-cover pairs; covers are
  // recomputed as the transitive reduction.
  static Poset from_covers(int n, std::span<const Cover> covers,
                           std::optional<std::vector<int>> rank = std::nullopt,
                           std::vector<std::string> labels = {});

  int size() const;
  int bottom() const;
  int top() const;
  int rank(int s) const;
  // Rank of the whole poset, i.e. rank(top()).
  int rank() const { return rank(top()); }
  int interval_rank(int s, int t) const { return rank(t) - rank(s); }

  bool leq(int s, int t) const;
  bool less(int s, int t) const { return s != t && leq(s, t); }

  // Elements sorted by (rank, input order); a linear extension.
  std::span<const int> linear_order() const;
  // Position of s in linear_order().
  int position(int s) const;
  // {t : t >= s} in linear order, starting with s.
  std::span<const int> upset(int s) const;
  // {s : s <= t} in linear order, ending with t.
  std::span<const int> downset(int t) const;
  std::span<const int> upper_covers(int s) const;
  std::span<const int> lower_covers(int s) const;
  const std::vector<Cover>& covers() const;

  // Dense index over comparable pairs s <= t; -1 when s is not <= t.
  int interval_index(int s, int t) const;
  int interval_count() const;
  Cover interval_at(int index) const;

  // mu(s, t); computed once per poset on first use.
  const Integer& mobius(int s, int t) const;

  const std::string& label(int s) const;
  const std::vector<std::string>& labels() const;
  // Index of the element with this label, or -1.
  int find_label(const std::string& label) const;

  // [s, t] as a standalone poset (ranks shifted so that s has rank 0).
  // Element k of the result is interval_elements(s, t)[k].
  Poset interval(int s, int t) const;
  // Members of [s, t] in linear order.
  std::vector<int> interval_elements(int s, int t) const;

  // Identity of the underlying immutable data.
  bool same(const Poset& other) const { return impl_ == other.impl_; }

  struct Impl;

 private:
  explicit Poset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Subposet on `elements` with the induced order and the given ranks; covers
// are recomputed. Used by truncation and interval extraction.
Poset induced_subposet(const Poset& p, std::span<const int> elements, std::span<const int> ranks);

// Every cover raises the rank by exactly one, equivalently every maximal
// chain of every interval [s, t] has length rank(t) - rank(s).
bool is_graded(const Poset& p);

// Calls fn with each maximal chain s = c0 < c1 < ... < ck = t.
void for_each_maximal_chain(const Poset& p, int s, int t,
                            const std::function<void(std::span<const int>)>& fn);
// Calls fn with each chain (including the empty one) of the open interval (s, t).
void for_each_chain_in_open_interval(const Poset& p, int s, int t,
                                     const std::function<void(std::span<const int>)>& fn);
Integer count_maximal_chains(const Poset& p, int s, int t);

bool isomorphic(const Poset& a, const Poset& b);

// Structural operations. All inputs are bounded by construction.
Poset ordinal_sum(const Poset& p, const Poset& q);
// Identifies the top of p with the bottom of q.
Poset join(const Poset& p, const Poset& q);
// New minimum element.
Poset aug(const Poset& p);
// New maximum element.
Poset aug_top(const Poset& p);
Poset dual(const Poset& p);
Poset product(const Poset& p, const Poset& q);
// Removes the coatoms: keeps elements of rank < r - 1 plus the top, whose
// rank becomes r - 1. Rank 0 and 1 posets truncate to the one-element poset.
Poset truncate(const Poset& p);

// Standard families.
// Chain with n elements (rank n - 1).
Poset chain(int n);
Poset boolean_lattice(int n);
// Set partitions of {1, ..., n + 1} ordered by refinement (rank n).
Poset partition_lattice(int n);

}  // namespace chowkit
