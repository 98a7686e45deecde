#pragma once

// Brute-force reference implementations used to cross-check the library.

#include <chowkit/incidence.hpp>
#include <chowkit/matroid.hpp>
#include <chowkit/poset.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using chowkit::Integer;
using chowkit::Polynomial;
using chowkit::Poset;
using chowkit::Subset;

// Strict chains s = c0 < c1 < ... < ck = t with k >= 1, depth first.
inline void for_each_strict_chain(const Poset& p, int s, int t, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> chain = {s};
  std::function<void(int)> grow = [&](int cur) {
    for (int w = 0; w < p.size(); ++w) {
      if (!p.less(cur, w) || !p.leq(w, t)) continue;
      chain.push_back(w);
      if (w == t) {
        fn(chain);
      } else {
        grow(w);
      }
      chain.pop_back();
    }
  };
  if (s != t) grow(s);
}

// Inverse of a function with unit diagonal as a signed sum over chains.
inline chowkit::IncidenceFunction chain_inverse(const chowkit::IncidenceFunction& a) {
  const Poset& p = a.poset();
  return chowkit::IncidenceFunction::tabulate(p, [&](int s, int t) {
    if (s == t) return Polynomial(1);
    Polynomial sum;
    for_each_strict_chain(p, s, t, [&](const std::vector<int>& c) {
      Polynomial term = (c.size() % 2 == 0) ? Polynomial(-1) : Polynomial(1);
      for (std::size_t i = 0; i + 1 < c.size(); ++i) term *= a(c[i], c[i + 1]);
      sum += term;
    });
    return sum;
  });
}

// Hall's theorem: mu(s, t) = sum_k (-1)^k (number of chains of length k).
inline Integer mobius_by_chains(const Poset& p, int s, int t) {
  if (s == t) return 1;
  Integer mu = 0;
  for_each_strict_chain(p, s, t, [&](const std::vector<int>& c) { mu += (c.size() % 2 == 0) ? -1 : 1; });
  return mu;
}

inline int descents(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

inline Polynomial eulerian_by_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  std::vector<Integer> c(std::max(n, 1), 0);
  do {
    ++c[descents(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  return Polynomial(c);
}

inline Polynomial binomial_eulerian_by_definition(int n) {
  Polynomial sum = 1;
  for (int k = 1; k <= n; ++k) sum += Polynomial::x() * (chowkit::binomial(n, k) * eulerian_by_permutations(k));
  return sum;
}

// Descent-set counts by inclusion-exclusion over multinomial coefficients.
inline Integer descent_set_count(int n, const std::vector<int>& d) {
  Integer total = 0;
  const int k = static_cast<int>(d.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> cuts = {0};
    for (int i = 0; i < k; ++i) {
      if (mask & (1 << i)) cuts.push_back(d[i]);
    }
    cuts.push_back(n);
    Integer multinomial = chowkit::factorial(n);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) multinomial /= chowkit::factorial(cuts[i + 1] - cuts[i]);
    const int missing = k - __builtin_popcount(static_cast<unsigned>(mask));
    total += (missing % 2 ? -1 : 1) * multinomial;
  }
  return total;
}

inline int rank_by_bases(const chowkit::Matroid& m, Subset a) {
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, __builtin_popcount(a & b));
  return best;
}

// Flats by scanning the power set.
inline std::vector<Subset> flats_by_scan(const chowkit::Matroid& m) {
  std::vector<Subset> out;
  const Subset ground = (Subset{1} << m.size()) - 1;
  for (Subset a = 0; a <= ground; ++a) {
    const int r = rank_by_bases(m, a);
    bool closed = true;
    for (int e = 0; e < m.size() && closed; ++e) {
      if (!(a & (Subset{1} << e)) && rank_by_bases(m, a | (Subset{1} << e)) == r) closed = false;
    }
    if (closed) out.push_back(a);
  }
  return out;
}

// Maximal chains of L(M) none of whose covers adds exactly the element i.
inline Integer chains_avoiding_element(const chowkit::Matroid& m, int i) {
  const auto& l = m.flats();
  const Poset& p = l.poset;
  Integer count = 0;
  for_each_strict_chain(p, p.bottom(), p.top(), [&](const std::vector<int>& c) {
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      if (p.rank(c[k + 1]) != p.rank(c[k]) + 1) return;
      if ((l.flats[c[k + 1]] & ~l.flats[c[k]]) == (Subset{1} << i)) return;
    }
    ++count;
  });
  return count;
}

// Flag f-vector alpha(S) of [bottom, top] by enumerating chains of the proper part.
inline Integer flag_alpha_by_chains(const Poset& p, Subset ranks) {
  Integer count = 0;
  chowkit::for_each_chain_in_open_interval(p, p.bottom(), p.top(), [&](std::span<const int> c) {
    Subset s = 0;
    for (int e : c) s |= Subset{1} << (p.rank(e) - 1);
    if (s == ranks && static_cast<int>(c.size()) == __builtin_popcount(ranks)) ++count;
  });
  return count;
}

}  // namespace oracle
