#include <chowkit/matroid.hpp>

#include <chowkit/kls.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace chowkit {

namespace {

constexpr int kMaxGround = 30;
constexpr int kRankTableLimit = 16;
constexpr int kPermutationLimit = 9;

Subset bit(int i) { return Subset{1} << i; }

int popcount(Subset s) { return std::popcount(s); }

// Re-indexes the members of `a` lying in `kept` onto 0, 1, ... in order.
Subset compress(Subset a, Subset kept) {
  Subset out = 0;
  int k = 0;
  for (int e = 0; e < kMaxGround; ++e) {
    if (!(kept & bit(e))) continue;
    if (a & bit(e)) out |= bit(k);
    ++k;
  }
  return out;
}

std::string subset_label(Subset s, const std::vector<int>& names) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(names[e]);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int e = 0; s; ++e, s >>= 1) {
    if (s & 1) out.push_back(e);
  }
  return out;
}

Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGround) throw InputError("element " + std::to_string(e) + " out of range");
    s |= bit(e);
  }
  return s;
}

struct Matroid::Impl {
  int n = 0;
  int r = 0;
  std::vector<Subset> bases;
  std::vector<int> names;
  std::vector<std::int8_t> rank_table;

  mutable std::once_flag lattice_once;
  mutable std::optional<FlatLattice> lattice;

  int rank_of(Subset a) const {
    if (!rank_table.empty()) return rank_table[a];
    int best = 0;
    for (Subset b : bases) best = std::max(best, popcount(a & b));
    return best;
  }

  void build_rank_table() {
    if (n > kRankTableLimit) return;
    const std::size_t size = std::size_t{1} << n;
    std::vector<char> independent(size, 0);
    for (Subset b : bases) independent[b] = 1;
    for (std::size_t s = size; s-- > 0;) {
      if (independent[s]) continue;
      for (int e = 0; e < n; ++e) {
        if (!(s & bit(e)) && independent[s | bit(e)]) {
          independent[s] = 1;
          break;
        }
      }
    }
    rank_table.assign(size, 0);
    for (std::size_t s = 1; s < size; ++s) {
      if (independent[s]) {
        rank_table[s] = static_cast<std::int8_t>(popcount(static_cast<Subset>(s)));
        continue;
      }
      int best = 0;
      for (int e = 0; e < n; ++e) {
        if (s & bit(e)) best = std::max<int>(best, rank_table[s & ~bit(e)]);
      }
      rank_table[s] = static_cast<std::int8_t>(best);
    }
  }
};

namespace {

std::shared_ptr<Matroid::Impl> make_impl(int n, std::vector<Subset> bases, std::vector<int> names) {
  auto impl = std::make_shared<Matroid::Impl>();
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  impl->n = n;
  impl->r = popcount(bases.front());
  impl->bases = std::move(bases);
  impl->names = std::move(names);
  impl->build_rank_table();
  return impl;
}

std::vector<int> identity_names(int n) {
  std::vector<int> names(n);
  std::iota(names.begin(), names.end(), 0);
  return names;
}

}  // namespace

Matroid Matroid::from_masks(int n, std::vector<Subset> bases) {
  if (n < 0 || n > kMaxGround) throw InputError("ground set size must lie in [0, 30]");
  if (bases.empty()) throw InputError("empty basis family");
  const Subset ground = n == 0 ? 0 : (n == 32 ? ~Subset{0} : (Subset{1} << n) - 1);
  const int r = popcount(bases.front());
  for (Subset b : bases) {
    if (b & ~ground) throw InputError("basis element outside ground set of size " + std::to_string(n));
    if (popcount(b) != r) throw InputError("bases have different sizes");
  }
  std::unordered_set<Subset> family(bases.begin(), bases.end());
  for (Subset b1 : family) {
    for (Subset b2 : family) {
      for (int x : subset_elements(b1 & ~b2)) {
        bool found = false;
        for (int y : subset_elements(b2 & ~b1)) {
          if (family.count((b1 & ~bit(x)) | bit(y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw InputError("basis exchange axiom fails for " + subset_label(b1, identity_names(n)) + ", " +
                           subset_label(b2, identity_names(n)) + " at element " + std::to_string(x));
        }
      }
    }
  }
  return Matroid(make_impl(n, std::move(bases), identity_names(n)));
}

Matroid Matroid::from_bases(int n, const std::vector<std::vector<int>>& bases) {
  if (n < 0 || n > kMaxGround) throw InputError("ground set size must lie in [0, 30]");
  std::vector<Subset> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    for (int e : b) {
      if (e < 0 || e >= n) throw InputError("basis element " + std::to_string(e) + " outside ground set of size " + std::to_string(n));
    }
    const Subset s = subset_of(b);
    if (popcount(s) != static_cast<int>(b.size())) throw InputError("basis lists an element twice");
    masks.push_back(s);
  }
  return from_masks(n, std::move(masks));
}

Matroid Matroid::uniform(int r, int n) {
  if (n < 0 || n > kMaxGround || r < 0 || r > n) throw InputError("uniform matroid needs 0 <= r <= n <= 30");
  std::vector<Subset> bases;
  const Subset ground = (Subset{1} << n) - 1;
  // Gosper's hack over r-subsets.
  if (r == 0) {
    bases.push_back(0);
  } else {
    for (Subset s = (Subset{1} << r) - 1; s <= ground && s != 0;) {
      bases.push_back(s);
      const Subset c = s & (~s + 1);
      const Subset next = s + c;
      if (next == 0 || next > ground) break;
      s = (((next ^ s) >> 2) / c) | next;
    }
  }
  return Matroid(make_impl(n, std::move(bases), identity_names(n)));
}

Matroid Matroid::boolean(int n) { return uniform(n, n); }

Matroid Matroid::graphic_k4() {
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<Subset> bases;
  for (Subset s = 0; s < bit(6); ++s) {
    if (popcount(s) != 3) continue;
    std::vector<int> parent = {0, 1, 2, 3};
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    bool acyclic = true;
    for (int e : subset_elements(s)) {
      const int a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    if (acyclic) bases.push_back(s);
  }
  return from_masks(6, std::move(bases));
}

int Matroid::size() const { return impl_->n; }
int Matroid::rank() const { return impl_->r; }
int Matroid::rank(Subset a) const { return impl_->rank_of(a & ground()); }
const std::vector<Subset>& Matroid::bases() const { return impl_->bases; }
const std::vector<int>& Matroid::names() const { return impl_->names; }

Subset Matroid::closure(Subset a) const {
  a &= ground();
  const int ra = rank(a);
  Subset out = a;
  for (int e = 0; e < size(); ++e) {
    if (!(a & bit(e)) && rank(a | bit(e)) == ra) out |= bit(e);
  }
  return out;
}

bool Matroid::is_loop(int i) const { return rank(bit(i)) == 0; }
bool Matroid::is_coloop(int i) const { return rank(ground() & ~bit(i)) < rank(); }
bool Matroid::has_loops() const { return closure(0) != 0; }
bool Matroid::has_parallel(int i) const { return !is_loop(i) && closure(bit(i)) != bit(i); }

const FlatLattice& Matroid::flats() const {
  if (has_loops()) throw InputError("matroid has loops");
  std::call_once(impl_->lattice_once, [this] {
    struct {
      std::vector<Subset> flats;
      std::unordered_map<Subset, int> index;
    } lattice;
    std::vector<Cover> covers;
    std::vector<int> ranks;
    std::vector<Subset> level = {0};
    lattice.flats.push_back(0);
    lattice.index.emplace(0, 0);
    ranks.push_back(0);
    for (int k = 0; !level.empty(); ++k) {
      std::vector<Subset> next;
      for (Subset f : level) {
        const int fi = lattice.index.at(f);
        Subset seen = f;
        for (int e = 0; e < size(); ++e) {
          if (seen & bit(e)) continue;
          const Subset g = closure(f | bit(e));
          seen |= g;
          auto [it, inserted] = lattice.index.emplace(g, static_cast<int>(lattice.flats.size()));
          if (inserted) {
            lattice.flats.push_back(g);
            ranks.push_back(k + 1);
            next.push_back(g);
          }
          covers.emplace_back(fi, it->second);
        }
      }
      level = std::move(next);
    }
    const std::size_t count = lattice.flats.size();
    if (count <= 512) {
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
          const Subset f = lattice.flats[a], g = lattice.flats[b];
          if (rank(closure(f | g)) + rank(f & g) > ranks[a] + ranks[b]) {
            throw Error("lattice of flats is not semimodular");
          }
        }
      }
    }
    std::vector<std::string> labels;
    labels.reserve(count);
    for (Subset f : lattice.flats) labels.push_back(subset_label(f, names()));
    Poset poset = Poset::from_covers(static_cast<int>(count), covers, ranks, std::move(labels));
    impl_->lattice = FlatLattice{std::move(poset), std::move(lattice.flats), std::move(lattice.index)};
  });
  return *impl_->lattice;
}

Matroid Matroid::restriction(Subset s) const {
  s &= ground();
  const int rs = rank(s);
  std::vector<Subset> bases;
  for (Subset b : impl_->bases) {
    if (popcount(b & s) == rs) bases.push_back(compress(b & s, s));
  }
  std::vector<int> names;
  for (int e : subset_elements(s)) names.push_back(impl_->names[e]);
  return Matroid(make_impl(popcount(s), std::move(bases), std::move(names)));
}

Matroid Matroid::contraction(Subset t) const {
  t &= ground();
  const int rt = rank(t);
  const Subset kept = ground() & ~t;
  std::vector<Subset> bases;
  for (Subset b : impl_->bases) {
    if (popcount(b & t) == rt) bases.push_back(compress(b & ~t, kept));
  }
  std::vector<int> names;
  for (int e : subset_elements(kept)) names.push_back(impl_->names[e]);
  return Matroid(make_impl(popcount(kept), std::move(bases), std::move(names)));
}

Matroid Matroid::deletion(int i) const {
  if (i < 0 || i >= size()) throw InputError("element " + std::to_string(i) + " out of range");
  return restriction(ground() & ~bit(i));
}

Matroid Matroid::contraction(int i) const {
  if (i < 0 || i >= size()) throw InputError("element " + std::to_string(i) + " out of range");
  return contraction(bit(i));
}

namespace {

void check_element(const Matroid& m, int i) {
  if (i < 0 || i >= m.size()) throw InputError("element " + std::to_string(i) + " out of range");
}

// S_i without the admissibility checks.
SSets collect_s_sets(const Matroid& m, int i) {
  SSets out;
  const FlatLattice& l = m.flats();
  for (int k : l.poset.linear_order()) {
    const Subset f = l.flats[k];
    if ((f & bit(i)) == 0 && l.index.count(f | bit(i))) {
      out.all.push_back(f);
      if (f != 0) out.proper.push_back(f);
    }
  }
  return out;
}

std::string ab_detail(const AbPolynomial& lhs, const AbPolynomial& rhs) {
  return "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
}

void expect_ab(VerificationReport& r, std::string name, const AbPolynomial& lhs, const AbPolynomial& rhs) {
  const bool ok = lhs == rhs;
  r.add(std::move(name), ok, ok ? std::string{} : ab_detail(lhs, rhs));
}

std::string element_tag(const Matroid& m, int i) { return " (i = " + std::to_string(m.names()[i]) + ")"; }

Polynomial fstar_of(const Poset& p) { return KernelContext::characteristic(p).dual().right_augmented().value(); }

}  // namespace

SSets s_sets(const Matroid& m, int i) {
  check_element(m, i);
  if (m.is_loop(i)) throw InputError("element " + std::to_string(i) + " is a loop");
  if (m.is_coloop(i)) throw InputError("element " + std::to_string(i) + " is a coloop");
  if (m.has_parallel(i)) throw InputError("element " + std::to_string(i) + " has parallel elements");
  return collect_s_sets(m, i);
}

std::vector<int> admissible_elements(const Matroid& m) {
  std::vector<int> out;
  for (int i = 0; i < m.size(); ++i) {
    if (!m.is_loop(i) && !m.is_coloop(i) && !m.has_parallel(i)) out.push_back(i);
  }
  return out;
}

Polynomial dual_chow(const Matroid& m) { return dual_chow_polynomial(m.flats().poset); }
Polynomial dual_aug_chow(const Matroid& m) { return fstar_of(m.flats().poset); }
Polynomial chow(const Matroid& m) { return chow_polynomial(m.flats().poset); }

Polynomial characteristic_polynomial(const Matroid& m) {
  return characteristic_kernel(m.flats().poset).value();
}

Polynomial bergman_h(const Matroid& m) {
  return specialize(ab_index(m.flats().poset), 1, Polynomial::x(), 0);
}

VerificationReport verify_ab_deletion(const Matroid& m, int i) {
  const SSets s = s_sets(m, i);
  const Subset e = bit(i);
  AbPolynomial rhs = ab_index(m.deletion(i).flats().poset);
  rhs += AbPolynomial::letter('b') * ab_index(m.contraction(i).flats().poset);
  const AbPolynomial ab = AbPolynomial::word("ab");
  for (Subset f : s.proper) {
    rhs += ab_index(m.restriction(f).flats().poset) * ab * ab_index(m.contraction(f | e).flats().poset);
  }
  VerificationReport r;
  expect_ab(r, "ab-index deletion" + element_tag(m, i), ab_index(m.flats().poset), rhs);
  return r;
}

VerificationReport verify_extended_deletions(const Matroid& m, int i) {
  const SSets s = s_sets(m, i);
  const Subset e = bit(i);
  const Polynomial y = Polynomial::x();
  const AbPolynomial a = AbPolynomial::letter('a'), b = AbPolynomial::letter('b');
  const AbPolynomial middle = a * b + y * (b * a);
  const AbPolynomial step = b + y * a;

  const ExtendedIndices whole = extended_indices(m.flats().poset);
  const ExtendedIndices del = extended_indices(m.deletion(i).flats().poset);
  const ExtendedIndices con = extended_indices(m.contraction(i).flats().poset);

  AbPolynomial exa = del.exa, tilde = del.tilde + step * con.tilde;
  AbPolynomial exa_b = del.exa_b, bb = del.b + step * con.b;
  for (Subset f : s.all) {
    const ExtendedIndices lower = extended_indices(m.restriction(f).flats().poset);
    const ExtendedIndices upper = extended_indices(m.contraction(f | e).flats().poset);
    exa += lower.exa * middle * upper.tilde;
    exa_b += (1 + y) * (lower.exa * middle * upper.b);
    if (f == 0) continue;
    tilde += lower.tilde * middle * upper.tilde;
    bb += lower.tilde * middle * upper.b;
  }
  VerificationReport r;
  const std::string tag = element_tag(m, i);
  expect_ab(r, "extended ab-index deletion" + tag, whole.exa, exa);
  expect_ab(r, "tilde ab-index deletion" + tag, whole.tilde, tilde);
  expect_ab(r, "extended ab-index with b deletion" + tag, whole.exa_b, exa_b);
  expect_ab(r, "ab-index with b deletion" + tag, whole.b, bb);
  return r;
}

VerificationReport verify_dual_chow_deletion(const Matroid& m, int i) {
  const SSets s = s_sets(m, i);
  const Subset e = bit(i);
  const Polynomial x = Polynomial::x();
  const Poset del = m.deletion(i).flats().poset;
  const Poset con = m.contraction(i).flats().poset;
  Polynomial h = dual_chow_polynomial(del) + (x + 1) * dual_chow_polynomial(con);
  Polynomial f = fstar_of(del) + (x + 1) * fstar_of(con);
  for (Subset g : s.proper) {
    const Poset lower = m.restriction(g).flats().poset;
    const Poset upper = m.contraction(g | e).flats().poset;
    const Polynomial hl = dual_chow_polynomial(lower);
    h += x * hl * dual_chow_polynomial(upper);
    f += x * hl * fstar_of(upper);
  }
  VerificationReport r;
  const std::string tag = element_tag(m, i);
  r.expect_equal("dual Chow deletion" + tag, dual_chow(m), h);
  r.expect_equal("dual augmented Chow deletion" + tag, dual_aug_chow(m), f);
  return r;
}

VerificationReport verify_bergman_deletion(const Matroid& m, int i) {
  check_element(m, i);
  if (m.is_coloop(i)) throw InputError("element " + std::to_string(i) + " is a coloop");
  const SSets s = collect_s_sets(m, i);
  Polynomial rhs = bergman_h(m.deletion(i));
  for (Subset f : s.all) {
    rhs += Polynomial::x() * bergman_h(m.restriction(f)) * bergman_h(m.contraction(f | bit(i)));
  }
  VerificationReport r;
  r.expect_equal("Bergman deletion" + element_tag(m, i), bergman_h(m), rhs);
  return r;
}

namespace {

struct DualPair {
  Polynomial h;
  Polynomial f;
};

using DeletionMemo = std::map<std::pair<int, std::vector<Subset>>, DualPair>;

DualPair by_deletion(const Matroid& m, DeletionMemo& memo) {
  const auto key = std::make_pair(m.size(), m.bases());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::vector<int> candidates = admissible_elements(m);
  DualPair out;
  if (candidates.empty()) {
    const Poset& p = m.flats().poset;
    out = {dual_chow_polynomial(p), fstar_of(p)};
  } else {
    const int i = candidates.front();
    const SSets s = collect_s_sets(m, i);
    const Polynomial x = Polynomial::x();
    const DualPair del = by_deletion(m.deletion(i), memo);
    const DualPair con = by_deletion(m.contraction(i), memo);
    out.h = del.h + (x + 1) * con.h;
    out.f = del.f + (x + 1) * con.f;
    for (Subset g : s.proper) {
      const DualPair lower = by_deletion(m.restriction(g), memo);
      const DualPair upper = by_deletion(m.contraction(g | bit(i)), memo);
      out.h += x * lower.h * upper.h;
      out.f += x * lower.h * upper.f;
    }
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace

Polynomial dual_chow_by_deletion(const Matroid& m) {
  if (m.has_loops()) throw InputError("matroid has loops");
  DeletionMemo memo;
  return by_deletion(m, memo).h;
}

Polynomial dual_aug_chow_by_deletion(const Matroid& m) {
  if (m.has_loops()) throw InputError("matroid has loops");
  DeletionMemo memo;
  return by_deletion(m, memo).f;
}

namespace {

void check_uniform_range(int r, int n) {
  if (r < 1 || r > n) throw InputError("uniform closed form needs 1 <= r <= n");
}

Polynomial uniform_closed_form(int r, int n, int top_j, int shift) {
  check_uniform_range(r, n);
  Polynomial out = binomial(n - 1, r - 1);
  for (int j = 0; j <= top_j; ++j) {
    const Polynomial tail = Polynomial::x() * Polynomial::geometric(r - j - 1 + shift - 1);
    out += (binomial(n, j) * binomial(n - j - 1, r - j - 1)) * (eulerian(j) * tail);
  }
  return out;
}

void check_permutation_size(int n) {
  if (n < 0 || n > kPermutationLimit) {
    throw InputError("permutation enumeration limited to n <= " + std::to_string(kPermutationLimit));
  }
}

// Descent positions (1-based) of w.
Subset descent_set(const std::vector<int>& w) {
  Subset d = 0;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] > w[k + 1]) d |= bit(static_cast<int>(k) + 1);
  }
  return d;
}

Subset position_set(const std::vector<int>& positions, int n) {
  Subset s = 0;
  for (int p : positions) {
    if (p < 1 || p > n - 1) throw InputError("position " + std::to_string(p) + " outside [1, " + std::to_string(n - 1) + "]");
    s |= bit(p);
  }
  return s;
}

}  // namespace

Polynomial uniform_dual_chow(int r, int n) { return uniform_closed_form(r, n, r - 2, 0); }
Polynomial uniform_dual_aug_chow(int r, int n) { return uniform_closed_form(r, n, r - 1, 1); }

Integer eulerian_number(int n, const std::vector<int>& d) {
  check_permutation_size(n);
  const Subset want = position_set(d, std::max(n, 1));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  Integer count = 0;
  do {
    if (descent_set(w) == want) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

Polynomial p_poly(int m, int k, const std::vector<int>& t) {
  check_permutation_size(m + 1);
  if (k < 0 || k > m) throw InputError("k must lie in [0, " + std::to_string(m) + "]");
  const Subset allowed = position_set(t, m + 1);
  std::vector<int> w(m + 1);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Integer> coeffs(m + 1, 0);
  do {
    if (w[0] != k + 1) continue;
    const Subset d = descent_set(w);
    if ((d & ~allowed) || (d & (d >> 1))) continue;
    ++coeffs[popcount(d)];
  } while (std::next_permutation(w.begin(), w.end()));
  return Polynomial(std::move(coeffs));
}

UniformGamma uniform_gamma(int r, int n) {
  check_uniform_range(r, n);
  if (r > 8) throw InputError("uniform_gamma limited to r <= 8");
  std::vector<int> full(r - 1), without_one;
  std::iota(full.begin(), full.end(), 1);
  for (int p : full) {
    if (p != 1) without_one.push_back(p);
  }
  Polynomial gh, gf;
  for (int k = 0; k <= r - 1; ++k) {
    const Integer c = binomial(n - 1 - k, r - 1 - k);
    gh += c * p_poly(r - 1, k, without_one);
    gf += c * p_poly(r - 1, k, full);
  }
  auto expansion = [](const Polynomial& g, int center) {
    if (g.degree() > center / 2) throw Error("gamma polynomial exceeds half the center degree");
    GammaExpansion out;
    out.center_degree = center;
    out.gammas.assign(center / 2 + 1, 0);
    for (int i = 0; i <= g.degree(); ++i) out.gammas[i] = g.coeff(i);
    return out;
  };
  return {expansion(gh, r - 1), expansion(gf, r)};
}

}  // namespace chowkit
