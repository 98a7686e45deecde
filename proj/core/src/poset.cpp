#include <chowkit/poset.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace chowkit {

struct Poset::Impl {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<int> rank;
  std::vector<Cover> covers;
  std::vector<std::vector<int>> up_covers;
  std::vector<std::vector<int>> down_covers;
  std::vector<int> order;
  std::vector<int> pos;
  int bottom = 0;
  int top = 0;
  int words = 0;
  std::vector<std::uint64_t> leq_bits;
  std::vector<std::vector<int>> upsets;
  std::vector<std::vector<int>> downsets;
  std::vector<int> interval_idx;
  std::vector<Cover> intervals;
  std::unordered_map<std::string, int> label_index;

  mutable std::once_flag mobius_once;
  mutable std::vector<Integer> mobius;

  bool leq(int s, int t) const {
    return (leq_bits[static_cast<std::size_t>(s) * words + (t >> 6)] >> (t & 63)) & 1U;
  }
};

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

void check_index(int n, int i) {
  if (i < 0 || i >= n) throw InputError("cover references element " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
}

}  // namespace

Poset Poset::from_covers(int n, std::span<const Cover> relations, std::optional<std::vector<int>> rank,
                         std::vector<std::string> labels) {
  if (n <= 0) throw InputError("poset must have at least one element");
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) throw InputError("label count does not match element count");

  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->labels = std::move(labels);

  std::vector<std::vector<int>> succ(n);
  for (auto [a, b] : relations) {
    check_index(n, a);
    check_index(n, b);
    if (a == b) throw InputError("cover relation " + std::to_string(a) + " < " + std::to_string(a) + " is a cycle");
    succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Kahn's algorithm: topological order or a cycle.
  std::vector<int> indeg(n, 0);
  for (const auto& s : succ)
    for (int b : s) ++indeg[b];
  const std::vector<int> in_degree = indeg;
  std::vector<int> topo;
  topo.reserve(n);
  std::queue<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  while (!ready.empty()) {
    int a = ready.front();
    ready.pop();
    topo.push_back(a);
    for (int b : succ[a])
      if (--indeg[b] == 0) ready.push(b);
  }
  if (static_cast<int>(topo.size()) != n) throw InputError("cover relations contain a cycle");

  // Reflexive-transitive closure, rows indexed by element.
  const int words = (n + 63) / 64;
  impl->words = words;
  impl->leq_bits.assign(static_cast<std::size_t>(n) * words, 0);
  auto row = [&](int s) { return impl->leq_bits.data() + static_cast<std::size_t>(s) * words; };
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int s = *it;
    row(s)[s >> 6] |= std::uint64_t{1} << (s & 63);
    for (int b : succ[s])
      for (int w = 0; w < words; ++w) row(s)[w] |= row(b)[w];
  }

  // Boundedness: unique minimal and unique maximal element.
  std::vector<int> minimal;
  std::vector<int> maximal;
  for (int i = 0; i < n; ++i) {
    if (in_degree[i] == 0) minimal.push_back(i);
    if (succ[i].empty()) maximal.push_back(i);
  }
  if (minimal.size() != 1) throw InputError("poset has " + std::to_string(minimal.size()) + " minimal elements; a unique minimum is required");
  if (maximal.size() != 1) throw InputError("poset has " + std::to_string(maximal.size()) + " maximal elements; a unique maximum is required");
  impl->bottom = minimal.front();
  impl->top = maximal.front();

  // Transitive reduction: the covers of a are its minimal direct successors.
  impl->up_covers.assign(n, {});
  impl->down_covers.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (int b : succ[a]) {
      bool is_cover = std::none_of(succ[a].begin(), succ[a].end(),
                                   [&](int c) { return c != b && impl->leq(c, b); });
      if (is_cover) {
        impl->covers.emplace_back(a, b);
        impl->up_covers[a].push_back(b);
        impl->down_covers[b].push_back(a);
      }
    }
  }

  if (rank) {
    if (static_cast<int>(rank->size()) != n) throw InputError("rank array length does not match element count");
    if ((*rank)[impl->bottom] != 0) throw InputError("rank of the minimum element must be 0");
    for (auto [a, b] : impl->covers) {
      if ((*rank)[b] <= (*rank)[a])
        throw InputError("rank does not increase along cover " + impl->labels[a] + " < " + impl->labels[b]);
    }
    impl->rank = std::move(*rank);
  } else {
    impl->rank.assign(n, 0);
    for (int a : topo)
      for (int b : impl->up_covers[a]) impl->rank[b] = std::max(impl->rank[b], impl->rank[a] + 1);
    for (auto [a, b] : impl->covers) {
      if (impl->rank[b] != impl->rank[a] + 1)
        throw InputError("poset is not graded (cover " + impl->labels[a] + " < " + impl->labels[b] +
                         " skips a rank); supply explicit ranks");
    }
  }

  impl->order.resize(n);
  std::vector<int> topo_pos(n);
  for (int i = 0; i < n; ++i) topo_pos[topo[i]] = i;
  std::iota(impl->order.begin(), impl->order.end(), 0);
  std::sort(impl->order.begin(), impl->order.end(), [&](int a, int b) {
    if (impl->rank[a] != impl->rank[b]) return impl->rank[a] < impl->rank[b];
    return topo_pos[a] < topo_pos[b];
  });
  impl->pos.resize(n);
  for (int i = 0; i < n; ++i) impl->pos[impl->order[i]] = i;

  impl->upsets.assign(n, {});
  impl->downsets.assign(n, {});
  for (int t : impl->order)
    for (int s : impl->order)
      if (impl->leq(s, t)) {
        impl->upsets[s].push_back(t);
        impl->downsets[t].push_back(s);
      }

  impl->interval_idx.assign(static_cast<std::size_t>(n) * n, -1);
  for (int s : impl->order)
    for (int t : impl->upsets[s]) {
      impl->interval_idx[static_cast<std::size_t>(s) * n + t] = static_cast<int>(impl->intervals.size());
      impl->intervals.emplace_back(s, t);
    }

  for (int i = n - 1; i >= 0; --i) impl->label_index[impl->labels[i]] = i;
  return Poset(std::move(impl));
}

int Poset::size() const { return impl_->n; }
int Poset::bottom() const { return impl_->bottom; }
int Poset::top() const { return impl_->top; }
int Poset::rank(int s) const { return impl_->rank[s]; }
bool Poset::leq(int s, int t) const { return impl_->leq(s, t); }
std::span<const int> Poset::linear_order() const { return impl_->order; }
int Poset::position(int s) const { return impl_->pos[s]; }
std::span<const int> Poset::upset(int s) const { return impl_->upsets[s]; }
std::span<const int> Poset::downset(int t) const { return impl_->downsets[t]; }
std::span<const int> Poset::upper_covers(int s) const { return impl_->up_covers[s]; }
std::span<const int> Poset::lower_covers(int s) const { return impl_->down_covers[s]; }
const std::vector<Cover>& Poset::covers() const { return impl_->covers; }

int Poset::interval_index(int s, int t) const {
  return impl_->interval_idx[static_cast<std::size_t>(s) * impl_->n + t];
}
int Poset::interval_count() const { return static_cast<int>(impl_->intervals.size()); }
Cover Poset::interval_at(int index) const { return impl_->intervals[index]; }

const Integer& Poset::mobius(int s, int t) const {
  std::call_once(impl_->mobius_once, [this] {
    auto& mu = impl_->mobius;
    mu.assign(impl_->intervals.size(), Integer(0));
    std::vector<Integer> acc(impl_->n);
    for (int s0 = 0; s0 < impl_->n; ++s0) {
      const auto& up = impl_->upsets[s0];
      for (int t0 : up) acc[t0] = 0;
      for (int w : up) {
        // acc[w] holds sum_{s0 <= v < w} mu(s0, v).
        Integer value = w == s0 ? Integer(1) : Integer(-acc[w]);
        for (int t0 : impl_->upsets[w])
          if (t0 != w) acc[t0] += value;
        mu[interval_index(s0, w)] = std::move(value);
      }
    }
  });
  const int idx = interval_index(s, t);
  if (idx < 0) throw Error("mobius value requested for incomparable pair");
  return impl_->mobius[idx];
}

const std::string& Poset::label(int s) const { return impl_->labels[s]; }
const std::vector<std::string>& Poset::labels() const { return impl_->labels; }

int Poset::find_label(const std::string& label) const {
  auto it = impl_->label_index.find(label);
  return it == impl_->label_index.end() ? -1 : it->second;
}

std::vector<int> Poset::interval_elements(int s, int t) const {
  if (!leq(s, t)) throw Error("interval endpoints are not comparable");
  std::vector<int> out;
  for (int w : upset(s))
    if (leq(w, t)) out.push_back(w);
  return out;
}

Poset Poset::interval(int s, int t) const {
  std::vector<int> elems = interval_elements(s, t);
  std::vector<int> ranks;
  ranks.reserve(elems.size());
  for (int w : elems) ranks.push_back(rank(w) - rank(s));
  return induced_subposet(*this, elems, ranks);
}

Poset induced_subposet(const Poset& p, std::span<const int> elements, std::span<const int> ranks) {
  const int k = static_cast<int>(elements.size());
  std::vector<Cover> covers;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (!p.less(elements[a], elements[b])) continue;
      bool is_cover = true;
      for (int c = 0; c < k && is_cover; ++c) {
        if (c != a && c != b && p.less(elements[a], elements[c]) && p.less(elements[c], elements[b])) is_cover = false;
      }
      if (is_cover) covers.emplace_back(a, b);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (int e : elements) labels.push_back(p.label(e));
  return Poset::from_covers(k, covers, std::vector<int>(ranks.begin(), ranks.end()), std::move(labels));
}

bool is_graded(const Poset& p) {
  return std::all_of(p.covers().begin(), p.covers().end(),
                     [&](const Cover& c) { return p.rank(c.second) == p.rank(c.first) + 1; });
}

void for_each_maximal_chain(const Poset& p, int s, int t, const std::function<void(std::span<const int>)>& fn) {
  if (!p.leq(s, t)) return;
  std::vector<int> chain{s};
  std::function<void(int)> visit = [&](int cur) {
    if (cur == t) {
      fn(chain);
      return;
    }
    for (int c : p.upper_covers(cur)) {
      if (!p.leq(c, t)) continue;
      chain.push_back(c);
      visit(c);
      chain.pop_back();
    }
  };
  visit(s);
}

void for_each_chain_in_open_interval(const Poset& p, int s, int t,
                                     const std::function<void(std::span<const int>)>& fn) {
  if (!p.leq(s, t)) return;
  std::vector<int> chain;
  fn(chain);
  if (s == t) return;
  std::function<void(int)> visit = [&](int last) {
    for (int w : p.upset(last)) {
      if (w == last || w == t || !p.leq(w, t)) continue;
      chain.push_back(w);
      fn(chain);
      visit(w);
      chain.pop_back();
    }
  };
  visit(s);
}

Integer count_maximal_chains(const Poset& p, int s, int t) {
  if (!p.leq(s, t)) return 0;
  std::vector<Integer> count(p.size(), Integer(0));
  count[s] = 1;
  for (int w : p.upset(s)) {
    if (!p.leq(w, t) || count[w] == 0) continue;
    for (int c : p.upper_covers(w))
      if (p.leq(c, t)) count[c] += count[w];
  }
  return count[t];
}

namespace {

struct Signature {
  int rank;
  std::size_t up_covers;
  std::size_t down_covers;
  std::size_t upset;
  std::size_t downset;
  auto operator<=>(const Signature&) const = default;
};

Signature signature(const Poset& p, int s) {
  return {p.rank(s), p.upper_covers(s).size(), p.lower_covers(s).size(), p.upset(s).size(), p.downset(s).size()};
}

}  // namespace

bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return false;
  const int n = a.size();
  std::vector<Signature> sa(n);
  std::vector<Signature> sb(n);
  for (int i = 0; i < n; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }
  {
    auto xa = sa;
    auto xb = sb;
    std::sort(xa.begin(), xa.end());
    std::sort(xb.begin(), xb.end());
    if (xa != xb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto order = a.linear_order();
  std::function<bool(int)> extend = [&](int k) {
    if (k == n) return true;
    const int x = order[k];
    for (int c = 0; c < n; ++c) {
      if (used[c] || sb[c] != sa[x]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int u = order[j];
        ok = a.leq(u, x) == b.leq(map[u], c) && a.leq(x, u) == b.leq(c, map[u]);
      }
      if (!ok) continue;
      map[x] = c;
      used[c] = true;
      if (extend(k + 1)) return true;
      used[c] = false;
      map[x] = -1;
    }
    return false;
  };
  return extend(0);
}

namespace {

struct Builder {
  std::vector<std::string> labels;
  std::vector<int> rank;
  std::vector<Cover> covers;

  int add(std::string label, int r) {
    labels.push_back(std::move(label));
    rank.push_back(r);
    return static_cast<int>(labels.size()) - 1;
  }
  Poset build() {
    const int n = static_cast<int>(labels.size());
    return Poset::from_covers(n, covers, std::move(rank), std::move(labels));
  }
};

}  // namespace

Poset ordinal_sum(const Poset& p, const Poset& q) {
  Builder b;
  for (int i = 0; i < p.size(); ++i) b.add(p.label(i), p.rank(i));
  const int off = p.size();
  const int shift = p.rank() + 1;
  for (int i = 0; i < q.size(); ++i) b.add(q.label(i), q.rank(i) + shift);
  b.covers = p.covers();
  for (auto [x, y] : q.covers()) b.covers.emplace_back(x + off, y + off);
  b.covers.emplace_back(p.top(), q.bottom() + off);
  return b.build();
}

Poset join(const Poset& p, const Poset& q) {
  Builder b;
  for (int i = 0; i < p.size(); ++i) b.add(p.label(i), p.rank(i));
  std::vector<int> qmap(q.size());
  for (int i = 0; i < q.size(); ++i)
    qmap[i] = i == q.bottom() ? p.top() : b.add(q.label(i), q.rank(i) + p.rank());
  b.covers = p.covers();
  for (auto [x, y] : q.covers()) b.covers.emplace_back(qmap[x], qmap[y]);
  return b.build();
}

Poset aug(const Poset& p) { return ordinal_sum(chain(1), p); }

Poset aug_top(const Poset& p) {
  Poset top = Poset::from_covers(1, {}, std::vector<int>{0}, {"top+"});
  return ordinal_sum(p, top);
}

Poset dual(const Poset& p) {
  Builder b;
  for (int i = 0; i < p.size(); ++i) b.add(p.label(i), p.rank() - p.rank(i));
  for (auto [x, y] : p.covers()) b.covers.emplace_back(y, x);
  return b.build();
}

Poset product(const Poset& p, const Poset& q) {
  Builder b;
  const int m = q.size();
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < m; ++j) b.add("(" + p.label(i) + "," + q.label(j) + ")", p.rank(i) + q.rank(j));
  for (auto [x, y] : p.covers())
    for (int j = 0; j < m; ++j) b.covers.emplace_back(x * m + j, y * m + j);
  for (int i = 0; i < p.size(); ++i)
    for (auto [x, y] : q.covers()) b.covers.emplace_back(i * m + x, i * m + y);
  return b.build();
}

Poset truncate(const Poset& p) {
  const int r = p.rank();
  if (r <= 1) return Poset::from_covers(1, {}, std::vector<int>{0}, {p.label(p.bottom())});
  std::vector<int> elems;
  std::vector<int> ranks;
  for (int s : p.linear_order()) {
    if (s == p.top()) continue;
    if (p.rank(s) < r - 1) {
      elems.push_back(s);
      ranks.push_back(p.rank(s));
    }
  }
  elems.push_back(p.top());
  ranks.push_back(r - 1);
  return induced_subposet(p, elems, ranks);
}

Poset chain(int n) {
  if (n < 1) throw InputError("a chain needs at least one element");
  Builder b;
  for (int i = 0; i < n; ++i) b.add(std::to_string(i), i);
  for (int i = 0; i + 1 < n; ++i) b.covers.emplace_back(i, i + 1);
  return b.build();
}

namespace {

std::string subset_label(std::uint32_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!((mask >> i) & 1U)) continue;
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

Poset boolean_lattice(int n) {
  if (n < 0 || n > 20) throw InputError("boolean lattice rank out of range");
  Builder b;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t m = 0; m < count; ++m) b.add(subset_label(m), std::popcount(m));
  for (std::uint32_t m = 0; m < count; ++m)
    for (int i = 0; i < n; ++i)
      if (!((m >> i) & 1U)) b.covers.emplace_back(static_cast<int>(m), static_cast<int>(m | (1U << i)));
  return b.build();
}

Poset partition_lattice(int n) {
  if (n < 0 || n > 9) throw InputError("partition lattice rank out of range");
  const int m = n + 1;
  // Restricted growth strings: s[0] = 0, s[i] <= 1 + max(s[0..i-1]).
  std::vector<std::vector<int>> parts;
  std::vector<int> cur(m, 0);
  std::function<void(int, int)> gen = [&](int i, int mx) {
    if (i == m) {
      parts.push_back(cur);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      cur[i] = v;
      gen(i + 1, std::max(mx, v));
    }
  };
  cur[0] = 0;
  gen(1, 0);

  auto canonical = [&](std::vector<int> s) {
    std::map<int, int> relabel;
    for (int& v : s) {
      auto [it, inserted] = relabel.emplace(v, static_cast<int>(relabel.size()));
      v = it->second;
    }
    return s;
  };
  std::map<std::vector<int>, int> index;
  Builder b;
  for (const auto& s : parts) {
    const int blocks = *std::max_element(s.begin(), s.end()) + 1;
    std::ostringstream os;
    for (int blk = 0; blk < blocks; ++blk) {
      if (blk) os << '|';
      bool first = true;
      for (int i = 0; i < m; ++i)
        if (s[i] == blk) {
          if (!first && m > 9) os << ',';
          os << (i + 1);
          first = false;
        }
    }
    index[s] = b.add(os.str(), m - blocks);
  }
  for (const auto& s : parts) {
    const int blocks = *std::max_element(s.begin(), s.end()) + 1;
    for (int i = 0; i < blocks; ++i)
      for (int j = i + 1; j < blocks; ++j) {
        std::vector<int> merged = s;
        for (int& v : merged)
          if (v == j) v = i;
        b.covers.emplace_back(index.at(s), index.at(canonical(merged)));
      }
  }
  return b.build();
}

}  // namespace chowkit
