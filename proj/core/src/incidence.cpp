#include <chowkit/incidence.hpp>

#include "parallel.hpp"

#include <cstdlib>
#include <string>

namespace chowkit {

namespace {

const Polynomial kZero;

void require_same(const IncidenceFunction& a, const IncidenceFunction& b) {
  if (!a.poset().same(b.poset())) throw Error("incidence functions live on different posets");
}

}  // namespace

IncidenceFunction::IncidenceFunction(Poset p)
    : poset_(std::move(p)), values_(static_cast<std::size_t>(poset_.interval_count())) {}

IncidenceFunction::IncidenceFunction(Poset p, std::vector<Polynomial> values)
    : poset_(std::move(p)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != poset_.interval_count())
    throw Error("incidence function size does not match interval count");
}

IncidenceFunction IncidenceFunction::tabulate(const Poset& p, const std::function<Polynomial(int, int)>& f) {
  IncidenceFunction out(p);
  for (int i = 0; i < p.interval_count(); ++i) {
    auto [s, t] = p.interval_at(i);
    out.values_[i] = f(s, t);
  }
  return out;
}

const Polynomial& IncidenceFunction::operator()(int s, int t) const {
  const int i = poset_.interval_index(s, t);
  return i < 0 ? kZero : values_[i];
}

Polynomial& IncidenceFunction::at(int s, int t) {
  const int i = poset_.interval_index(s, t);
  if (i < 0) throw Error("incidence function evaluated on an incomparable pair");
  return values_[i];
}

IncidenceFunction& IncidenceFunction::operator+=(const IncidenceFunction& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

IncidenceFunction& IncidenceFunction::operator-=(const IncidenceFunction& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

IncidenceFunction IncidenceFunction::operator-() const {
  IncidenceFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

IncidenceFunction operator*(const IncidenceFunction& a, const IncidenceFunction& b) { return convolve(a, b); }

bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
  return a.poset().same(b.poset()) && std::equal(a.values().begin(), a.values().end(), b.values().begin());
}

IncidenceFunction delta(const Poset& p) {
  return IncidenceFunction::tabulate(p, [](int s, int t) { return Polynomial(s == t ? 1 : 0); });
}

IncidenceFunction zeta(const Poset& p) {
  return IncidenceFunction::tabulate(p, [](int, int) { return Polynomial(1); });
}

IncidenceFunction mobius(const Poset& p) {
  return IncidenceFunction::tabulate(p, [&](int s, int t) { return Polynomial(p.mobius(s, t)); });
}

IncidenceFunction convolve(const IncidenceFunction& a, const IncidenceFunction& b) {
  require_same(a, b);
  const Poset& p = a.poset();
  IncidenceFunction out(p);
  auto& vals = out.mutable_values();
  detail::parallel_for(p.size(), [&](int s) {
    for (int w : p.upset(s)) {
      const Polynomial& asw = a(s, w);
      if (asw.is_zero()) continue;
      for (int t : p.upset(w)) vals[p.interval_index(s, t)].add_product(asw, b(w, t));
    }
  });
  return out;
}

IncidenceFunction invert(const IncidenceFunction& a) {
  const Poset& p = a.poset();
  for (int s = 0; s < p.size(); ++s) {
    const Polynomial& d = a(s, s);
    if (d != Polynomial(1) && d != Polynomial(-1)) throw Error("not invertible in incidence algebra");
  }
  IncidenceFunction out(p);
  auto& vals = out.mutable_values();
  // Right inverse row by row: b_st a_tt = -sum_{s <= w < t} b_sw a_wt.
  detail::parallel_for(p.size(), [&](int s) {
    std::vector<Polynomial> acc(p.size());
    for (int w : p.upset(s)) {
      Polynomial bsw = w == s ? a(s, s) : -(acc[w] * a(w, w).coeff(0));
      for (int t : p.upset(w))
        if (t != w) acc[t].add_product(bsw, a(w, t));
      vals[p.interval_index(s, w)] = std::move(bsw);
      acc[w] = Polynomial();
    }
  });
  return out;
}

IncidenceFunction rev(const IncidenceFunction& a) {
  const Poset& p = a.poset();
  return IncidenceFunction::tabulate(p, [&](int s, int t) { return reverse(a(s, t), p.interval_rank(s, t)); });
}

IncidenceFunction sgn(const IncidenceFunction& a) {
  const Poset& p = a.poset();
  return IncidenceFunction::tabulate(p, [&](int s, int t) {
    return p.interval_rank(s, t) % 2 == 0 ? a(s, t) : -a(s, t);
  });
}

IncidenceFunction scale(const Polynomial& c, const IncidenceFunction& a) {
  IncidenceFunction out = a;
  for (auto& v : out.mutable_values()) v *= c;
  return out;
}

IncidenceFunction characteristic_kernel(const Poset& p) { return convolve(mobius(p), rev(zeta(p))); }

IncidenceFunction eulerian_kernel(const Poset& p) {
  return IncidenceFunction::tabulate(p, [&](int s, int t) {
    return Polynomial::binomial_power(-1, p.interval_rank(s, t));
  });
}

bool is_kernel(const IncidenceFunction& k) {
  const Poset& p = k.poset();
  for (int s = 0; s < p.size(); ++s)
    if (k(s, s) != Polynomial(1)) return false;
  try {
    return convolve(k, rev(k)) == delta(p);
  } catch (const Error&) {
    return false;
  }
}

bool is_nondegenerate(const IncidenceFunction& k) {
  const Poset& p = k.poset();
  for (int i = 0; i < p.interval_count(); ++i) {
    auto [s, t] = p.interval_at(i);
    if (k(s, t).degree() != p.interval_rank(s, t)) return false;
  }
  return true;
}

bool satisfies_skew_symmetry(const IncidenceFunction& k) {
  try {
    return rev(k) == sgn(k);
  } catch (const Error&) {
    return false;
  }
}

IncidenceFunction kappa_bar(const IncidenceFunction& k) {
  if (!is_kernel(k)) throw Error("kernel violates (x-1)-divisibility");
  const Poset& p = k.poset();
  return IncidenceFunction::tabulate(p, [&](int s, int t) {
    if (s == t) return Polynomial(-1);
    try {
      return exact_div_x_minus_1(k(s, t));
    } catch (const Error&) {
      throw Error("kernel violates (x-1)-divisibility");
    }
  });
}

std::optional<Mismatch> first_mismatch(const IncidenceFunction& a, const IncidenceFunction& b) {
  require_same(a, b);
  const Poset& p = a.poset();
  for (int i = 0; i < p.interval_count(); ++i) {
    if (a.values()[i] == b.values()[i]) continue;
    auto [s, t] = p.interval_at(i);
    return Mismatch{s, t, a.values()[i], b.values()[i]};
  }
  return std::nullopt;
}

int thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("CHOWKIT_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, cap);
    } catch (const std::exception&) {
    }
  }
  return n;
}

}  // namespace chowkit
