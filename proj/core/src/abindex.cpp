#include <chowkit/abindex.hpp>
#include <chowkit/kls.hpp>

#include <bit>
#include <map>
#include <ostream>

namespace chowkit {

namespace {

bool is_single_monomial(const Polynomial& c) {
  int nonzero = 0;
  for (const auto& v : c.coeffs())
    if (v != 0) ++nonzero;
  return nonzero == 1;
}

Polynomial one_minus_x_power(int r) {
  Polynomial p = Polynomial::binomial_power(-1, r);
  return r % 2 == 0 ? p : -p;
}

}  // namespace

AbPolynomial::AbPolynomial(int c) {
  if (c != 0) terms_.emplace(AbWord{}, Polynomial(c));
}

AbPolynomial AbPolynomial::word(const AbWord& w, Polynomial coeff) {
  for (char c : w)
    if (c != 'a' && c != 'b') throw InputError("ab-word contains a letter other than a and b");
  AbPolynomial out;
  out.add(w, coeff);
  return out;
}

AbPolynomial AbPolynomial::letter(char c) { return word(AbWord(1, c)); }

Polynomial AbPolynomial::coeff(const AbWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Polynomial() : it->second;
}

int AbPolynomial::max_length() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

bool AbPolynomial::is_y_free() const {
  for (const auto& [w, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

void AbPolynomial::add(const AbWord& w, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AbPolynomial& AbPolynomial::operator+=(const AbPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

AbPolynomial& AbPolynomial::operator-=(const AbPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

AbPolynomial& AbPolynomial::operator*=(const Polynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

AbPolynomial AbPolynomial::operator-() const {
  AbPolynomial out = *this;
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

AbPolynomial operator*(const AbPolynomial& p, const AbPolynomial& q) {
  AbPolynomial out;
  for (const auto& [u, c] : p.terms_)
    for (const auto& [v, d] : q.terms_) out.add(u + v, c * d);
  return out;
}

std::string AbPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string term;
    const std::string cs = c.to_compact_string('y');
    if (w.empty()) {
      term = is_single_monomial(c) ? cs : "(" + cs + ")";
    } else if (c == Polynomial(1)) {
      term = w;
    } else if (c == Polynomial(-1)) {
      term = "-" + w;
    } else {
      term = (is_single_monomial(c) ? cs : "(" + cs + ")") + "*" + w;
    }
    if (first) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AbPolynomial& p) { return os << p.to_string(); }

AbPolynomial a_minus_b() { return AbPolynomial::letter('a') - AbPolynomial::letter('b'); }

AbPolynomial power(const AbPolynomial& p, int k) {
  AbPolynomial out = 1;
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

namespace {

void require_graded(const Poset& p) {
  if (!is_graded(p)) throw InputError("ab-index requires a graded poset");
}

// alpha over rank sets of (s, t), indexed by bitmask (bit i-1 for relative rank i).
std::vector<Integer> alpha_table(const Poset& p, int s, int t) {
  const int r = p.interval_rank(s, t);
  const int bits = std::max(r - 1, 0);
  if (bits > 24) throw InputError("rank too large for flag vectors");
  std::vector<Integer> alpha(std::size_t{1} << bits, Integer(0));
  alpha[0] = 1;
  std::vector<int> inner;
  for (int w : p.upset(s))
    if (w != s && w != t && p.leq(w, t)) inner.push_back(w);
  // counts[k][mask]: chains in (s, t) with maximum inner[k] and rank set mask.
  std::vector<std::map<unsigned, Integer>> counts(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) {
    const int w = inner[k];
    const unsigned bit = 1U << (p.interval_rank(s, w) - 1);
    counts[k][bit] += 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (!p.less(inner[j], w)) continue;
      for (const auto& [mask, c] : counts[j]) counts[k][mask | bit] += c;
    }
    for (const auto& [mask, c] : counts[k]) alpha[mask] += c;
  }
  return alpha;
}

std::vector<Integer> beta_from_alpha(std::vector<Integer> f) {
  // Moebius inversion over the subset lattice.
  const std::size_t n = f.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1)
    for (std::size_t m = 0; m < n; ++m)
      if (m & bit) f[m] -= f[m ^ bit];
  return f;
}

unsigned mask_of(const Poset& p, const std::vector<int>& ranks) {
  const int r = p.rank();
  unsigned mask = 0;
  for (int i : ranks) {
    if (i < 1 || i > r - 1) throw InputError("rank set element " + std::to_string(i) + " outside 1.." + std::to_string(r - 1));
    mask |= 1U << (i - 1);
  }
  return mask;
}

AbWord mask_word(unsigned mask, int length) {
  AbWord w(length, 'a');
  for (int i = 0; i < length; ++i)
    if ((mask >> i) & 1U) w[i] = 'b';
  return w;
}

}  // namespace

Integer flag_alpha(const Poset& p, const std::vector<int>& ranks) {
  require_graded(p);
  return alpha_table(p, p.bottom(), p.top())[mask_of(p, ranks)];
}

Integer flag_beta(const Poset& p, const std::vector<int>& ranks) {
  require_graded(p);
  return flag_beta_table(p)[mask_of(p, ranks)];
}

std::vector<Integer> flag_beta_table(const Poset& p) {
  require_graded(p);
  return beta_from_alpha(alpha_table(p, p.bottom(), p.top()));
}

AbPolynomial ab_index(const Poset& p) { return ab_index(p, p.bottom(), p.top()); }

AbPolynomial ab_index(const Poset& p, int s, int t) {
  require_graded(p);
  if (!p.leq(s, t)) throw Error("interval endpoints are not comparable");
  const int r = p.interval_rank(s, t);
  if (r == 0) return 1;
  const auto beta = beta_from_alpha(alpha_table(p, s, t));
  AbPolynomial out;
  for (unsigned m = 0; m < beta.size(); ++m) out.add(mask_word(m, r - 1), Polynomial(beta[m]));
  return out;
}

AbPolynomial ab_index_via_chains(const Poset& p, int s, int t) {
  require_graded(p);
  const int r = p.interval_rank(s, t);
  if (r == 0) return 1;
  AbPolynomial out;
  const AbPolynomial amb = a_minus_b();
  const AbPolynomial b = AbPolynomial::letter('b');
  for_each_chain_in_open_interval(p, s, t, [&](std::span<const int> chain) {
    std::vector<bool> marked(r, false);
    for (int c : chain) marked[p.interval_rank(s, c)] = true;
    AbPolynomial w = 1;
    for (int i = 1; i < r; ++i) w = w * (marked[i] ? b : amb);
    out += w;
  });
  return out;
}

namespace {

AbPolynomial omega_word(const AbWord& w) {
  const Polynomial y = Polynomial::x();
  const Polynomial one_plus_y = Polynomial{1, 1};
  AbPolynomial out = 1;
  for (std::size_t i = 0; i < w.size();) {
    AbPolynomial factor;
    if (w[i] == 'a' && i + 1 < w.size() && w[i + 1] == 'b') {
      factor.add("ab", one_plus_y);
      factor.add("ba", one_plus_y * y);
      i += 2;
    } else if (w[i] == 'a') {
      factor.add("a", 1);
      factor.add("b", y);
      ++i;
    } else {
      factor.add("b", 1);
      factor.add("a", y);
      ++i;
    }
    out = out * factor;
  }
  return out;
}

}  // namespace

AbPolynomial omega(const AbPolynomial& p) {
  if (!p.is_y_free()) throw Error("omega is defined only on y-free ab-polynomials");
  AbPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    AbPolynomial image = omega_word(w);
    image *= c;
    out += image;
  }
  return out;
}

AbPolynomial iota(const AbPolynomial& p) {
  AbPolynomial out;
  for (const auto& [w, c] : p.terms()) out.add(w.empty() ? w : w.substr(1), c);
  return out;
}

AbPolynomial iota_r(const AbPolynomial& p) {
  AbPolynomial out;
  for (const auto& [w, c] : p.terms()) out.add(w.empty() ? w : w.substr(0, w.size() - 1), c);
  return out;
}

ExtendedIndices extended_indices(const Poset& p) { return extended_indices(p, p.bottom(), p.top()); }

ExtendedIndices extended_indices(const Poset& p, int s, int t) {
  const AbPolynomial psi = ab_index(p, s, t);
  if (s == t) return {1, 1, 1, 1};
  const AbPolynomial a = AbPolynomial::letter('a');
  const AbPolynomial b = AbPolynomial::letter('b');
  ExtendedIndices out;
  out.exa = omega(a * psi);
  out.tilde = Polynomial{1, 1} * omega(psi);
  out.b = omega(psi * b);
  out.exa_b = omega(a * psi * b);
  const int r = p.interval_rank(s, t);
  if (out.exa.max_length() > r + 1 || out.tilde.max_length() > r + 1 || out.b.max_length() > r + 1 ||
      out.exa_b.max_length() > r + 1)
    throw Error("extended index exceeds the word-length bound");
  return out;
}

Polynomial poincare(const Poset& p, int s, int t) {
  Polynomial out;
  for (int w : p.upset(s)) {
    if (!p.leq(w, t)) continue;
    const int r = p.interval_rank(s, w);
    out += Polynomial::monomial(r % 2 == 0 ? p.mobius(s, w) : Integer(-p.mobius(s, w)), r);
  }
  return out;
}

std::pair<AbPolynomial, AbPolynomial> extended_indices_via_poincare(const Poset& p, int s, int t) {
  require_graded(p);
  if (s == t) return {1, 1};
  const int r = p.interval_rank(s, t);
  const AbPolynomial amb = a_minus_b();
  const AbPolynomial b = AbPolynomial::letter('b');
  AbPolynomial exa;
  AbPolynomial tilde;
  for_each_chain_in_open_interval(p, s, t, [&](std::span<const int> chain) {
    std::vector<bool> marked(r, false);
    for (int c : chain) marked[p.interval_rank(s, c)] = true;
    AbPolynomial word = 1;
    for (int i = 1; i < r; ++i) word = word * (marked[i] ? b : amb);
    Polynomial poin = 1;
    for (std::size_t i = 0; i < chain.size(); ++i)
      poin *= poincare(p, chain[i], i + 1 < chain.size() ? chain[i + 1] : t);
    // Chain without s.
    exa += poin * (amb * word);
    // Chain with s prepended.
    const Polynomial with_s = poin * poincare(p, s, chain.empty() ? t : chain.front());
    exa += with_s * (b * word);
    tilde += with_s * word;
  });
  return {exa, tilde};
}

Polynomial specialize(const AbPolynomial& p, const Polynomial& a, const Polynomial& b, const Polynomial& y) {
  Polynomial out;
  for (const auto& [w, c] : p.terms()) {
    Polynomial term = c.compose(y);
    for (char l : w) term *= l == 'a' ? a : b;
    out += term;
  }
  return out;
}

namespace {

Polynomial divide_specialization(const Polynomial& value, int r) {
  try {
    return divide_exact(value, one_minus_x_power(r));
  } catch (const Error&) {
    throw Error("specialization identity violated");
  }
}

const Polynomial kX = Polynomial::x();
const Polynomial kMinusX = -Polynomial::x();

}  // namespace

Polynomial dual_chow_via_abindex(const Poset& p, int s, int t) {
  return divide_specialization(specialize(extended_indices(p, s, t).tilde, kX, 1, kMinusX), p.interval_rank(s, t));
}

Polynomial fstar_via_abindex(const Poset& p, int s, int t) {
  return divide_specialization(specialize(extended_indices(p, s, t).b, kX, 1, kMinusX), p.interval_rank(s, t));
}

Polynomial chow_via_abindex(const Poset& p, int s, int t) {
  return divide_specialization(specialize(extended_indices(p, s, t).tilde, 1, kX, kMinusX), p.interval_rank(s, t));
}

Polynomial left_augmented_via_abindex(const Poset& p, int s, int t) {
  return divide_specialization(specialize(extended_indices(p, s, t).exa, 1, kX, kMinusX), p.interval_rank(s, t));
}

FlagGamma gamma_via_flags(const Poset& p) {
  require_graded(p);
  const int r = p.rank();
  if (r == 0) return {{0, {1}}, {0, {1}}};
  const auto beta = flag_beta_table(p);
  const unsigned full = static_cast<unsigned>(beta.size()) - 1;
  FlagGamma out;
  out.dual_chow.center_degree = r - 1;
  out.dual_chow.gammas.assign((r - 1) / 2 + 1, Integer(0));
  out.fstar.center_degree = r;
  out.fstar.gammas.assign(r / 2 + 1, Integer(0));
  for (unsigned m = 0; m <= full; ++m) {
    if (m & (m >> 1)) continue;
    const int k = std::popcount(m);
    const Integer& weight = beta[full & ~m];
    out.fstar.gammas[k] += weight;
    if (!((m >> (r - 2)) & 1U)) out.dual_chow.gammas[k] += weight;
  }
  return out;
}

namespace {

// Keeps the first failure per named check across many intervals.
class IntervalChecks {
 public:
  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    auto [it, inserted] = state_.emplace(name, std::make_pair(true, std::string()));
    if (inserted) order_.push_back(name);
    if (!ok && it->second.first) it->second = {false, detail};
  }
  void flush(VerificationReport& report) const {
    for (const auto& name : order_) {
      const auto& [ok, detail] = state_.at(name);
      report.add(name, ok, detail);
    }
  }

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::pair<bool, std::string>> state_;
};

std::string describe(const Poset& p, int s, int t, const std::string& lhs, const std::string& rhs) {
  return "interval [" + p.label(s) + ", " + p.label(t) + "]: lhs = " + lhs + ", rhs = " + rhs;
}

template <class T>
void compare(IntervalChecks& checks, const std::string& name, const Poset& p, int s, int t, const T& lhs, const T& rhs) {
  const bool ok = lhs == rhs;
  checks.record(name, ok, ok ? std::string() : describe(p, s, t, lhs.to_string(), rhs.to_string()));
}

}  // namespace

VerificationReport abindex_identities(const Poset& p) {
  require_graded(p);
  const KernelContext ctx = KernelContext::characteristic(p);
  const auto& h = ctx.chow();
  const auto& g = ctx.left_augmented();
  const auto& hs = ctx.dual().chow();
  const auto& fs = ctx.dual().right_augmented();
  IntervalChecks checks;
  for (int i = 0; i < p.interval_count(); ++i) {
    auto [s, t] = p.interval_at(i);
    compare(checks, "Psi: flag route = chain route", p, s, t, ab_index(p, s, t), ab_index_via_chains(p, s, t));
    ExtendedIndices ext;
    try {
      ext = extended_indices(p, s, t);
      checks.record("word-length bound", true);
    } catch (const Error& e) {
      checks.record("word-length bound", false, describe(p, s, t, e.what(), ""));
      continue;
    }
    auto [exa, tilde] = extended_indices_via_poincare(p, s, t);
    compare(checks, "exa: omega route = Poincare route", p, s, t, ext.exa, exa);
    compare(checks, "tilde: omega route = Poincare route", p, s, t, ext.tilde, tilde);
    if (s != t) {
      compare(checks, "iota(exa) = tilde", p, s, t, iota(ext.exa), ext.tilde);
      compare(checks, "iota_r(Psi_b) = tilde", p, s, t, iota_r(ext.b), ext.tilde);
    }
    const int r = p.interval_rank(s, t);
    const Polynomial scale = one_minus_x_power(r);
    compare(checks, "tilde(-x,1,x) = (1-x)^rho H", p, s, t, specialize(ext.tilde, 1, kX, kMinusX), scale * h(s, t));
    compare(checks, "exa(-x,1,x) = (1-x)^rho G", p, s, t, specialize(ext.exa, 1, kX, kMinusX), scale * g(s, t));
    compare(checks, "tilde(-x,x,1) = (1-x)^rho H*", p, s, t, specialize(ext.tilde, kX, 1, kMinusX), scale * hs(s, t));
    compare(checks, "Psi_b(-x,x,1) = (1-x)^rho F*", p, s, t, specialize(ext.b, kX, 1, kMinusX), scale * fs(s, t));
  }
  VerificationReport report;
  checks.flush(report);
  return report;
}

VerificationReport truncation_ab_identities(const Poset& p) {
  require_graded(p);
  if (p.rank() < 2) throw InputError("truncation identities require rank at least 2");
  const int top = p.top();
  const int bottom = p.bottom();
  const AbPolynomial amb = a_minus_b();
  const AbPolynomial b = AbPolynomial::letter('b');
  auto m_value = [&](int s, int t) {
    if (s == t) return AbPolynomial(1);
    const int d = p.interval_rank(s, t);
    Polynomial c = Polynomial::monomial(p.mobius(s, t), d - 1) * Polynomial{1, 1};
    if ((d - 1) % 2 == 1) c = -c;
    return c * (b * power(amb, d - 1));
  };

  AbPolynomial exa_rhs;
  AbPolynomial tilde_rhs;
  for (int w = 0; w < p.size(); ++w) {
    const ExtendedIndices ext = extended_indices(p, bottom, w);
    const AbPolynomial m = m_value(w, top);
    exa_rhs += ext.exa * m;
    tilde_rhs += ext.tilde * m;
  }
  tilde_rhs += (AbPolynomial(1) - b) * iota(m_value(bottom, top));

  const Poset tp = truncate(p);
  const ExtendedIndices trunc_ext = extended_indices(tp);
  VerificationReport report;
  auto check = [&](const std::string& name, const AbPolynomial& lhs, const AbPolynomial& rhs) {
    report.add(name, lhs == rhs, lhs == rhs ? std::string() : "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
  };
  check("exa(trunc P)(a-b) = (exa M)_P", trunc_ext.exa * amb, exa_rhs);
  check("tilde(trunc P)(a-b) = (tilde M)_P + (1-b) iota(M_P)", trunc_ext.tilde * amb, tilde_rhs);

  const int r = p.rank();
  Polynomial correction = Polynomial::monomial(p.mobius(bottom, top), r - 1) * Polynomial{1, 1};
  if ((r - 1) % 2 == 1) correction = -correction;
  report.expect_equal("Poin(trunc P) = Poin(P) + mu (-y)^(r-1) (1+y)", poincare(tp, tp.bottom(), tp.top()),
                      poincare(p, bottom, top) + correction);
  return report;
}

}  // namespace chowkit
