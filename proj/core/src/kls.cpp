#include <chowkit/kls.hpp>

#include <mutex>
#include <optional>

namespace chowkit {

struct KernelContext::State {
  explicit State(IncidenceFunction k) : kernel(std::move(k)) {}

  IncidenceFunction kernel;
  std::once_flag f_once, g_once, h_once, ff_once, gg_once, z_once, dual_once;
  std::optional<IncidenceFunction> f, g, h, ff, gg, z;
  std::optional<KernelContext> dual;
};

namespace {

template <class Fn>
const IncidenceFunction& cached(std::once_flag& flag, std::optional<IncidenceFunction>& slot, Fn&& fn) {
  std::call_once(flag, [&] { slot.emplace(fn()); });
  return *slot;
}

// Coefficients k < rho/2 of the solution u of rev(u) - u = q with deg u < rho/2.
Polynomial solve_low_half(const Polynomial& q, int rho) {
  std::vector<Integer> c;
  for (int k = 0; 2 * k < rho; ++k) c.push_back(-q.coeff(k));
  Polynomial u(std::move(c));
  if (reverse(u, rho) - u != q) throw Error("kernel inconsistent");
  return u;
}

IncidenceFunction compute_right_kls(const IncidenceFunction& k) {
  const Poset& p = k.poset();
  IncidenceFunction f(p);
  auto order = p.linear_order();
  // kernel * f = f^rev, i.e. rev(f_st) - f_st = sum_{s < w <= t} k_sw f_wt.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int s = *it;
    for (int t : p.upset(s)) {
      if (t == s) {
        f.at(s, s) = 1;
        continue;
      }
      Polynomial q;
      for (int w : p.upset(s))
        if (w != s && p.leq(w, t)) q.add_product(k(s, w), f(w, t));
      f.at(s, t) = solve_low_half(q, p.interval_rank(s, t));
    }
  }
  return f;
}

IncidenceFunction compute_left_kls(const IncidenceFunction& k) {
  const Poset& p = k.poset();
  IncidenceFunction g(p);
  // g * kernel = g^rev, i.e. rev(g_st) - g_st = sum_{s <= w < t} g_sw k_wt.
  for (int s : p.linear_order()) {
    for (int t : p.upset(s)) {
      if (t == s) {
        g.at(s, s) = 1;
        continue;
      }
      Polynomial q;
      for (int w : p.upset(s))
        if (w != t && p.leq(w, t)) q.add_product(g(s, w), k(w, t));
      g.at(s, t) = solve_low_half(q, p.interval_rank(s, t));
    }
  }
  return g;
}

IncidenceFunction compute_chow(const IncidenceFunction& k) {
  const Poset& p = k.poset();
  auto bar = IncidenceFunction::tabulate(p, [&](int s, int t) {
    if (s == t) return Polynomial(-1);
    try {
      return exact_div_x_minus_1(k(s, t));
    } catch (const Error&) {
      throw Error("kernel violates (x-1)-divisibility");
    }
  });
  return -invert(bar);
}

}  // namespace

KernelContext::KernelContext(IncidenceFunction kernel) {
  if (!is_kernel(kernel)) throw InputError("not a kernel");
  state_ = std::make_shared<State>(std::move(kernel));
}

KernelContext KernelContext::characteristic(const Poset& p) {
  return KernelContext(std::make_shared<State>(characteristic_kernel(p)));
}

KernelContext KernelContext::eulerian(const Poset& p) { return KernelContext(eulerian_kernel(p)); }

const Poset& KernelContext::poset() const { return state_->kernel.poset(); }
const IncidenceFunction& KernelContext::kernel() const { return state_->kernel; }

const IncidenceFunction& KernelContext::right_kls() const {
  return cached(state_->f_once, state_->f, [&] { return compute_right_kls(state_->kernel); });
}

const IncidenceFunction& KernelContext::left_kls() const {
  return cached(state_->g_once, state_->g, [&] { return compute_left_kls(state_->kernel); });
}

const IncidenceFunction& KernelContext::chow() const {
  return cached(state_->h_once, state_->h, [&] { return compute_chow(state_->kernel); });
}

const IncidenceFunction& KernelContext::right_augmented() const {
  return cached(state_->ff_once, state_->ff, [&] { return chow() * rev(right_kls()); });
}

const IncidenceFunction& KernelContext::left_augmented() const {
  return cached(state_->gg_once, state_->gg, [&] { return rev(left_kls()) * chow(); });
}

const IncidenceFunction& KernelContext::z() const {
  return cached(state_->z_once, state_->z, [&] { return rev(left_kls()) * right_kls(); });
}

const KernelContext& KernelContext::dual() const {
  std::call_once(state_->dual_once, [&] {
    state_->dual.emplace(KernelContext(std::make_shared<State>(sgn(rev(state_->kernel)))));
  });
  return *state_->dual;
}

Polynomial dual_chow_polynomial(const Poset& p) { return KernelContext::characteristic(p).dual().chow().value(); }

Polynomial chow_polynomial(const Poset& p) { return KernelContext::characteristic(p).chow().value(); }

namespace {

// (x^r - x) / (x - 1)
Polynomial chain_factor(int r) { return r < 2 ? Polynomial() : Polynomial::x() * Polynomial::geometric(r - 2); }

}  // namespace

Polynomial dual_chow_chain_formula(const Poset& p, int s, int t) {
  if (!p.leq(s, t)) throw Error("interval endpoints are not comparable");
  Polynomial total;
  std::vector<int> chain;
  // Extends a chain whose last element is `last` towards t, carrying its weight.
  std::function<void(int, const Polynomial&)> extend = [&](int last, const Polynomial& weight) {
    if (last == t) {
      total += weight;
      return;
    }
    for (int c : p.upset(last)) {
      if (c == last || !p.leq(c, t)) continue;
      const Integer& m = p.mobius(last, c);
      if (m == 0) continue;
      Polynomial factor = chain_factor(p.interval_rank(last, c));
      if (factor.is_zero()) continue;
      extend(c, weight * (factor * m));
    }
  };
  for (int c0 : p.upset(s)) {
    if (!p.leq(c0, t) || p.mobius(s, c0) == 0) continue;
    extend(c0, Polynomial(p.mobius(s, c0)));
  }
  return p.interval_rank(s, t) % 2 == 0 ? total : -total;
}

Polynomial dual_chow_chain_formula(const Poset& p) { return dual_chow_chain_formula(p, p.bottom(), p.top()); }

IncidenceFunction fstar_inverse(const Poset& p) {
  return IncidenceFunction::tabulate(p, [&](int s, int t) {
    const int r = p.interval_rank(s, t);
    Polynomial g = Polynomial::geometric(r);
    return r % 2 == 0 ? g : -g;
  });
}

IncidenceFunction mu_tilde(const Poset& p) {
  return IncidenceFunction::tabulate(p, [&](int s, int t) {
    if (s == t) return Polynomial(1);
    const int r = p.interval_rank(s, t);
    Polynomial m = Polynomial::monomial(p.mobius(s, t), r - 1);
    return (r - 1) % 2 == 0 ? m : -m;
  });
}

namespace {

std::string interval_name(const Poset& p, int s, int t) { return "[" + p.label(s) + ", " + p.label(t) + "]"; }

void expect_rev_invariant(VerificationReport& report, const std::string& name, const IncidenceFunction& a) {
  try {
    report.expect_equal(name, rev(a), a);
  } catch (const Error& e) {
    report.add(name, false, e.what());
  }
}

void expect_symmetric(VerificationReport& report, const std::string& name, const IncidenceFunction& h) {
  const Poset& p = h.poset();
  for (int i = 0; i < p.interval_count(); ++i) {
    auto [s, t] = p.interval_at(i);
    if (s == t) continue;
    const int d = p.interval_rank(s, t) - 1;
    if (h(s, t).degree() > d || !is_palindromic(h(s, t), d)) {
      report.add(name, false, "interval " + interval_name(p, s, t) + ": " + h(s, t).to_string());
      return;
    }
  }
  report.add(name, true);
}

void expect_kls_degree(VerificationReport& report, const std::string& name, const IncidenceFunction& f) {
  const Poset& p = f.poset();
  for (int i = 0; i < p.interval_count(); ++i) {
    auto [s, t] = p.interval_at(i);
    const bool ok = s == t ? f(s, t) == Polynomial(1) : 2 * f(s, t).degree() < p.interval_rank(s, t);
    if (!ok) {
      report.add(name, false, "interval " + interval_name(p, s, t) + ": " + f(s, t).to_string());
      return;
    }
  }
  report.add(name, true);
}

}  // namespace

VerificationReport kernel_identities(const KernelContext& ctx) {
  VerificationReport r;
  const IncidenceFunction& k = ctx.kernel();
  const auto& f = ctx.right_kls();
  const auto& g = ctx.left_kls();
  const auto& h = ctx.chow();
  const auto& ff = ctx.right_augmented();
  const auto& gg = ctx.left_augmented();
  const auto& z = ctx.z();
  const KernelContext& d = ctx.dual();

  expect_kls_degree(r, "right KLS degree bound", f);
  expect_kls_degree(r, "left KLS degree bound", g);
  r.expect_equal("kernel = f^rev f^-1", k, rev(f) * invert(f));
  r.expect_equal("kernel = g^-1 g^rev", k, invert(g) * rev(g));
  r.expect_equal("H kappa_bar = -delta", h * kappa_bar(k), -delta(k.poset()));
  expect_symmetric(r, "H symmetric", h);
  expect_symmetric(r, "H* symmetric", d.chow());
  expect_rev_invariant(r, "F rev-invariant", ff);
  expect_rev_invariant(r, "G rev-invariant", gg);
  expect_rev_invariant(r, "Z rev-invariant", z);
  r.expect_equal("Z = g f^rev", z, g * rev(f));
  r.expect_equal("f* = sgn(g^-1)", d.right_kls(), sgn(invert(g)));
  r.expect_equal("g* = sgn(f^-1)", d.left_kls(), sgn(invert(f)));
  r.expect_equal("Z* = sgn(Z^-1)", d.z(), sgn(invert(z)));
  r.expect_equal("F* sgn(G) = H* sgn(H)", d.right_augmented() * sgn(gg), d.chow() * sgn(h));
  r.expect_equal("sgn(F) G* = sgn(H) H*", sgn(ff) * d.left_augmented(), sgn(h) * d.chow());
  return r;
}

VerificationReport hstar_fstar_bridge(const KernelContext& ctx) {
  VerificationReport r;
  const Poset& p = ctx.poset();
  const auto& hs = ctx.dual().chow();
  const auto& fs = ctx.dual().right_augmented();
  auto neg_x_power = [&](int s, int t) {
    const int rho = p.interval_rank(s, t);
    return Polynomial::monomial(rho % 2 == 0 ? 1 : -1, rho);
  };
  auto b1 = IncidenceFunction::tabulate(p, [&](int s, int t) { return neg_x_power(s, t) * p.mobius(s, t); });
  auto b2 = IncidenceFunction::tabulate(p, neg_x_power);
  r.expect_equal("F* = H* ((-x)^rho mu)", fs, hs * b1);
  r.expect_equal("H* = F* (-x)^rho", hs, fs * b2);
  auto lhs = fs * sgn(zeta(p));
  auto rhs = IncidenceFunction::tabulate(p, [&](int s, int t) {
    return s == t ? lhs(s, t) : Polynomial::x() * hs(s, t);
  });
  r.expect_equal("x H* = F* sgn(zeta) off the diagonal", lhs, rhs);
  return r;
}

VerificationReport characteristic_identities(const KernelContext& ctx) {
  VerificationReport r;
  const Poset& p = ctx.poset();
  const auto& hs = ctx.dual().chow();
  r.expect_equal("g = zeta", ctx.left_kls(), zeta(p));
  r.expect_equal("f* = sgn(mu)", ctx.dual().right_kls(), sgn(mobius(p)));

  bool lead_ok = true;
  bool chain_ok = true;
  bool alternating = true;
  for (int i = 0; i < p.interval_count() && (lead_ok || chain_ok); ++i) {
    auto [s, t] = p.interval_at(i);
    const int rho = p.interval_rank(s, t);
    if (s != t && lead_ok) {
      const Integer expected = rho % 2 == 0 ? p.mobius(s, t) : Integer(-p.mobius(s, t));
      if (hs(s, t).coeff(rho - 1) != expected) {
        lead_ok = false;
        r.add("leading coefficient of H* is (-1)^rho mu", false,
              "interval " + interval_name(p, s, t) + ": " + hs(s, t).to_string());
      }
    }
    if (chain_ok) {
      Polynomial chain = dual_chow_chain_formula(p, s, t);
      if (chain != hs(s, t)) {
        chain_ok = false;
        r.add("H* = chain formula", false,
              "interval " + interval_name(p, s, t) + ": lhs = " + hs(s, t).to_string() + ", rhs = " + chain.to_string());
      }
    }
    const Integer signed_mu = rho % 2 == 0 ? p.mobius(s, t) : Integer(-p.mobius(s, t));
    if (signed_mu < 0) alternating = false;
  }
  if (lead_ok) r.add("leading coefficient of H* is (-1)^rho mu", true);
  if (chain_ok) r.add("H* = chain formula", true);

  r.expect_equal("F* = (closed-form inverse)^-1", ctx.dual().right_augmented(), invert(fstar_inverse(p)));
  r.merge(hstar_fstar_bridge(ctx));

  if (alternating) {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < p.interval_count() && ok; ++i) {
      auto [s, t] = p.interval_at(i);
      if (!is_nonnegative(hs(s, t)) || !is_unimodal(hs(s, t))) {
        ok = false;
        detail = "interval " + interval_name(p, s, t) + ": " + hs(s, t).to_string();
      }
    }
    r.add("alternating Mobius signs give nonnegative unimodal H*", ok, detail);
  }
  return r;
}

VerificationReport operation_identities(const Poset& p, const Poset& q) {
  if (!is_graded(p) || !is_graded(q)) throw InputError("operation identities require graded posets");
  VerificationReport r;
  auto hstar = [](const Poset& x) { return KernelContext::characteristic(x).dual().chow(); };
  auto fstar = [](const Poset& x) { return KernelContext::characteristic(x).dual().right_augmented().value(); };

  const IncidenceFunction hp = hstar(p);
  const IncidenceFunction hq = hstar(q);

  auto aug_sum = [](const IncidenceFunction& h) {
    const Poset& x = h.poset();
    Polynomial sum;
    for (int w = 0; w < x.size(); ++w) sum += x.rank(w) % 2 == 0 ? h(w, x.top()) : -h(w, x.top());
    return sum;
  };
  const Polynomial haug_q = hstar(aug(q)).value();
  r.expect_equal("H*(aug P) = sum (-1)^rho(w) H*_[w,1]", hstar(aug(p)).value(), aug_sum(hp));
  r.expect_equal("H*(aug Q) = sum (-1)^rho(w) H*_[w,1]", haug_q, aug_sum(hq));

  if (p.rank() > 0) {
    r.expect_equal("H*(P * Q) = H*(P) H*(aug Q)", hstar(join(p, q)).value(), hp.value() * haug_q);
    r.expect_equal("H*(aug_top P) = 0", hstar(aug_top(p)).value(), Polynomial());
    r.expect_equal("x H*(P) = F*(aug_top P)", Polynomial::x() * hp.value(), fstar(aug_top(p)));
  }
  if (q.rank() > 0) r.expect_equal("H*(aug_top Q) = 0", hstar(aug_top(q)).value(), Polynomial());
  r.expect_equal("F*(P) = F*(dual P)", fstar(p), fstar(dual(p)));
  r.expect_equal("F*(Q) = F*(dual Q)", fstar(q), fstar(dual(q)));

  // Product elements are laid out as i * |Q| + j.
  const Poset pq = product(p, q);
  const IncidenceFunction hpq = hstar(pq);
  const int m = q.size();
  Polynomial sum;
  for (int s = 0; s < p.size(); ++s) {
    if (s == p.top()) continue;
    for (int t = 0; t < m; ++t) {
      if (t == q.top()) continue;
      sum += hpq(pq.bottom(), s * m + t) * hp(s, p.top()) * hq(t, q.top());
    }
  }
  r.expect_equal("H*(P x Q) product formula", hpq.value(), hp.value() * hq.value() + Polynomial::x() * sum);
  return r;
}

VerificationReport truncation_identities(const Poset& p) {
  if (!is_graded(p)) throw InputError("truncation identities require a graded poset");
  VerificationReport r;
  const KernelContext ctx = KernelContext::characteristic(p);
  const IncidenceFunction& hs = ctx.dual().chow();
  const IncidenceFunction mt = mu_tilde(p);
  const IncidenceFunction conv = hs * mt;
  const IncidenceFunction zt = invert(mt);
  const int bottom = p.bottom();

  std::vector<Polynomial> trunc_value(p.size());
  bool ok = true;
  std::string detail;
  for (int w : p.linear_order()) {
    const int rank = p.rank(w);
    Polynomial expected;
    if (rank == 0) {
      expected = 1;
    } else if (rank > 1) {
      trunc_value[w] = dual_chow_polynomial(truncate(p.interval(bottom, w)));
      expected = -trunc_value[w];
    }
    if (ok && conv(bottom, w) != expected) {
      ok = false;
      detail = "interval " + interval_name(p, bottom, w) + ": lhs = " + conv(bottom, w).to_string() +
               ", rhs = " + expected.to_string();
    }
  }
  r.add("(H* mu~) = 1, 0, -H*(trunc)", ok, detail);

  Polynomial rhs = zt.value();
  for (int w = 0; w < p.size(); ++w)
    if (p.rank(w) > 1) rhs -= trunc_value[w] * zt(w, p.top());
  r.expect_equal("H* from truncations of lower intervals", hs.value(), rhs);
  return r;
}

}  // namespace chowkit
