#include <chowkit/poly.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace chowkit {

Polynomial::Polynomial(int c) : Polynomial(Integer(c)) {}

Polynomial::Polynomial(Integer c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

Polynomial::Polynomial(std::initializer_list<int> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (int c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(Integer c, int k) {
  if (k < 0) throw Error("negative exponent in monomial");
  Polynomial p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Integer(0));
  p.coeffs_.back() = std::move(c);
  return p;
}

Polynomial Polynomial::geometric(int k) {
  if (k < 0) return {};
  return Polynomial(std::vector<Integer>(static_cast<std::size_t>(k) + 1, Integer(1)));
}

Polynomial Polynomial::binomial_power(int c, int k) {
  std::vector<Integer> out(static_cast<std::size_t>(k) + 1);
  Integer cpow = 1;
  for (int j = k; j >= 0; --j) {
    out[j] = binomial(k, j) * cpow;
    cpow *= c;
  }
  return Polynomial(std::move(out));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

const Integer& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer Polynomial::evaluate(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<int>(k);
  return Polynomial(std::move(out));
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c /= g;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.add_product(a, b);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < need) coeffs_.resize(need);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  trim();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

std::string render(const std::vector<Integer>& coeffs, char var, const char* plus, const char* minus) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? minus : plus);
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

std::string Polynomial::to_string(char var) const { return render(coeffs_, var, " + ", " - "); }

std::string Polynomial::to_compact_string(char var) const { return render(coeffs_, var, "+", "-"); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial reverse(const Polynomial& p, int r) {
  if (p.degree() > r) throw Error("degree exceeds reversal rank");
  if (p.is_zero()) return {};
  std::vector<Integer> out(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= p.degree(); ++k) out[r - k] = p.coeff(k);
  return Polynomial(std::move(out));
}

Polynomial exact_div_x_minus_1(const Polynomial& p) {
  if (p.evaluate(1) != 0) throw Error("not divisible by x-1");
  if (p.is_zero()) return {};
  // Synthetic division by (x - 1), top down.
  const int d = p.degree();
  std::vector<Integer> q(static_cast<std::size_t>(d));
  Integer carry = 0;
  for (int k = d; k >= 1; --k) {
    carry += p.coeff(k);
    q[k - 1] = carry;
  }
  return Polynomial(std::move(q));
}

namespace {

// Returns (quotient, remainder) of a / b over Q, requiring integral quotient
// steps; throws on a non-integral step.
std::pair<Polynomial, Polynomial> divmod_integral(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Integer& lb = b.leading();
  int dr = a.degree();
  std::vector<Integer> quot(dr >= db ? static_cast<std::size_t>(dr - db) + 1 : 0);
  while (dr >= db) {
    if (rem[dr] == 0) {
      --dr;
      continue;
    }
    Integer q;
    Integer r;
    divide_qr(rem[dr], lb, q, r);
    if (r != 0) throw Error("inexact polynomial division");
    const int shift = dr - db;
    quot[shift] = q;
    for (int k = 0; k <= db; ++k) rem[shift + k] -= q * b.coeff(k);
    --dr;
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

// Pseudo-remainder r with c * a = q * b + r for some c = lc(b)^e, e >= 0;
// also reports whether c is negative.
std::pair<Polynomial, bool> pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  const int db = b.degree();
  const Integer lb = b.leading();
  bool negative = false;
  while (!r.is_zero() && r.degree() >= db) {
    Polynomial shifted = Polynomial::monomial(r.leading(), r.degree() - db) * b;
    r *= lb;
    r -= shifted;
    if (lb < 0) negative = !negative;
  }
  return {r, negative};
}

int sign(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  auto [q, r] = divmod_integral(p, d);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

bool is_palindromic(const Polynomial& p, int d) {
  if (p.is_zero()) return true;
  if (p.degree() > d) return false;
  return reverse(p, d) == p;
}

bool is_unimodal(const Polynomial& p) {
  auto c = p.coeffs();
  std::size_t k = 1;
  while (k < c.size() && c[k] >= c[k - 1]) ++k;
  while (k < c.size() && c[k] <= c[k - 1]) ++k;
  return k >= c.size();
}

bool is_nonnegative(const Polynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c >= 0; });
}

Polynomial GammaExpansion::reconstruct() const {
  Polynomial out;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i] == 0) continue;
    const int e = center_degree - 2 * static_cast<int>(i);
    out += Polynomial::monomial(gammas[i], static_cast<int>(i)) * Polynomial::binomial_power(1, e);
  }
  return out;
}

bool GammaExpansion::is_nonnegative() const {
  return std::all_of(gammas.begin(), gammas.end(), [](const Integer& g) { return g >= 0; });
}

Polynomial GammaExpansion::as_polynomial() const { return Polynomial(gammas); }

GammaExpansion gamma_expansion(const Polynomial& p, int d) {
  if (d < 0) throw Error("negative symmetry degree");
  if (!is_palindromic(p, d)) throw Error("gamma expansion of a non-palindromic polynomial");
  GammaExpansion g;
  g.center_degree = d;
  g.gammas.assign(static_cast<std::size_t>(d / 2) + 1, Integer(0));
  Polynomial rest = p;
  for (int i = 0; i <= d / 2; ++i) {
    Integer c = rest.coeff(i);
    g.gammas[i] = c;
    if (c != 0) rest -= Polynomial::monomial(c, i) * Polynomial::binomial_power(1, d - 2 * i);
  }
  if (!rest.is_zero()) throw Error("gamma expansion left a nonzero remainder");
  return g;
}

Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a.primitive_part();
  Polynomial v = b.primitive_part();
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Polynomial r = pseudo_remainder(u, v).first.primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  return u.primitive_part();
}

std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw Error("square-free decomposition of the zero polynomial");
  std::vector<Polynomial> factors;
  if (p.degree() == 0) return factors;
  const Polynomial dp = p.derivative();
  const Polynomial a0 = primitive_gcd(p, dp);
  Polynomial b = divide_exact(p, a0);
  Polynomial c = divide_exact(dp, a0);
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial a = primitive_gcd(b, d);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
    factors.push_back(a.primitive_part());
  }
  return factors;
}

namespace {

int sturm_distinct_roots(const Polynomial& squarefree) {
  if (squarefree.degree() <= 0) return 0;
  std::vector<Polynomial> seq{squarefree, squarefree.derivative()};
  while (seq.back().degree() > 0) {
    auto [r, negative] = pseudo_remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    // Sturm needs -rem up to a positive factor.
    if (!negative) r = -r;
    Integer g = r.content();
    if (g > 1) {
      std::vector<Integer> cs(r.coeffs().begin(), r.coeffs().end());
      for (auto& c : cs) c /= g;
      r = Polynomial(std::move(cs));
    }
    seq.push_back(std::move(r));
  }
  auto changes = [&](bool at_minus_infinity) {
    int count = 0;
    int prev = 0;
    for (const auto& s : seq) {
      int sg = sign(s.leading());
      if (at_minus_infinity && s.degree() % 2 == 1) sg = -sg;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  };
  return changes(true) - changes(false);
}

}  // namespace

int count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error("real roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  const Polynomial g = primitive_gcd(p, p.derivative());
  return sturm_distinct_roots(divide_exact(p.primitive_part(), g));
}

bool is_real_rooted(const Polynomial& p) {
  if (p.is_zero()) throw Error("real roots of the zero polynomial");
  const auto factors = square_free_decomposition(p);
  int with_multiplicity = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    with_multiplicity += static_cast<int>(i + 1) * sturm_distinct_roots(factors[i]);
  return with_multiplicity == p.degree();
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Polynomial eulerian(int n) {
  if (n < 0) throw Error("negative Eulerian index");
  // Triangle recurrence A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
  std::vector<Integer> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m), Integer(0));
    for (int k = 0; k < m; ++k) {
      if (k < static_cast<int>(row.size())) next[k] += (k + 1) * row[k];
      if (k >= 1) next[k] += (m - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return Polynomial(std::move(row));
}

Polynomial binomial_eulerian(int n) {
  if (n < 0) throw Error("negative Eulerian index");
  Polynomial sum;
  for (int k = 1; k <= n; ++k) sum += binomial(n, k) * eulerian(k);
  return Polynomial(1) + Polynomial::x() * sum;
}

}  // namespace chowkit
