#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.

#include <chowkit/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace chowkit {

using Integer = boost::multiprecision::cpp_int;

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c);  // NOLINT(google-explicit-constructor)
  Polynomial(Integer c);  // NOLINT(google-explicit-constructor)
  Polynomial(std::initializer_list<int> coeffs);
  explicit Polynomial(std::vector<Integer> coeffs);

  static Polynomial monomial(Integer c, int k);
  static Polynomial x() { return monomial(1, 1); }
  // 1 + x + ... + x^k; zero when k < 0.
  static Polynomial geometric(int k);
  // (x + c)^k
  static Polynomial binomial_power(int c, int k);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Coefficient of x^k, zero outside the stored range.
  Integer coeff(int k) const;
  const Integer& leading() const;
  std::span<const Integer> coeffs() const { return coeffs_; }

  Integer evaluate(const Integer& at) const;
  // this(q(x))
  Polynomial compose(const Polynomial& q) const;
  Polynomial derivative() const;
  Integer content() const;
  Polynomial primitive_part() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);
  // this += a * b without materialising the product.
  void add_product(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Ascending powers with explicit signs, e.g. "1 - 2x + x^2".
  std::string to_string(char var = 'x') const;
  // Same without spaces, e.g. "1+y" (used inside ab-polynomial coefficients).
  std::string to_compact_string(char var = 'y') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// x^r * p(1/x). Throws when deg p > r.
Polynomial reverse(const Polynomial& p, int r);

// q with (x - 1) q = p. Throws "not divisible by x-1" when p(1) != 0.
Polynomial exact_div_x_minus_1(const Polynomial& p);

// Exact quotient p / d over Z[x]; throws when the division leaves a remainder
// or a non-integral quotient.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);

bool is_palindromic(const Polynomial& p, int d);
bool is_unimodal(const Polynomial& p);
bool is_nonnegative(const Polynomial& p);

struct GammaExpansion {
  int center_degree = 0;
  std::vector<Integer> gammas;

  // sum_i gamma_i x^i (1+x)^(d-2i)
  Polynomial reconstruct() const;
  bool is_nonnegative() const;
  // gamma(f; x) = sum_i gamma_i x^i
  Polynomial as_polynomial() const;
  friend bool operator==(const GammaExpansion&, const GammaExpansion&) = default;
};

GammaExpansion gamma_expansion(const Polynomial& p, int d);

// Primitive polynomial gcd over Z[x] (positive leading coefficient).
Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b);

// Yun decomposition: p = c * prod_i factors[i]^(i+1), each factor primitive
// and square-free.
std::vector<Polynomial> square_free_decomposition(const Polynomial& p);

// Distinct real roots, via a Sturm sequence on the square-free part.
int count_real_roots(const Polynomial& p);
// Real roots counted with multiplicity equal the degree.
bool is_real_rooted(const Polynomial& p);

Integer binomial(int n, int k);
Integer factorial(int n);

// A_n(x) = sum over S_n of x^des(w); A_0 = 1.
Polynomial eulerian(int n);
// 1 + x sum_{k=1..n} C(n,k) A_k(x); A~_0 = 1.
Polynomial binomial_eulerian(int n);

}  // namespace chowkit
