#pragma once

// Sparse polynomials over Q in x_0..x_{n-1}, bigraded by deg(x_i) = (i, 1),
// ordered by grevlex with x_0 > x_1 > ... > x_{n-1}.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpjet/arith.hpp"

namespace dpjet {

inline constexpr int kMaxVars = 64;

/// Exponent vector of fixed ambient length n with cached total degree.
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;
  explicit Monomial(int n);
  Monomial(int n, std::initializer_list<int> exps);
  Monomial(int n, std::span<const int> exps);

  /// x_var^power in R_n.
  static Monomial variable(int n, int var, int power = 1);

  int ambient() const { return n_; }
  int exp(int var) const { return e_[static_cast<std::size_t>(var)]; }
  void set_exp(int var, int value);
  std::vector<int> exponents() const;

  /// t-degree: sum of exponents.
  int degree() const { return deg_; }
  /// q-weight: sum of i * a_i.
  int weight() const;

  bool is_one() const { return deg_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  /// Re-embed in R_m (m >= n); extra variables get exponent 0. Throws if a
  /// nonzero exponent would be dropped.
  Monomial embedded(int m) const;
  /// x_i -> x_{i+k}, landing in R_{n+k}.
  Monomial shifted(int k) const;

  /// "x0*x2^2", or "1".
  std::string to_string() const;

 private:
  int n_ = 0;
  int deg_ = 0;
  std::array<Exponent, kMaxVars> e_{};
};

enum class Ordering { less = -1, equal = 0, greater = 1 };

/// Graded reverse lexicographic comparison. Throws ShapeMismatch when the
/// ambient lengths differ.
Ordering grevlex_cmp(const Monomial& a, const Monomial& b);

/// All monomials of R_n with q-weight qdeg and t-degree tdeg, in decreasing
/// grevlex order.
std::vector<Monomial> monomials_of_bidegree(int n, int qdeg, int tdeg);

/// Strict-weak ordering functor: true when a is grevlex-greater than b.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial with terms kept in strictly decreasing grevlex order and no
/// zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}
  Polynomial(int n, std::vector<Term> terms);  // normalizes

  static Polynomial constant(int n, const Rational& c);
  static Polynomial variable(int n, int var, const Rational& c = 1);
  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Leading term under grevlex; throws DomainError on zero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Rational coeff(const Monomial& m) const;

  /// True when all terms share one bidegree (or the polynomial is zero).
  bool is_bihomogeneous() const;
  /// (q-weight, t-degree) of the leading term.
  std::pair<int, int> bidegree() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// c * m * this.
  Polynomial mul_term(const Monomial& m, const Rational& c = 1) const;

  /// a * this + b * m * g, computed in one merge pass.
  Polynomial axpy(const Rational& a, const Rational& b, const Monomial& m,
                  const Polynomial& g) const;

  /// Scale to integer coefficients with gcd 1 and positive leading coefficient.
  /// Returns the factor that was applied.
  Rational make_primitive();
  /// Scale so the leading coefficient is 1.
  void make_monic();
  void drop_leading();

  Polynomial embedded(int m) const;
  /// Ring shift S^k: x_i -> x_{i+k}, landing in R_{n+k}.
  Polynomial shifted(int k = 1) const;

  /// "2*x0*x4 + 2*x1*x3 + x2^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();
  int n_ = 0;
  std::vector<Term> terms_;
};

enum class RingOp { add, sub, mul };

/// Ring operation; throws ShapeMismatch across ambient rings.
Polynomial ring_op(const Polynomial& a, const Polynomial& b, RingOp op);
Polynomial scale(const Polynomial& a, const Rational& c);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: the current leading monomial is reduced by the
/// first divisor (in list order) whose leading monomial divides it, otherwise
/// it moves to the remainder. p = sum q_i g_i + r holds exactly.
Division reduce(const Polynomial& p, std::span<const Polynomial> divisors);

/// Remainder only; avoids building quotients.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors);

/// (L / LT(g1)) g1 - (L / LT(g2)) g2 with L the lcm of the leading terms
/// (coefficients included), so the leading terms cancel.
Polynomial s_polynomial(const Polynomial& g1, const Polynomial& g2);

}  // namespace dpjet
