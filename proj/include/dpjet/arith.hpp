#pragma once

// Exact coefficient arithmetic: rationals, polynomials in q, and truncated
// power series in (q, t).

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <string>
#include <vector>

#include "dpjet/errors.hpp"

namespace dpjet {

using Integer = mpz_class;
using Rational = mpq_class;

/// "num/den" with the denominator always written, e.g. "3/1".
std::string to_fraction_string(const Rational& r);
Rational parse_fraction(const std::string& s);

/// Ordinary binomial coefficient; zero outside 0 <= b <= a.
Integer binomial(long a, long b);

/// Integer floor division (rounds toward negative infinity).
constexpr long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// ---------------------------------------------------------------------------
// QPolynomial

/// Polynomial in q with rational coefficients, stored densely by exponent.
/// The highest stored coefficient is never zero; the zero polynomial is empty.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);

  static QPolynomial monomial(std::size_t exp, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t exp) const;
  Rational eval(const Rational& q) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial shifted(std::size_t k) const;  // multiply by q^k

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Gaussian binomial [a choose b]_q. Zero when b < 0 or b > a (this also
/// covers negative a).
QPolynomial qbinom(long a, long b);

// ---------------------------------------------------------------------------
// BiSeries

/// Power series in (q, t) truncated modulo (q^{qmax+1}, t^{tmax+1}).
///
/// Coefficients live in a dense (tmax+1) x (qmax+1) table; every operation
/// re-truncates to the window. Binary operations require matching windows.
class BiSeries {
 public:
  BiSeries(int qmax, int tmax);

  static BiSeries one(int qmax, int tmax);
  /// c * q^i * t^j, or zero if outside the window.
  static BiSeries monomial(int qmax, int tmax, int i, int j, const Rational& c = 1);
  /// p(q) * q^qshift * t^tshift.
  static BiSeries from_qpoly(int qmax, int tmax, const QPolynomial& p, int qshift = 0,
                             int tshift = 0);

  int qmax() const { return qmax_; }
  int tmax() const { return tmax_; }

  const Rational& coeff(int i, int j) const;
  void set(int i, int j, const Rational& c);
  void add_to(int i, int j, const Rational& c);

  bool is_zero() const;
  std::size_t term_count() const;
  /// Largest q-exponent with a nonzero coefficient at t^j, or -1.
  int q_degree_at(int j) const;
  bool has_integer_coefficients() const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const Rational& c);
  BiSeries operator-() const;

  /// Multiply by q^a t^b (drops what leaves the window).
  BiSeries shifted(int a, int b) const;

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(BiSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const BiSeries& a, const BiSeries& b);

  /// Same series re-truncated into a smaller (or equal) window.
  BiSeries restricted(int qmax, int tmax) const;

  /// Specialize t -> q^k and return the q-series up to q^qmax. Only terms
  /// inside the stored window contribute.
  QPolynomial specialize_t(int k) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(qmax_ + 1) +
           static_cast<std::size_t>(i);
  }
  void require_same_window(const BiSeries& o, const char* op) const;

  int qmax_;
  int tmax_;
  std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// QTPolynomial

/// Exact polynomial in (q, t), used for graded Betti data. Keys are
/// (q-exponent, t-exponent); zero coefficients are never stored.
class QTPolynomial {
 public:
  using Key = std::pair<int, int>;

  QTPolynomial() = default;
  static QTPolynomial monomial(int i, int j, const Rational& c = 1);
  /// p(q) * q^qshift * t^tshift.
  static QTPolynomial from_qpoly(const QPolynomial& p, int qshift, int tshift);

  bool is_zero() const { return c_.empty(); }
  const std::map<Key, Rational>& terms() const { return c_; }
  Rational coeff(int i, int j) const;
  Rational eval(const Rational& q, const Rational& t) const;

  QTPolynomial& operator+=(const QTPolynomial& o);
  QTPolynomial& operator-=(const QTPolynomial& o);
  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
  friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }
  friend bool operator==(const QTPolynomial&, const QTPolynomial&) = default;

  /// Multiply by q^a t^b.
  QTPolynomial shifted(int a, int b) const;
  /// p(q, q^k t).
  QTPolynomial substitute_t(int k) const;
  /// Truncate into a series window.
  BiSeries to_series(int qmax, int tmax) const;

  /// Terms ordered by (t, q): "t^2 + q*t^2 + 2*q^3*t^4".
  std::string to_string() const;

 private:
  void add_term(const Key& k, const Rational& c);
  std::map<Key, Rational> c_;
};

enum class SeriesOp { add, sub, mul };

/// Ring operation on truncated series; throws ShapeMismatch on window mismatch.
BiSeries series_op(const BiSeries& a, const BiSeries& b, SeriesOp op);

/// s / (1 - q^a t^b) for a, b >= 0 not both zero.
BiSeries divide_by_unit(const BiSeries& s, int a, int b);

/// s(q, q^k t).
BiSeries substitute_t(const BiSeries& s, int k);

/// s * (1 - q^a t^b).
BiSeries multiply_by_binomial(const BiSeries& s, int a, int b);

}  // namespace dpjet
