#pragma once

#include <string>
#include <vector>

#include "dpjet/polynomial.hpp"

namespace dpjet {

/// Element of the free module F_n = R_n e_1 + ... + R_n e_n. Slot k (1-based)
/// is stored at index k-1; e_k carries bidegree (k-1, 2).
class FreeVector {
 public:
  FreeVector() = default;
  /// Zero vector in F_n.
  explicit FreeVector(int n);
  explicit FreeVector(std::vector<Polynomial> entries);

  /// p * e_slot in F_n.
  static FreeVector basis(int n, int slot, const Polynomial& p);

  int ambient() const { return n_; }
  int length() const { return static_cast<int>(entries_.size()); }

  /// 1-based slot access.
  const Polynomial& operator[](int slot) const { return entries_.at(static_cast<std::size_t>(slot - 1)); }
  Polynomial& operator[](int slot) { return entries_.at(static_cast<std::size_t>(slot - 1)); }
  const std::vector<Polynomial>& entries() const { return entries_; }

  bool is_zero() const;
  /// True when every nonzero slot k has entries of bidegree (qdeg-(k-1), tdeg-2)
  /// for a single (qdeg, tdeg). Zero vectors count as homogeneous.
  bool is_bihomogeneous() const;

  FreeVector& operator+=(const FreeVector& o);
  FreeVector& operator-=(const FreeVector& o);
  FreeVector& operator*=(const Rational& c);
  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
  friend FreeVector operator*(FreeVector a, const Rational& c) { return a *= c; }
  friend FreeVector operator*(const Polynomial& p, const FreeVector& v);
  friend bool operator==(const FreeVector&, const FreeVector&) = default;

  /// Image under F_n -> F_m (m >= n), e_k -> e_k.
  FreeVector embedded(int m) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Polynomial> entries_;
};

/// phi_n(a_1, ..., a_n) = a_1 f_1 + ... + a_n f_n.
Polynomial phi(const FreeVector& v);

}  // namespace dpjet
