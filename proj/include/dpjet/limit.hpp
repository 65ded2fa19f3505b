#pragma once

// The n -> infinity limit: fermionic and bosonic limit series, stabilization
// of H_n, Rogers-Ramanujan specializations and Gröbner bases at infinity.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpjet/arith.hpp"
#include "dpjet/polynomial.hpp"

namespace dpjet {

enum class LimitSource { fermionic_inf, bosonic_inf, stabilized };

struct LimitSeries {
  BiSeries series;
  LimitSource source;
};

/// sum_p q^{p(p-1)} t^p / ((1-q)...(1-q^p)).
BiSeries hilbert_infinity_fermionic(int qmax, int tmax);

/// Alternating sum over prod_{i>=0} (1 - q^i t).
BiSeries hilbert_infinity_bosonic(int qmax, int tmax);

struct StabilizationReport {
  bool ok = false;
  /// First n with H_n = H_{n+1} = H_{n+2} on the window, if found.
  std::optional<int> threshold;
  bool matches_infinity = false;
  LimitSeries limit{BiSeries(0, 0), LimitSource::stabilized};
};

/// Increase n until two consecutive H_n agree on the window, confirm with one
/// more step, then compare against the fermionic limit.
StabilizationReport stabilization_report(int qmax, int tmax, int max_n = 200);
bool stabilization_check(int qmax, int tmax);

enum class RRSpecialization { t_equals_1, t_equals_q };
std::string_view to_string(RRSpecialization s);

enum class RRProduct {
  G,      // prod 1/((1-q^{5k+1})(1-q^{5k+4}))
  H,      // prod 1/((1-q^{5k+2})(1-q^{5k+3}))
  G_plus_H,
};
std::string_view to_string(RRProduct p);

/// Expansion of the product (or sum of products) up to q^qmax by counting
/// partitions into parts from the residue classes mod 5.
std::vector<Integer> rr_product_expansion(RRProduct p, int qmax);

struct RRResult {
  RRSpecialization which;
  std::vector<Integer> lhs;
  std::vector<Integer> rhs;         // expansion of the matching candidate, or empty
  std::optional<RRProduct> match;   // first candidate agreeing to q^qmax
  std::vector<RRProduct> all_matches;
  bool equal = false;
};

RRResult rr_specialize(RRSpecialization which, int qmax);

/// Leading monomials of the reduced basis of I_n of weight <= max_qweight that
/// are not leading monomials of some f_k.
std::vector<Monomial> extra_leading_terms(int n, int max_qweight);

/// Smallest N <= max_n such that S(f_i, f_{i+1}) reduces to zero modulo
/// {f_1..f_N} (in R_ambient), or nullopt.
std::optional<int> s_pair_reduction_prefix(int i, int ambient, int max_n);

struct GbStabilizationReport {
  bool ok = false;
  int n_checked = 12;
  std::vector<Monomial> extra_in_window;      // at n_checked
  std::optional<int> threshold;               // smallest n after which no extras fall in the window
  std::vector<std::optional<int>> prefixes;   // prefixes[i-1] for S(f_i, f_{i+1}), i = 1..max_pair
};

GbStabilizationReport gb_stabilization_report(int max_qweight, int n_checked = 12, int max_pair = 8);
bool gb_stabilization_check(int max_qweight);

}  // namespace dpjet
