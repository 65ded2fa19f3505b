#pragma once

// Constructions specific to the jet ideals I_n = <f_1, ..., f_n> of the double
// point: generators, shift operators, the syzygies mu_k and nu_ij, the
// recursive Gröbner basis with membership witnesses, and the predicted
// leading terms of the reduced basis.

#include <vector>

#include "dpjet/free_vector.hpp"
#include "dpjet/groebner.hpp"
#include "dpjet/polynomial.hpp"

namespace dpjet {

/// f_k = sum_{i=0}^{k-1} x_i x_{k-1-i} in R_n, for 1 <= k <= n.
Polynomial f(int k, int n);

/// All of f_1, ..., f_n in R_n.
std::vector<Polynomial> jet_generators(int n);

/// Leading monomial of f_k (monic): x_m^2 for k = 2m+1, x_m x_{m+1} for k = 2m+2.
Monomial f_leading_monomial(int k, int n);

/// S: R_n -> R_{n+1}, x_i -> x_{i+1}.
Polynomial shift_ring(const Polynomial& p);

/// S: F_n -> F_{n+2}, (a_1..a_n) -> (0, 0, S(a_1), ..., S(a_n)).
FreeVector shift_module(const FreeVector& v);

/// mu_k in F_n: slot j holds (3(j-1) - 2k) x_{k-j+1} for j <= k+1. Needs 0 < k < n.
FreeVector mu(int k, int n);

/// nu_ij = f_i e_j - f_j e_i in F_n, 1 <= i < j <= n.
FreeVector nu(int i, int j, int n);

/// sum_{i=0}^{m} (m - 3i) x_i f_{m+1-i} in R_{m+1}; identically zero.
Polynomial mu_relation(int m);

/// A polynomial together with an explicit expression poly = phi_n(witness).
struct WitnessedPoly {
  Polynomial poly;
  FreeVector witness;

  bool valid() const { return phi(witness) == poly; }
};

/// Modified shift: sum_i S(phi_i) f_{i+2}, carrying the shifted witness.
WitnessedPoly tilde_shift(const WitnessedPoly& w);

/// Witness for x_0 S^2(f_k) in F_n (k <= n-3), from
/// phi(S(mu_k)) = k x_{k+2} f_2 - (k+3) x_0 S^2(f_k).
FreeVector x0_double_shift_witness(int k, int n);

struct RecursiveBasis {
  int n = 0;
  std::vector<WitnessedPoly> elements;

  std::vector<Polynomial> polys() const;
};

/// G_1 = {f_1}, G_2 = {f_1, f_2},
/// G_n = x_0 S^2(G_{n-3}) + {f_1, f_2} + tilde_shift(G_{n-2}); G_0 is empty.
/// Elements are kept integer-primitive with positive leading coefficient and
/// listed in that order. Results are cached per n.
const RecursiveBasis& recursive_gb(int n);

/// Squarefree monomials of degree `deg` in x_lo..x_hi with no two adjacent
/// indices, as elements of R_ambient (ambient defaults to hi+1).
std::vector<Monomial> admissible_monomials(int deg, int lo, int hi, int ambient = -1);

/// Predicted degree-k leading monomials of the reduced basis of I_n (k > 2):
/// m * LT(f_{n+k-2}) for m admissible of degree k-2 in x_0..x_{floor((n+k-7)/2)}.
std::vector<Monomial> predicted_reduced_lt(int n, int k);

/// C(floor((n-k+1)/2), k-2).
long predicted_reduced_count(int n, int k);

struct CensusRow {
  int degree;
  long count;
  long predicted;  // -1 for degree 2 (no closed form; equals n)
};

/// Number of basis elements per t-degree next to the closed-form prediction.
std::vector<CensusRow> reduced_gb_census(const GroebnerBasis& reduced, int n);

/// reduce_basis(buchberger({f_1..f_n})); cached per n.
const GroebnerBasis& jet_reduced_basis(int n);

}  // namespace dpjet
