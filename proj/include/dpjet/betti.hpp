#pragma once

// Betti numbers of the minimal free resolution of R_n / I_n: rank recursion,
// binomial closed forms and the (q, t)-graded refinement.

#include <vector>

#include "dpjet/arith.hpp"

namespace dpjet {

struct BettiTable {
  int n = 0;
  std::vector<Integer> ranks;         // ranks[i] = b(i, n)
  std::vector<QTPolynomial> graded;   // graded[i] = b^(i, n); empty unless requested
};

/// b(i, n) from b(i,n) = b(i,n-1) + b(i-1,n-3) + b(i-2,n-3) with the
/// resolutions of R_1, R_2, R_3 as base data. Memoized.
Integer betti_rank(int i, int n);

/// Sum over p of C(n-2p+1,p) C(p,i-p) + C(n-2p-1,p) C(p,i-p-1).
Integer betti_closed_form(int i, int n);

/// b^(i, n) as an exact polynomial in (q, t).
QTPolynomial betti_graded(int i, int n);

/// Right-hand side of the graded recursion at (i, n), n >= 3.
QTPolynomial betti_graded_recursion_rhs(int i, int n);

/// max { i : b(i, n) != 0 }.
int proj_dim(int n);

/// Sum_i (-1)^i b^(i, n) == H_n * prod_{i<n} (1 - q^i t) in the (qmax, tmax) window.
bool alternating_sum_check(int n, int qmax, int tmax);

/// Sum_i (-1)^i b^(i, n) truncated to the window.
BiSeries betti_alternating_sum(int n, int qmax, int tmax);

BettiTable betti_table(int n, bool graded);

}  // namespace dpjet
