#pragma once

// Cross-validation steps shared by the CLI `verify` command. Each step
// reports the first discrepancy it finds.

#include <string>

#include "dpjet/arith.hpp"
#include "dpjet/syzygy.hpp"

namespace dpjet {

struct CheckResult {
  bool ok = true;
  std::string detail;  // first discrepancy, or a short summary when ok
};

/// "at q^i t^j: a vs b" for the first differing coefficient, or empty.
std::string first_difference(const BiSeries& a, const BiSeries& b);

/// Recursive, fermionic, bosonic and staircase agree on (qmax, tmax); the
/// linear oracle is compared on (oracle_qmax, oracle_tmax) when oracle_tmax >= 0.
CheckResult check_hilbert_agreement(int n, int qmax, int tmax, int oracle_qmax = -1, int oracle_tmax = -1);

/// Degree counts of the reduced basis of I_n against C(floor((n-k+1)/2), k-2).
CheckResult check_census(int n);

/// recursive_gb(n): witnesses valid, Buchberger criterion, same leading-term
/// ideal as the reduced basis.
CheckResult check_recursive_basis(int n);

/// Rank recursion vs closed form, graded recursion, graded ranks at (1,1),
/// projective dimension and the alternating sum on (qmax, tmax).
CheckResult check_betti(int n, int qmax, int tmax);

/// generation_check with and without nu_{1,j}, nu_{2,j}.
CheckResult check_syzygy_generation(int n, int qmax, int tmax, const SyzygyCaps& caps);

}  // namespace dpjet
