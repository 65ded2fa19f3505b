#pragma once

// Slice-wise linear algebra on the free module F_n: kernel of phi_n, spans of
// submodules, and the ideal decomposition of I_n intersected with x_0 R_n.

#include <cstddef>
#include <optional>
#include <vector>

#include "dpjet/free_vector.hpp"

namespace dpjet {

struct SyzygyCaps {
  int max_n = 6;
  int max_qdeg = 20;
  int max_tdeg = 6;
  /// Largest slice (number of columns) any single elimination may touch.
  std::size_t max_slice_dim = 50000;
};

/// Bidegree of a nonzero bihomogeneous FreeVector (e_k has bidegree (k-1, 2)).
std::pair<int, int> free_bidegree(const FreeVector& v);

/// dim of the (qdeg, tdeg) slice of Ker(phi_n).
std::size_t kernel_dim(int n, int qdeg, int tdeg, const SyzygyCaps& caps = {});

/// dim of the (qdeg, tdeg) slice of the submodule of F_n generated by gens.
std::size_t submodule_dim(const std::vector<FreeVector>& gens, int n, int qdeg, int tdeg,
                          const SyzygyCaps& caps = {});

/// All mu_k (0 < k < n) and nu_ij; without nu_{1,j}, nu_{2,j} when drop_nu12.
std::vector<FreeVector> syzygy_generators(int n, bool drop_nu12 = false);

struct SliceDims {
  int qdeg;
  int tdeg;
  std::size_t kernel;
  std::size_t submodule;
};

struct GenerationReport {
  bool ok = true;
  std::vector<SliceDims> slices;
  std::optional<SliceDims> first_mismatch;
};

GenerationReport generation_report(int n, int max_qdeg, int max_tdeg, bool drop_nu12,
                                   const SyzygyCaps& caps = {});

/// Kernel slices equal the span of {mu_k, nu_ij} throughout the window, both
/// with all nu_ij and with nu_{1,j}, nu_{2,j} removed.
bool generation_check(int n, int max_qdeg, int max_tdeg, const SyzygyCaps& caps = {});

struct DecompositionSlice {
  int qdeg;
  int tdeg;
  std::size_t lhs;  // dim (I_n cap x_0 R_n)
  std::size_t rhs;  // dim (x_0 S^2(I_{n-3}) R_n + <f_1, f_2>)
};

/// Slice dimensions of both sides of I_n cap x_0 R_n = x_0 S^2(I_{n-3})[x_{n-1}] + <f_1, f_2>.
std::vector<DecompositionSlice> decomposition_slices(int n, int max_qdeg, int max_tdeg,
                                                     const SyzygyCaps& caps = {});
bool decomposition_check(int n, int max_qdeg, int max_tdeg, const SyzygyCaps& caps = {});

/// phi_{n+2}(S(v)) is divisible by x_0.
bool shifted_image_divisible_by_x0(const FreeVector& v);

/// sum_{i=0}^{n-3} (n-3-3i) x_{i+1} S(f_{n-2-i}) in R_n; identically zero.
Polynomial shifted_mu_relation(int n);

/// x_1 S(f_{n-2}) + 1/(n-3) sum_{i>=1} (n-3-3i) x_{i+1} f_{n-i}, which lies in
/// x_0 R_n. Needs n >= 4.
Polynomial x1_expression_remainder(int n);

}  // namespace dpjet
