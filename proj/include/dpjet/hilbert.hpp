#pragma once

// Independent computations of the bigraded Hilbert series H_n(q, t) of
// R_n / I_n, all truncated at (qmax, tmax).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpjet/arith.hpp"

namespace dpjet {

enum class HilbertMethod { recursive, fermionic, bosonic, staircase, linear_oracle };

std::string_view to_string(HilbertMethod m);
std::optional<HilbertMethod> parse_hilbert_method(std::string_view s);

struct HilbertResult {
  int n;
  HilbertMethod method;
  BiSeries series;
};

/// H_n = (H_{n-2}(q, qt) + t H_{n-3}(q, q^2 t)) / (1 - q^{n-1} t) with
/// H_0 = 1, H_1 = 1 + t, H_2 = 1/(1 - qt) + t. Memoized on (n, qmax, tmax).
BiSeries hilbert_recursive(int n, int qmax, int tmax);

/// Sum over p of [h+1 choose p]_q q^{p(p-1)} t^p / prod_{j=1}^{h} (1 - q^{n-j} t)
/// with h = floor((n-p)/2).
BiSeries hilbert_fermionic(int n, int qmax, int tmax);

/// Alternating-sum formula over prod_{i<n} (1 - q^i t).
BiSeries hilbert_bosonic(int n, int qmax, int tmax);

/// Staircase of the leading monomials of the reduced Gröbner basis of I_n.
BiSeries hilbert_staircase(int n, int qmax, int tmax);

struct LinearOracleCaps {
  /// Largest number of monomials allowed in one bidegree slice.
  std::size_t max_slice_dim = 20000;
};

/// Brute force: dim (R_n)_{i,j} - rank of {m f_k} in that slice, for every
/// i <= max_qdeg, j <= max_tdeg. Returned with window (max_qdeg, max_tdeg).
BiSeries hilbert_linear_oracle(int n, int max_tdeg, int max_qdeg, const LinearOracleCaps& caps = {});

BiSeries hilbert(HilbertMethod method, int n, int qmax, int tmax);

/// H~_n = H_n * prod_{i<n} (1 - q^i t).
BiSeries htilde(int n, int qmax, int tmax);

/// H~_n == H~_{n-1} - q^{n-1} t^2 (1 - t) H~_{n-3}(q, qt) up to truncation.
bool htilde_check(int n, int qmax, int tmax);

/// Residual of the same relation with the factor (1 - t^power) in place of
/// (1 - t); zero iff that variant holds.
BiSeries htilde_residual(int n, int qmax, int tmax, int power);

}  // namespace dpjet
