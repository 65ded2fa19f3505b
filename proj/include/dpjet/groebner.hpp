#pragma once

// Buchberger engine, reduced bases, the Buchberger criterion, and bigraded
// Hilbert series of monomial quotients.

#include <cstddef>
#include <span>
#include <vector>

#include "dpjet/arith.hpp"
#include "dpjet/polynomial.hpp"

namespace dpjet {

struct GroebnerBasis {
  int ambient_n = 0;
  bool reduced = false;
  std::vector<Polynomial> gens;

  std::vector<Monomial> leading_monomials() const;
};

struct BuchbergerOptions {
  /// Abort with ResourceCapExceeded when the basis grows past this size.
  std::size_t max_basis_size = 20000;
  /// Skip pairs whose leading monomials are coprime.
  bool coprime_criterion = true;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t zero_reductions = 0;
};

/// Gröbner basis of the ideal generated by gens. Pairs are processed in
/// increasing lcm degree; new elements are kept primitive.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const BuchbergerOptions& opts = {},
                         BuchbergerStats* stats = nullptr);

/// The reduced Gröbner basis (monic, tails fully reduced, sorted by
/// increasing grevlex leading monomial). Requires G to be a Gröbner basis.
GroebnerBasis reduce_basis(const GroebnerBasis& g);

/// Buchberger criterion: every S-polynomial reduces to zero. Pairs with
/// coprime leading monomials are skipped.
bool is_groebner(std::span<const Polynomial> g);

/// Drop generators whose leading monomial is divisible by another generator's
/// leading monomial (the first of equal leading monomials survives).
std::vector<Polynomial> minimalize(std::span<const Polynomial> g);

/// Inclusion-minimal generators of a monomial ideal, in input order.
std::vector<Monomial> minimal_monomials(std::span<const Monomial> gens);

enum class StaircaseMethod { splitting, inclusion_exclusion };

/// Generating function of the monomials of R_n divisible by none of `lead`,
/// truncated at (qmax, tmax). Inclusion-exclusion refuses more than 12
/// (minimal) generators.
BiSeries staircase_hilbert(std::span<const Monomial> lead, int n, int qmax, int tmax,
                           StaircaseMethod method = StaircaseMethod::splitting);

}  // namespace dpjet
