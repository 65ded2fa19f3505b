#include <gtest/gtest.h>

#include <random>

#include "dpjet/hilbert.hpp"
#include "dpjet/jet.hpp"
#include "dpjet/syzygy.hpp"

using namespace dpjet;

namespace {

// Brute-force count of monomials in x_0..x_{n-1} with total degree t and weight q.
long count_monomials(int n, int q, int t) {
  if (q < 0 || t < 0) return 0;
  if (n == 0) return q == 0 && t == 0 ? 1 : 0;
  long total = 0;
  for (int e = 0; e <= t && e * (n - 1) <= q; ++e) total += count_monomials(n - 1, q - e * (n - 1), t - e);
  return total;
}

// dim F_n slice - dim I_n slice, with the ideal slice read off the Hilbert series.
long kernel_dim_oracle(int n, int q, int t, const BiSeries& h) {
  long domain = 0;
  for (int k = 1; k <= n; ++k) domain += count_monomials(n, q - (k - 1), t - 2);
  long ideal = count_monomials(n, q, t) - h.coeff(q, t).get_num().get_si();
  return domain - ideal;
}

Polynomial random_form(std::mt19937& rng, int n, int q, int t) {
  std::uniform_int_distribution<int> c(-3, 3);
  Polynomial p(n);
  for (const auto& m : monomials_of_bidegree(n, q, t)) p += Polynomial::from_monomial(m, c(rng));
  return p;
}

FreeVector random_vector(std::mt19937& rng, int n, int q, int t) {
  FreeVector v(n);
  for (int k = 1; k <= n; ++k) v[k] = random_form(rng, n, q - (k - 1), t - 2);
  return v;
}

FreeVector random_syzygy(std::mt19937& rng, int n, int q, int t) {
  FreeVector v(n);
  for (const auto& g : syzygy_generators(n)) {
    auto [gq, gt] = free_bidegree(g);
    if (gq > q || gt > t) continue;
    v += random_form(rng, n, q - gq, t - gt) * g;
  }
  return v;
}

}  // namespace

TEST(Phi, Examples) {
  EXPECT_TRUE(phi(mu(1, 2)).is_zero());
  EXPECT_EQ(phi(FreeVector::basis(3, 1, Polynomial::constant(3, 1))).to_string(), "x0^2");
  EXPECT_TRUE(phi(nu(3, 4, 4)).is_zero());
}

TEST(KernelDim, Examples) {
  EXPECT_EQ(free_bidegree(mu(1, 2)), std::make_pair(1, 3));
  EXPECT_EQ(kernel_dim(2, 1, 3), 1u);
  for (int n = 1; n <= 5; ++n)
    for (int q = 0; q <= 10; ++q)
      for (int t = 0; t <= 2; ++t) EXPECT_EQ(kernel_dim(n, q, t), 0u);
}

TEST(KernelDim, MatchesHilbertSeriesCount) {
  for (int n = 1; n <= 6; ++n) {
    BiSeries h = hilbert_recursive(n, 20, 6);
    for (int t = 0; t <= 6; ++t)
      for (int q = 0; q <= 20; ++q)
        EXPECT_EQ(static_cast<long>(kernel_dim(n, q, t)), kernel_dim_oracle(n, q, t, h)) << n << " " << q << " " << t;
  }
}

TEST(SubmoduleDim, Examples) {
  EXPECT_EQ(submodule_dim({mu(1, 2)}, 2, 1, 3), 1u);
  EXPECT_EQ(submodule_dim({}, 3, 4, 4), 0u);
  EXPECT_EQ(submodule_dim({mu(1, 2)}, 2, 0, 3), 0u);
  // x0 mu_1 and x1 mu_1 at (2, 4) are independent.
  EXPECT_EQ(submodule_dim({mu(1, 2)}, 2, 2, 4), 1u);
  EXPECT_EQ(submodule_dim({mu(1, 2)}, 2, 1, 4), 1u);
}

TEST(Generators, Count) {
  EXPECT_EQ(syzygy_generators(4).size(), 3u + 6u);
  EXPECT_EQ(syzygy_generators(4, true).size(), 3u + 1u);
  for (const auto& g : syzygy_generators(6)) {
    EXPECT_TRUE(phi(g).is_zero());
    EXPECT_TRUE(g.is_bihomogeneous());
  }
}

TEST(Generation, SmallN) {
  EXPECT_TRUE(generation_check(2, 12, 6));
  EXPECT_TRUE(generation_check(3, 15, 6));
  EXPECT_TRUE(generation_check(4, 8, 6));
  EXPECT_TRUE(generation_check(5, 15, 6));
}

TEST(Generation, SixWithDefaultCaps) {
  EXPECT_TRUE(generation_check(6, 20, 6));
}

TEST(Generation, ThreeNeedsOnlyMu) {
  std::vector<FreeVector> mus = {mu(1, 3), mu(2, 3)};
  for (int t = 0; t <= 6; ++t)
    for (int q = 0; q <= 15; ++q) EXPECT_EQ(submodule_dim(mus, 3, q, t), kernel_dim(3, q, t)) << q << " " << t;
}

TEST(Generation, ReportListsSlices) {
  GenerationReport r = generation_report(4, 8, 5, false);
  EXPECT_TRUE(r.ok);
  EXPECT_FALSE(r.first_mismatch.has_value());
  EXPECT_EQ(r.slices.size(), 9u * 6u);
  bool nonzero = false;
  for (const auto& s : r.slices) nonzero = nonzero || s.kernel > 0;
  EXPECT_TRUE(nonzero);
}

TEST(Generation, MissingGeneratorIsDetected) {
  // Dropping mu_1 leaves the (1, 3) slice of Ker(phi_2) uncovered.
  std::vector<FreeVector> none;
  EXPECT_NE(submodule_dim(none, 2, 1, 3), kernel_dim(2, 1, 3));
}

TEST(Decomposition, SmallN) {
  EXPECT_TRUE(decomposition_check(3, 12, 5));
  EXPECT_TRUE(decomposition_check(4, 10, 5));
  EXPECT_TRUE(decomposition_check(5, 12, 5));
  EXPECT_THROW(decomposition_check(2, 5, 5), DomainError);
  bool nonzero = false;
  for (const auto& s : decomposition_slices(4, 10, 5)) {
    EXPECT_EQ(s.lhs, s.rhs);
    nonzero = nonzero || s.lhs > 0;
  }
  EXPECT_TRUE(nonzero);
}

TEST(AlmostSyzygy, RandomVectors) {
  std::mt19937 rng(314159);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      int q = 2 + trial, t = 3 + trial % 2;
      FreeVector s = random_syzygy(rng, n, q, t);
      EXPECT_TRUE(phi(s).is_zero());
      EXPECT_TRUE(shifted_image_divisible_by_x0(s));
      FreeVector v = random_vector(rng, n, q, t);
      EXPECT_EQ(shifted_image_divisible_by_x0(v), phi(v).is_zero()) << n << " " << trial;
    }
}

TEST(AlmostSyzygy, ShiftOfGeneratorIsNotDivisible) {
  FreeVector e2 = FreeVector::basis(3, 2, Polynomial::constant(3, 1));
  EXPECT_FALSE(shifted_image_divisible_by_x0(e2));
}

TEST(X1Expression, RelationsHold) {
  for (int n = 3; n <= 10; ++n) EXPECT_TRUE(shifted_mu_relation(n).is_zero()) << n;
  for (int n = 4; n <= 10; ++n) {
    Polynomial r = x1_expression_remainder(n);
    for (const auto& term : r.terms()) EXPECT_GE(term.mono.exp(0), 1) << n;
  }
  EXPECT_THROW(x1_expression_remainder(3), DomainError);
}

TEST(Caps, AreEnforced) {
  SyzygyCaps tiny;
  tiny.max_slice_dim = 3;
  EXPECT_THROW(kernel_dim(5, 8, 5, tiny), ResourceCapExceeded);
  EXPECT_THROW(generation_check(7, 10, 5), ResourceCapExceeded);
  EXPECT_THROW(generation_check(4, 30, 6), ResourceCapExceeded);
}
