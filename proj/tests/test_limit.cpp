#include <gtest/gtest.h>

#include "dpjet/hilbert.hpp"
#include "dpjet/jet.hpp"
#include "dpjet/limit.hpp"

using namespace dpjet;

namespace {

// Partitions of m into parts whose residue mod 5 is in `residues`, by the usual
// coin-change recurrence.
std::vector<long> partition_counts(std::initializer_list<int> residues, int qmax) {
  std::vector<long> c(static_cast<std::size_t>(qmax) + 1, 0);
  c[0] = 1;
  for (int part = 1; part <= qmax; ++part) {
    bool allowed = false;
    for (int r : residues) allowed = allowed || part % 5 == r;
    if (!allowed) continue;
    for (int m = part; m <= qmax; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - part)];
  }
  return c;
}

std::vector<long> as_longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

// q-expansion of sum_p q^{p^2 + shift p} / (q;q)_p, computed with plain longs.
std::vector<long> rr_sum(int shift, int qmax) {
  std::vector<long> total(static_cast<std::size_t>(qmax) + 1, 0);
  for (int p = 0; p * p + shift * p <= qmax; ++p) {
    std::vector<long> term(static_cast<std::size_t>(qmax) + 1, 0);
    term[static_cast<std::size_t>(p * p + shift * p)] = 1;
    for (int j = 1; j <= p; ++j)
      for (int m = j; m <= qmax; ++m) term[static_cast<std::size_t>(m)] += term[static_cast<std::size_t>(m - j)];
    for (int m = 0; m <= qmax; ++m) total[static_cast<std::size_t>(m)] += term[static_cast<std::size_t>(m)];
  }
  return total;
}

}  // namespace

TEST(LimitSeries, FermionicEqualsBosonic) {
  EXPECT_EQ(hilbert_infinity_fermionic(50, 25), hilbert_infinity_bosonic(50, 25));
  EXPECT_EQ(hilbert_infinity_fermionic(40, 20), hilbert_infinity_bosonic(40, 20));
}

TEST(LimitSeries, LowCoefficients) {
  BiSeries h = hilbert_infinity_fermionic(30, 10);
  EXPECT_EQ(h.coeff(0, 0), 1);
  for (int i = 1; i <= 30; ++i) EXPECT_EQ(h.coeff(i, 0), 0);
  for (int i = 0; i <= 30; ++i) EXPECT_EQ(h.coeff(i, 1), 1);
  // t^2: q^2/((1-q)(1-q^2)) counts partitions of i-2 into parts 1 and 2.
  for (int i = 0; i <= 30; ++i) EXPECT_EQ(h.coeff(i, 2), i < 2 ? 0 : (i - 2) / 2 + 1) << i;
  for (int j = 0; j <= 10; ++j)
    for (int i = 0; i <= 30; ++i) {
      EXPECT_GE(h.coeff(i, j), 0);
      EXPECT_TRUE(h.coeff(i, j).get_den() == 1);
    }
}

TEST(LimitSeries, FiniteNApproachesLimit) {
  BiSeries inf = hilbert_infinity_fermionic(10, 5);
  EXPECT_EQ(hilbert_recursive(30, 10, 5), inf);
  // Coefficients are not monotone in n: x1^3 survives in R_2/I_2 but lies in I_3.
  EXPECT_EQ(hilbert_recursive(2, 10, 5).coeff(3, 3), 1);
  EXPECT_EQ(hilbert_recursive(3, 10, 5).coeff(3, 3), 0);
  EXPECT_EQ(hilbert_infinity_fermionic(10, 5).coeff(3, 3), 0);
}

TEST(Stabilization, ReportsThreshold) {
  StabilizationReport r = stabilization_report(10, 5);
  EXPECT_TRUE(r.ok);
  ASSERT_TRUE(r.threshold.has_value());
  EXPECT_LE(*r.threshold, 30);
  EXPECT_TRUE(r.matches_infinity);
  EXPECT_EQ(r.limit.series, hilbert_infinity_fermionic(10, 5));
  int n = *r.threshold;
  EXPECT_EQ(hilbert_recursive(n, 10, 5), hilbert_recursive(n + 1, 10, 5));
  EXPECT_NE(hilbert_recursive(n - 1, 10, 5), hilbert_recursive(n, 10, 5));
  EXPECT_TRUE(stabilization_check(10, 5));
}

TEST(RogersRamanujan, ProductOracleHandValues) {
  std::vector<long> g = {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12, 14};
  std::vector<long> h = {1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 6, 6, 8, 9};
  EXPECT_EQ(as_longs(rr_product_expansion(RRProduct::G, 15)), g);
  EXPECT_EQ(as_longs(rr_product_expansion(RRProduct::H, 15)), h);
  EXPECT_EQ(partition_counts({1, 4}, 15), g);
  EXPECT_EQ(partition_counts({2, 3}, 15), h);
  auto gh = as_longs(rr_product_expansion(RRProduct::G_plus_H, 15));
  for (std::size_t m = 0; m < g.size(); ++m) EXPECT_EQ(gh[m], g[m] + h[m]);
}

TEST(RogersRamanujan, ProductOracleMatchesPartitionCount) {
  EXPECT_EQ(as_longs(rr_product_expansion(RRProduct::G, 40)), partition_counts({1, 4}, 40));
  EXPECT_EQ(as_longs(rr_product_expansion(RRProduct::H, 40)), partition_counts({2, 3}, 40));
}

TEST(RogersRamanujan, SpecializationsAtForty) {
  RRResult tq = rr_specialize(RRSpecialization::t_equals_q, 40);
  EXPECT_TRUE(tq.equal);
  EXPECT_EQ(tq.match, RRProduct::G);
  EXPECT_EQ(as_longs(tq.lhs), rr_sum(0, 40));
  EXPECT_EQ(as_longs(tq.lhs), partition_counts({1, 4}, 40));

  RRResult t1 = rr_specialize(RRSpecialization::t_equals_1, 40);
  EXPECT_TRUE(t1.equal);
  EXPECT_EQ(t1.match, RRProduct::G_plus_H);
  EXPECT_EQ(as_longs(t1.lhs), rr_sum(-1, 40));
  auto g = partition_counts({1, 4}, 40), h = partition_counts({2, 3}, 40);
  for (std::size_t m = 0; m <= 40; ++m) EXPECT_EQ(t1.lhs[m], g[m] + h[m]) << m;
  EXPECT_NE(as_longs(t1.lhs), h);
}

TEST(RogersRamanujan, DegenerateWindow) {
  RRResult a = rr_specialize(RRSpecialization::t_equals_q, 0);
  RRResult b = rr_specialize(RRSpecialization::t_equals_1, 0);
  ASSERT_EQ(a.lhs.size(), 1u);
  EXPECT_EQ(a.lhs[0], 1);
  // p = 0 and p = 1 both contribute q^0 at t = 1.
  EXPECT_EQ(b.lhs[0], 2);
  EXPECT_TRUE(a.equal);
  EXPECT_EQ(b.match, RRProduct::G_plus_H);
}

TEST(GbAtInfinity, ExtraLeadingTermsLeaveWindow) {
  EXPECT_TRUE(extra_leading_terms(12, 8).empty());
  auto extras = extra_leading_terms(12, 12);
  ASSERT_FALSE(extras.empty());
  EXPECT_EQ(extras.front().to_string(), "x0*x6^2");
  for (int n = 9; n <= 12; ++n) EXPECT_TRUE(extra_leading_terms(n, 8).empty()) << n;
  EXPECT_FALSE(extra_leading_terms(6, 8).empty());
}

TEST(GbAtInfinity, SPairPrefixes) {
  auto p1 = s_pair_reduction_prefix(1, 10, 8);
  ASSERT_TRUE(p1.has_value());
  EXPECT_LE(*p1, 3);
  for (int i = 1; i <= 8; ++i) {
    auto p = s_pair_reduction_prefix(i, 24, 24);
    ASSERT_TRUE(p.has_value()) << i;
    std::vector<Polynomial> prefix;
    for (int k = 1; k <= *p; ++k) prefix.push_back(f(k, 24));
    EXPECT_TRUE(normal_form(s_polynomial(f(i, 24), f(i + 1, 24)), prefix).is_zero()) << i;
  }
}

TEST(GbAtInfinity, Report) {
  GbStabilizationReport r = gb_stabilization_report(8);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.extra_in_window.empty());
  EXPECT_EQ(r.prefixes.size(), 8u);
  for (const auto& p : r.prefixes) EXPECT_TRUE(p.has_value());
  EXPECT_TRUE(gb_stabilization_check(8));
}
