#include <gtest/gtest.h>

#include <set>

#include "dpjet/jet.hpp"

using namespace dpjet;

namespace {

Polynomial x(int n, int i, const Rational& c = 1) { return Polynomial::variable(n, i, c); }

std::set<std::vector<int>> exps(const std::vector<Monomial>& ms) {
  std::set<std::vector<int>> s;
  for (const auto& m : ms) s.insert(m.exponents());
  return s;
}

std::vector<Monomial> parse_monos(int n, const std::vector<std::vector<std::pair<int, int>>>& factor_lists) {
  std::vector<Monomial> out;
  for (const auto& factors : factor_lists) {
    Monomial m(n);
    for (auto [v, e] : factors) m.set_exp(v, m.exp(v) + e);
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(Generators, Examples) {
  EXPECT_EQ(f(1, 3).to_string(), "x0^2");
  EXPECT_EQ(f(2, 3).to_string(), "2*x0*x1");
  EXPECT_EQ(f(5, 5).to_string(), "x2^2 + 2*x1*x3 + 2*x0*x4");
  EXPECT_THROW(f(0, 3), DomainError);
  EXPECT_THROW(f(4, 3), DomainError);
  EXPECT_EQ(jet_generators(4).size(), 4u);
  EXPECT_EQ(f_leading_monomial(13, 15).to_string(), "x6^2");
  EXPECT_EQ(f_leading_monomial(14, 15).to_string(), "x6*x7");
  EXPECT_EQ(f_leading_monomial(15, 15).to_string(), "x7^2");
}

TEST(Shift, ModuleExamples) {
  FreeVector s = shift_module(mu(1, 2));
  EXPECT_EQ(s.to_string(), "(0, 0, -2*x2, x1)");
  EXPECT_TRUE(shift_module(FreeVector(3)).is_zero());
  EXPECT_EQ(shift_module(FreeVector::basis(2, 1, Polynomial::constant(2, 1))), FreeVector::basis(4, 3, Polynomial::constant(4, 1)));
}

TEST(Mu, Examples) {
  EXPECT_EQ(mu(1, 2).to_string(), "(-2*x1, x0)");
  EXPECT_EQ(mu(2, 3).to_string(), "(-4*x2, -x1, 2*x0)");
  EXPECT_TRUE(phi(mu(2, 3)).is_zero());
  EXPECT_THROW(mu(0, 3), DomainError);
  EXPECT_THROW(mu(3, 3), DomainError);
}

TEST(Nu, Examples) {
  EXPECT_EQ(nu(1, 2, 2).to_string(), "(-2*x0*x1, x0^2)");
  EXPECT_EQ(nu(3, 4, 4)[4], f(3, 4));
  EXPECT_THROW(nu(2, 2, 3), DomainError);
  EXPECT_THROW(nu(1, 4, 3), DomainError);
}

TEST(Syzygies, MuAndNuAreInTheKernel) {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_TRUE(phi(mu(k, n)).is_zero()) << "mu " << k << " " << n;
      EXPECT_TRUE(mu(k, n).is_bihomogeneous());
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) EXPECT_TRUE(phi(nu(i, j, n)).is_zero());
  }
}

TEST(Syzygies, FundamentalRelation) {
  for (int m = 0; m <= 15; ++m) EXPECT_TRUE(mu_relation(m).is_zero()) << m;
}

TEST(Syzygies, ShiftedMuIdentity) {
  // phi_{n+2}(S(mu_k)) = k x_{k+2} f_2 - (k+3) x_0 S^2(f_k)
  for (int k = 1; k <= 10; ++k) {
    int n = k + 1;
    int m = n + 2;
    Polynomial lhs = phi(shift_module(mu(k, n)));
    Polynomial rhs = x(m, k + 2, k) * f(2, m) - x(m, 0, k + 3) * f(k, k).shifted(2).embedded(m);
    EXPECT_EQ(lhs, rhs) << k;
  }
}

TEST(TildeShift, QuarticExample) {
  // 4 x0 x2^2 = 2 x2 f_3 - x1 f_4 + x3 f_2 in R_4.
  FreeVector w(4);
  w[2] = x(4, 3);
  w[3] = x(4, 2, 2);
  w[4] = x(4, 1, -1);
  WitnessedPoly p{Polynomial::from_monomial(Monomial(4, {1, 0, 2, 0}), 4), w};
  ASSERT_TRUE(p.valid());
  WitnessedPoly s = tilde_shift(p);
  EXPECT_TRUE(s.valid());
  EXPECT_EQ(s.poly.to_string(), "4*x1*x3^2 + 6*x0*x3*x4 - 2*x0*x2*x5");
  EXPECT_EQ(s.poly.leading_monomial(), p.poly.leading_monomial().shifted(1).embedded(6));
}

TEST(TildeShift, OfGeneratorIsNextGenerator) {
  for (int k = 1; k <= 6; ++k) {
    WitnessedPoly w{f(k, 6), FreeVector::basis(6, k, Polynomial::constant(6, 1))};
    EXPECT_EQ(tilde_shift(w).poly, f(k + 2, 8));
  }
}

TEST(TildeShift, PreservesLeadingTermsOnSmallBases) {
  for (int n : {4, 5}) {
    for (const auto& e : recursive_gb(n).elements) {
      WitnessedPoly s = tilde_shift(e);
      EXPECT_EQ(s.poly.leading_monomial(), e.poly.leading_monomial().shifted(1).embedded(n + 2));
    }
  }
}

TEST(RecursiveBasis, SmallExamples) {
  EXPECT_TRUE(recursive_gb(0).elements.empty());
  auto g4 = recursive_gb(4).polys();
  ASSERT_EQ(g4.size(), 5u);
  std::set<std::string> s4;
  for (const auto& p : g4) {
    Polynomial q = p;
    q.make_monic();
    s4.insert(q.to_string());
  }
  EXPECT_TRUE(s4.count("x0*x2^2"));
  auto g5 = recursive_gb(5).polys();
  EXPECT_EQ(g5.size(), 7u);
  bool has_x0x2x3 = false;
  for (const auto& p : g5) has_x0x2x3 = has_x0x2x3 || p.leading_monomial().to_string() == "x0*x2*x3";
  EXPECT_TRUE(has_x0x2x3);
  bool has_x1x3sq = false;
  for (const auto& p : recursive_gb(6).polys())
    has_x1x3sq = has_x1x3sq || p.to_string() == "2*x1*x3^2 + 3*x0*x3*x4 - x0*x2*x5";
  EXPECT_TRUE(has_x1x3sq);
}

TEST(RecursiveBasis, WitnessesAndCriterion) {
  for (int n = 1; n <= 9; ++n) {
    const auto& g = recursive_gb(n);
    for (const auto& e : g.elements) {
      EXPECT_TRUE(e.valid());
      EXPECT_TRUE(e.poly.is_bihomogeneous());
      EXPECT_GT(e.poly.leading_coeff(), 0);
    }
    EXPECT_TRUE(is_groebner(g.polys())) << n;
  }
}

TEST(RecursiveBasis, DoubleShiftWitness) {
  for (int n = 4; n <= 12; ++n)
    for (int k = 1; k <= n - 3; ++k) {
      Polynomial target = x(n, 0) * f(k, n - 3).shifted(2).embedded(n);
      EXPECT_EQ(phi(x0_double_shift_witness(k, n)), target);
    }
  EXPECT_THROW(x0_double_shift_witness(2, 4), DomainError);
}

TEST(Admissible, Examples) {
  EXPECT_EQ(admissible_monomials(1, 0, 4).size(), 5u);
  auto zero = admissible_monomials(0, 0, 3);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_one());
  auto two = admissible_monomials(2, 0, 3);
  EXPECT_EQ(exps(two), exps(parse_monos(4, {{{0, 1}, {2, 1}}, {{0, 1}, {3, 1}}, {{1, 1}, {3, 1}}})));
  for (int lo = 0; lo <= 2; ++lo)
    for (int hi = lo - 1; hi <= 9; ++hi)
      for (int d = 0; d <= 4; ++d)
        EXPECT_EQ(static_cast<long>(admissible_monomials(d, lo, hi, 12).size()), binomial(hi - lo + 1 - d + 1, d).get_si());
}

TEST(PredictedLeadingTerms, TwelveVariables) {
  int n = 12;
  auto k3 = parse_monos(n, {{{0, 1}, {6, 2}}, {{1, 1}, {6, 2}}, {{2, 1}, {6, 2}}, {{3, 1}, {6, 2}}, {{4, 1}, {6, 2}}});
  auto k4 = parse_monos(n, {{{0, 1}, {2, 1}, {6, 1}, {7, 1}},
                            {{0, 1}, {3, 1}, {6, 1}, {7, 1}},
                            {{0, 1}, {4, 1}, {6, 1}, {7, 1}},
                            {{1, 1}, {3, 1}, {6, 1}, {7, 1}},
                            {{1, 1}, {4, 1}, {6, 1}, {7, 1}},
                            {{2, 1}, {4, 1}, {6, 1}, {7, 1}}});
  auto k5 = parse_monos(n, {{{0, 1}, {2, 1}, {4, 1}, {7, 2}},
                            {{0, 1}, {2, 1}, {5, 1}, {7, 2}},
                            {{0, 1}, {3, 1}, {5, 1}, {7, 2}},
                            {{1, 1}, {3, 1}, {5, 1}, {7, 2}}});
  EXPECT_EQ(exps(predicted_reduced_lt(n, 3)), exps(k3));
  EXPECT_EQ(exps(predicted_reduced_lt(n, 4)), exps(k4));
  EXPECT_EQ(exps(predicted_reduced_lt(n, 5)), exps(k5));
  EXPECT_TRUE(predicted_reduced_lt(n, 6).empty());

  std::vector<Monomial> actual[8];
  for (const auto& m : jet_reduced_basis(n).leading_monomials()) actual[m.degree()].push_back(m);
  EXPECT_EQ(actual[2].size(), 12u);
  EXPECT_EQ(exps(actual[3]), exps(k3));
  EXPECT_EQ(exps(actual[4]), exps(k4));
  EXPECT_EQ(exps(actual[5]), exps(k5));
  EXPECT_TRUE(actual[6].empty());

  auto g4 = predicted_reduced_lt(4, 3);
  ASSERT_EQ(g4.size(), 1u);
  EXPECT_EQ(g4[0].to_string(), "x0*x2^2");
}

TEST(PredictedLeadingTerms, MatchReducedBasisForSmallN) {
  for (int n = 1; n <= 10; ++n) {
    std::map<int, std::vector<Monomial>> by_degree;
    for (const auto& m : jet_reduced_basis(n).leading_monomials()) by_degree[m.degree()].push_back(m);
    std::vector<Monomial> f_leads;
    for (int k = 1; k <= n; ++k) f_leads.push_back(f_leading_monomial(k, n));
    EXPECT_EQ(exps(by_degree[2]), exps(f_leads)) << n;
    for (int k = 3; k <= 8; ++k) EXPECT_EQ(exps(by_degree[k]), exps(predicted_reduced_lt(n, k))) << n << " " << k;
  }
}

TEST(Census, ClosedFormCounts) {
  for (int n = 3; n <= 14; ++n) {
    auto rows = reduced_gb_census(jet_reduced_basis(n), n);
    for (const auto& r : rows) EXPECT_EQ(r.count, r.predicted) << "n=" << n << " k=" << r.degree;
    for (int k = 3; k <= 7; ++k) {
      long count = 0;
      for (const auto& g : jet_reduced_basis(n).gens) count += g.leading_monomial().degree() == k;
      EXPECT_EQ(count, binomial((n - k + 1) / 2, k - 2).get_si()) << "n=" << n << " k=" << k;
    }
  }
  auto r12 = reduced_gb_census(jet_reduced_basis(12), 12);
  ASSERT_EQ(r12.size(), 4u);
  EXPECT_EQ(r12[0].count, 12);
  EXPECT_EQ(r12[1].count, 5);
  EXPECT_EQ(r12[2].count, 6);
  EXPECT_EQ(r12[3].count, 4);
}
