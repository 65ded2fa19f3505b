#include "dpjet/verify.hpp"

#include <algorithm>
#include <set>

#include "dpjet/betti.hpp"
#include "dpjet/groebner.hpp"
#include "dpjet/hilbert.hpp"
#include "dpjet/jet.hpp"

namespace dpjet {

std::string first_difference(const BiSeries& a, const BiSeries& b) {
  if (a.qmax() != b.qmax() || a.tmax() != b.tmax()) return "different truncation windows";
  for (int j = 0; j <= a.tmax(); ++j)
    for (int i = 0; i <= a.qmax(); ++i)
      if (a.coeff(i, j) != b.coeff(i, j))
        return "at q^" + std::to_string(i) + " t^" + std::to_string(j) + ": " + to_fraction_string(a.coeff(i, j)) +
               " vs " + to_fraction_string(b.coeff(i, j));
  return {};
}

CheckResult check_hilbert_agreement(int n, int qmax, int tmax, int oracle_qmax, int oracle_tmax) {
  std::string tag = "hilbert n=" + std::to_string(n);
  BiSeries ref = hilbert_recursive(n, qmax, tmax);
  for (auto m : {HilbertMethod::fermionic, HilbertMethod::bosonic, HilbertMethod::staircase}) {
    std::string d = first_difference(hilbert(m, n, qmax, tmax), ref);
    if (!d.empty()) return {false, tag + ": " + std::string(to_string(m)) + " vs recursive " + d};
  }
  if (oracle_tmax >= 0) {
    std::string d = first_difference(hilbert_linear_oracle(n, oracle_tmax, oracle_qmax),
                                      ref.restricted(oracle_qmax, oracle_tmax));
    if (!d.empty()) return {false, tag + ": linear_oracle vs recursive " + d};
  }
  return {true, tag + ": all methods agree"};
}

CheckResult check_census(int n) {
  std::string tag = "census n=" + std::to_string(n);
  for (const auto& row : reduced_gb_census(jet_reduced_basis(n), n)) {
    if (row.count != row.predicted)
      return {false, tag + ": degree " + std::to_string(row.degree) + " has " + std::to_string(row.count) +
                         " elements, predicted " + std::to_string(row.predicted)};
  }
  for (int k = 3; k <= 7; ++k) {
    long c = 0;
    for (const auto& g : jet_reduced_basis(n).gens) c += g.leading_monomial().degree() == k;
    if (c != predicted_reduced_count(n, k))
      return {false, tag + ": degree " + std::to_string(k) + " has " + std::to_string(c) + " elements, predicted " +
                         std::to_string(predicted_reduced_count(n, k))};
  }
  return {true, tag + ": counts match"};
}

CheckResult check_recursive_basis(int n) {
  std::string tag = "recursive basis n=" + std::to_string(n);
  const RecursiveBasis& g = recursive_gb(n);
  for (std::size_t k = 0; k < g.elements.size(); ++k)
    if (!g.elements[k].valid()) return {false, tag + ": witness of element " + std::to_string(k) + " is wrong"};
  auto polys = g.polys();
  if (!is_groebner(polys)) return {false, tag + ": Buchberger criterion fails"};
  if (n == 0) return {true, tag + ": empty"};
  std::vector<Monomial> lts;
  for (const auto& p : polys) lts.push_back(p.leading_monomial());
  auto mine = minimal_monomials(lts);
  auto theirs = minimal_monomials(jet_reduced_basis(n).leading_monomials());
  auto key = [](const std::vector<Monomial>& v) {
    std::set<std::vector<int>> s;
    for (const auto& m : v) s.insert(m.exponents());
    return s;
  };
  if (key(mine) != key(theirs)) return {false, tag + ": leading-term ideal differs from the reduced basis"};
  return {true, tag + ": valid"};
}

CheckResult check_betti(int n, int qmax, int tmax) {
  std::string tag = "betti n=" + std::to_string(n);
  for (int i = 0; i <= 14; ++i) {
    if (betti_rank(i, n) != betti_closed_form(i, n))
      return {false, tag + ": recursion vs closed form differ at i=" + std::to_string(i)};
    if (betti_graded(i, n).eval(1, 1) != Rational(betti_rank(i, n)))
      return {false, tag + ": graded rank at (1,1) differs at i=" + std::to_string(i)};
    if (n >= 3 && betti_graded(i, n) != betti_graded_recursion_rhs(i, n))
      return {false, tag + ": graded recursion fails at i=" + std::to_string(i)};
  }
  if (n >= 1 && proj_dim(n) != (2 * n + 2) / 3)
    return {false, tag + ": projective dimension " + std::to_string(proj_dim(n))};
  std::string d = first_difference(betti_alternating_sum(n, qmax, tmax), htilde(n, qmax, tmax));
  if (!d.empty()) return {false, tag + ": alternating sum vs H~ " + d};
  return {true, tag + ": reconciled"};
}

CheckResult check_syzygy_generation(int n, int qmax, int tmax, const SyzygyCaps& caps) {
  std::string tag = "syzygy n=" + std::to_string(n);
  for (bool drop : {false, true}) {
    auto rep = generation_report(n, qmax, tmax, drop, caps);
    if (!rep.ok) {
      const auto& s = *rep.first_mismatch;
      return {false, tag + (drop ? " (without nu_1j, nu_2j)" : "") + ": slice (" + std::to_string(s.qdeg) + "," +
                         std::to_string(s.tdeg) + ") kernel " + std::to_string(s.kernel) + " vs submodule " +
                         std::to_string(s.submodule)};
    }
  }
  return {true, tag + ": generated"};
}

}  // namespace dpjet
