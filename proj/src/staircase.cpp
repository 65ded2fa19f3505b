#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "dpjet/groebner.hpp"

namespace dpjet {

namespace {

using VarMask = std::uint64_t;

BiSeries free_variable_factor(VarMask mask, int qmax, int tmax) {
  BiSeries s = BiSeries::one(qmax, tmax);
  for (int v = 0; v < kMaxVars; ++v)
    if (mask & (VarMask{1} << v)) s = divide_by_unit(s, v, 1);
  return s;
}

// Pivot recursion HS(I) = HS(I + x_v) + q^v t HS(I : x_v), memoized on the
// (minimal generators, live variables) pair.
class SplittingSolver {
 public:
  SplittingSolver(int qmax, int tmax) : qmax_(qmax), tmax_(tmax) {}

  BiSeries solve(std::vector<Monomial> gens, VarMask live) {
    std::erase_if(gens, [&](const Monomial& m) { return m.weight() > qmax_ || m.degree() > tmax_; });
    gens = minimal_monomials(gens);
    for (const auto& g : gens)
      if (g.is_one()) return BiSeries(qmax_, tmax_);

    VarMask used = 0;
    for (const auto& g : gens)
      for (int v = 0; v < g.ambient(); ++v)
        if (g.exp(v) > 0) used |= VarMask{1} << v;
    VarMask free = live & ~used;
    BiSeries factor = free_variable_factor(free, qmax_, tmax_);
    if (gens.empty()) return factor;
    return factor * solve_active(std::move(gens), used);
  }

 private:
  BiSeries solve_active(std::vector<Monomial> gens, VarMask active) {
    std::sort(gens.begin(), gens.end(), GrevlexGreater{});
    std::string key = std::to_string(active);
    for (const auto& g : gens) {
      key += '|';
      for (int v = 0; v < g.ambient(); ++v) key += static_cast<char>('0' + g.exp(v));
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BiSeries result(qmax_, tmax_);
    if (gens.size() == 1) {
      const Monomial& m = gens.front();
      result = multiply_by_binomial(free_variable_factor(active, qmax_, tmax_), m.weight(), m.degree());
    } else {
      int pivot = -1;
      int best = 0;
      for (int v = 0; v < kMaxVars; ++v) {
        if (!(active & (VarMask{1} << v))) continue;
        int count = static_cast<int>(std::count_if(gens.begin(), gens.end(),
                                                   [v](const Monomial& g) { return g.exp(v) > 0; }));
        if (count > best) {
          best = count;
          pivot = v;
        }
      }
      std::vector<Monomial> with_pivot_zero;
      std::vector<Monomial> colon;
      for (const auto& g : gens) {
        if (g.exp(pivot) == 0) with_pivot_zero.push_back(g);
        Monomial c = g;
        if (c.exp(pivot) > 0) c.set_exp(pivot, c.exp(pivot) - 1);
        colon.push_back(c);
      }
      VarMask without = active & ~(VarMask{1} << pivot);
      BiSeries a = solve(std::move(with_pivot_zero), without);
      BiSeries b = solve(std::move(colon), active);
      result = a + b.shifted(pivot, 1);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  int qmax_;
  int tmax_;
  std::map<std::string, BiSeries> memo_;
};

void inclusion_exclusion(const std::vector<Monomial>& gens, std::size_t start, const Monomial& acc,
                         int sign, BiSeries& numer) {
  for (std::size_t k = start; k < gens.size(); ++k) {
    Monomial l = lcm(acc, gens[k]);
    if (l.weight() > numer.qmax() || l.degree() > numer.tmax()) continue;
    numer.add_to(l.weight(), l.degree(), Rational(-sign));
    inclusion_exclusion(gens, k + 1, l, -sign, numer);
  }
}

}  // namespace

BiSeries staircase_hilbert(std::span<const Monomial> lead, int n, int qmax, int tmax,
                           StaircaseMethod method) {
  if (n < 0 || n > kMaxVars) throw DomainError("staircase_hilbert: bad ambient n");
  for (const auto& m : lead)
    if (m.ambient() != n) throw ShapeMismatch("staircase_hilbert: monomial outside R_" + std::to_string(n));
  VarMask all = n == 64 ? ~VarMask{0} : ((VarMask{1} << n) - 1);

  std::vector<Monomial> gens(lead.begin(), lead.end());
  if (method == StaircaseMethod::splitting) {
    SplittingSolver solver(qmax, tmax);
    return solver.solve(std::move(gens), all);
  }

  std::erase_if(gens, [&](const Monomial& m) { return m.weight() > qmax || m.degree() > tmax; });
  gens = minimal_monomials(gens);
  if (gens.size() > 12) {
    throw ResourceCapExceeded("inclusion-exclusion generator count",
                              std::to_string(gens.size()) + " > 12");
  }
  BiSeries numer = BiSeries::one(qmax, tmax);
  inclusion_exclusion(gens, 0, Monomial(n), 1, numer);
  return numer * free_variable_factor(all, qmax, tmax);
}

}  // namespace dpjet
