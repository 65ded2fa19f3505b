#include "dpjet/limit.hpp"

#include "dpjet/hilbert.hpp"
#include "dpjet/jet.hpp"

namespace dpjet {

BiSeries hilbert_infinity_fermionic(int qmax, int tmax) {
  BiSeries total(qmax, tmax);
  for (int p = 0; p <= tmax && p * (p - 1) <= qmax; ++p) {
    BiSeries term = BiSeries::monomial(qmax, tmax, p * (p - 1), p);
    for (int j = 1; j <= p; ++j) term = divide_by_unit(term, j, 0);
    total += term;
  }
  return total;
}

BiSeries hilbert_infinity_bosonic(int qmax, int tmax) {
  BiSeries sum(qmax, tmax);
  BiSeries partial = BiSeries::one(qmax, tmax);  // prod_{k<p} (1 - q^k t) / (1 - q^{k+1})
  for (int p = 0; 2 * p <= tmax; ++p) {
    BiSeries bracket = BiSeries::monomial(qmax, tmax, (5 * p * p - 3 * p) / 2, 2 * p) -
                       BiSeries::monomial(qmax, tmax, (5 * p * p + 5 * p) / 2, 2 * p + 2);
    BiSeries term = partial * bracket;
    if (p % 2 == 0) sum += term;
    else sum -= term;
    partial = divide_by_unit(multiply_by_binomial(partial, p, 1), p + 1, 0);
  }
  for (int i = 0; i <= qmax; ++i) sum = divide_by_unit(sum, i, 1);
  return sum;
}

StabilizationReport stabilization_report(int qmax, int tmax, int max_n) {
  StabilizationReport rep;
  for (int n = 0; n + 2 <= max_n; ++n) {
    BiSeries a = hilbert_recursive(n, qmax, tmax);
    if (a == hilbert_recursive(n + 1, qmax, tmax) && a == hilbert_recursive(n + 2, qmax, tmax)) {
      rep.threshold = n;
      rep.limit = {a, LimitSource::stabilized};
      rep.matches_infinity = (a == hilbert_infinity_fermionic(qmax, tmax));
      rep.ok = rep.matches_infinity;
      return rep;
    }
  }
  return rep;
}

bool stabilization_check(int qmax, int tmax) { return stabilization_report(qmax, tmax).ok; }

std::string_view to_string(RRSpecialization s) {
  return s == RRSpecialization::t_equals_1 ? "t=1" : "t=q";
}

std::string_view to_string(RRProduct p) {
  switch (p) {
    case RRProduct::G: return "G";
    case RRProduct::H: return "H";
    case RRProduct::G_plus_H: return "G+H";
  }
  return "?";
}

namespace {

/// Partitions of 0..qmax into parts congruent to a or b mod 5.
std::vector<Integer> partitions_mod5(int a, int b, int qmax) {
  std::vector<Integer> c(static_cast<std::size_t>(qmax) + 1);
  c[0] = 1;
  for (int part = 1; part <= qmax; ++part) {
    if (part % 5 != a && part % 5 != b) continue;
    for (int m = part; m <= qmax; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - part)];
  }
  return c;
}

}  // namespace

std::vector<Integer> rr_product_expansion(RRProduct p, int qmax) {
  if (qmax < 0) throw DomainError("rr_product_expansion: qmax must be nonnegative");
  switch (p) {
    case RRProduct::G: return partitions_mod5(1, 4, qmax);
    case RRProduct::H: return partitions_mod5(2, 3, qmax);
    case RRProduct::G_plus_H: {
      auto g = partitions_mod5(1, 4, qmax);
      auto h = partitions_mod5(2, 3, qmax);
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += h[i];
      return g;
    }
  }
  throw DomainError("unknown product");
}

RRResult rr_specialize(RRSpecialization which, int qmax) {
  if (qmax < 0) throw DomainError("rr_specialize: qmax must be nonnegative");
  RRResult r;
  r.which = which;
  int k = which == RRSpecialization::t_equals_1 ? 0 : 1;
  // Every t^p term carries at least q^{p(p-1)}, so tmax = qmax + 1 loses nothing.
  QPolynomial s = hilbert_infinity_fermionic(qmax, qmax + 1).specialize_t(k);
  for (int i = 0; i <= qmax; ++i) {
    Rational c = s.coeff(static_cast<std::size_t>(i));
    if (c.get_den() != 1) throw DomainError("rr_specialize: non-integral coefficient");
    r.lhs.push_back(c.get_num());
  }
  for (auto cand : {RRProduct::G, RRProduct::H, RRProduct::G_plus_H}) {
    auto e = rr_product_expansion(cand, qmax);
    if (e == r.lhs) {
      r.all_matches.push_back(cand);
      if (!r.match) {
        r.match = cand;
        r.rhs = e;
      }
    }
  }
  r.equal = r.match.has_value();
  return r;
}

std::vector<Monomial> extra_leading_terms(int n, int max_qweight) {
  std::vector<Monomial> f_leads;
  for (int k = 1; k <= n; ++k) f_leads.push_back(f_leading_monomial(k, n));
  std::vector<Monomial> out;
  for (const auto& m : jet_reduced_basis(n).leading_monomials()) {
    if (m.weight() > max_qweight) continue;
    bool is_f = false;
    for (const auto& l : f_leads) is_f = is_f || (l == m);
    if (!is_f) out.push_back(m);
  }
  return out;
}

std::optional<int> s_pair_reduction_prefix(int i, int ambient, int max_n) {
  if (i < 1 || i + 1 > ambient) throw DomainError("s_pair_reduction_prefix: need 1 <= i < ambient");
  Polynomial s = s_polynomial(f(i, ambient), f(i + 1, ambient));
  std::vector<Polynomial> divisors;
  for (int big_n = 1; big_n <= std::min(max_n, ambient); ++big_n) {
    divisors.push_back(f(big_n, ambient));
    if (big_n < i + 1) continue;
    if (normal_form(s, divisors).is_zero()) return big_n;
  }
  return std::nullopt;
}

GbStabilizationReport gb_stabilization_report(int max_qweight, int n_checked, int max_pair) {
  GbStabilizationReport rep;
  rep.n_checked = n_checked;
  rep.extra_in_window = extra_leading_terms(n_checked, max_qweight);
  for (int n = n_checked; n >= 1; --n) {
    if (!extra_leading_terms(n, max_qweight).empty()) break;
    rep.threshold = n;
  }
  int ambient = 2 * max_pair + 8;
  bool pairs_ok = true;
  for (int i = 1; i <= max_pair; ++i) {
    rep.prefixes.push_back(s_pair_reduction_prefix(i, ambient, ambient));
    pairs_ok = pairs_ok && rep.prefixes.back().has_value();
  }
  rep.ok = rep.extra_in_window.empty() && pairs_ok;
  return rep;
}

bool gb_stabilization_check(int max_qweight) { return gb_stabilization_report(max_qweight).ok; }

}  // namespace dpjet
