#include "dpjet/hilbert.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "dpjet/groebner.hpp"
#include "dpjet/jet.hpp"
#include "dpjet/linalg.hpp"

namespace dpjet {

std::string_view to_string(HilbertMethod m) {
  switch (m) {
    case HilbertMethod::recursive: return "recursive";
    case HilbertMethod::fermionic: return "fermionic";
    case HilbertMethod::bosonic: return "bosonic";
    case HilbertMethod::staircase: return "staircase";
    case HilbertMethod::linear_oracle: return "linear_oracle";
  }
  return "?";
}

std::optional<HilbertMethod> parse_hilbert_method(std::string_view s) {
  for (auto m : {HilbertMethod::recursive, HilbertMethod::fermionic, HilbertMethod::bosonic,
                 HilbertMethod::staircase, HilbertMethod::linear_oracle}) {
    if (s == to_string(m)) return m;
  }
  if (s == "linear") return HilbertMethod::linear_oracle;
  return std::nullopt;
}

namespace {

std::mutex g_recursive_mu;
std::map<std::tuple<int, int, int>, BiSeries> g_recursive_memo;

BiSeries recursive_initial(int n, int qmax, int tmax) {
  BiSeries s = BiSeries::one(qmax, tmax);
  if (n == 0) return s;
  if (n == 1) return s + BiSeries::monomial(qmax, tmax, 0, 1);
  return divide_by_unit(s, 1, 1) + BiSeries::monomial(qmax, tmax, 0, 1);
}

}  // namespace

BiSeries hilbert_recursive(int n, int qmax, int tmax) {
  if (n < 0) throw DomainError("hilbert_recursive: n must be nonnegative");
  auto key = std::make_tuple(n, qmax, tmax);
  {
    std::lock_guard lock(g_recursive_mu);
    if (auto it = g_recursive_memo.find(key); it != g_recursive_memo.end()) return it->second;
  }
  BiSeries result(qmax, tmax);
  if (n <= 2) {
    result = recursive_initial(n, qmax, tmax);
  } else {
    BiSeries a = substitute_t(hilbert_recursive(n - 2, qmax, tmax), 1);
    BiSeries b = substitute_t(hilbert_recursive(n - 3, qmax, tmax), 2).shifted(0, 1);
    result = divide_by_unit(a + b, n - 1, 1);
  }
  std::lock_guard lock(g_recursive_mu);
  return g_recursive_memo.try_emplace(key, std::move(result)).first->second;
}

BiSeries hilbert_fermionic(int n, int qmax, int tmax) {
  if (n < 0) throw DomainError("hilbert_fermionic: n must be nonnegative");
  BiSeries total(qmax, tmax);
  for (int p = 0; p <= tmax; ++p) {
    long h = floor_div(n - p, 2);
    if (p > h + 1) break;  // h decreases with p, so every later binomial vanishes too
    QPolynomial numer = qbinom(h + 1, p);
    BiSeries term = BiSeries::from_qpoly(qmax, tmax, numer, p * (p - 1), p);
    for (long j = 1; j <= h; ++j) term = divide_by_unit(term, static_cast<int>(n - j), 1);
    total += term;
  }
  return total;
}

BiSeries hilbert_bosonic(int n, int qmax, int tmax) {
  if (n < 0) throw DomainError("hilbert_bosonic: n must be nonnegative");
  BiSeries sum(qmax, tmax);
  BiSeries partial = BiSeries::one(qmax, tmax);  // prod_{k<p} (1 - q^k t)
  for (int p = 0; 2 * p <= tmax; ++p) {
    QPolynomial a = qbinom(n - 2 * p + 1, p);
    QPolynomial b = qbinom(n - 2 * p - 1, p);
    if (a.is_zero() && b.is_zero() && 3 * p > n + 1) break;
    BiSeries bracket = BiSeries::from_qpoly(qmax, tmax, a, (5 * p * p - 3 * p) / 2, 2 * p) -
                       BiSeries::from_qpoly(qmax, tmax, b, (5 * p * p + 5 * p) / 2, 2 * p + 2);
    BiSeries term = partial * bracket;
    if (p % 2 == 0) sum += term;
    else sum -= term;
    partial = multiply_by_binomial(partial, p, 1);
  }
  for (int i = 0; i < n; ++i) sum = divide_by_unit(sum, i, 1);
  return sum;
}

BiSeries hilbert_staircase(int n, int qmax, int tmax) {
  if (n < 0) throw DomainError("hilbert_staircase: n must be nonnegative");
  if (n == 0) return staircase_hilbert({}, 0, qmax, tmax);
  auto lead = jet_reduced_basis(n).leading_monomials();
  return staircase_hilbert(lead, n, qmax, tmax);
}

BiSeries hilbert_linear_oracle(int n, int max_tdeg, int max_qdeg, const LinearOracleCaps& caps) {
  if (n < 0) throw DomainError("hilbert_linear_oracle: n must be nonnegative");
  BiSeries out(max_qdeg, max_tdeg);
  std::vector<Polynomial> gens = jet_generators(n);
  for (int j = 0; j <= max_tdeg; ++j) {
    for (int i = 0; i <= max_qdeg; ++i) {
      auto monos = monomials_of_bidegree(n, i, j);
      if (monos.size() > caps.max_slice_dim) {
        throw ResourceCapExceeded("max slice dimension",
                                  "bidegree (" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                                      std::to_string(monos.size()) + " monomials");
      }
      if (monos.empty()) continue;
      std::map<std::vector<int>, std::size_t> column;
      for (std::size_t c = 0; c < monos.size(); ++c) column.emplace(monos[c].exponents(), c);

      RowSpace space;
      for (int k = 1; k <= n && j >= 2; ++k) {
        for (const auto& m : monomials_of_bidegree(n, i - (k - 1), j - 2)) {
          std::vector<std::pair<std::size_t, Rational>> row;
          Polynomial product = gens[static_cast<std::size_t>(k - 1)].mul_term(m);
          for (const auto& t : product.terms())
            row.emplace_back(column.at(t.mono.exponents()), t.coeff);
          space.insert(integer_row(std::move(row)));
        }
      }
      out.set(i, j, Rational(static_cast<long>(monos.size() - space.rank())));
    }
  }
  return out;
}

BiSeries hilbert(HilbertMethod method, int n, int qmax, int tmax) {
  switch (method) {
    case HilbertMethod::recursive: return hilbert_recursive(n, qmax, tmax);
    case HilbertMethod::fermionic: return hilbert_fermionic(n, qmax, tmax);
    case HilbertMethod::bosonic: return hilbert_bosonic(n, qmax, tmax);
    case HilbertMethod::staircase: return hilbert_staircase(n, qmax, tmax);
    case HilbertMethod::linear_oracle: return hilbert_linear_oracle(n, tmax, qmax);
  }
  throw DomainError("unknown Hilbert method");
}

BiSeries htilde(int n, int qmax, int tmax) {
  BiSeries s = hilbert_recursive(n, qmax, tmax);
  for (int i = 0; i < n; ++i) s = multiply_by_binomial(s, i, 1);
  return s;
}

BiSeries htilde_residual(int n, int qmax, int tmax, int power) {
  if (n < 3) throw DomainError("htilde relation needs n >= 3");
  BiSeries lower = substitute_t(htilde(n - 3, qmax, tmax), 1);
  BiSeries correction = multiply_by_binomial(lower, 0, power).shifted(n - 1, 2);
  return htilde(n, qmax, tmax) - (htilde(n - 1, qmax, tmax) - correction);
}

bool htilde_check(int n, int qmax, int tmax) { return htilde_residual(n, qmax, tmax, 1).is_zero(); }

}  // namespace dpjet
