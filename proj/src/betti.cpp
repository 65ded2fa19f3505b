#include "dpjet/betti.hpp"

#include <map>
#include <mutex>

#include "dpjet/hilbert.hpp"

namespace dpjet {

namespace {

std::mutex g_rank_mu;
std::map<std::pair<int, int>, Integer> g_rank_memo;

Integer base_rank(int i, int n) {
  static const std::vector<std::vector<long>> kBase = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 2}};
  const auto& row = kBase[static_cast<std::size_t>(n)];
  return i < static_cast<int>(row.size()) ? Integer(row[static_cast<std::size_t>(i)]) : Integer(0);
}

}  // namespace

Integer betti_rank(int i, int n) {
  if (i < 0 || n < 0) return 0;
  if (n <= 3) return base_rank(i, n);
  {
    std::lock_guard lock(g_rank_mu);
    if (auto it = g_rank_memo.find({i, n}); it != g_rank_memo.end()) return it->second;
  }
  Integer r = betti_rank(i, n - 1) + betti_rank(i - 1, n - 3) + betti_rank(i - 2, n - 3);
  std::lock_guard lock(g_rank_mu);
  return g_rank_memo.try_emplace({i, n}, r).first->second;
}

Integer betti_closed_form(int i, int n) {
  if (i < 0 || n < 0) return 0;
  Integer total = 0;
  for (long p = 0; p <= i; ++p) {
    total += binomial(n - 2 * p + 1, p) * binomial(p, i - p);
    total += binomial(n - 2 * p - 1, p) * binomial(p, i - p - 1);
  }
  return total;
}

QTPolynomial betti_graded(int i, int n) {
  QTPolynomial total;
  if (i < 0 || n < 0) return total;
  for (int p = 0; p <= i; ++p) {
    int a = i - p;
    QPolynomial ca = qbinom(n - 2 * p + 1, p) * qbinom(p, a);
    if (!ca.is_zero())
      total += QTPolynomial::from_qpoly(ca, (5 * p * p - 3 * p + a * (a - 1)) / 2, 2 * p + a);
    int b = i - p - 1;
    QPolynomial cb = qbinom(n - 2 * p - 1, p) * qbinom(p, b);
    if (!cb.is_zero())
      total += QTPolynomial::from_qpoly(cb, (5 * p * p + 5 * p + b * (b - 1)) / 2, 2 * p + 2 + b);
  }
  return total;
}

QTPolynomial betti_graded_recursion_rhs(int i, int n) {
  if (n < 3) throw DomainError("graded Betti recursion needs n >= 3");
  return betti_graded(i, n - 1) + betti_graded(i - 1, n - 3).substitute_t(1).shifted(n - 1, 2) +
         betti_graded(i - 2, n - 3).substitute_t(1).shifted(n - 1, 3);
}

int proj_dim(int n) {
  if (n < 1) throw DomainError("proj_dim: n must be positive");
  int top = 0;
  for (int i = 0; i <= n + 2; ++i)
    if (betti_rank(i, n) != 0) top = i;
  return top;
}

BiSeries betti_alternating_sum(int n, int qmax, int tmax) {
  BiSeries s(qmax, tmax);
  for (int i = 0; i <= n + 2; ++i) {
    BiSeries term = betti_graded(i, n).to_series(qmax, tmax);
    if (i % 2 == 0) s += term;
    else s -= term;
  }
  return s;
}

bool alternating_sum_check(int n, int qmax, int tmax) {
  return betti_alternating_sum(n, qmax, tmax) == htilde(n, qmax, tmax);
}

BettiTable betti_table(int n, bool graded) {
  BettiTable t;
  t.n = n;
  int top = n == 0 ? 0 : proj_dim(n);
  for (int i = 0; i <= top; ++i) {
    t.ranks.push_back(betti_rank(i, n));
    if (graded) t.graded.push_back(betti_graded(i, n));
  }
  return t;
}

}  // namespace dpjet
