#include "dpjet/linalg.hpp"

#include <algorithm>

namespace dpjet {

namespace {

void remove_content(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y, merged by column.
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      Integer v = a * i->second - b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow integer_row(std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, Rational>> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
    else merged.push_back(std::move(e));
  }
  Integer den = 1;
  for (const auto& [col, v] : merged)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  SparseRow row;
  for (const auto& [col, v] : merged) {
    if (v == 0) continue;
    Integer x = v.get_num() * (den / v.get_den());
    row.emplace_back(col, std::move(x));
  }
  return row;
}

SparseRow RowSpace::reduced(SparseRow row) const {
  remove_content(row);
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const SparseRow& p = it->second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    Integer a = p.front().second / g;
    Integer b = row.front().second / g;
    row = combine(a, row, b, p);
    remove_content(row);
  }
  return row;
}

bool RowSpace::insert(SparseRow row) {
  row = reduced(std::move(row));
  if (row.empty()) return false;
  std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool RowSpace::contains(SparseRow row) const { return reduced(std::move(row)).empty(); }

std::size_t matrix_rank(std::vector<SparseRow> rows) {
  RowSpace space;
  for (auto& r : rows) space.insert(std::move(r));
  return space.rank();
}

}  // namespace dpjet
