#include "dpjet/jet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace dpjet {

// ---------------------------------------------------------------------------
// FreeVector

FreeVector::FreeVector(int n) : n_(n) {
  entries_.assign(static_cast<std::size_t>(n), Polynomial(n));
}

FreeVector::FreeVector(std::vector<Polynomial> entries)
    : n_(static_cast<int>(entries.size())), entries_(std::move(entries)) {
  for (const auto& p : entries_) {
    if (p.ambient() != n_) throw ShapeMismatch("FreeVector entries must lie in R_n for length n");
  }
}

FreeVector FreeVector::basis(int n, int slot, const Polynomial& p) {
  FreeVector v(n);
  v[slot] = p;
  return v;
}

bool FreeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool FreeVector::is_bihomogeneous() const {
  bool seen = false;
  std::pair<int, int> deg{0, 0};
  for (int k = 1; k <= length(); ++k) {
    const Polynomial& p = (*this)[k];
    if (p.is_zero()) continue;
    if (!p.is_bihomogeneous()) return false;
    auto [w, d] = p.bidegree();
    std::pair<int, int> total{w + k - 1, d + 2};
    if (seen && total != deg) return false;
    deg = total;
    seen = true;
  }
  return true;
}

FreeVector& FreeVector::operator+=(const FreeVector& o) {
  if (o.n_ != n_) throw ShapeMismatch("FreeVector add: different free modules");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

FreeVector& FreeVector::operator-=(const FreeVector& o) {
  if (o.n_ != n_) throw ShapeMismatch("FreeVector sub: different free modules");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

FreeVector& FreeVector::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

FreeVector operator*(const Polynomial& p, const FreeVector& v) {
  if (p.ambient() != v.n_) throw ShapeMismatch("FreeVector scalar product: different rings");
  FreeVector r = v;
  for (auto& e : r.entries_) e = p * e;
  return r;
}

FreeVector FreeVector::embedded(int m) const {
  if (m < n_) throw DomainError("FreeVector::embedded: target smaller than source");
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(m));
  for (const auto& e : entries_) out.push_back(e.embedded(m));
  while (static_cast<int>(out.size()) < m) out.emplace_back(m);
  return FreeVector(std::move(out));
}

std::string FreeVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) os << ", ";
    os << entries_[k].to_string();
  }
  os << ")";
  return os.str();
}

Polynomial phi(const FreeVector& v) {
  int n = v.ambient();
  Polynomial acc(n);
  for (int k = 1; k <= n; ++k) {
    if (v[k].is_zero()) continue;
    acc += v[k] * f(k, n);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Generators and shifts

Polynomial f(int k, int n) {
  if (k < 1 || k > n) {
    throw DomainError("f(" + std::to_string(k) + ", " + std::to_string(n) + "): need 1 <= k <= n");
  }
  std::vector<Term> terms;
  for (int i = 0; i < k; ++i) {
    Monomial m(n);
    m.set_exp(i, m.exp(i) + 1);
    m.set_exp(k - 1 - i, m.exp(k - 1 - i) + 1);
    terms.push_back({m, 1});
  }
  return Polynomial(n, std::move(terms));
}

std::vector<Polynomial> jet_generators(int n) {
  std::vector<Polynomial> out;
  for (int k = 1; k <= n; ++k) out.push_back(f(k, n));
  return out;
}

Monomial f_leading_monomial(int k, int n) {
  int m = (k - 1) / 2;
  Monomial r(n);
  if (k % 2 == 1) {
    if (m >= n) throw DomainError("LT(f_" + std::to_string(k) + ") not in R_" + std::to_string(n));
    r.set_exp(m, 2);
  } else {
    if (m + 1 >= n) throw DomainError("LT(f_" + std::to_string(k) + ") not in R_" + std::to_string(n));
    r.set_exp(m, 1);
    r.set_exp(m + 1, 1);
  }
  return r;
}

Polynomial shift_ring(const Polynomial& p) { return p.shifted(1); }

FreeVector shift_module(const FreeVector& v) {
  int n = v.ambient();
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(n) + 2);
  out.emplace_back(n + 2);
  out.emplace_back(n + 2);
  for (const auto& e : v.entries()) out.push_back(e.shifted(1).embedded(n + 2));
  return FreeVector(std::move(out));
}

FreeVector mu(int k, int n) {
  if (k <= 0 || k >= n) {
    throw DomainError("mu(" + std::to_string(k) + ", " + std::to_string(n) + "): need 0 < k < n");
  }
  FreeVector v(n);
  for (int j = 1; j <= k + 1; ++j) v[j] = Polynomial::variable(n, k - j + 1, 3 * (j - 1) - 2 * k);
  return v;
}

FreeVector nu(int i, int j, int n) {
  if (i < 1 || i >= j || j > n) {
    throw DomainError("nu(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(n) +
                      "): need 1 <= i < j <= n");
  }
  FreeVector v(n);
  v[j] = f(i, n);
  v[i] = -f(j, n);
  return v;
}

Polynomial mu_relation(int m) {
  int n = m + 1;
  Polynomial acc(n);
  for (int i = 0; i <= m; ++i) acc += Polynomial::variable(n, i, m - 3 * i) * f(m + 1 - i, n);
  return acc;
}

// ---------------------------------------------------------------------------
// Witnessed elements and the recursive basis

WitnessedPoly tilde_shift(const WitnessedPoly& w) {
  FreeVector shifted = shift_module(w.witness);
  Polynomial p = phi(shifted);
  return {std::move(p), std::move(shifted)};
}

FreeVector x0_double_shift_witness(int k, int n) {
  if (k < 1 || k > n - 3) {
    throw DomainError("x0 S^2(f_k) witness needs 1 <= k <= n-3 (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
  FreeVector w = FreeVector::basis(n, 2, Polynomial::variable(n, k + 2, k));
  w -= shift_module(mu(k, n - 2));
  w *= Rational(1, k + 3);
  return w;
}

std::vector<Polynomial> RecursiveBasis::polys() const {
  std::vector<Polynomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.poly);
  return out;
}

namespace {

void push_primitive(std::vector<WitnessedPoly>& out, WitnessedPoly w) {
  if (w.poly.is_zero()) return;
  Rational factor = w.poly.make_primitive();
  w.witness *= factor;
  out.push_back(std::move(w));
}

RecursiveBasis build_recursive_gb(int n) {
  RecursiveBasis out;
  out.n = n;
  if (n <= 0) return out;
  if (n <= 2) {
    for (int k = 1; k <= n; ++k) out.elements.push_back({f(k, n), FreeVector::basis(n, k, Polynomial::constant(n, 1))});
    return out;
  }

  // x_0 S^2(G_{n-3}): x_0 S^2(sum phi_i f_i) = sum S^2(phi_i) x_0 S^2(f_i).
  const RecursiveBasis& g3 = recursive_gb(n - 3);
  Polynomial x0 = Polynomial::variable(n, 0);
  for (const auto& w : g3.elements) {
    Polynomial p = x0 * w.poly.shifted(2).embedded(n);
    FreeVector witness(n);
    for (int i = 1; i <= w.witness.length(); ++i) {
      const Polynomial& c = w.witness[i];
      if (c.is_zero()) continue;
      witness += c.shifted(2).embedded(n) * x0_double_shift_witness(i, n);
    }
    push_primitive(out.elements, {std::move(p), std::move(witness)});
  }

  out.elements.push_back({f(1, n), FreeVector::basis(n, 1, Polynomial::constant(n, 1))});
  out.elements.push_back({f(2, n), FreeVector::basis(n, 2, Polynomial::constant(n, 1))});

  const RecursiveBasis& g2 = recursive_gb(n - 2);
  for (const auto& w : g2.elements) push_primitive(out.elements, tilde_shift(w));
  return out;
}

template <typename T>
class PerNCache {
 public:
  template <typename Build>
  const T& get(int n, Build build) {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    T value = build(n);  // may recurse into get() for smaller n
    std::lock_guard lock(mu_);
    return cache_.try_emplace(n, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<int, T> cache_;  // node-based: references stay valid
};

}  // namespace

const RecursiveBasis& recursive_gb(int n) {
  if (n < 0) throw DomainError("recursive_gb: n must be nonnegative");
  static PerNCache<RecursiveBasis> cache;
  return cache.get(n, build_recursive_gb);
}

const GroebnerBasis& jet_reduced_basis(int n) {
  if (n < 1) throw DomainError("jet_reduced_basis: n must be positive");
  static PerNCache<GroebnerBasis> cache;
  return cache.get(n, [](int m) {
    auto gens = jet_generators(m);
    return reduce_basis(buchberger(gens));
  });
}

// ---------------------------------------------------------------------------
// Reduced-basis census

std::vector<Monomial> admissible_monomials(int deg, int lo, int hi, int ambient) {
  if (ambient < 0) ambient = std::max(hi + 1, 0);
  if (lo > hi + 1) throw DomainError("admissible_monomials: need lo <= hi + 1");
  std::vector<Monomial> out;
  if (deg < 0) return out;
  std::vector<int> chosen;
  // Indices strictly increasing with gaps of at least two.
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == deg) {
      Monomial m(ambient);
      for (int v : chosen) m.set_exp(v, 1);
      out.push_back(m);
      return;
    }
    for (int v = next; v <= hi; ++v) {
      chosen.push_back(v);
      self(self, v + 2);
      chosen.pop_back();
    }
  };
  rec(rec, lo);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

long predicted_reduced_count(int n, int k) {
  Integer c = binomial(floor_div(n - k + 1, 2), k - 2);
  return c.get_si();
}

std::vector<Monomial> predicted_reduced_lt(int n, int k) {
  if (k <= 2) throw DomainError("predicted_reduced_lt: need k > 2");
  int hi = static_cast<int>(floor_div(n + k - 7, 2));
  std::vector<Monomial> out;
  if (predicted_reduced_count(n, k) == 0) return out;
  Monomial lt = f_leading_monomial(n + k - 2, n);
  for (const auto& m : admissible_monomials(k - 2, 0, hi, n)) out.push_back(m * lt);
  return out;
}

std::vector<CensusRow> reduced_gb_census(const GroebnerBasis& reduced, int n) {
  std::map<int, long> counts;
  for (const auto& g : reduced.gens) counts[g.leading_monomial().degree()]++;
  std::vector<CensusRow> rows;
  int top = counts.empty() ? 2 : std::max(counts.rbegin()->first, 2);
  for (int k = 2; k <= top; ++k) {
    long c = counts.count(k) ? counts[k] : 0;
    rows.push_back({k, c, k == 2 ? static_cast<long>(n) : predicted_reduced_count(n, k)});
  }
  return rows;
}

}  // namespace dpjet
