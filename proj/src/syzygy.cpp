#include "dpjet/syzygy.hpp"

#include <map>

#include "dpjet/jet.hpp"
#include "dpjet/linalg.hpp"

namespace dpjet {

namespace {

void check_caps(int n, int qdeg, int tdeg, const SyzygyCaps& caps) {
  if (n > caps.max_n) throw ResourceCapExceeded("max n", "n=" + std::to_string(n));
  if (qdeg > caps.max_qdeg) throw ResourceCapExceeded("max q-degree", "qdeg=" + std::to_string(qdeg));
  if (tdeg > caps.max_tdeg) throw ResourceCapExceeded("max t-degree", "tdeg=" + std::to_string(tdeg));
}

/// Column index for (slot, monomial) pairs of one F_n slice.
class FreeSlice {
 public:
  FreeSlice(int n, int qdeg, int tdeg, const SyzygyCaps& caps) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& m : monomials_of_bidegree(n, qdeg - (k - 1), tdeg - 2))
        cols_.emplace(std::make_pair(k, m.exponents()), cols_.size());
    }
    if (cols_.size() > caps.max_slice_dim) {
      throw ResourceCapExceeded("max slice dimension", "F_" + std::to_string(n) + " slice (" +
                                                           std::to_string(qdeg) + "," + std::to_string(tdeg) +
                                                           ") has " + std::to_string(cols_.size()) + " columns");
    }
  }

  std::size_t size() const { return cols_.size(); }

  SparseRow row(const FreeVector& v) const {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (int k = 1; k <= v.length(); ++k)
      for (const auto& t : v[k].terms()) entries.emplace_back(cols_.at({k, t.mono.exponents()}), t.coeff);
    return integer_row(std::move(entries));
  }

 private:
  std::map<std::pair<int, std::vector<int>>, std::size_t> cols_;
};

/// Column index for monomials of one R_n slice.
class RingSlice {
 public:
  RingSlice(int n, int qdeg, int tdeg) {
    for (const auto& m : monomials_of_bidegree(n, qdeg, tdeg)) cols_.emplace(m.exponents(), cols_.size());
  }
  std::size_t size() const { return cols_.size(); }
  SparseRow row(const Polynomial& p) const {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& t : p.terms()) entries.emplace_back(cols_.at(t.mono.exponents()), t.coeff);
    return integer_row(std::move(entries));
  }

 private:
  std::map<std::vector<int>, std::size_t> cols_;
};

/// Rows m * g for every monomial m taking the bihomogeneous g to (qdeg, tdeg).
template <typename Emit>
void for_each_multiple(const Polynomial& g, int n, int qdeg, int tdeg, Emit emit) {
  if (g.is_zero()) return;
  auto [w, d] = g.bidegree();
  for (const auto& m : monomials_of_bidegree(n, qdeg - w, tdeg - d)) emit(g.mul_term(m));
}

}  // namespace

std::pair<int, int> free_bidegree(const FreeVector& v) {
  for (int k = 1; k <= v.length(); ++k) {
    if (v[k].is_zero()) continue;
    auto [w, d] = v[k].bidegree();
    return {w + k - 1, d + 2};
  }
  throw DomainError("free_bidegree: zero vector");
}

std::size_t kernel_dim(int n, int qdeg, int tdeg, const SyzygyCaps& caps) {
  check_caps(n, qdeg, tdeg, caps);
  FreeSlice domain(n, qdeg, tdeg, caps);
  if (domain.size() == 0) return 0;
  RingSlice target(n, qdeg, tdeg);
  RowSpace image;
  for (int k = 1; k <= n; ++k) {
    Polynomial fk = f(k, n);
    for (const auto& m : monomials_of_bidegree(n, qdeg - (k - 1), tdeg - 2))
      image.insert(target.row(fk.mul_term(m)));
  }
  return domain.size() - image.rank();
}

std::size_t submodule_dim(const std::vector<FreeVector>& gens, int n, int qdeg, int tdeg,
                          const SyzygyCaps& caps) {
  check_caps(n, qdeg, tdeg, caps);
  FreeSlice domain(n, qdeg, tdeg, caps);
  RowSpace span;
  for (const auto& g : gens) {
    if (g.ambient() != n) throw ShapeMismatch("submodule_dim: generator not in F_" + std::to_string(n));
    if (g.is_zero()) continue;
    auto [w, d] = free_bidegree(g);
    for (const auto& m : monomials_of_bidegree(n, qdeg - w, tdeg - d))
      span.insert(domain.row(Polynomial::from_monomial(m) * g));
  }
  return span.rank();
}

std::vector<FreeVector> syzygy_generators(int n, bool drop_nu12) {
  std::vector<FreeVector> out;
  for (int k = 1; k < n; ++k) out.push_back(mu(k, n));
  for (int i = 1; i <= n; ++i) {
    if (drop_nu12 && i <= 2) continue;
    for (int j = i + 1; j <= n; ++j) out.push_back(nu(i, j, n));
  }
  return out;
}

GenerationReport generation_report(int n, int max_qdeg, int max_tdeg, bool drop_nu12,
                                   const SyzygyCaps& caps) {
  check_caps(n, max_qdeg, max_tdeg, caps);
  GenerationReport rep;
  auto gens = syzygy_generators(n, drop_nu12);
  for (int j = 0; j <= max_tdeg; ++j) {
    for (int i = 0; i <= max_qdeg; ++i) {
      SliceDims s{i, j, kernel_dim(n, i, j, caps), submodule_dim(gens, n, i, j, caps)};
      rep.slices.push_back(s);
      if (s.kernel != s.submodule && rep.ok) {
        rep.ok = false;
        rep.first_mismatch = s;
      }
    }
  }
  return rep;
}

bool generation_check(int n, int max_qdeg, int max_tdeg, const SyzygyCaps& caps) {
  return generation_report(n, max_qdeg, max_tdeg, false, caps).ok &&
         generation_report(n, max_qdeg, max_tdeg, true, caps).ok;
}

std::vector<DecompositionSlice> decomposition_slices(int n, int max_qdeg, int max_tdeg,
                                                     const SyzygyCaps& caps) {
  if (n < 3) throw DomainError("decomposition_check needs n >= 3");
  check_caps(n, max_qdeg, max_tdeg, caps);
  std::vector<Polynomial> gens = jet_generators(n);
  Polynomial x0 = Polynomial::variable(n, 0);
  std::vector<Polynomial> rhs_gens = {f(1, n), f(2, n)};
  for (int k = 1; k <= n - 3; ++k) rhs_gens.push_back(x0 * f(k, n - 3).shifted(2).embedded(n));

  std::vector<DecompositionSlice> out;
  for (int j = 0; j <= max_tdeg; ++j) {
    for (int i = 0; i <= max_qdeg; ++i) {
      RingSlice slice(n, i, j);
      if (slice.size() > caps.max_slice_dim)
        throw ResourceCapExceeded("max slice dimension", "R_" + std::to_string(n) + " slice too large");
      // dim(I cap V) = dim I + dim V - dim(I + V), V = monomials divisible by x_0.
      RowSpace ideal;
      for (const auto& g : gens)
        for_each_multiple(g, n, i, j, [&](const Polynomial& p) { ideal.insert(slice.row(p)); });
      std::size_t dim_i = ideal.rank();
      std::size_t dim_v = 0;
      for (const auto& m : monomials_of_bidegree(n, i, j)) {
        if (m.exp(0) == 0) continue;
        ++dim_v;
        ideal.insert(slice.row(Polynomial::from_monomial(m)));
      }
      std::size_t lhs = dim_i + dim_v - ideal.rank();

      RowSpace right;
      for (const auto& g : rhs_gens)
        for_each_multiple(g, n, i, j, [&](const Polynomial& p) { right.insert(slice.row(p)); });
      out.push_back({i, j, lhs, right.rank()});
    }
  }
  return out;
}

bool decomposition_check(int n, int max_qdeg, int max_tdeg, const SyzygyCaps& caps) {
  for (const auto& s : decomposition_slices(n, max_qdeg, max_tdeg, caps))
    if (s.lhs != s.rhs) return false;
  return true;
}

bool shifted_image_divisible_by_x0(const FreeVector& v) {
  Polynomial p = phi(shift_module(v));
  for (const auto& t : p.terms())
    if (t.mono.exp(0) == 0) return false;
  return true;
}

Polynomial shifted_mu_relation(int n) {
  if (n < 3) throw DomainError("shifted_mu_relation needs n >= 3");
  Polynomial acc(n);
  for (int i = 0; i <= n - 3; ++i)
    acc += Polynomial::variable(n, i + 1, n - 3 - 3 * i) * f(n - 2 - i, n - 2).shifted(1).embedded(n);
  return acc;
}

Polynomial x1_expression_remainder(int n) {
  if (n < 4) throw DomainError("x1_expression_remainder needs n >= 4");
  Polynomial acc = Polynomial::variable(n, 1) * f(n - 2, n - 2).shifted(1).embedded(n);
  Rational scale(1, n - 3);
  for (int i = 1; i <= n - 3; ++i)
    acc += Polynomial::variable(n, i + 1, scale * (n - 3 - 3 * i)) * f(n - i, n);
  return acc;
}

}  // namespace dpjet
