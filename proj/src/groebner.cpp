#include "dpjet/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace dpjet {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.leading_monomial());
  return out;
}

namespace {

struct Pair {
  int degree;
  std::size_t j;
  std::size_t i;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

void check_generators(std::span<const Polynomial> gens, const char* what) {
  if (gens.empty()) throw DomainError(std::string(what) + ": empty generator list");
  int n = gens.front().ambient();
  for (const auto& g : gens) {
    if (g.ambient() != n) throw ShapeMismatch(std::string(what) + ": generators in different rings");
  }
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const BuchbergerOptions& opts,
                         BuchbergerStats* stats) {
  check_generators(gens, "buchberger");
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  GroebnerBasis out;
  out.ambient_n = gens.front().ambient();
  std::vector<Polynomial>& basis = out.gens;
  std::set<Pair> queue;

  auto add_element = [&](Polynomial p) {
    p.make_primitive();
    basis.push_back(std::move(p));
    if (basis.size() > opts.max_basis_size) {
      throw ResourceCapExceeded("max basis size", std::to_string(basis.size()) + " > " +
                                                       std::to_string(opts.max_basis_size));
    }
    std::size_t j = basis.size() - 1;
    const Monomial& lj = basis[j].leading_monomial();
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& li = basis[i].leading_monomial();
      queue.insert({lcm(li, lj).degree(), j, i});
    }
  };

  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("buchberger: zero generator");
    add_element(g);
  }

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    ++st.pairs_considered;
    const Polynomial& gi = basis[pr.i];
    const Polynomial& gj = basis[pr.j];
    if (opts.coprime_criterion && gi.leading_monomial().coprime(gj.leading_monomial())) {
      ++st.pairs_skipped_coprime;
      continue;
    }
    Polynomial r = normal_form(s_polynomial(gi, gj), basis);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    add_element(std::move(r));
  }
  return out;
}

std::vector<Polynomial> minimalize(std::span<const Polynomial> g) {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Monomial& lk = g[k].leading_monomial();
    bool redundant = false;
    for (std::size_t m = 0; m < g.size() && !redundant; ++m) {
      if (m == k) continue;
      const Monomial& lm = g[m].leading_monomial();
      if (lm.divides(lk) && (lm != lk || m < k)) redundant = true;
    }
    if (!redundant) out.push_back(g[k]);
  }
  return out;
}

std::vector<Monomial> minimal_monomials(std::span<const Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool redundant = false;
    for (std::size_t m = 0; m < gens.size() && !redundant; ++m) {
      if (m == k) continue;
      if (gens[m].divides(gens[k]) && (gens[m] != gens[k] || m < k)) redundant = true;
    }
    if (!redundant) out.push_back(gens[k]);
  }
  return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& g) {
  GroebnerBasis out;
  out.ambient_n = g.ambient_n;
  out.reduced = true;
  if (g.gens.empty()) return out;

  std::vector<Polynomial> min = minimalize(g.gens);
  std::sort(min.begin(), min.end(), [](const Polynomial& a, const Polynomial& b) {
    return GrevlexGreater{}(b.leading_monomial(), a.leading_monomial());
  });
  for (auto& p : min) p.make_monic();

  // Leading monomials are pairwise non-dividing, so reducing each element by
  // the others only rewrites its tail.
  for (std::size_t k = 0; k < min.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(min.size() - 1);
    for (std::size_t m = 0; m < min.size(); ++m)
      if (m != k) others.push_back(min[m]);
    Term lead = min[k].leading_term();
    Polynomial tail = min[k];
    tail.drop_leading();
    Polynomial r = others.empty() ? tail : normal_form(tail, others);
    min[k] = r + Polynomial::from_monomial(lead.mono, lead.coeff);
  }
  out.gens = std::move(min);
  return out;
}

bool is_groebner(std::span<const Polynomial> g) {
  if (g.empty()) return true;
  for (const auto& p : g) {
    if (p.is_zero()) throw DomainError("is_groebner: zero polynomial");
    if (p.ambient() != g.front().ambient()) throw ShapeMismatch("is_groebner: mixed rings");
  }
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g[i].leading_monomial().coprime(g[j].leading_monomial())) continue;
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace dpjet
