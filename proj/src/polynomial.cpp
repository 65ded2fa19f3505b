#include "dpjet/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dpjet {

namespace {

void check_ambient(int n) {
  if (n < 0 || n > kMaxVars) {
    throw DomainError("ambient variable count " + std::to_string(n) + " outside [0, " +
                      std::to_string(kMaxVars) + "]");
  }
}

Monomial::Exponent checked_exp(int v) {
  if (v < 0 || v > 255) throw DomainError("exponent " + std::to_string(v) + " out of range");
  return static_cast<Monomial::Exponent>(v);
}

void require_same_ring(int a, int b, const char* what) {
  if (a != b) {
    throw ShapeMismatch(std::string(what) + ": ambient rings R_" + std::to_string(a) + " and R_" +
                        std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(int n) : n_(n) { check_ambient(n); }

Monomial::Monomial(int n, std::initializer_list<int> exps)
    : Monomial(n, std::span<const int>(exps.begin(), exps.size())) {}

Monomial::Monomial(int n, std::span<const int> exps) : n_(n) {
  check_ambient(n);
  if (static_cast<int>(exps.size()) != n) {
    throw ShapeMismatch("monomial exponent vector of length " + std::to_string(exps.size()) +
                        " in R_" + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    e_[static_cast<std::size_t>(i)] = checked_exp(exps[static_cast<std::size_t>(i)]);
    deg_ += exps[static_cast<std::size_t>(i)];
  }
}

Monomial Monomial::variable(int n, int var, int power) {
  if (var < 0 || var >= n) throw DomainError("variable x" + std::to_string(var) + " not in R_" + std::to_string(n));
  Monomial m(n);
  m.set_exp(var, power);
  return m;
}

void Monomial::set_exp(int var, int value) {
  auto& slot = e_[static_cast<std::size_t>(var)];
  deg_ += value - slot;
  slot = checked_exp(value);
}

std::vector<int> Monomial::exponents() const { return {e_.begin(), e_.begin() + n_}; }

int Monomial::weight() const {
  int w = 0;
  for (int i = 1; i < n_; ++i) w += i * e_[static_cast<std::size_t>(i)];
  return w;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (int i = 0; i < n_; ++i)
    if (e_[static_cast<std::size_t>(i)] > other.e_[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < n_; ++i)
    if (e_[static_cast<std::size_t>(i)] && other.e_[static_cast<std::size_t>(i)]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a.n_, b.n_, "monomial product");
  Monomial r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.e_[k] = checked_exp(a.e_[k] + b.e_[k]);
  }
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  require_same_ring(a.n_, b.n_, "monomial quotient");
  if (!b.divides(a)) throw DomainError("monomial quotient: " + b.to_string() + " does not divide " + a.to_string());
  Monomial r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.e_[k] = static_cast<Monomial::Exponent>(a.e_[k] - b.e_[k]);
  }
  r.deg_ = a.deg_ - b.deg_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a.n_, b.n_, "monomial lcm");
  Monomial r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.e_[k] = std::max(a.e_[k], b.e_[k]);
    r.deg_ += r.e_[k];
  }
  return r;
}

Monomial Monomial::embedded(int m) const {
  check_ambient(m);
  for (int i = m; i < n_; ++i)
    if (e_[static_cast<std::size_t>(i)] != 0)
      throw DomainError("cannot embed " + to_string() + " into R_" + std::to_string(m));
  Monomial r = *this;
  for (int i = m; i < kMaxVars; ++i) r.e_[static_cast<std::size_t>(i)] = 0;
  r.n_ = m;
  return r;
}

Monomial Monomial::shifted(int k) const {
  check_ambient(n_ + k);
  Monomial r(n_ + k);
  for (int i = 0; i < n_; ++i) r.e_[static_cast<std::size_t>(i + k)] = e_[static_cast<std::size_t>(i)];
  r.deg_ = deg_;
  return r;
}

std::string Monomial::to_string() const {
  if (deg_ == 0) return "1";
  std::string s;
  for (int i = 0; i < n_; ++i) {
    int a = e_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (a > 1) s += "^" + std::to_string(a);
  }
  return s;
}

Ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ambient(), b.ambient(), "grevlex_cmp");
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? Ordering::greater : Ordering::less;
  for (int i = a.ambient() - 1; i >= 0; --i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? Ordering::greater : Ordering::less;
  }
  return Ordering::equal;
}

std::vector<Monomial> monomials_of_bidegree(int n, int qdeg, int tdeg) {
  std::vector<Monomial> out;
  if (qdeg < 0 || tdeg < 0 || n <= 0) {
    if (n >= 0 && qdeg == 0 && tdeg == 0) out.emplace_back(n);
    return out;
  }
  Monomial cur(n);
  // Assign exponents from x_{n-1} downward; x_0 absorbs the leftover degree.
  auto rec = [&](auto&& self, int var, int w, int d) -> void {
    if (var == 0) {
      if (w == 0) {
        cur.set_exp(0, d);
        out.push_back(cur);
        cur.set_exp(0, 0);
      }
      return;
    }
    for (int a = 0; a <= d && a * var <= w; ++a) {
      cur.set_exp(var, a);
      self(self, var - 1, w - a * var, d - a);
    }
    cur.set_exp(var, 0);
  };
  rec(rec, n - 1, qdeg, tdeg);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  return grevlex_cmp(a, b) == Ordering::greater;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
  check_ambient(n);
  for (const auto& t : terms_) require_same_ring(n, t.mono.ambient(), "polynomial term");
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return GrevlexGreater{}(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) out.back().coeff += t.coeff;
    else out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(int n, const Rational& c) {
  return from_monomial(Monomial(n), c);
}

Polynomial Polynomial::variable(int n, int var, const Rational& c) {
  return from_monomial(Monomial::variable(n, var), c);
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.ambient());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return GrevlexGreater{}(t.mono, x); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

bool Polynomial::is_bihomogeneous() const {
  if (terms_.empty()) return true;
  int w = terms_.front().mono.weight();
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.weight() == w && t.mono.degree() == d;
  });
}

std::pair<int, int> Polynomial::bidegree() const {
  const auto& m = leading_monomial();
  return {m.weight(), m.degree()};
}

Polynomial Polynomial::axpy(const Rational& a, const Rational& b, const Monomial& m,
                            const Polynomial& g) const {
  require_same_ring(n_, g.n_, "polynomial combination");
  Polynomial r(n_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  auto j = g.terms_.begin();
  const bool scale_a = (a != 1);
  const bool unit_m = m.is_one();
  GrevlexGreater greater;
  while (i != terms_.end() || j != g.terms_.end()) {
    if (j == g.terms_.end()) {
      r.terms_.push_back({i->mono, scale_a ? a * i->coeff : i->coeff});
      ++i;
      continue;
    }
    Monomial mj = unit_m ? j->mono : m * j->mono;
    if (i == terms_.end() || greater(mj, i->mono)) {
      Rational c = b * j->coeff;
      if (c != 0) r.terms_.push_back({std::move(mj), std::move(c)});
      ++j;
    } else if (mj == i->mono) {
      Rational c = scale_a ? a * i->coeff : i->coeff;
      c += b * j->coeff;
      if (c != 0) r.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    } else {
      r.terms_.push_back({i->mono, scale_a ? a * i->coeff : i->coeff});
      ++i;
    }
  }
  if (a == 0) std::erase_if(r.terms_, [](const Term& t) { return t.coeff == 0; });
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  *this = axpy(1, 1, Monomial(n_), o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  *this = axpy(1, -1, Monomial(n_), o);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  require_same_ring(n_, m.ambient(), "term product");
  Polynomial r(n_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({m * t.mono, c * t.coeff});
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.n_, b.n_, "polynomial product");
  Polynomial r(a.n_);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& big = a.size() <= b.size() ? b : a;
  for (const auto& t : small.terms_) r = r.axpy(1, t.coeff, t.mono, big);
  return r;
}

Rational Polynomial::make_primitive() {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (terms_.front().coeff < 0) factor = -factor;
  if (factor != 1) *this *= factor;
  return factor;
}

void Polynomial::drop_leading() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

void Polynomial::make_monic() {
  if (terms_.empty()) return;
  Rational inv = 1 / terms_.front().coeff;
  if (inv != 1) *this *= inv;
}

Polynomial Polynomial::embedded(int m) const {
  Polynomial r(m);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.embedded(m), t.coeff});
  // Grevlex restricted to a variable prefix agrees with the larger ring's order.
  return r;
}

Polynomial Polynomial::shifted(int k) const {
  Polynomial r(n_ + k);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.shifted(k), t.coeff});
  r.normalize();
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) os << "-";
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << t.mono.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Polynomial ring_op(const Polynomial& a, const Polynomial& b, RingOp op) {
  switch (op) {
    case RingOp::add: return a + b;
    case RingOp::sub: return a - b;
    case RingOp::mul: return a * b;
  }
  throw DomainError("unknown ring op");
}

Polynomial scale(const Polynomial& a, const Rational& c) { return a * c; }

namespace {

const Polynomial* find_divisor(const Monomial& m, std::span<const Polynomial> divisors,
                               std::size_t& index) {
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    if (divisors[k].leading_monomial().divides(m)) {
      index = k;
      return &divisors[k];
    }
  }
  return nullptr;
}

void check_divisors(const Polynomial& p, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    require_same_ring(p.ambient(), g.ambient(), "reduce");
    if (g.is_zero()) throw DomainError("reduce: zero divisor polynomial");
  }
}

}  // namespace

Division reduce(const Polynomial& p, std::span<const Polynomial> divisors) {
  check_divisors(p, divisors);
  Division out;
  out.quotients.assign(divisors.size(), Polynomial(p.ambient()));
  out.remainder = Polynomial(p.ambient());
  std::vector<Term> rem;
  Polynomial work = p;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    std::size_t k = 0;
    if (const Polynomial* g = find_divisor(lt.mono, divisors, k)) {
      Monomial m = lt.mono / g->leading_monomial();
      Rational c = lt.coeff / g->leading_coeff();
      out.quotients[k] += Polynomial::from_monomial(m, c);
      work = work.axpy(1, -c, m, *g);
    } else {
      rem.push_back(lt);
      work.drop_leading();
    }
  }
  out.remainder = Polynomial(p.ambient(), std::move(rem));
  return out;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors) {
  check_divisors(p, divisors);
  std::vector<Term> rem;
  Polynomial work = p;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    std::size_t k = 0;
    if (const Polynomial* g = find_divisor(lt.mono, divisors, k)) {
      Monomial m = lt.mono / g->leading_monomial();
      Rational c = lt.coeff / g->leading_coeff();
      work = work.axpy(1, -c, m, *g);
    } else {
      rem.push_back(lt);
      work.drop_leading();
    }
  }
  return Polynomial(p.ambient(), std::move(rem));
}

Polynomial s_polynomial(const Polynomial& g1, const Polynomial& g2) {
  require_same_ring(g1.ambient(), g2.ambient(), "s_polynomial");
  if (g1.is_zero() || g2.is_zero()) throw DomainError("s_polynomial of a zero polynomial");
  const Term& t1 = g1.leading_term();
  const Term& t2 = g2.leading_term();
  Monomial l = lcm(t1.mono, t2.mono);
  Polynomial a = g1.mul_term(l / t1.mono, 1 / t1.coeff);
  return a.axpy(1, -1 / t2.coeff, l / t2.mono, g2);
}

}  // namespace dpjet
