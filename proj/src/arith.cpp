#include "dpjet/arith.hpp"

#include <algorithm>
#include <sstream>

namespace dpjet {

std::string to_fraction_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("malformed rational: '" + s + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

// ---------------------------------------------------------------------------

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(std::size_t exp, const Rational& c) {
  std::vector<Rational> v(exp + 1);
  v[exp] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPolynomial::coeff(std::size_t exp) const {
  return exp < coeffs_.size() ? coeffs_[exp] : Rational(0);
}

Rational QPolynomial::eval(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(k + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return QPolynomial(std::move(v));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(v));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const Rational& c = coeffs_[e];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = (mag == 1);
    if (!unit || e == 0) os << mag.get_str();
    if (e > 0) {
      if (!unit) os << "*";
      os << "q";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

QPolynomial qbinom(long a, long b) {
  if (b < 0 || b > a) return {};
  b = std::min(b, a - b);
  // Row-by-row q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j].
  std::vector<QPolynomial> row(static_cast<std::size_t>(b) + 1);
  row[0] = QPolynomial::monomial(0);
  for (long m = 1; m <= a; ++m) {
    long top = std::min(m, b);
    for (long j = top; j >= 1; --j) {
      row[j] = row[j - 1] + row[j].shifted(static_cast<std::size_t>(j));
    }
  }
  return row[static_cast<std::size_t>(b)];
}

// ---------------------------------------------------------------------------

BiSeries::BiSeries(int qmax, int tmax) : qmax_(qmax), tmax_(tmax) {
  if (qmax < 0 || tmax < 0) throw DomainError("truncation orders must be nonnegative");
  c_.resize(static_cast<std::size_t>(qmax + 1) * static_cast<std::size_t>(tmax + 1));
}

BiSeries BiSeries::one(int qmax, int tmax) { return monomial(qmax, tmax, 0, 0); }

BiSeries BiSeries::monomial(int qmax, int tmax, int i, int j, const Rational& c) {
  BiSeries s(qmax, tmax);
  if (i >= 0 && j >= 0 && i <= qmax && j <= tmax) s.set(i, j, c);
  return s;
}

BiSeries BiSeries::from_qpoly(int qmax, int tmax, const QPolynomial& p, int qshift, int tshift) {
  BiSeries s(qmax, tmax);
  if (tshift < 0 || tshift > tmax) return s;
  for (long e = 0; e <= p.degree(); ++e) {
    long i = e + qshift;
    if (i < 0) continue;
    if (i > qmax) break;
    s.set(static_cast<int>(i), tshift, p.coeffs()[static_cast<std::size_t>(e)]);
  }
  return s;
}

const Rational& BiSeries::coeff(int i, int j) const {
  static const Rational kZero = 0;
  if (i < 0 || j < 0 || i > qmax_ || j > tmax_) return kZero;
  return c_[index(i, j)];
}

void BiSeries::set(int i, int j, const Rational& c) {
  if (i < 0 || j < 0 || i > qmax_ || j > tmax_) throw DomainError("coefficient index outside window");
  c_[index(i, j)] = c;
}

void BiSeries::add_to(int i, int j, const Rational& c) {
  if (i < 0 || j < 0 || i > qmax_ || j > tmax_) return;
  c_[index(i, j)] += c;
}

bool BiSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

std::size_t BiSeries::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const Rational& r) { return r != 0; }));
}

int BiSeries::q_degree_at(int j) const {
  for (int i = qmax_; i >= 0; --i)
    if (coeff(i, j) != 0) return i;
  return -1;
}

bool BiSeries::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.get_den() == 1; });
}

void BiSeries::require_same_window(const BiSeries& o, const char* op) const {
  if (qmax_ != o.qmax_ || tmax_ != o.tmax_) {
    throw ShapeMismatch(std::string("series ") + op + ": truncation (" + std::to_string(qmax_) +
                        "," + std::to_string(tmax_) + ") vs (" + std::to_string(o.qmax_) + "," +
                        std::to_string(o.tmax_) + ")");
  }
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  require_same_window(o, "add");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  require_same_window(o, "sub");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

BiSeries& BiSeries::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

BiSeries BiSeries::operator-() const {
  BiSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

BiSeries BiSeries::shifted(int a, int b) const {
  BiSeries r(qmax_, tmax_);
  for (int j = 0; j + b <= tmax_; ++j) {
    if (j + b < 0) continue;
    for (int i = 0; i + a <= qmax_; ++i) {
      if (i + a < 0) continue;
      r.c_[r.index(i + a, j + b)] = coeff(i, j);
    }
  }
  return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  a.require_same_window(b, "mul");
  BiSeries r(a.qmax_, a.tmax_);
  Rational tmp;
  for (int j1 = 0; j1 <= a.tmax_; ++j1) {
    for (int i1 = 0; i1 <= a.qmax_; ++i1) {
      const Rational& x = a.c_[a.index(i1, j1)];
      if (x == 0) continue;
      for (int j2 = 0; j1 + j2 <= a.tmax_; ++j2) {
        for (int i2 = 0; i1 + i2 <= a.qmax_; ++i2) {
          const Rational& y = b.c_[b.index(i2, j2)];
          if (y == 0) continue;
          tmp = x * y;
          r.c_[r.index(i1 + i2, j1 + j2)] += tmp;
        }
      }
    }
  }
  return r;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  return a.qmax_ == b.qmax_ && a.tmax_ == b.tmax_ && a.c_ == b.c_;
}

BiSeries BiSeries::restricted(int qmax, int tmax) const {
  if (qmax > qmax_ || tmax > tmax_) throw ShapeMismatch("restricted: target window exceeds source");
  BiSeries r(qmax, tmax);
  for (int j = 0; j <= tmax; ++j)
    for (int i = 0; i <= qmax; ++i) r.c_[r.index(i, j)] = coeff(i, j);
  return r;
}

QPolynomial BiSeries::specialize_t(int k) const {
  std::vector<Rational> v(static_cast<std::size_t>(qmax_) + 1);
  for (int j = 0; j <= tmax_; ++j)
    for (int i = 0; i + k * j <= qmax_ && i <= qmax_; ++i) v[static_cast<std::size_t>(i + k * j)] += coeff(i, j);
  return QPolynomial(std::move(v));
}

// ---------------------------------------------------------------------------

BiSeries series_op(const BiSeries& a, const BiSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
  }
  throw DomainError("unknown series op");
}

BiSeries divide_by_unit(const BiSeries& s, int a, int b) {
  if (a < 0 || b < 0 || a + b == 0) throw DomainError("divide_by_unit: need a, b >= 0, not both zero");
  // r = s + q^a t^b r, solved in increasing t-degree.
  BiSeries r = s;
  for (int j = b; j <= s.tmax(); ++j) {
    for (int i = a; i <= s.qmax(); ++i) {
      const Rational& prev = r.coeff(i - a, j - b);
      if (prev != 0) r.add_to(i, j, prev);
    }
  }
  return r;
}

BiSeries substitute_t(const BiSeries& s, int k) {
  if (k < 0) throw DomainError("substitute_t: k must be nonnegative");
  BiSeries r(s.qmax(), s.tmax());
  for (int j = 0; j <= s.tmax(); ++j)
    for (int i = 0; i + k * j <= s.qmax(); ++i) r.set(i + k * j, j, s.coeff(i, j));
  return r;
}

BiSeries multiply_by_binomial(const BiSeries& s, int a, int b) { return s - s.shifted(a, b); }

// ---------------------------------------------------------------------------

QTPolynomial QTPolynomial::monomial(int i, int j, const Rational& c) {
  QTPolynomial p;
  p.add_term({i, j}, c);
  return p;
}

QTPolynomial QTPolynomial::from_qpoly(const QPolynomial& p, int qshift, int tshift) {
  QTPolynomial r;
  for (long e = 0; e <= p.degree(); ++e)
    r.add_term({static_cast<int>(e) + qshift, tshift}, p.coeffs()[static_cast<std::size_t>(e)]);
  return r;
}

void QTPolynomial::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

Rational QTPolynomial::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Rational(0) : it->second;
}

Rational QTPolynomial::eval(const Rational& q, const Rational& t) const {
  Rational acc = 0;
  for (const auto& [k, c] : c_) {
    Rational term = c;
    for (int e = 0; e < k.first; ++e) term *= q;
    for (int e = 0; e < k.second; ++e) term *= t;
    acc += term;
  }
  return acc;
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& o) {
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

QTPolynomial QTPolynomial::shifted(int a, int b) const {
  QTPolynomial r;
  for (const auto& [k, c] : c_) r.c_.emplace(Key{k.first + a, k.second + b}, c);
  return r;
}

QTPolynomial QTPolynomial::substitute_t(int k) const {
  QTPolynomial r;
  for (const auto& [key, c] : c_) r.add_term({key.first + k * key.second, key.second}, c);
  return r;
}

BiSeries QTPolynomial::to_series(int qmax, int tmax) const {
  BiSeries s(qmax, tmax);
  for (const auto& [k, c] : c_) s.add_to(k.first, k.second, c);
  return s;
}

std::string QTPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::vector<std::pair<Key, Rational>> ordered(c_.begin(), c_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.second, a.first.first) < std::make_pair(b.first.second, b.first.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    if (k.first > 0) mono += k.first == 1 ? "q" : "q^" + std::to_string(k.first);
    if (k.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += k.second == 1 ? "t" : "t^" + std::to_string(k.second);
    }
    if (mono.empty()) os << mag.get_str();
    else if (mag == 1) os << mono;
    else os << mag.get_str() << "*" << mono;
  }
  return os.str();
}

}  // namespace dpjet
