#include "pwb/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "pwb/errors.hpp"

namespace pwb {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw SyntaxError("empty rational", 0);
  Rational r;
  if (r.set_str(s, 10) != 0) throw SyntaxError("malformed rational '" + s + "'", 0);
  if (r.get_den() == 0) throw ZeroElement("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

long gcd(long a, long b) { return std::gcd(a, b); }
long lcm(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_poly(long n) {
  static std::recursive_mutex mu;
  static std::map<long, std::vector<long>> cache;
  if (n < 1) throw InvalidArgument("cyclotomic index must be positive");
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d; all divisions exact over Z.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    const std::vector<long>& den = cyclotomic_poly(d);
    long dn = static_cast<long>(num.size()) - 1, dd = static_cast<long>(den.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (long k = dn - dd; k >= 0; --k) {
      long c = num[k + dd];  // den is monic
      q[k] = c;
      for (long i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    num = std::move(q);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

namespace {

void reduce_mod_phi(std::vector<Rational>& r, long n) {
  const auto& phi = cyclotomic_poly(n);
  long deg = static_cast<long>(phi.size()) - 1;
  for (long k = static_cast<long>(r.size()) - 1; k >= deg; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational c = r[k];
    for (long i = 0; i <= deg; ++i)
      if (phi[i] != 0) r[k - deg + i] -= c * phi[i];
  }
  r.resize(deg);
}

// Solves A x = b over Q; A given as columns. Returns nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& b) {
  std::size_t rows = b.size(), nc = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(nc + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < nc; ++j) m[i][j] = cols[j][i];
    m[i][nc] = b[i];
  }
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j <= nc; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= nc; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(m[i][nc]) != 0) return std::nullopt;
  std::vector<Rational> x(nc);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][nc];
  return x;
}

}  // namespace

Cyclo::Cyclo(long conductor, std::vector<Rational> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ < 1) throw InvalidArgument("conductor must be positive");
  // Equality compares coefficients directly, so they must be in lowest terms.
  for (auto& c : coeffs_) c.canonicalize();
  long deg = euler_phi(conductor_);
  if (static_cast<long>(coeffs_.size()) > deg)
    reduce_mod_phi(coeffs_, conductor_);
  else
    coeffs_.resize(deg);
}

Cyclo Cyclo::zeta(long n, long k) {
  if (n < 1) throw InvalidArgument("zeta conductor must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  return Cyclo(n, std::move(c));
}

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool Cyclo::is_one() const { return is_rational() && coeffs_[0] == 1; }

int Cyclo::term_count() const {
  int n = 0;
  for (const auto& c : coeffs_) n += sgn(c) != 0;
  return n;
}

Cyclo Cyclo::lift(long m) const {
  if (m == conductor_) return *this;
  if (m % conductor_) throw InvalidArgument("lift target must be a multiple of the conductor");
  if (is_rational()) {
    std::vector<Rational> c(euler_phi(m));
    c[0] = coeffs_[0];
    Cyclo out;
    out.conductor_ = m;
    out.coeffs_ = std::move(c);
    return out;
  }
  long step = m / conductor_;
  std::vector<Rational> c(step * (coeffs_.size() - 1) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
  return Cyclo(m, std::move(c));
}

Cyclo Cyclo::descend() const {
  if (is_rational()) return Cyclo(coeffs_[0]);
  for (long d = 2; d < conductor_; ++d) {
    if (conductor_ % d || d % 4 == 2) continue;
    long deg = euler_phi(d);
    std::vector<std::vector<Rational>> cols;
    for (long k = 0; k < deg; ++k) cols.push_back(Cyclo::zeta(d, k).lift(conductor_).coeffs_);
    if (auto x = solve_columns(cols, coeffs_)) return Cyclo(d, std::move(*x));
  }
  return *this;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.conductor_ != conductor_) {
    long m = lcm(conductor_, o.conductor_);
    if (m != conductor_) *this = lift(m);
    if (m != o.conductor_) return *this += o.lift(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  if (o.conductor_ != conductor_) {
    long m = lcm(conductor_, o.conductor_);
    if (m != conductor_) *this = lift(m);
    if (m != o.conductor_) return *this -= o.lift(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (o.is_rational()) {
    Rational s = o.coeffs_[0];
    if (o.conductor_ != conductor_ && conductor_ % o.conductor_ != 0) *this = lift(lcm(conductor_, o.conductor_));
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    Rational s = coeffs_[0];
    *this = o.conductor_ % conductor_ == 0 ? o : o.lift(lcm(conductor_, o.conductor_));
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (o.conductor_ != conductor_) {
    long m = lcm(conductor_, o.conductor_);
    if (m != conductor_) *this = lift(m);
    if (m != o.conductor_) return *this *= o.lift(m);
  }
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (sgn(o.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce_mod_phi(prod, conductor_);
  coeffs_ = std::move(prod);
  return *this;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw ZeroElement("inverse of zero");
  if (is_rational()) {
    Cyclo r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Column j of the multiplication matrix is this * zeta^j.
  std::vector<std::vector<Rational>> cols;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    cols.push_back((*this * Cyclo::zeta(conductor_, static_cast<long>(j))).coeffs_);
  std::vector<Rational> e(coeffs_.size());
  e[0] = 1;
  auto x = solve_columns(cols, e);
  return Cyclo(conductor_, std::move(*x));
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  long m = lcm(a.conductor_, b.conductor_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::string Cyclo::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (k == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "zeta(" + std::to_string(conductor_) + ")";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::optional<long> is_root_of_unity(const Cyclo& c) {
  if (c.is_zero()) throw ZeroElement("zero is not a root of unity");
  if (c.is_rational()) {
    if (c.rational() == 1) return 1;
    if (c.rational() == -1) return 2;
    return std::nullopt;
  }
  long bound = lcm(2, c.conductor());
  Cyclo p = c;
  for (long m = 1; m <= bound; ++m) {
    if (p.is_one()) return m;
    p *= c;
  }
  return std::nullopt;
}

}  // namespace pwb
