#include "pwb/upoly.hpp"

#include <algorithm>

#include "pwb/errors.hpp"

namespace pwb {

UPoly::UPoly(std::vector<Cyclo> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::monomial(const Cyclo& c, int k) {
  std::vector<Cyclo> v(k + 1);
  v[k] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::cyclotomic(long d) {
  std::vector<Cyclo> v;
  for (long c : cyclotomic_poly(d)) v.emplace_back(c);
  return UPoly(std::move(v));
}

bool UPoly::is_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Cyclo& c) { return c.is_rational(); });
}

Cyclo UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Cyclo();
  return coeffs_[k];
}

Cyclo UPoly::eval(const Cyclo& x) const {
  Cyclo acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Cyclo> v;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * Cyclo(static_cast<long>(k)));
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Cyclo inv = lead().inverse();
  UPoly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UPoly UPoly::pow(int e) const {
  UPoly r(Cyclo(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

UPoly UPoly::conjugate(long n, long a) const {
  std::vector<Cyclo> v;
  for (const auto& c : coeffs_) {
    Cyclo l = c.lift(lcm(c.conductor(), n));
    long m = l.conductor();
    std::vector<Rational> img(m);
    for (std::size_t k = 0; k < l.coeffs().size(); ++k) img[(static_cast<long>(k) * a) % m] += l.coeffs()[k];
    v.emplace_back(m, std::move(img));
  }
  return UPoly(std::move(v));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Cyclo> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Cyclo& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string cs = c.str();
    bool simple = c.term_count() == 1;
    bool neg = simple && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!simple) cs = "(" + cs + ")";
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisorZero("polynomial division by zero");
  std::vector<Cyclo> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Cyclo> q(a.degree() - db + 1);
  Cyclo inv = b.lead().inverse();
  for (int k = a.degree() - db; k >= 0; --k) {
    Cyclo c = r[k + db] * inv;
    if (c.is_zero()) continue;
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[k + i] -= c * b.coeffs()[i];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

UPoly norm_down(const UPoly& p) {
  if (p.is_rational()) return p;
  long n = 1;
  for (const auto& c : p.coeffs()) n = lcm(n, c.conductor());
  UPoly acc(Cyclo(1));
  for (long a = 1; a < n; ++a)
    if (gcd(a, n) == 1) acc = acc * p.conjugate(n, a);
  std::vector<Cyclo> v;
  for (const auto& c : acc.coeffs()) v.emplace_back(c.descend());
  return UPoly(std::move(v));
}

namespace {

void divisors_of(const mpz_class& v, std::vector<mpz_class>& out) {
  mpz_class a = abs(v);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    out.push_back(d);
    if (d * d != a) out.push_back(a / d);
  }
}

// Rational roots of a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, mpz_class(c.rational().get_den()));
  std::vector<mpz_class> z;
  for (const auto& c : p.coeffs()) z.push_back(mpz_class(c.rational() * den));
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const mpz_class& c0 = z[low];
  const mpz_class& cn = z.back();
  // Divisor enumeration is trial division; skip absurdly large constants.
  if (abs(c0) > 1000000000 || abs(cn) > 1000000000) return roots;
  std::vector<mpz_class> ps, qs;
  divisors_of(c0, ps);
  divisors_of(cn, qs);
  for (const auto& a : ps)
    for (const auto& b : qs)
      for (int s : {1, -1}) {
        Rational r(s * a, b);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (p.eval(Cyclo(r)).is_zero()) roots.push_back(r);
      }
  return roots;
}

}  // namespace

RootSearch find_roots(const UPoly& p) {
  RootSearch out;
  if (p.is_zero()) throw ZeroElement("root search on the zero polynomial");
  UPoly sq = squarefree_part(p);
  if (sq.degree() <= 0) {
    out.cofactor = sq;
    return out;
  }
  if (sq.degree() == 1) {
    out.roots.push_back(-sq.coeff(0) / sq.coeff(1));
    out.cofactor = UPoly(Cyclo(1));
    return out;
  }
  UPoly norm = sq.is_rational() ? sq : squarefree_part(norm_down(sq));
  std::vector<Cyclo> candidates;
  for (const auto& r : rational_roots(norm)) candidates.emplace_back(r);
  // Roots of unity of norm have phi(d) <= deg(norm); phi(d) >= sqrt(d/2).
  long bound = norm.degree();
  for (long d = 1; d <= 2 * bound * bound + 2; ++d) {
    long ph = euler_phi(d);
    if (ph > bound || d <= 2) continue;
    UPoly phi_d = UPoly::cyclotomic(d);
    if (!divmod(norm, phi_d).second.is_zero()) continue;
    for (long k = 1; k < d; ++k)
      if (gcd(k, d) == 1) candidates.push_back(Cyclo::zeta(d, k));
  }
  UPoly rest = sq;
  for (const auto& c : candidates) {
    if (!rest.eval(c).is_zero()) continue;
    out.roots.push_back(c);
    rest = divmod(rest, UPoly(std::vector<Cyclo>{-c, Cyclo(1)})).first;
  }
  out.cofactor = rest.monic();
  return out;
}

}  // namespace pwb
