#include "pwb/poly.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "pwb/errors.hpp"

namespace pwb {

bool grlex_less(const Exponents& a, const Exponents& b) {
  int da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

int exp_degree(const Exponents& e) {
  long d = 0;
  for (int x : e) d += x;
  if (d > INT_MAX) throw ExponentOverflow("total degree exceeds 2^31 - 1");
  return static_cast<int>(d);
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  long total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    long s = static_cast<long>(a[i]) + b[i];
    total += s;
    if (s > INT_MAX || total > INT_MAX) throw ExponentOverflow("exponent exceeds 2^31 - 1");
    r[i] = static_cast<int>(s);
  }
  return r;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

PolyRing::PolyRing(std::vector<std::string> vars, long conductor, std::map<std::string, int> aliases)
    : data_(std::make_shared<const Data>(Data{std::move(vars), conductor, std::move(aliases)})) {
  for (std::size_t i = 0; i < data_->vars.size(); ++i)
    for (std::size_t j = i + 1; j < data_->vars.size(); ++j)
      if (data_->vars[i] == data_->vars[j]) throw InvalidArgument("duplicate variable '" + data_->vars[i] + "'");
}

std::optional<int> PolyRing::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (data_->vars[i] == name) return i;
  auto it = data_->aliases.find(std::string(name));
  if (it != data_->aliases.end()) return it->second;
  return std::nullopt;
}

Poly Poly::constant(const PolyRing& ring, const Cyclo& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({Exponents(ring.nvars(), 0), c});
  return p;
}

Poly Poly::variable(const PolyRing& ring, int i) {
  Exponents e(ring.nvars(), 0);
  e.at(i) = 1;
  return monomial(ring, std::move(e));
}

Poly Poly::monomial(const PolyRing& ring, Exponents e, const Cyclo& c) {
  if (static_cast<int>(e.size()) != ring.nvars()) throw InvalidArgument("exponent length mismatch");
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(e), c});
  return p;
}

Poly Poly::from_terms(const PolyRing& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_less(b.exp, a.exp); });
  Poly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
      p.terms_.back().coeff += t.coeff;
    else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

Poly Poly::linear(const PolyRing& ring, const Vec& coeffs) {
  std::vector<Term> t;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (coeffs[i].is_zero()) continue;
    Exponents e(ring.nvars(), 0);
    e[i] = 1;
    t.push_back({std::move(e), coeffs[i]});
  }
  return from_terms(ring, std::move(t));
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && exp_degree(terms_[0].exp) == 0); }

Cyclo Poly::coeff(const Exponents& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return Cyclo();
}

Cyclo Poly::constant_term() const {
  if (terms_.empty() || exp_degree(terms_.back().exp) != 0) return Cyclo();
  return terms_.back().coeff;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : exp_degree(terms_.front().exp); }
int Poly::min_degree() const { return terms_.empty() ? -1 : exp_degree(terms_.back().exp); }
bool Poly::is_homogeneous() const { return total_degree() == min_degree(); }

Poly Poly::homogeneous_part(int k) const {
  Poly p(ring_);
  for (const auto& t : terms_)
    if (exp_degree(t.exp) == k) p.terms_.push_back(t);
  return p;
}

int Poly::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

std::vector<int> Poly::support() const {
  std::vector<int> out;
  for (int i = 0; i < ring_.nvars(); ++i)
    for (const auto& t : terms_)
      if (t.exp[i] > 0) {
        out.push_back(i);
        break;
      }
  return out;
}

Vec Poly::linear_coeffs() const {
  if (total_degree() > 1) throw InvalidArgument("not a linear form: " + str());
  Vec v(ring_.nvars());
  for (const auto& t : terms_)
    for (int i = 0; i < ring_.nvars(); ++i)
      if (t.exp[i] == 1) v[i] = t.coeff;
  return v;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_less(o.terms_[j].exp, terms_[i].exp))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grlex_less(terms_[i].exp, o.terms_[j].exp)) {
      out.push_back(o.terms_[j++]);
    } else {
      Cyclo c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) out.push_back({std::move(terms_[i].exp), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly Poly::mul_monomial(const Exponents& e, const Cyclo& c) const {
  Poly p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({exp_add(t.exp, e), t.coeff * c});
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  if (terms_.empty() || o.terms_.empty()) return Poly(ring_);
  if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].exp, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mul_monomial(terms_[0].exp, terms_[0].coeff);
  std::map<Exponents, Cyclo, GrlexGreater> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(exp_add(a.exp, b.exp));
      it->second += a.coeff * b.coeff;
    }
  Poly p(ring_);
  for (auto& [e, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
  return p;
}

Poly Poly::scaled(const Cyclo& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw InvalidArgument("negative polynomial power");
  Poly result = constant(ring_, Cyclo(1)), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly Poly::partial(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term d{t.exp, t.coeff * Cyclo(static_cast<long>(t.exp[var]))};
    d.exp[var] -= 1;
    out.push_back(std::move(d));
  }
  // Lowering one exponent on every surviving term keeps the grlex order.
  Poly p(ring_);
  p.terms_ = std::move(out);
  return p;
}

Poly Poly::substitute(const std::vector<Poly>& images, const PolyRing& target) const {
  if (static_cast<int>(images.size()) != ring_.nvars()) throw InvalidArgument("substitution arity mismatch");
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](int i, int k) -> const Poly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(constant(target, Cyclo(1)));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
    return pw[k];
  };
  Poly result(target);
  for (const auto& t : terms_) {
    Poly term = constant(target, t.coeff);
    for (int i = 0; i < ring_.nvars() && !term.is_zero(); ++i)
      if (t.exp[i]) term = term * power(i, t.exp[i]);
    result += term;
  }
  return result;
}

Poly Poly::remap(const PolyRing& target, const std::vector<int>& index_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target.nvars(), 0);
    for (int i = 0; i < ring_.nvars(); ++i)
      if (t.exp[i]) {
        if (index_map[i] < 0) throw InvalidArgument("variable " + ring_.var(i) + " has no image");
        e[index_map[i]] += t.exp[i];
      }
    out.push_back({std::move(e), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string monomial_str(const PolyRing& ring, const Exponents& e) {
  std::string s;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.var(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string cs = t.coeff.str();
    bool simple = t.coeff.term_count() == 1;
    bool neg = simple && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!simple) cs = "(" + cs + ")";
    std::string mono = monomial_str(ring_, t.exp);
    std::string body;
    if (mono == "1")
      body = cs;
    else if (cs == "1")
      body = mono;
    else
      body = cs + "*" + mono;
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

std::vector<Exponents> monomials_of_degree(int n, int k) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  // Lex-descending enumeration of compositions equals grlex order within a degree.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, k);
  return out;
}

std::pair<Poly, Poly> divide_with_remainder(const Poly& f, const Poly& u) {
  if (u.is_zero()) throw DivisorZero("division by the zero polynomial");
  const PolyRing& ring = f.ring();
  Poly q(ring), r(ring), p = f;
  const Term& lu = u.leading();
  Cyclo inv = lu.coeff.inverse();
  while (!p.is_zero()) {
    const Term& lp = p.leading();
    if (exp_divides(lu.exp, lp.exp)) {
      Exponents d(lp.exp.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = lp.exp[i] - lu.exp[i];
      Cyclo c = lp.coeff * inv;
      q += Poly::monomial(ring, d, c);
      p -= u.mul_monomial(d, c);
    } else {
      Poly lead = Poly::monomial(ring, lp.exp, lp.coeff);
      r += lead;
      p -= lead;
    }
  }
  return {q, r};
}

std::optional<Poly> divides(const Poly& u, const Poly& f) {
  auto [q, r] = divide_with_remainder(f, u);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly linear_image(const Matrix& g, const PolyRing& ring, int i) { return Poly::linear(ring, g.column(i)); }

Poly apply_linear(const Matrix& g, const Poly& f) {
  const PolyRing& ring = f.ring();
  if (g.rows() != ring.nvars() || g.cols() != ring.nvars()) throw InvalidArgument("matrix size does not match ring");
  if (g.det().is_zero()) throw SingularMatrix("linear substitution is singular");
  if (g.is_monomial()) {
    std::vector<int> target(ring.nvars());
    Vec scale(ring.nvars());
    for (int j = 0; j < ring.nvars(); ++j)
      for (int i = 0; i < ring.nvars(); ++i)
        if (!g(i, j).is_zero()) {
          target[j] = i;
          scale[j] = g(i, j);
        }
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      Exponents e(ring.nvars(), 0);
      Cyclo c = t.coeff;
      for (int j = 0; j < ring.nvars(); ++j)
        if (t.exp[j]) {
          e[target[j]] = t.exp[j];
          c *= scale[j].pow(t.exp[j]);
        }
      out.push_back({std::move(e), std::move(c)});
    }
    return Poly::from_terms(ring, std::move(out));
  }
  std::vector<Poly> images;
  for (int i = 0; i < ring.nvars(); ++i) images.push_back(linear_image(g, ring, i));
  return f.substitute(images, ring);
}

std::map<Exponents, Poly, GrlexGreater> split_coefficients(const Poly& f, const std::vector<int>& outer,
                                                           const PolyRing& inner_ring) {
  std::vector<bool> is_outer(f.ring().nvars(), false);
  for (int v : outer) is_outer[v] = true;
  std::map<Exponents, std::vector<Term>, GrlexGreater> buckets;
  for (const auto& t : f.terms()) {
    Exponents o, in;
    for (int v : outer) o.push_back(t.exp[v]);
    for (int i = 0; i < f.ring().nvars(); ++i)
      if (!is_outer[i]) in.push_back(t.exp[i]);
    if (static_cast<int>(in.size()) != inner_ring.nvars()) throw InvalidArgument("inner ring arity mismatch");
    buckets[o].push_back({std::move(in), t.coeff});
  }
  std::map<Exponents, Poly, GrlexGreater> out;
  for (auto& [o, ts] : buckets) {
    Poly p = Poly::from_terms(inner_ring, std::move(ts));
    if (!p.is_zero()) out.emplace(o, std::move(p));
  }
  return out;
}

MonomialIndex::MonomialIndex(std::vector<Exponents> monos) : monomials(std::move(monos)) {
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], static_cast<int>(i));
}

Vec MonomialIndex::coords(const Poly& f) const {
  Vec v(monomials.size());
  for (const auto& t : f.terms()) {
    auto it = index.find(t.exp);
    if (it == index.end()) throw InvalidArgument("monomial outside the index: " + monomial_str(f.ring(), t.exp));
    v[it->second] = t.coeff;
  }
  return v;
}

Poly MonomialIndex::poly(const PolyRing& ring, const Vec& v) const {
  std::vector<Term> t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.push_back({monomials[i], v[i]});
  return Poly::from_terms(ring, std::move(t));
}

MonomialIndex monomial_index_of(const std::vector<Poly>& polys) {
  std::set<Exponents, GrlexGreater> all;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) all.insert(t.exp);
  return MonomialIndex(std::vector<Exponents>(all.begin(), all.end()));
}

Matrix coefficient_matrix(const std::vector<Poly>& polys, const MonomialIndex& idx) {
  Matrix m(static_cast<int>(polys.size()), static_cast<int>(idx.monomials.size()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& t : polys[r].terms()) m(static_cast<int>(r), idx.index.at(t.exp)) = t.coeff;
  return m;
}

}  // namespace pwb
