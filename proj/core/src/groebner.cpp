#include "pwb/groebner.hpp"

#include <algorithm>

#include "pwb/errors.hpp"

namespace pwb {

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const {
  switch (kind) {
    case OrderKind::Grlex:
      return grlex_less(a, b);
    case OrderKind::Lex:
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    case OrderKind::Elimination: {
      long da = 0, db = 0;
      for (int i = 0; i < block; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db;
      for (int i = 0; i < block; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      long ra = 0, rb = 0;
      for (std::size_t i = block; i < a.size(); ++i) {
        ra += a[i];
        rb += b[i];
      }
      if (ra != rb) return ra < rb;
      for (std::size_t i = block; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    }
  }
  return false;
}

namespace {

struct GTerm {
  Exponents e;
  Cyclo c;
};
using GPoly = std::vector<GTerm>;

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

class Engine {
 public:
  Engine(MonomialOrder ord, const PolyRing& ring) : ord_(ord), ring_(ring) {}

  bool greater(const Exponents& a, const Exponents& b) const { return ord_.less(b, a); }

  GPoly from(const Poly& f) const {
    GPoly g;
    g.reserve(f.size());
    for (const auto& t : f.terms()) g.push_back({t.exp, t.coeff});
    if (ord_.kind != OrderKind::Grlex)
      std::sort(g.begin(), g.end(), [this](const GTerm& a, const GTerm& b) { return greater(a.e, b.e); });
    return g;
  }

  Poly to(const GPoly& g) const {
    std::vector<Term> t;
    t.reserve(g.size());
    for (const auto& x : g) t.push_back({x.e, x.c});
    return Poly::from_terms(ring_, std::move(t));
  }

  // p[pf:] - c * x^shift * g[gf:]
  GPoly sub_mul(const GPoly& p, std::size_t pf, const Cyclo& c, const Exponents& shift, const GPoly& g,
                std::size_t gf) const {
    GPoly out;
    out.reserve(p.size() - pf + g.size() - gf);
    std::size_t i = pf, j = gf;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(p[i++]);
        continue;
      }
      Exponents ge = exp_add(g[j].e, shift);
      if (i < p.size() && greater(p[i].e, ge)) {
        out.push_back(p[i++]);
      } else if (i < p.size() && p[i].e == ge) {
        Cyclo v = p[i].c - c * g[j].c;
        if (!v.is_zero()) out.push_back({std::move(ge), std::move(v)});
        ++i;
        ++j;
      } else {
        out.push_back({std::move(ge), -(c * g[j].c)});
        ++j;
      }
    }
    return out;
  }

  const GPoly* find_divisor(const Exponents& e, const std::vector<const GPoly*>& basis) const {
    for (const GPoly* g : basis)
      if (exp_divides((*g)[0].e, e)) return g;
    return nullptr;
  }

  GPoly reduce(GPoly p, const std::vector<const GPoly*>& basis) const {
    GPoly result;
    std::size_t i = 0;
    while (i < p.size()) {
      const GPoly* g = find_divisor(p[i].e, basis);
      if (!g) {
        result.push_back(std::move(p[i++]));
        continue;
      }
      Cyclo c = p[i].c / (*g)[0].c;
      Exponents shift = exp_sub(p[i].e, (*g)[0].e);
      p = sub_mul(p, i + 1, c, shift, *g, 1);
      i = 0;
    }
    return result;
  }

  static void make_monic(GPoly& g) {
    if (g.empty() || g[0].c.is_one()) return;
    Cyclo inv = g[0].c.inverse();
    for (auto& t : g) t.c *= inv;
  }

 private:
  MonomialOrder ord_;
  PolyRing ring_;
};

struct Pair {
  int i, j;
  Exponents lcm;
  int deg;
};

}  // namespace

std::vector<Poly> groebner(const std::vector<Poly>& gens, MonomialOrder order, GroebnerOptions opts) {
  if (gens.empty()) return {};
  const PolyRing& ring = gens[0].ring();
  Engine eng(order, ring);
  std::vector<GPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto active_set = [&]() {
    std::vector<const GPoly*> s;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) s.push_back(&polys[k]);
    return s;
  };

  auto update = [&](GPoly h) {
    Engine::make_monic(h);
    int hi = static_cast<int>(polys.size());
    const Exponents& lh = h[0].e;
    std::vector<Pair> cand;
    for (int k = 0; k < hi; ++k)
      if (active[k]) cand.push_back({k, hi, exp_lcm(polys[k][0].e, lh), 0});
    // Keep (h, g1) if coprime or no other candidate's lcm divides its lcm.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool keep = coprime(polys[cand[a].i][0].e, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
          if (exp_divides(cand[b].lcm, cand[a].lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (exp_divides(kept[b].lcm, cand[a].lcm)) keep = false;
      }
      if (keep) kept.push_back(cand[a]);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!coprime(polys[p.i][0].e, lh)) fresh.push_back(std::move(p));
    std::vector<Pair> next;
    for (auto& p : pairs) {
      const Exponents& l1 = polys[p.i][0].e;
      const Exponents& l2 = polys[p.j][0].e;
      bool drop = exp_divides(lh, p.lcm) && exp_lcm(l1, lh) != p.lcm && exp_lcm(lh, l2) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : fresh) {
      p.deg = exp_degree(p.lcm);
      next.push_back(std::move(p));
    }
    pairs = std::move(next);
    for (int k = 0; k < hi; ++k)
      if (active[k] && exp_divides(lh, polys[k][0].e)) active[k] = false;
    polys.push_back(std::move(h));
    active.push_back(true);
  };

  // Seed with the inputs, each reduced against what is already present.
  std::vector<GPoly> seeds;
  for (const auto& g : gens) {
    if (g.ring() != ring) throw InvalidArgument("generators live in different rings");
    if (!g.is_zero()) seeds.push_back(eng.from(g));
  }
  std::sort(seeds.begin(), seeds.end(), [&](const GPoly& a, const GPoly& b) { return order.less(a[0].e, b[0].e); });
  for (auto& s : seeds) {
    GPoly h = eng.reduce(std::move(s), active_set());
    if (!h.empty()) update(std::move(h));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].deg < pairs[best].deg ||
          (pairs[k].deg == pairs[best].deg && order.less(pairs[k].lcm, pairs[best].lcm)))
        best = k;
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<long>(best));
    if (p.deg > opts.degree_budget)
      throw DegreeBudgetExceeded("S-pair of degree " + std::to_string(p.deg) + " exceeds budget " +
                                 std::to_string(opts.degree_budget));
    const GPoly& f = polys[p.i];
    const GPoly& g = polys[p.j];
    // Both are monic, so S = x^(l - lf) f - x^(l - lg) g.
    Exponents sf = exp_sub(p.lcm, f[0].e), sg = exp_sub(p.lcm, g[0].e);
    GPoly fs;
    fs.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) fs.push_back({exp_add(f[k].e, sf), f[k].c});
    GPoly s = eng.sub_mul(fs, 0, Cyclo(1), sg, g, 1);
    GPoly h = eng.reduce(std::move(s), active_set());
    if (!h.empty()) update(std::move(h));
  }

  // The active set is a minimal basis; interreduce tails.
  std::vector<GPoly> basis;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) basis.push_back(polys[k]);
  std::sort(basis.begin(), basis.end(), [&](const GPoly& a, const GPoly& b) { return order.less(a[0].e, b[0].e); });
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<const GPoly*> others;
    for (std::size_t m = 0; m < basis.size(); ++m)
      if (m != k) others.push_back(&basis[m]);
    GPoly tail(basis[k].begin() + 1, basis[k].end());
    GPoly red = eng.reduce(std::move(tail), others);
    red.insert(red.begin(), basis[k][0]);
    basis[k] = std::move(red);
  }
  std::vector<Poly> out;
  for (const auto& b : basis) out.push_back(eng.to(b));
  return out;
}

Exponents leading_exponents(const Poly& f, MonomialOrder order) {
  if (f.is_zero()) throw ZeroElement("leading term of zero");
  const Exponents* best = &f.terms()[0].exp;
  for (const auto& t : f.terms())
    if (order.less(*best, t.exp)) best = &t.exp;
  return *best;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order) {
  Engine eng(order, f.ring());
  std::vector<GPoly> b;
  for (const auto& g : basis) b.push_back(eng.from(g));
  std::vector<const GPoly*> ptrs;
  for (const auto& g : b) ptrs.push_back(&g);
  return eng.to(eng.reduce(eng.from(f), ptrs));
}

bool is_unit_ideal(const std::vector<Poly>& basis) {
  for (const auto& g : basis)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

bool ideal_member(const Poly& f, const std::vector<Poly>& gens, GroebnerOptions opts) {
  auto gb = groebner(gens, MonomialOrder::grlex(), opts);
  return normal_form(f, gb).is_zero();
}

PolyRing tag_ring(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
  return PolyRing(std::move(names));
}

SubalgebraMembership::SubalgebraMembership(std::vector<Poly> gens, PolyRing tag_ring, GroebnerOptions opts)
    : gens_(std::move(gens)), tag_ring_(std::move(tag_ring)) {
  if (static_cast<int>(gens_.size()) != tag_ring_.nvars()) throw InvalidArgument("one tag variable per generator");
  if (gens_.empty()) throw InvalidArgument("subalgebra needs at least one generator");
  source_ = gens_[0].ring();
  int n = source_.nvars(), k = tag_ring_.nvars();
  std::vector<std::string> names = source_.vars();
  for (int i = 0; i < k; ++i) names.push_back("_tag" + std::to_string(i));
  joint_ = PolyRing(std::move(names), source_.conductor());
  std::vector<int> embed(n);
  for (int i = 0; i < n; ++i) embed[i] = i;
  std::vector<Poly> ideal;
  for (int i = 0; i < k; ++i) ideal.push_back(Poly::variable(joint_, n + i) - gens_[i].remap(joint_, embed));
  basis_ = groebner(ideal, MonomialOrder::elimination(n), opts);
}

std::optional<Poly> SubalgebraMembership::express(const Poly& f) const {
  int n = source_.nvars(), k = tag_ring_.nvars();
  std::vector<int> embed(n);
  for (int i = 0; i < n; ++i) embed[i] = i;
  Poly r = normal_form(f.remap(joint_, embed), basis_, MonomialOrder::elimination(n));
  std::vector<Term> out;
  for (const auto& t : r.terms()) {
    for (int i = 0; i < n; ++i)
      if (t.exp[i]) return std::nullopt;
    out.push_back({Exponents(t.exp.begin() + n, t.exp.begin() + n + k), t.coeff});
  }
  return Poly::from_terms(tag_ring_, std::move(out));
}

std::vector<Poly> SubalgebraMembership::relations() const {
  int n = source_.nvars(), k = tag_ring_.nvars();
  std::vector<Poly> rel;
  for (const auto& g : basis_) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (int i = 0; i < n && pure; ++i)
        if (t.exp[i]) pure = false;
    if (!pure) continue;
    std::vector<Term> out;
    for (const auto& t : g.terms()) out.push_back({Exponents(t.exp.begin() + n, t.exp.begin() + n + k), t.coeff});
    rel.push_back(Poly::from_terms(tag_ring_, std::move(out)));
  }
  return rel;
}

std::optional<Poly> subalgebra_member(const Poly& f, const std::vector<Poly>& gens, GroebnerOptions opts) {
  return SubalgebraMembership(gens, tag_ring(static_cast<int>(gens.size())), opts).express(f);
}

}  // namespace pwb
