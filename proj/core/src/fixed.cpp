#include "pwb/fixed.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pwb/errors.hpp"

namespace pwb {

Poly PresentedPoisson::bracket(int i, int j) const {
  if (i == j) return Poly(gen_ring);
  auto it = brackets.find({std::min(i, j), std::max(i, j)});
  if (it == brackets.end()) return Poly(gen_ring);
  return i < j ? it->second : -it->second;
}

namespace {

std::vector<std::string> generator_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("u" + std::to_string(i));
  return names;
}

// Exponent vectors over the first `count` generators of weighted degree k.
std::vector<Exponents> weighted_exponents(const std::vector<int>& degrees, std::size_t count, int k) {
  std::vector<Exponents> out;
  Exponents e(degrees.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (left == 0) {
      out.push_back(e);
      return;
    }
    if (i == count) return;
    for (int m = 0; m * degrees[i] <= left; ++m) {
      e[i] = m;
      self(self, i + 1, left - m * degrees[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

// Products of generators, memoized on the exponent vector without trailing zeros.
class ProductCache {
 public:
  ProductCache(const std::vector<Poly>& gens, const PolyRing& ring) : gens_(gens), ring_(ring) {}
  Poly get(Exponents e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    Poly p = Poly::constant(ring_, Cyclo(1));
    if (!e.empty()) {
      Exponents rest = e;
      rest.back() -= 1;
      p = get(rest) * gens_[e.size() - 1];
    }
    memo_.emplace(e, p);
    return p;
  }

 private:
  const std::vector<Poly>& gens_;
  PolyRing ring_;
  std::map<Exponents, Poly> memo_;
};

Cyclo evaluate(const Poly& f, const std::vector<Cyclo>& point) {
  PolyRing none;
  std::vector<Poly> images;
  for (const auto& c : point) images.push_back(Poly::constant(none, c));
  return f.substitute(images, none).constant_term();
}

bool jacobian_nonsingular(const std::vector<Poly>& gens, int n) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Cyclo> pt;
    for (int i = 0; i < n; ++i) pt.emplace_back(dist(rng));
    Matrix j(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) j(r, c) = evaluate(gens[r].partial(c), pt);
    if (!j.det().is_zero()) return true;
  }
  return false;
}

// Solutions of sum_c x_c products[c] = targets[t], one per target. Pivots
// are taken among the product columns only, last product first, so the free
// variables (set to zero) sit on the earlier products.
std::vector<std::optional<Vec>> express_linear(const std::vector<Poly>& products, const std::vector<Poly>& targets) {
  std::vector<Poly> all = products;
  all.insert(all.end(), targets.begin(), targets.end());
  MonomialIndex idx = monomial_index_of(all);
  int rows = static_cast<int>(idx.monomials.size()), cols = static_cast<int>(products.size());
  int width = cols + static_cast<int>(targets.size());
  Matrix m(rows, width);
  for (int c = 0; c < width; ++c) {
    int at = c < cols ? cols - 1 - c : c;
    for (const auto& t : all[c].terms()) m(idx.index.at(t.exp), at) = t.coeff;
  }
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int r = row;
    while (r < rows && m(r, col).is_zero()) ++r;
    if (r == rows) continue;
    if (r != row)
      for (int c = col; c < width; ++c) std::swap(m(r, c), m(row, c));
    Cyclo inv = m(row, col).inverse();
    for (int c = col; c < width; ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (int r2 = 0; r2 < rows; ++r2) {
      if (r2 == row || m(r2, col).is_zero()) continue;
      Cyclo f = m(r2, col);
      for (int c = col; c < width; ++c)
        if (!m(row, c).is_zero()) m(r2, c) -= f * m(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  std::vector<std::optional<Vec>> out;
  for (int t = cols; t < width; ++t) {
    bool consistent = true;
    for (int r = row; r < rows && consistent; ++r) consistent = m(r, t).is_zero();
    if (!consistent) {
      out.emplace_back();
      continue;
    }
    Vec sol(cols);
    for (std::size_t r = 0; r < piv.size(); ++r) sol[cols - 1 - piv[r]] = m(static_cast<int>(r), t);
    out.emplace_back(std::move(sol));
  }
  return out;
}

long conductor_of(const PoissonGroup& g) {
  long c = 1;
  for (const auto& m : g.elements)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) c = lcm(c, m(i, j).conductor());
  return c;
}

}  // namespace

Poly reynolds(const PoissonGroup& g, const Poly& f) {
  Poly s(f.ring());
  for (const auto& m : g.elements) s += apply_linear(m, f);
  return s.scaled(Cyclo(Rational(1, static_cast<long>(g.elements.size()))));
}

int default_degree_bound(const PoissonGroup& g) { return std::max<int>(4, static_cast<int>(2 * g.exponent)); }

PresentedPoisson fixed_cyclic_reflection(const PoissonAlgebra& a, const GradedMap& g, GroebnerOptions opts) {
  Classification c = classify(a, g);
  if (c.kind != Classification::Kind::Reflection)
    throw NotReflection(std::string("map is ") + kind_name(c.kind) + ", not a Poisson reflection");
  int n = a.nvars();
  PresentedPoisson p;
  p.expressions.push_back(Poly::linear(a.ring(), c.eigenbasis[0]).pow(static_cast<int>(c.order)));
  p.degrees.push_back(static_cast<int>(c.order));
  for (int i = 1; i < n; ++i) {
    p.expressions.push_back(Poly::linear(a.ring(), c.eigenbasis[i]));
    p.degrees.push_back(1);
  }
  p.names = generator_names(n);
  p.gen_ring = PolyRing(p.names, lcm(a.ring().conductor(), c.xi.conductor()));
  p.degree_bound = static_cast<int>(c.order);
  SubalgebraMembership sm(p.expressions, p.gen_ring, opts);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly b = bracket(a, p.expressions[i], p.expressions[j]);
      if (b.is_zero()) continue;
      auto e = sm.express(b);
      if (!e) throw InducedBracketNotClosed("{" + p.names[i] + "," + p.names[j] + "} leaves the subalgebra");
      p.brackets.emplace(std::make_pair(i, j), *e);
    }
  p.molien = molien_series(group_closure({g}));
  p.certified_polynomial = p.molien == free_hilbert_series(p.degrees);
  if (!p.certified_polynomial) p.diagnostics.push_back("Molien series differs from the generator degrees");
  return p;
}

PresentedPoisson fixed_group(const PoissonAlgebra& a, const PoissonGroup& g, std::optional<int> degree_bound) {
  int n = a.nvars();
  if (g.elements.empty()) throw InvalidArgument("group closure not materialized");
  if (g.elements[0].rows() != n) throw InvalidArgument("group acts on a different dimension");
  int bound = degree_bound.value_or(default_degree_bound(g));
  if (bound < 1) throw InvalidArgument("degree bound must be positive");
  PresentedPoisson p;
  p.degree_bound = bound;
  p.molien = molien_series(g);
  std::vector<Cyclo> hilbert = series_taylor(p.molien, bound);
  ProductCache cache(p.expressions, a.ring());

  int reached = 0;
  for (int k = 1; k <= bound; ++k) {
    reached = k;
    MonomialIndex mons(monomials_of_degree(n, k));
    if (!hilbert[k].is_rational() || hilbert[k].rational().get_den() != 1)
      throw InvalidArgument("Molien coefficient is not an integer");
    int target = static_cast<int>(hilbert[k].rational().get_num().get_si());
    Echelon span(static_cast<int>(mons.monomials.size()));
    std::size_t lower = p.expressions.size();
    for (const auto& e : weighted_exponents(p.degrees, lower, k)) {
      if (span.rank() == target) break;
      span.add(mons.coords(cache.get(e)));
    }
    if (span.rank() < target) {
      // Candidates: normalized Reynolds images, fewest terms first.
      std::set<std::string> seen;
      std::vector<Poly> cands;
      for (const auto& m : mons.monomials) {
        Poly r = reynolds(g, Poly::monomial(a.ring(), m));
        if (r.is_zero()) continue;
        r = r.scaled(r.leading().coeff.inverse());
        if (seen.insert(r.str()).second) cands.push_back(std::move(r));
      }
      std::stable_sort(cands.begin(), cands.end(), [](const Poly& x, const Poly& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return grlex_less(y.leading().exp, x.leading().exp);
      });
      std::vector<Poly> chosen;
      for (auto& c : cands) {
        if (span.rank() == target) break;
        if (span.add(mons.coords(c))) chosen.push_back(std::move(c));
      }
      if (span.rank() < target) throw InvalidArgument("Reynolds images do not span the invariants");
      std::sort(chosen.begin(), chosen.end(),
                [](const Poly& x, const Poly& y) { return grlex_less(y.leading().exp, x.leading().exp); });
      for (auto& c : chosen) {
        p.expressions.push_back(std::move(c));
        p.degrees.push_back(k);
      }
    }
    if (static_cast<int>(p.expressions.size()) == n && jacobian_nonsingular(p.expressions, n) &&
        p.molien == free_hilbert_series(p.degrees)) {
      p.certified_polynomial = true;
      break;
    }
  }
  p.names = generator_names(p.expressions.size());
  p.gen_ring = PolyRing(p.names, lcm(a.ring().conductor(), conductor_of(g)));

  if (!p.certified_polynomial) {
    if (static_cast<int>(p.expressions.size()) < n)
      throw DegreeBoundTooSmall("only " + std::to_string(p.expressions.size()) + " generators through degree " +
                                std::to_string(bound) + " for " + std::to_string(n) + " variables");
    int maxdeg = *std::max_element(p.degrees.begin(), p.degrees.end());
    // Minimal relations by weighted degree.
    std::vector<Poly> found;
    std::vector<int> rel_degree;
    for (int k = 1; k <= 2 * maxdeg; ++k) {
      auto exps = weighted_exponents(p.degrees, p.expressions.size(), k);
      if (exps.empty()) continue;
      std::map<Exponents, int> col;
      for (std::size_t c = 0; c < exps.size(); ++c) col.emplace(exps[c], static_cast<int>(c));
      std::vector<Poly> prods;
      for (const auto& e : exps) prods.push_back(cache.get(e));
      MonomialIndex idx = monomial_index_of(prods);
      Matrix m = coefficient_matrix(prods, idx).transpose();
      auto kernel = m.kernel();
      if (kernel.empty()) continue;
      Echelon ideal(static_cast<int>(exps.size()));
      for (std::size_t r = 0; r < found.size(); ++r) {
        int rest = k - rel_degree[r];
        for (const auto& e : weighted_exponents(p.degrees, p.expressions.size(), rest)) {
          Vec v(exps.size());
          for (const auto& t : found[r].terms()) {
            Exponents s = exp_add(t.exp, e);
            v[col.at(s)] += t.coeff;
          }
          ideal.add(std::move(v));
        }
      }
      for (const auto& v : kernel) {
        if (!ideal.add(v)) continue;
        std::vector<Term> terms;
        for (std::size_t c = 0; c < exps.size(); ++c)
          if (!v[c].is_zero()) terms.push_back({exps[c], v[c]});
        Poly rel = Poly::from_terms(p.gen_ring, std::move(terms));
        rel = rel.scaled(rel.leading().coeff.inverse());
        found.push_back(rel);
        rel_degree.push_back(k);
        p.relations.push_back(rel);
      }
    }
    if (p.relations.empty())
      throw DegreeBoundTooSmall("generators are algebraically independent through degree " +
                                std::to_string(2 * maxdeg) + " but the Molien series needs more");
    p.diagnostics.push_back("generators complete through degree " + std::to_string(bound) +
                            "; relations searched through weighted degree " + std::to_string(2 * maxdeg));
  } else {
    p.diagnostics.push_back("polynomial: " + std::to_string(n) + " independent generators match the Molien series");
  }

  // Induced bracket: homogeneous components grouped by degree, one
  // elimination per degree.
  std::size_t k = p.expressions.size();
  struct Component {
    std::pair<int, int> key;
    Poly part;
  };
  std::map<int, std::vector<Component>> by_degree;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Poly b = bracket(a, p.expressions[i], p.expressions[j]);
      std::pair<int, int> key{static_cast<int>(i), static_cast<int>(j)};
      for (int d = b.min_degree(); d >= 0 && d <= b.total_degree(); ++d) {
        Poly part = b.homogeneous_part(d);
        if (!part.is_zero()) by_degree[d].push_back({key, std::move(part)});
      }
    }
  auto slot = [&](std::pair<int, int> key) -> Poly& { return p.brackets.try_emplace(key, p.gen_ring).first->second; };
  for (auto& [d, comps] : by_degree) {
    if (d == 0) {
      for (const auto& c : comps) slot(c.key) += Poly::constant(p.gen_ring, c.part.constant_term());
      continue;
    }
    auto exps = weighted_exponents(p.degrees, k, d);
    std::sort(exps.begin(), exps.end(), GrlexGreater());
    std::vector<Poly> prods, targets;
    for (const auto& e : exps) prods.push_back(cache.get(e));
    for (const auto& c : comps) targets.push_back(c.part);
    auto sols = express_linear(prods, targets);
    for (std::size_t t = 0; t < comps.size(); ++t) {
      if (!sols[t]) {
        std::string what = "{" + p.names[comps[t].key.first] + "," + p.names[comps[t].key.second] + "} in degree " +
                           std::to_string(d);
        if (d <= reached || p.certified_polynomial) throw InducedBracketNotClosed(what + " leaves the subalgebra");
        throw DegreeBoundTooSmall(what + " is beyond the generator search");
      }
      Poly& total = slot(comps[t].key);
      for (std::size_t c = 0; c < exps.size(); ++c)
        if (!(*sols[t])[c].is_zero()) total += Poly::monomial(p.gen_ring, exps[c], (*sols[t])[c]);
    }
  }
  for (auto it = p.brackets.begin(); it != p.brackets.end();) it = it->second.is_zero() ? p.brackets.erase(it) : std::next(it);
  return p;
}

std::optional<Matrix> is_skew_presentation(const PresentedPoisson& p) {
  if (!p.relations.empty()) return std::nullopt;
  int k = static_cast<int>(p.names.size());
  Matrix q(k, k);
  for (const auto& [key, b] : p.brackets) {
    Exponents e(k, 0);
    e[key.first] += 1;
    e[key.second] += 1;
    if (b.size() != 1 || b.leading().exp != e) return std::nullopt;
    q(key.first, key.second) = b.leading().coeff;
    q(key.second, key.first) = -b.leading().coeff;
  }
  return q;
}

std::optional<PoissonAlgebra> as_algebra(const PresentedPoisson& p) {
  if (!p.relations.empty()) return std::nullopt;
  return PoissonAlgebra(p.gen_ring, p.brackets, false, "A^G");
}

InvariantBattery invariant_battery(const PoissonAlgebra& a, int probe, GroebnerOptions opts) {
  InvariantBattery b;
  b.unimodular = is_unimodular(a);
  b.quadratic = a.quadratic();
  b.skew = skew_matrix(a).has_value();
  auto center = center_truncated(a, probe);
  for (const auto& c : center) b.center_dims.push_back(static_cast<int>(c.size()));
  DerivedIdeal di = derived_ideal_truncated(a, probe, opts);
  b.derived_dims = di.dims;
  if (di.monomial) b.derived_components = static_cast<int>(di.minimal_primes.size());
  for (int k = 1; k <= probe; ++k)
    if (!center[k].empty()) {
      b.central_in_derived = !di.generators.empty() && ideal_member(center[k][0], di.generators, opts);
      break;
    }
  return b;
}

RigidityReport rigidity_report(const PoissonAlgebra& a, const PoissonGroup& g, std::optional<int> degree_bound,
                               int probe, GroebnerOptions opts) {
  RigidityReport r;
  r.fixed = fixed_group(a, g, degree_bound);
  r.diagnostics = r.fixed.diagnostics;
  r.diagnostics.push_back("A^G is certified only through degree " + std::to_string(r.fixed.degree_bound) +
                          "; invariants probed through degree " + std::to_string(probe));
  r.a = invariant_battery(a, probe, opts);
  auto ag = as_algebra(r.fixed);
  if (!r.fixed.polynomial() || !ag) {
    r.ag.polynomial = false;
    r.distinguished = true;
    r.witness = "polynomiality";
    r.diagnostics.push_back("A^G is not a polynomial ring; only presentation data is available");
    return r;
  }
  r.ag = invariant_battery(*ag, probe, opts);
  auto differ = [&](const char* name, bool d) {
    if (!r.distinguished && d) {
      r.distinguished = true;
      r.witness = name;
    }
  };
  differ("unimodularity", r.a.unimodular != r.ag.unimodular);
  if (r.a.derived_components && r.ag.derived_components)
    differ("derived-ideal components", *r.a.derived_components != *r.ag.derived_components);
  if (r.a.central_in_derived && r.ag.central_in_derived)
    differ("central generator in derived ideal", *r.a.central_in_derived != *r.ag.central_in_derived);
  if (r.a.quadratic && r.ag.quadratic) {
    differ("center dimensions", r.a.center_dims != r.ag.center_dims);
    differ("derived-ideal dimensions", r.a.derived_dims != r.ag.derived_dims);
  }
  return r;
}

}  // namespace pwb
