// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "crosscheck.hpp"
#include "pwb/envelope.hpp"
#include "pwb/families.hpp"
#include "pwb/errors.hpp"
#include "pwb/fixed.hpp"
#include "pwb/parser.hpp"

using namespace pwb;

namespace {

// Every check returns the empty string on success and a reason otherwise.
using Check = std::function<std::string()>;

Cyclo w3() { return Cyclo::zeta(3); }
Poly var(const PolyRing& r, int i) { return Poly::variable(r, i); }

PoissonAlgebra two_var(const Poly& rhs) { return PoissonAlgebra(rhs.ring(), {{{0, 1}, rhs}}); }
PoissonAlgebra two_var(const std::string& rhs) {
  PolyRing r({"x", "y"});
  return two_var(parse_poly(r, rhs));
}

bool same_line(const Vec& a, const Vec& b) { return normalize_first(a) == normalize_first(b); }

// Runs checks in order and stops at the first failure.
std::string all_of(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (auto e = c(); !e.empty()) return e;
  return "";
}

std::string expect(bool ok, const std::string& why) { return ok ? "" : why; }

std::string points_match(const SolutionSet& s, const std::vector<Vec>& expected) {
  if (s.kind != SolutionSet::Kind::FinitePoints) return std::string("expected finite points, got ") + kind_name(s.kind);
  if (s.points.size() != expected.size()) return "expected " + std::to_string(expected.size()) + " points";
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& p : s.points) found = found || same_line(p, e);
    if (!found) return "missing a normal line";
  }
  return "";
}

// Index of the generator equal to f up to a nonzero scalar, or -1.
int generator_like(const PresentedPoisson& p, const Poly& f) {
  for (std::size_t i = 0; i < p.expressions.size(); ++i) {
    const Poly& e = p.expressions[i];
    if (e.size() != f.size()) continue;
    if (e == f.scaled(e.leading().coeff / f.leading().coeff)) return static_cast<int>(i);
  }
  return -1;
}

Matrix swap_b_c(const Cyclo& mu) {
  Matrix g(4, 4);
  g(0, 0) = g(3, 3) = Cyclo(1);
  g(2, 1) = mu;
  g(1, 2) = mu.inverse();
  return g;
}

Matrix negate_last(int dim) {
  Vec d(dim, Cyclo(1));
  d.back() = Cyclo(-1);
  return Matrix::diagonal(d);
}

// ---- criterion 1 -----------------------------------------------------------

std::string criterion1() {
  for (long p : {1L, 2L, -3L}) {
    auto a = jacobian_fpq(Cyclo(p), Cyclo(0));
    if (normal_find_deg1(a).kind != SolutionSet::Kind::Empty) return "normal elements for p = " + std::to_string(p);
    if (find_reflections(a).kind != ReflectionReport::Kind::NoReflections)
      return "reflections for p = " + std::to_string(p);
  }
  return "";
}

// ---- criterion 2 -----------------------------------------------------------

std::string criterion2() {
  auto a = jacobian_fpq(Cyclo(0), Cyclo(1));
  auto p = fixed_group(a, group_closure({GradedMap(Matrix::diagonal({w3(), Cyclo(1), Cyclo(1)}))}));
  const PolyRing& r = a.ring();
  int X = generator_like(p, var(r, 0).pow(3)), y = generator_like(p, var(r, 1)), z = generator_like(p, var(r, 2));
  if (X < 0 || y < 0 || z < 0 || p.names.size() != 3) return "generators are not x^3, y, z";
  for (int i : {X, y, z})
    if (!p.expressions[i].leading().coeff.is_one()) return "generators are rescaled";
  Poly U = var(p.gen_ring, X), Y = var(p.gen_ring, y), Z = var(p.gen_ring, z);
  if (p.bracket(X, y) != (U * Y).scaled(Cyclo(3))) return "{x^3,y} = " + p.bracket(X, y).str();
  if (p.bracket(y, z) != Y * Z) return "{y,z} = " + p.bracket(y, z).str();
  if (p.bracket(z, X) != (U * Z).scaled(Cyclo(3))) return "{z,x^3} = " + p.bracket(z, X).str();
  auto ag = as_algebra(p);
  if (!ag) return "fixed ring is not polynomial";
  auto phi = modular_derivation(*ag);
  if (!phi.images[X].is_zero()) return "phi(x^3) = " + phi.images[X].str();
  if (phi.images[y] != Y.scaled(Cyclo(-2))) return "phi(y) = " + phi.images[y].str();
  if (phi.images[z] != Z.scaled(Cyclo(2))) return "phi(z) = " + phi.images[z].str();
  return expect(is_unimodular(a) && !is_unimodular(*ag), "unimodularity flags are not (A yes, A^G no)");
}

// ---- criterion 3 -----------------------------------------------------------

// The change of basis, presented through fixed_group with the trivial group so
// that is_skew_presentation does the verification.
std::string skew_after_change(const PoissonAlgebra& a, const Matrix& cols, const Cyclo& rho) {
  auto b = linear_change(a, cols, {"u", "v", "w"});
  auto p = fixed_group(b, group_closure({GradedMap(Matrix::identity(3))}));
  auto q = is_skew_presentation(p);
  if (!q) return "not skew in u, v, w";
  const PolyRing& r = b.ring();
  int u = generator_like(p, var(r, 0)), v = generator_like(p, var(r, 1)), w = generator_like(p, var(r, 2));
  if (u < 0 || v < 0 || w < 0) return "presentation generators are not u, v, w";
  bool ok = (*q)(u, v) == rho && (*q)(v, w) == rho && (*q)(w, u) == rho;
  return expect(ok, "rho mismatch: expected " + rho.str() + ", got " + q->str());
}

std::string criterion3() {
  Cyclo g = w3(), one(1);
  for (long qv : {1L, 2L}) {
    Cyclo q(qv);
    auto minus_q = jacobian_fpq(-q, q);
    if (auto e = points_match(normal_find_deg1(minus_q), {Vec{one, one, one}, Vec{one, g, g * g}, Vec{one, g * g, g}});
        !e.empty())
      return "p=-q: " + e;
    auto minus_wq = jacobian_fpq(-g * q, q);
    if (auto e =
            points_match(normal_find_deg1(minus_wq), {Vec{g * g, one, one}, Vec{one, one, g * g}, Vec{one, g * g, one}});
        !e.empty())
      return "p=-wq: " + e;
    Matrix cols = Matrix::from_columns({Vec{one, one, one}, Vec{one, g, g * g}, Vec{one, g * g, g}});
    if (auto e = skew_after_change(minus_q, cols, g * q * (one - g)); !e.empty()) return "p=-q: " + e;
    Matrix wcols = Matrix::from_columns({Vec{one, g, g}, Vec{one, one, g * g}, Vec{one, g * g, one}});
    if (auto e = skew_after_change(minus_wq, wcols, g * q * (g - one)); !e.empty()) return "p=-wq: " + e;
  }
  return "";
}

// ---- criterion 4 -----------------------------------------------------------

std::string qm_span(int n) {
  auto s = normal_find_deg1(quantum_matrices(n));
  std::vector<Vec> found = s.kind == SolutionSet::Kind::LinearSubspace ? s.basis : s.points;
  if (s.kind != SolutionSet::Kind::LinearSubspace && s.kind != SolutionSet::Kind::FinitePoints)
    return std::string("unexpected ") + kind_name(s.kind);
  Vec e1(n * n), e2(n * n);
  e1[qm_index(n, 1, n)] = Cyclo(1);
  e2[qm_index(n, n, 1)] = Cyclo(1);
  return expect(rref_basis(found) == rref_basis({e1, e2}), "span differs from {x_1n, x_n1} for n = " + std::to_string(n));
}

std::string criterion4() {
  if (auto e = qm_span(2); !e.empty()) return e;
  if (auto e = qm_span(3); !e.empty()) return e;
  if (find_reflections(quantum_matrices(3)).kind != ReflectionReport::Kind::NoReflections) return "O(M_3) has reflections";
  auto a = quantum_matrices(2);
  auto rep = find_reflections(a);
  if (rep.kind != ReflectionReport::Kind::Families || rep.families.size() != 1) return "O(M_2): expected one family";
  const auto& f = rep.families[0];
  if (!f.order_two) return "O(M_2) family allows xi != -1";
  auto s = sample_reflection(a, f, Cyclo(-1));
  if (!s) return "no sample reflection";
  const Matrix& g = *s;
  bool shape = g(0, 0).is_one() && g(3, 3).is_one() && g(1, 1).is_zero() && g(2, 2).is_zero() && !g(1, 2).is_zero() &&
               !g(2, 1).is_zero();
  if (!shape) return "sample is not a b<->c swap: " + g.str();
  for (const Cyclo& mu : {Cyclo(1), Cyclo(-1), Cyclo(2), w3()}) {
    auto c = classify(a, GradedMap(swap_b_c(mu)));
    if (c.kind != Classification::Kind::Reflection || c.xi != Cyclo(-1))
      return "swap with mu = " + mu.str() + " is not a reflection with xi = -1";
    Vec u = c.eigenbasis[0];
    if (!u[0].is_zero() || !u[3].is_zero() || !f.direction_basis.empty()
            ? false
            : !same_line(u, f.direction))
      return "eigenvector outside the family direction";
  }
  return "";
}

// ---- criterion 5 -----------------------------------------------------------

std::string qm2_fixed(const Cyclo& mu) {
  auto a = quantum_matrices(2);
  auto p = fixed_group(a, group_closure({GradedMap(swap_b_c(mu))}), 2);
  const PolyRing& r = a.ring();
  Poly A = var(r, 0), B = var(r, 1), C = var(r, 2), D = var(r, 3);
  Poly bmu = B + C.scaled(mu);
  int ia = generator_like(p, A), ib = generator_like(p, bmu), ibc = generator_like(p, B * C), id = generator_like(p, D);
  if (ia < 0 || ib < 0 || ibc < 0 || id < 0 || p.names.size() != 4) return "generators differ from {a, b+mu c, bc, d}";
  for (int i : {ia, ib, ibc, id})
    if (!p.expressions[i].leading().coeff.is_one()) return "generators are rescaled";
  auto u = [&](int i) { return var(p.gen_ring, i); };
  if (p.bracket(ia, ib) != u(ia) * u(ib)) return "{a, b+mu c}";
  if (p.bracket(ia, ibc) != (u(ia) * u(ibc)).scaled(Cyclo(2))) return "{a, bc}";
  if (p.bracket(ia, id) != u(ibc).scaled(Cyclo(2))) return "{a, d}";
  if (!p.bracket(ib, ibc).is_zero()) return "{b+mu c, bc}";
  if (p.bracket(ib, id) != u(ib) * u(id)) return "{b+mu c, d}";
  if (p.bracket(ibc, id) != (u(ibc) * u(id)).scaled(Cyclo(2))) return "{bc, d}";
  return "";
}

std::string criterion5() {
  for (const Cyclo& mu : {Cyclo(1), Cyclo(-1), Cyclo(3), w3()})
    if (auto e = qm2_fixed(mu); !e.empty()) return "mu = " + mu.str() + ": " + e;
  auto r = rigidity_report(quantum_matrices(2), group_closure({GradedMap(swap_b_c(Cyclo(1)))}), 2);
  if (!r.distinguished || r.witness != "derived-ideal components") return "witness: " + r.witness;
  return expect(r.a.derived_components == 3 && r.ag.derived_components == 2, "component counts differ from 3 vs 2");
}

// ---- criterion 6 -----------------------------------------------------------

std::string hweyl(int n) {
  auto a = homogenized_weyl(n);
  const PolyRing& r = a.ring();
  Poly z = var(r, 2 * n);
  auto c = center_truncated(a, 3);
  for (int k = 0; k <= 3; ++k) {
    MonomialIndex idx(monomials_of_degree(2 * n + 1, k));
    if (c[k].size() != 1 || normalize_first(idx.coords(c[k][0])) != idx.coords(z.pow(k)))
      return "center in degree " + std::to_string(k) + " is not spanned by z^" + std::to_string(k);
  }

  auto rep = find_reflections(a);
  if (rep.kind != ReflectionReport::Kind::Families) return "no reflection family";
  Vec zv(2 * n + 1);
  zv[2 * n] = Cyclo(1);
  for (const auto& f : rep.families) {
    if (!f.order_two || !f.direction_basis.empty() || !same_line(f.direction, zv)) return "a family does not negate z";
    auto s = sample_reflection(a, f, Cyclo(-1));
    if (!s || apply_linear(*s, z) != -z) return "sample does not send z to -z";
  }

  auto p = fixed_group(a, group_closure({GradedMap(negate_last(2 * n + 1))}));
  if (!p.polynomial()) return "fixed ring is not polynomial";
  int w = generator_like(p, z.pow(2));
  if (w < 0) return "z^2 is not a generator";
  Poly W = var(p.gen_ring, w);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int xi = generator_like(p, var(r, i)), yj = generator_like(p, var(r, n + j));
      if (xi < 0 || yj < 0) return "x_i or y_j is not a generator";
      Cyclo scale = p.expressions[xi].leading().coeff * p.expressions[yj].leading().coeff /
                    p.expressions[w].leading().coeff;
      Poly want = i == j ? W.scaled(scale) : Poly(p.gen_ring);
      if (p.bracket(xi, yj) != want) return "{x_i, y_j} != delta_ij w";
    }

  auto rr = rigidity_report(a, group_closure({GradedMap(negate_last(2 * n + 1))}));
  return expect(rr.distinguished && rr.witness == "central generator in derived ideal" &&
                    rr.a.central_in_derived == false && rr.ag.central_in_derived == true,
                "witness: " + rr.witness);
}

std::string criterion6() {
  for (int n : {1, 2})
    if (auto e = hweyl(n); !e.empty()) return "n = " + std::to_string(n) + ": " + e;
  return "";
}

// ---- criterion 7 -----------------------------------------------------------

struct Trial {
  Matrix q;
  std::vector<Matrix> gens;
  bool reflections = true;
  std::string label;
};

Cyclo order_root(int order, int k) { return Cyclo::zeta(order, k); }

Matrix random_skew(std::mt19937& rng, int n, bool force_nonzero) {
  static const std::vector<Cyclo> values = {Cyclo(0), Cyclo(1), Cyclo(-1), w3(), -w3()};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(values.size()) - 1);
  while (true) {
    Matrix q(n, n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        q(i, j) = values[pick(rng)];
        q(j, i) = -q(i, j);
        nonzero = nonzero || !q(i, j).is_zero();
      }
    if (nonzero || !force_nonzero) return q;
  }
}

// A primitive root of unity of order 2, 3 or 4.
Cyclo random_root(std::mt19937& rng) {
  int order = std::uniform_int_distribution<int>(2, 4)(rng);
  static const int units[5][2] = {{0, 0}, {0, 0}, {1, 1}, {1, 2}, {1, 3}};
  int k = units[order][std::uniform_int_distribution<int>(0, 1)(rng)];
  return order_root(order, k);
}

std::vector<Trial> make_trials() {
  std::mt19937 rng(20240611);
  std::vector<Trial> trials;
  for (int t = 0; t < 200; ++t) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    Trial tr;
    tr.q = random_skew(rng, n, false);
    int count = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int g = 0; g < count; ++g) {
      Vec d(n, Cyclo(1));
      d[std::uniform_int_distribution<int>(0, n - 1)(rng)] = random_root(rng);
      tr.gens.push_back(Matrix::diagonal(d));
    }
    tr.label = "reflection trial " + std::to_string(t);
    trials.push_back(tr);
  }
  for (int t = 0; t < 50; ++t) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    Trial tr;
    tr.q = random_skew(rng, n, true);
    tr.reflections = false;
    // lambda on a subset of at least two coordinates: every nonidentity power
    // has at least two eigenvalues different from 1.
    int size = std::uniform_int_distribution<int>(2, n)(rng);
    std::vector<int> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = i;
    std::shuffle(coords.begin(), coords.end(), rng);
    Cyclo lambda = random_root(rng);
    Vec d(n, Cyclo(1));
    for (int i = 0; i < size; ++i) d[coords[i]] = lambda;
    tr.gens.push_back(Matrix::diagonal(d));
    tr.label = "non-reflection trial " + std::to_string(t);
    trials.push_back(tr);
  }
  return trials;
}

std::string run_trial(const Trial& tr) {
  auto a = skew_symmetric(tr.q);
  std::vector<GradedMap> gens;
  for (const auto& g : tr.gens) gens.emplace_back(g);
  auto grp = group_closure(gens);
  auto p = fixed_group(a, grp);
  if (tr.reflections) {
    if (!p.polynomial()) return tr.label + ": fixed ring not certified polynomial";
    if (!is_skew_presentation(p)) return tr.label + ": fixed ring is not skew";
    if (p.molien != free_hilbert_series(p.degrees)) return tr.label + ": Molien differs from the free series";
    return "";
  }
  if (p.polynomial() && is_skew_presentation(p)) return tr.label + ": non-reflection group gave a skew polynomial ring";
  return "";
}

std::string criterion7() {
  auto trials = make_trials();
  std::vector<std::future<std::string>> runs;
  for (const auto& tr : trials)
    runs.push_back(std::async(std::launch::async, [&tr] {
      try {
        return run_trial(tr);
      } catch (const std::exception& e) {
        return tr.label + " threw: " + e.what();
      }
    }));
  std::string first;
  int failures = 0;
  for (auto& r : runs) {
    std::string e = r.get();
    if (e.empty()) continue;
    ++failures;
    if (first.empty()) first = e;
  }
  return failures == 0 ? "" : std::to_string(failures) + " counterexamples; first: " + first;
}

// ---- criterion 8 -----------------------------------------------------------

std::string ph_two_dim(int m) {
  auto a = ph_lie(lie_two_dim());
  auto rep = find_reflections(a);
  if (rep.kind != ReflectionReport::Kind::Families) return "no reflection family";
  Vec x2(3);
  x2[1] = Cyclo(1);
  bool direction = false;
  for (const auto& f : rep.families) direction = direction || (f.direction_basis.empty() && same_line(f.direction, x2));
  if (!direction) return "no family with eigenvector x2";
  auto p = fixed_group(a, group_closure({GradedMap(Matrix::diagonal({Cyclo(1), Cyclo::zeta(m), Cyclo(1)}))}));
  const PolyRing& r = a.ring();
  int x1 = generator_like(p, var(r, 0)), x2m = generator_like(p, var(r, 1).pow(m)), z = generator_like(p, var(r, 2));
  if (!p.polynomial() || x1 < 0 || x2m < 0 || z < 0 || p.names.size() != 3) return "fixed ring is not k[x1, x2^m, z]";
  Poly X2 = var(p.gen_ring, x2m), Z = var(p.gen_ring, z);
  // {x1, x2} = x2 z, so {x1, x2^m} = m x2^m z; rescale for the generator normalization.
  Cyclo scale = Cyclo(m) * p.expressions[x1].leading().coeff / p.expressions[z].leading().coeff;
  if (p.bracket(x1, x2m) != (X2 * Z).scaled(scale))
    return "{x1, x2^m} = " + p.bracket(x1, x2m).str();
  return expect(p.bracket(x1, z).is_zero() && p.bracket(x2m, z).is_zero(), "z is not central");
}

std::string criterion8() {
  if (lie_one_dim_ideals(lie_sl2()).kind != SolutionSet::Kind::Empty) return "sl_2 has a one-dimensional ideal";
  if (find_reflections(ph_lie(lie_sl2())).kind != ReflectionReport::Kind::NoReflections) return "PH(sl_2) has reflections";
  for (int m = 2; m <= 4; ++m)
    if (auto e = ph_two_dim(m); !e.empty()) return "m = " + std::to_string(m) + ": " + e;
  return "";
}

// ---- criterion 9 -----------------------------------------------------------

std::string dims_match(const std::string& label, const PoissonAlgebra& a, int d) {
  auto dims = envelope_dims(a, d);
  auto expected = series_taylor(free_hilbert_series(std::vector<int>(2 * a.nvars(), 1)), d);
  for (int k = 0; k <= d; ++k)
    if (expected[k] != Cyclo(dims[k]))
      return label + ": degree " + std::to_string(k) + " has dimension " + std::to_string(dims[k]);
  return "";
}

std::string criterion9() {
  PolyRing r1({"x"}), r2({"x", "y"});
  std::vector<std::pair<std::string, PoissonAlgebra>> algebras = {
      {"zero bracket, n=1", PoissonAlgebra(r1, {})},
      {"zero bracket, n=2", PoissonAlgebra(r2, {})},
      {"{x,y}=xy", two_var("x*y")},
      {"{x,y}=2xy", two_var("2*x*y")},
      {"f_{0,1}", jacobian_fpq(Cyclo(0), Cyclo(1))},
      {"H_1", homogenized_weyl(1)},
  };
  for (const auto& [label, a] : algebras)
    if (auto e = dims_match(label, a, 3); !e.empty()) return e;

  std::vector<std::pair<PoissonAlgebra, Matrix>> reflections = {
      {PoissonAlgebra(r1, {}), Matrix::diagonal({Cyclo(-1)})},
      {PoissonAlgebra(r1, {}), Matrix::diagonal({w3()})},
      {two_var("x*y"), Matrix::diagonal({Cyclo(-1), Cyclo(1)})},
      {two_var("2*x*y"), Matrix::diagonal({Cyclo::zeta(4), Cyclo(1)})},
      {two_var("x*y"), Matrix::diagonal({Cyclo(1), w3()})},
      {jacobian_fpq(Cyclo(0), Cyclo(1)), Matrix::diagonal({w3(), Cyclo(1), Cyclo(1)})},
      {homogenized_weyl(1), negate_last(3)},
      {homogenized_weyl(2), negate_last(5)},
      {quantum_matrices(2), swap_b_c(Cyclo(1))},
      {ph_lie(lie_two_dim()), Matrix::diagonal({Cyclo(1), w3(), Cyclo(1)})},
  };
  for (const auto& [a, m] : reflections) {
    GradedMap g(m);
    auto t = envelope_trace(a, g);
    RationalSeries tr = trace_series(m);
    if (t.series != tr * tr) return "trace is not the square for " + m.str();
    if (t.extended != t.series) return "extended trace differs for " + m.str();
    if (t.quasi_reflection || is_quasi_reflection_series(t.extended, 2 * a.nvars()))
      return "quasi-reflection on U(A) for " + m.str();
  }
  return "";
}

// ---- criterion 10 ----------------------------------------------------------

std::string criterion10() {
  auto x2 = two_var("x^2");
  if (find_reflections(x2).kind != ReflectionReport::Kind::NoReflections) return "{x,y}=x^2 has reflections";
  auto ideal = automorphism_ideal(x2);
  if (ideal.empty()) return "empty automorphism ideal";
  const PolyRing& g = ideal.front().ring();
  if (!normal_form(parse_poly(g, "g_2_1"), ideal).is_zero()) return "g(x) is not a multiple of x";
  if (!normal_form(parse_poly(g, "g_1_1 - g_2_2"), ideal).is_zero()) return "automorphisms have two eigenvalues";
  // Sampled automorphisms (lambda, shear) are never reflections.
  for (const Cyclo& lambda : {Cyclo(-1), w3(), Cyclo::zeta(4)})
    for (long c : {0L, 1L, -2L}) {
      Matrix m = Matrix::diagonal({lambda, lambda});
      m(0, 1) = Cyclo(c);
      auto cl = classify(x2, GradedMap(m));
      if (cl.kind == Classification::Kind::Reflection || cl.kind == Classification::Kind::NotAutomorphism)
        return "classify(" + m.str() + ") = " + kind_name(cl.kind);
    }

  PolyRing r({"x", "y"});
  for (const Cyclo& p : {Cyclo(1), Cyclo(2), w3()})
    for (int m = 2; m <= 4; ++m) {
      auto a = two_var((var(r, 0) * var(r, 1)).scaled(p));
      auto fr = fixed_group(a, group_closure({GradedMap(Matrix::diagonal({Cyclo::zeta(m), Cyclo(1)}))}));
      int X = generator_like(fr, var(r, 0).pow(m)), Y = generator_like(fr, var(r, 1));
      if (X < 0 || Y < 0 || fr.names.size() != 2) return "fixed ring is not k[x^m, y]";
      Poly want = (var(fr.gen_ring, X) * var(fr.gen_ring, Y)).scaled(p * Cyclo(m));
      if (fr.bracket(X, Y) != want) return "bracket constant is not p*m for m = " + std::to_string(m);
      if (p * Cyclo(m) == p) return "p*m equals p";
    }
  return "";
}

// ---- criterion 11 ----------------------------------------------------------

std::string criterion11() {
  return all_of({
      [] { return crosscheck::jacobian_f10(); },
      [] { return crosscheck::jacobian_f01_fixed(); },
      [] { return crosscheck::quantum_2x2_normals(); },
      [] { return crosscheck::quantum_2x2_reflections(); },
      [] { return crosscheck::envelope_one_var(); },
  });
}

struct Criterion {
  int number;
  const char* title;
  Check check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "f_{1,0}: no degree-one normal elements, no reflections", criterion1},
      {2, "f_{0,1} fixed by diag(w,1,1): brackets, modular derivation, unimodularity", criterion2},
      {3, "p=-q and p=-wq normal elements; skew presentation in u, v, w", criterion3},
      {4, "O(M_n) normal elements for n=2,3; reflections of O(M_2) and O(M_3)", criterion4},
      {5, "O(M_2) fixed ring under b<->mu c and its rigidity witness", criterion5},
      {6, "homogenized Weyl: center, reflections, fixed ring, rigidity", criterion6},
      {7, "random skew algebras: reflection groups vs non-reflection groups", criterion7},
      {8, "PH(sl_2) and PH of the 2-dim Lie algebra", criterion8},
      {9, "enveloping algebra dimensions and trace squaring", criterion9},
      {10, "{x,y}=x^2 has a single eigenvalue; pxy fixed-ring constant p*m", criterion10},
      {11, "independent oracle reproduces criteria 1, 2, 4 (n=2) and 9 (n=1)", criterion11},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.check();
    } catch (const std::exception& e) {
      why = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (why.empty() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << timing << ")";
    if (!why.empty()) std::cout << " -- " << why;
    std::cout << "\n";
    failed += !why.empty();
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in " << total
            << "s\n";
  return failed == 0 ? 0 : 1;
}
