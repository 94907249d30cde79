#include <functional>
#include <future>
#include <set>

#include "cli.hpp"
#include "pwb/errors.hpp"
#include "pwb/formats.hpp"
#include "pwb/parser.hpp"

namespace pwb::cli {

namespace {

// A vector returns an empty string on success and a reason otherwise.
using Check = std::function<std::string()>;

struct Entry {
  const char* key;
  const char* description;
  Check check;
};

std::string expect(bool ok, const std::string& why) { return ok ? "" : why; }

Cyclo w3() { return Cyclo::zeta(3); }

Matrix swap_b_c() {
  Matrix g(4, 4);
  g(0, 0) = Cyclo(1);
  g(3, 3) = Cyclo(1);
  g(1, 2) = Cyclo(-1);
  g(2, 1) = Cyclo(-1);
  return g;
}

PoissonAlgebra two_var(const std::string& rhs) {
  PolyRing r({"x", "y"});
  return PoissonAlgebra(r, {{{0, 1}, parse_poly(r, rhs)}});
}

// Same line through the origin, up to a scalar.
bool same_line(const Vec& a, const Vec& b) { return normalize_first(a) == normalize_first(b); }

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

// Index of the generator whose expression equals f, or -1.
int generator_of(const PresentedPoisson& p, const Poly& f) {
  for (std::size_t i = 0; i < p.expressions.size(); ++i)
    if (p.expressions[i] == f || p.expressions[i] == -f) return static_cast<int>(i);
  return -1;
}

// {u_i, u_j} == c * u_i * u_j in the generator ring.
bool skew_entry(const PresentedPoisson& p, int i, int j, const Cyclo& c) {
  Poly ui = Poly::variable(p.gen_ring, i), uj = Poly::variable(p.gen_ring, j);
  return p.bracket(i, j) == (ui * uj).scaled(c);
}

std::string f01_fixed() {
  auto a = jacobian_fpq(Cyclo(0), Cyclo(1));
  auto p = fixed_cyclic_reflection(a, GradedMap(Matrix::diagonal({w3(), Cyclo(1), Cyclo(1)})));
  const PolyRing& r = a.ring();
  int X = generator_of(p, Poly::variable(r, 0).pow(3)), y = generator_of(p, Poly::variable(r, 1)),
      z = generator_of(p, Poly::variable(r, 2));
  if (X < 0 || y < 0 || z < 0) return "generators are not x^3, y, z";
  if (!skew_entry(p, X, y, Cyclo(3))) return "{x^3,y} != 3x^3y";
  if (!skew_entry(p, y, z, Cyclo(1))) return "{y,z} != yz";
  if (!skew_entry(p, z, X, Cyclo(3))) return "{z,x^3} != 3x^3z";
  return "";
}

std::string f01_derivation() {
  auto a = jacobian_fpq(Cyclo(0), Cyclo(1));
  auto p = fixed_group(a, group_closure({GradedMap(Matrix::diagonal({w3(), Cyclo(1), Cyclo(1)}))}));
  auto ag = as_algebra(p);
  if (!ag) return "fixed ring not polynomial";
  auto phi = modular_derivation(*ag);
  const PolyRing& r = a.ring();
  int y = generator_of(p, Poly::variable(r, 1)), z = generator_of(p, Poly::variable(r, 2));
  if (y < 0 || z < 0) return "y or z is not a generator";
  Poly Y = Poly::variable(p.gen_ring, y), Z = Poly::variable(p.gen_ring, z);
  if (phi.images[y] != Y.scaled(Cyclo(-2))) return "phi(y) = " + phi.images[y].str();
  if (phi.images[z] != Z.scaled(Cyclo(2))) return "phi(z) = " + phi.images[z].str();
  return expect(is_unimodular(a) && !is_unimodular(*ag), "unimodularity flags differ from (yes, no)");
}

std::string skew_basis(bool omega_case) {
  Cyclo g = w3(), one(1);
  auto a = omega_case ? jacobian_fpq(-g, one) : jacobian_fpq(Cyclo(-1), one);
  Matrix cols = omega_case ? Matrix::from_columns({Vec{one, g, g}, Vec{one, one, g * g}, Vec{one, g * g, one}})
                           : Matrix::from_columns({Vec{one, one, one}, Vec{one, g, g * g}, Vec{one, g * g, g}});
  auto b = linear_change(a, cols, {"u", "v", "w"});
  auto q = skew_matrix(b);
  if (!q) return "not skew in u, v, w";
  Cyclo rho = omega_case ? g * (g - one) : g * (one - g);
  return expect((*q)(0, 1) == rho && (*q)(1, 2) == rho && (*q)(2, 0) == rho, "rho mismatch: " + q->str());
}

std::string qm_span(int n) {
  auto s = normal_find_deg1(quantum_matrices(n));
  std::vector<Vec> found = s.kind == SolutionSet::Kind::LinearSubspace ? s.basis : s.points;
  if (s.kind != SolutionSet::Kind::LinearSubspace && s.kind != SolutionSet::Kind::FinitePoints)
    return std::string("unexpected ") + kind_name(s.kind);
  Vec e1(n * n), e2(n * n);
  e1[qm_index(n, 1, n)] = Cyclo(1);
  e2[qm_index(n, n, 1)] = Cyclo(1);
  return expect(rref_basis(found) == rref_basis({e1, e2}), "span differs from {x_1n, x_n1}");
}

std::string qm2_family() {
  auto a = quantum_matrices(2);
  auto rep = find_reflections(a);
  if (rep.kind != ReflectionReport::Kind::Families || rep.families.size() != 1) return "expected one family";
  const auto& f = rep.families[0];
  if (!f.order_two) return "family is not of order two";
  auto s = sample_reflection(a, f, Cyclo(-1));
  if (!s) return "no sample reflection";
  const Matrix& g = *s;
  // a, d fixed; b and c exchanged up to a scalar.
  bool shape = g(0, 0).is_one() && g(3, 3).is_one() && g(1, 1).is_zero() && g(2, 2).is_zero() && !g(1, 2).is_zero() &&
               !g(2, 1).is_zero();
  return expect(shape, "sample is not a b<->c swap: " + g.str());
}

std::string qm2_fixed() {
  auto a = quantum_matrices(2);
  auto p = fixed_group(a, group_closure({GradedMap(swap_b_c())}), 2);
  const PolyRing& r = a.ring();
  Poly A = Poly::variable(r, 0), B = Poly::variable(r, 1), C = Poly::variable(r, 2), D = Poly::variable(r, 3);
  int ia = generator_of(p, A), ib = generator_of(p, B - C), ibc = generator_of(p, B * C), id = generator_of(p, D);
  if (ia < 0 || ib < 0 || ibc < 0 || id < 0 || p.names.size() != 4) return "generators differ from {a, b-c, bc, d}";
  auto u = [&](int i) { return Poly::variable(p.gen_ring, i); };
  if (p.bracket(ia, ib) != u(ia) * u(ib)) return "{a, b-c}";
  if (p.bracket(ia, ibc) != (u(ia) * u(ibc)).scaled(Cyclo(2))) return "{a, bc}";
  if (p.bracket(ia, id) != u(ibc).scaled(Cyclo(2))) return "{a, d}";
  if (p.bracket(ib, ibc) != Poly(p.gen_ring)) return "{b-c, bc}";
  if (p.bracket(ib, id) != u(ib) * u(id)) return "{b-c, d}";
  if (p.bracket(ibc, id) != (u(ibc) * u(id)).scaled(Cyclo(2))) return "{bc, d}";
  return "";
}

std::string qm2_rigidity() {
  auto r = rigidity_report(quantum_matrices(2), group_closure({GradedMap(swap_b_c())}), 2);
  if (!r.distinguished || r.witness != "derived-ideal components") return "witness " + r.witness;
  return expect(r.a.derived_components == 3 && r.ag.derived_components == 2, "component counts differ from 3 vs 2");
}

std::string hweyl_center(int n) {
  auto a = homogenized_weyl(n);
  auto c = center_truncated(a, 3);
  Poly z = Poly::variable(a.ring(), 2 * n);
  for (int k = 0; k <= 3; ++k) {
    if (c[k].size() != 1) return "center degree " + std::to_string(k) + " has dimension " + std::to_string(c[k].size());
    if (normalize_first(MonomialIndex(monomials_of_degree(2 * n + 1, k)).coords(c[k][0])) !=
        MonomialIndex(monomials_of_degree(2 * n + 1, k)).coords(z.pow(k)))
      return "center degree " + std::to_string(k) + " is not z^" + std::to_string(k);
  }
  return "";
}

std::string hweyl_reflections(int n) {
  auto a = homogenized_weyl(n);
  auto rep = find_reflections(a);
  if (rep.kind != ReflectionReport::Kind::Families) return "no reflection family";
  Vec z(2 * n + 1);
  z[2 * n] = Cyclo(1);
  for (const auto& f : rep.families) {
    if (!f.order_two) return "a family allows xi != -1";
    if (!f.direction_basis.empty() || !same_line(f.direction, z)) return "reflection direction is not z";
    auto s = sample_reflection(a, f, Cyclo(-1));
    if (!s || !(apply_linear(*s, Poly::variable(a.ring(), 2 * n)) == -Poly::variable(a.ring(), 2 * n)))
      return "sample does not send z to -z";
  }
  return "";
}

Matrix negate_last(int dim) {
  std::vector<Cyclo> d(dim, Cyclo(1));
  d.back() = Cyclo(-1);
  return Matrix::diagonal(d);
}

std::string hweyl_fixed(int n) {
  auto a = homogenized_weyl(n);
  auto p = fixed_group(a, group_closure({GradedMap(negate_last(2 * n + 1))}));
  if (!p.polynomial()) return "fixed ring not polynomial";
  int w = generator_of(p, Poly::variable(a.ring(), 2 * n).pow(2));
  if (w < 0) return "z^2 is not a generator";
  Poly W = Poly::variable(p.gen_ring, w);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int xi = generator_of(p, Poly::variable(a.ring(), i)), yj = generator_of(p, Poly::variable(a.ring(), n + j));
      if (xi < 0 || yj < 0) return "x_i or y_j is not a generator";
      if (p.bracket(xi, yj) != (i == j ? W : Poly(p.gen_ring))) return "{x_i, y_j} != delta_ij w";
    }
  return "";
}

std::string hweyl_rigidity(int n) {
  auto r = rigidity_report(homogenized_weyl(n), group_closure({GradedMap(negate_last(2 * n + 1))}));
  return expect(r.distinguished && r.witness == "central generator in derived ideal" && r.a.central_in_derived == false &&
                    r.ag.central_in_derived == true,
                "witness " + r.witness);
}

std::string ph_two_dim(int m) {
  auto a = ph_lie(lie_two_dim());
  auto rep = find_reflections(a);
  if (rep.kind != ReflectionReport::Kind::Families) return "no reflection family";
  auto p = fixed_group(a, group_closure({GradedMap(Matrix::diagonal({Cyclo(1), Cyclo::zeta(m), Cyclo(1)}))}));
  const PolyRing& r = a.ring();
  int x1 = generator_of(p, Poly::variable(r, 0)), x2m = generator_of(p, Poly::variable(r, 1).pow(m)),
      z = generator_of(p, Poly::variable(r, 2));
  if (!p.polynomial() || x1 < 0 || x2m < 0 || z < 0 || p.names.size() != 3) return "fixed ring is not k[x1, x2^m, z]";
  Poly X2 = Poly::variable(p.gen_ring, x2m), Z = Poly::variable(p.gen_ring, z);
  if (p.bracket(x1, x2m) != (X2 * Z).scaled(Cyclo(m))) return "{x1, x2^m} = " + p.bracket(x1, x2m).str();
  return expect(p.bracket(x1, z).is_zero() && p.bracket(x2m, z).is_zero(), "z is not central");
}

std::string envelope_zero_n1() {
  PolyRing r({"x"});
  PoissonAlgebra a(r, {});
  auto p = envelope_presentation(a);
  if (p.relations.size() != 1 || p.relation_str(0) != "h_x*m_x - m_x*h_x = 0") return "relation set differs";
  return expect(envelope_dims(a, 3) == std::vector<long>{1, 2, 3, 4}, "dims differ from k[X,Y]");
}

std::string envelope_pxy() {
  auto p = envelope_presentation(two_var("x*y"), true);
  std::set<std::string> rels;
  for (std::size_t i = 0; i < p.relations.size(); ++i) rels.insert(p.relation_str(i));
  return expect(rels.count("x2*y1 - y1*x2 - x1*y1 = 0") == 1, "missing [x2,y1] = x1 y1");
}

std::string envelope_dims_case(const PoissonAlgebra& a, int d) {
  auto dims = envelope_dims(a, d);
  auto expected = series_taylor(free_hilbert_series(std::vector<int>(2 * a.nvars(), 1)), d);
  for (int k = 0; k <= d; ++k)
    if (expected[k] != Cyclo(dims[k])) return "degree " + std::to_string(k) + ": " + std::to_string(dims[k]);
  return "";
}

std::string envelope_trace_n2() {
  Cyclo xi = w3();
  auto t = envelope_trace(two_var("x*y"), GradedMap(Matrix::diagonal({xi, Cyclo(1)})));
  UPoly a(std::vector<Cyclo>{Cyclo(1), Cyclo(-1)}), b(std::vector<Cyclo>{Cyclo(1), -xi});
  RationalSeries want(UPoly(Cyclo(1)), a * a * b * b);
  return expect(t.series == want && t.extended == want && !t.quasi_reflection, "trace " + t.extended.str());
}

std::string pxy_fixed(const Cyclo& pcoef, int m) {
  PolyRing r({"x", "y"});
  PoissonAlgebra a(r, {{{0, 1}, (Poly::variable(r, 0) * Poly::variable(r, 1)).scaled(pcoef)}});
  auto p = fixed_group(a, group_closure({GradedMap(Matrix::diagonal({Cyclo::zeta(m), Cyclo(1)}))}));
  int X = generator_of(p, Poly::variable(r, 0).pow(m)), Y = generator_of(p, Poly::variable(r, 1));
  if (X < 0 || Y < 0 || p.names.size() != 2) return "fixed ring is not k[x^m, y]";
  return expect(skew_entry(p, X, Y, pcoef * Cyclo(m)), "bracket constant is not p*m");
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"jacobian-f10.normal", "f_{1,0} has no degree-one normal elements",
       [] { return expect(normal_find_deg1(jacobian_fpq(Cyclo(1), Cyclo(0))).kind == SolutionSet::Kind::Empty, "not empty"); }},
      {"jacobian-f10.reflections", "f_{1,0} has no Poisson reflections",
       [] {
         return expect(find_reflections(jacobian_fpq(Cyclo(1), Cyclo(0))).kind == ReflectionReport::Kind::NoReflections,
                       "reflections found");
       }},
      {"jacobian-f01.fixed-bracket", "f_{0,1} fixed by diag(w,1,1): brackets 3x^3y, yz, 3x^3z", f01_fixed},
      {"jacobian-f01.fixed-derivation", "f_{0,1} fixed ring: phi(y)=-2y, phi(z)=2z, unimodular A but not A^G",
       f01_derivation},
      {"jacobian-p=-q.normal", "f_{-1,1} normal elements x + g y + g^2 z, g^3 = 1",
       [] {
         Cyclo g = w3(), one(1);
         return points_match(normal_find_deg1(jacobian_fpq(Cyclo(-1), one)),
                             {Vec{one, one, one}, Vec{one, g, g * g}, Vec{one, g * g, g}});
       }},
      {"jacobian-p=-wq.normal", "f_{-w,1} normal elements w^2x+y+z, x+y+w^2z, x+w^2y+z",
       [] {
         Cyclo g = w3(), one(1);
         return points_match(normal_find_deg1(jacobian_fpq(-g, one)),
                             {Vec{g * g, one, one}, Vec{one, one, g * g}, Vec{one, g * g, one}});
       }},
      {"jacobian-p=-q.skew-basis", "u, v, w give a skew bracket with rho = g q (1 - g)", [] { return skew_basis(false); }},
      {"jacobian-p=-wq.skew-basis", "u, v, w give a skew bracket with rho = w q (w - 1)", [] { return skew_basis(true); }},
      {"qmatrix-2.normal", "O(M_2) degree-one normal elements span {x_12, x_21}", [] { return qm_span(2); }},
      {"qmatrix-3.normal", "O(M_3) degree-one normal elements span {x_13, x_31}", [] { return qm_span(3); }},
      {"qmatrix-3.reflections", "O(M_3) has no Poisson reflections",
       [] { return expect(find_reflections(quantum_matrices(3)).kind == ReflectionReport::Kind::NoReflections, "found"); }},
      {"qmatrix-2.reflections", "O(M_2) reflections swap b and c with xi = -1", qm2_family},
      {"qmatrix-2.fixed", "O(M_2) fixed by the swap: generators a, b-c, bc, d with six brackets", qm2_fixed},
      {"qmatrix-2.rigidity", "O(M_2) vs fixed ring: 3 vs 2 derived-ideal components", qm2_rigidity},
      {"hweyl-1.center", "H_1 center through degree 3 is spanned by powers of z", [] { return hweyl_center(1); }},
      {"hweyl-2.center", "H_2 center through degree 3 is spanned by powers of z", [] { return hweyl_center(2); }},
      {"hweyl-1.reflections", "H_1 reflections all send z to -z", [] { return hweyl_reflections(1); }},
      {"hweyl-2.reflections", "H_2 reflections all send z to -z", [] { return hweyl_reflections(2); }},
      {"hweyl-1.fixed", "H_1 fixed ring bracket {x_i, y_j} = delta_ij w", [] { return hweyl_fixed(1); }},
      {"hweyl-2.fixed", "H_2 fixed ring bracket {x_i, y_j} = delta_ij w", [] { return hweyl_fixed(2); }},
      {"hweyl-1.rigidity", "H_1 vs fixed ring: central generator in the derived ideal", [] { return hweyl_rigidity(1); }},
      {"hweyl-2.rigidity", "H_2 vs fixed ring: central generator in the derived ideal", [] { return hweyl_rigidity(2); }},
      {"lie-sl2.ideals", "sl_2 has no one-dimensional ideals",
       [] { return expect(lie_one_dim_ideals(lie_sl2()).kind == SolutionSet::Kind::Empty, "ideals found"); }},
      {"ph-sl2.reflections", "PH(sl_2) has no Poisson reflections",
       [] { return expect(find_reflections(ph_lie(lie_sl2())).kind == ReflectionReport::Kind::NoReflections, "found"); }},
      {"ph-two-dim.fixed-3", "PH of the 2-dim Lie algebra: fixed ring k[x1, x2^3, z]", [] { return ph_two_dim(3); }},
      {"ph-two-dim.fixed-2", "PH of the 2-dim Lie algebra: fixed ring k[x1, x2^2, z]", [] { return ph_two_dim(2); }},
      {"envelope.zero-1", "zero bracket in one variable: U(A) = k[X, Y]", envelope_zero_n1},
      {"envelope.pxy-relations", "{x,y} = xy: relation [x2, y1] = x1 y1", envelope_pxy},
      {"envelope.pxy-dims", "{x,y} = 2xy: dims 1, 4, 10, 20", [] { return envelope_dims_case(two_var("2*x*y"), 3); }},
      {"envelope.f01-dims", "f_{0,1}: dims match (1-t)^-6 through degree 3",
       [] { return envelope_dims_case(jacobian_fpq(Cyclo(0), Cyclo(1)), 3); }},
      {"envelope.hweyl-1-dims", "H_1: dims 1, 6, 21", [] { return envelope_dims_case(homogenized_weyl(1), 2); }},
      {"envelope.trace", "trace on U(A) is the square, not a quasi-reflection", envelope_trace_n2},
      {"envelope.extend", "diag(w,1) on {x,y} = xy extends to diag(w,1,w,1)",
       [] {
         auto g = envelope_extend(two_var("x*y"), GradedMap(Matrix::diagonal({w3(), Cyclo(1)})));
         return expect(g.matrix() == Matrix::diagonal({w3(), Cyclo(1), w3(), Cyclo(1)}), "extension " + g.matrix().str());
       }},
      {"x-squared.reflections", "{x,y} = x^2 has no Poisson reflections",
       [] { return expect(find_reflections(two_var("x^2")).kind == ReflectionReport::Kind::NoReflections, "found"); }},
      {"pxy.fixed-constant", "{x,y} = pxy fixed by diag(zeta_m,1): bracket constant p*m",
       [] {
         for (int m = 2; m <= 4; ++m)
           for (long p : {1L, 2L})
             if (auto e = pxy_fixed(Cyclo(p), m); !e.empty()) return e + " (m=" + std::to_string(m) + ")";
         return std::string();
       }},
      {"trivial-group.rigidity", "trivial group: A and A^G are not distinguished",
       [] {
         auto r = rigidity_report(quantum_matrices(2), group_closure({GradedMap(Matrix::identity(4))}));
         return expect(!r.distinguished, "distinguished by " + r.witness);
       }},
  };
  return all;
}

}  // namespace

std::vector<SuiteVector> paper_suite() {
  const auto& all = entries();
  std::vector<std::future<std::string>> runs;
  for (const auto& e : all)
    runs.push_back(std::async(std::launch::async, [&e] {
      try {
        return e.check();
      } catch (const std::exception& ex) {
        return std::string("threw: ") + ex.what();
      }
    }));
  std::vector<SuiteVector> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string why = runs[i].get();
    out.push_back(SuiteVector{all[i].key, all[i].description, why.empty(), why});
  }
  return out;
}

}  // namespace pwb::cli
