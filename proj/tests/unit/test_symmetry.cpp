#include <doctest.h>

#include <algorithm>

#include "pwb/errors.hpp"
#include "support.hpp"
#include "pwb/symmetry.hpp"

using namespace pwb;
using pwb::test::P;
using pwb::test::random_poly;
using pwb::test::two_var;
using pwb::test::var;
using pwb::test::w3;

namespace {

Matrix swap_b_c(const Cyclo& mu) {
  Matrix g(4, 4);
  g(0, 0) = g(3, 3) = Cyclo(1);
  g(2, 1) = mu;
  g(1, 2) = mu.inverse();
  return g;
}

RationalSeries one_over(const std::vector<UPoly>& factors) {
  UPoly den(Cyclo(1));
  for (const auto& f : factors) den = den * f;
  return RationalSeries(UPoly(Cyclo(1)), den);
}

UPoly one_minus(const Cyclo& c, int k = 1) { return UPoly(Cyclo(1)) - UPoly::monomial(c, k); }

Matrix skew(const std::vector<std::vector<long>>& upper) {
  int n = static_cast<int>(upper.size());
  Matrix q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      q(i, j) = Cyclo(upper[i][j]);
      q(j, i) = Cyclo(-upper[i][j]);
    }
  return q;
}

}  // namespace

TEST_CASE("is_poisson_automorphism") {
  for (int m = 2; m <= 4; ++m) CHECK(is_poisson_automorphism(two_var("2*x*y"), Matrix::diagonal({Cyclo::zeta(m), Cyclo(1)})).ok);
  auto bad = is_poisson_automorphism(two_var("x^2"), Matrix::diagonal({Cyclo(1), w3()}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing == std::pair<int, int>{0, 1});
  CHECK(is_poisson_automorphism(quantum_matrices(2), swap_b_c(Cyclo(1))).ok);
  CHECK(is_poisson_automorphism(quantum_matrices(2), swap_b_c(Cyclo(-3))).ok);
  CHECK_THROWS_AS(is_poisson_automorphism(two_var("x*y"), Matrix(2, 2)), SingularMatrix);
}

TEST_CASE("classify") {
  auto m2 = quantum_matrices(2);
  CHECK(classify(m2, GradedMap(Matrix::identity(4))).kind == Classification::Kind::Identity);
  auto c = classify(m2, GradedMap(swap_b_c(Cyclo(2))));
  REQUIRE(c.kind == Classification::Kind::Reflection);
  CHECK(c.xi == Cyclo(-1));
  CHECK(c.order == 2);
  CHECK(classify(two_var("x*y"), GradedMap(Matrix::diagonal({Cyclo(2), Cyclo(1)}))).kind ==
        Classification::Kind::InfiniteOrder);
  CHECK(classify(two_var("x^2"), GradedMap(Matrix::diagonal({Cyclo(1), w3()}))).kind ==
        Classification::Kind::NotAutomorphism);
  auto nr = classify(two_var("x*y"), GradedMap(Matrix::diagonal({Cyclo(-1), Cyclo(-1)})));
  CHECK(nr.kind == Classification::Kind::FiniteNonReflection);
  CHECK(nr.order == 2);
}

TEST_CASE("find_reflections") {
  CHECK(find_reflections(jacobian_fpq(Cyclo(3), Cyclo(0))).kind == ReflectionReport::Kind::NoReflections);
  CHECK(find_reflections(quantum_matrices(3)).kind == ReflectionReport::Kind::NoReflections);
  auto h = homogenized_weyl(1);
  auto rep = find_reflections(h);
  REQUIRE(rep.kind == ReflectionReport::Kind::Families);
  for (const auto& f : rep.families) {
    CHECK(f.order_two);
    auto s = sample_reflection(h, f, Cyclo(-1));
    REQUIRE(s.has_value());
    CHECK(apply_linear(*s, var(h.ring(), 2)) == -var(h.ring(), 2));
  }
}

TEST_CASE("the x^2 bracket forces a single eigenvalue") {
  auto ideal = automorphism_ideal(two_var("x^2"));
  REQUIRE_FALSE(ideal.empty());
  const PolyRing& g = ideal.front().ring();
  CHECK(normal_form(P(g, "g_2_1"), ideal).is_zero());
  CHECK(normal_form(P(g, "g_1_1 - g_2_2"), ideal).is_zero());
  CHECK_FALSE(normal_form(P(g, "g_1_2"), ideal).is_zero());
}

TEST_CASE("trace_series") {
  CHECK(trace_series(Matrix::identity(3)) == free_hilbert_series({1, 1, 1}));
  CHECK(trace_series(Matrix::diagonal({w3(), Cyclo(1)})) == one_over({one_minus(w3()), one_minus(Cyclo(1))}));
  CHECK(trace_series(Matrix::diagonal({Cyclo(-1), Cyclo(-1)})) == one_over({one_minus(Cyclo(-1)), one_minus(Cyclo(-1))}));
}

TEST_CASE("reflections have the reflection trace shape and normal eigenvectors") {
  std::vector<std::pair<PoissonAlgebra, Matrix>> cases = {
      {quantum_matrices(2), swap_b_c(Cyclo(5))},
      {two_var("x*y"), Matrix::diagonal({Cyclo::zeta(4), Cyclo(1)})},
      {homogenized_weyl(1), Matrix::diagonal({Cyclo(1), Cyclo(1), Cyclo(-1)})},
      {ph_lie(lie_two_dim()), Matrix::diagonal({Cyclo(1), Cyclo::zeta(5), Cyclo(1)})},
  };
  for (const auto& [a, m] : cases) {
    auto c = classify(a, GradedMap(m));
    REQUIRE(c.kind == Classification::Kind::Reflection);
    int n = a.nvars();
    CHECK(trace_series(m) == one_over({one_minus(c.xi), one_minus(Cyclo(1)).pow(n - 1)}));
    CHECK(normal_check(a, Poly::linear(a.ring(), c.eigenbasis[0])).has_value());
  }
}

TEST_CASE("group_closure") {
  auto c3 = group_closure({GradedMap(Matrix::diagonal({w3(), Cyclo(1)}))});
  CHECK(c3.size() == 3);
  CHECK(c3.exponent == 3);
  CHECK(c3.elements[0].is_identity());
  auto klein = group_closure({GradedMap(Matrix::diagonal({Cyclo(-1), Cyclo(1)})),
                              GradedMap(Matrix::diagonal({Cyclo(1), Cyclo(-1)}))});
  CHECK(klein.size() == 4);
  CHECK(klein.exponent == 2);
  CHECK(group_closure({GradedMap(swap_b_c(Cyclo(1)))}).size() == 2);
  CHECK_THROWS_AS(group_closure({GradedMap(Matrix::diagonal({Cyclo::zeta(5), Cyclo(1)}))}, 3), BoundExceeded);
  CHECK_THROWS_AS(group_closure({GradedMap(Matrix::diagonal({Cyclo(2), Cyclo(1)}))}), InvalidArgument);
}

TEST_CASE("molien_series") {
  CHECK(molien_series(group_closure({GradedMap(Matrix::identity(3))})) == free_hilbert_series({1, 1, 1}));
  for (int m = 2; m <= 5; ++m)
    CHECK(molien_series(group_closure({GradedMap(Matrix::diagonal({Cyclo::zeta(m), Cyclo(1)}))})) ==
          free_hilbert_series({m, 1}));
  RationalSeries want(UPoly(std::vector<Cyclo>{Cyclo(1), Cyclo(0), Cyclo(1)}),
                      one_minus(Cyclo(1), 2) * one_minus(Cyclo(1), 2));
  CHECK(molien_series(group_closure({GradedMap(Matrix::diagonal({Cyclo(-1), Cyclo(-1)}))})) == want);
}

TEST_CASE("Molien series of an eigenbasis reflection matches k[y1^m, y2, ..., yn]") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) {
      Vec d(n, Cyclo(1));
      d[n - 1] = Cyclo::zeta(m);
      std::vector<int> degrees(n, 1);
      degrees[0] = m;
      CHECK(molien_series(group_closure({GradedMap(Matrix::diagonal(d))})) == free_hilbert_series(degrees));
    }
}

TEST_CASE("l-degrees and the bicharacter") {
  Matrix q = skew({{0, 1}, {0, 0}});
  CHECK(l_degree(q, {1, 0}) == Vec{Cyclo(0), Cyclo(1)});
  CHECK(bicharacter(q, {3, 2}, {3, 2}).is_zero());
  CHECK(bicharacter(q, {2, 0}, {0, 1}) == Cyclo(2));
  CHECK_THROWS_AS(l_degree(Matrix::identity(2), {1, 0}), NotSkew);
}

TEST_CASE("skew brackets of monomials are governed by the bicharacter") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> e(0, 3);
  Matrix q(3, 3);
  q(0, 1) = w3();
  q(1, 0) = -w3();
  q(0, 2) = Cyclo(2);
  q(2, 0) = Cyclo(-2);
  q(1, 2) = Cyclo(-1);
  q(2, 1) = Cyclo(1);
  auto a = skew_symmetric(q);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> i{e(rng), e(rng), e(rng)}, j{e(rng), e(rng), e(rng)};
    Poly f = Poly::monomial(a.ring(), i), g = Poly::monomial(a.ring(), j);
    CHECK(bracket(a, f, g) == (f * g).scaled(bicharacter(q, i, j)));
  }
}

TEST_CASE("block_decomposition") {
  CHECK(block_decomposition(Matrix(3, 3)) == std::vector<std::vector<int>>{{0, 1, 2}});
  Matrix cyc = skew({{0, -1, 1}, {0, 0, -1}, {0, 0, 0}});
  CHECK(block_decomposition(cyc).size() == 3);
  Matrix pair = skew({{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
  CHECK(block_decomposition(pair) == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("reflections of a skew algebra fix every variable outside one block") {
  Matrix q = skew({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  auto a = skew_symmetric(q);
  auto blocks = block_decomposition(q);
  auto rep = find_reflections(a);
  REQUIRE(rep.kind == ReflectionReport::Kind::Families);
  int sampled = 0;
  for (const auto& f : rep.families) {
    std::vector<Cyclo> xis = f.xi_values;
    if (f.xi_unconstrained) xis = {Cyclo(-1), w3()};
    for (const auto& xi : xis) {
      auto s = sample_reflection(a, f, xi);
      if (!s) continue;
      ++sampled;
      CHECK(is_poisson_automorphism(a, *s).ok);
      bool inside_one = false;
      for (const auto& b : blocks) {
        bool fixes_rest = true;
        for (int k = 0; k < 3; ++k) {
          if (std::find(b.begin(), b.end(), k) != b.end()) continue;
          Vec e(3);
          e[k] = Cyclo(1);
          fixes_rest = fixes_rest && s->column(k) == e;
        }
        inside_one = inside_one || fixes_rest;
      }
      CHECK(inside_one);
    }
  }
  CHECK(sampled > 0);
}
