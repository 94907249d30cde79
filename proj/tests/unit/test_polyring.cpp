#include <doctest.h>

#include "pwb/errors.hpp"
#include "support.hpp"

using namespace pwb;
using pwb::test::P;
using pwb::test::random_poly;
using pwb::test::var;
using pwb::test::w3;

namespace {
const PolyRing R3({"x", "y", "z"});
}

TEST_CASE("parse reads terms exactly") {
  Poly f = P(R3, "x^2 - y*z/3");
  REQUIRE(f.size() == 2);
  CHECK(f.coeff({2, 0, 0}) == Cyclo(1));
  CHECK(f.coeff({0, 1, 1}) == Cyclo(Rational(-1, 3)));
  Poly g = P(R3, "zeta(3)*x*y");
  REQUIRE(g.size() == 1);
  CHECK(g.coeff({1, 1, 0}) == w3());
  Poly x = var(R3, 0), y = var(R3, 1);
  CHECK(P(R3, "(x+y)^2") == x * x + (x * y).scaled(Cyclo(2)) + y * y);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(P(R3, "x +* y"), SyntaxError);
  CHECK_THROWS_AS(P(R3, "w"), UnknownVariable);
  CHECK_THROWS_AS(P(R3, "x/0"), Error);
  CHECK_THROWS_AS(P(R3, "(x"), SyntaxError);
}

TEST_CASE("printing re-parses to the same polynomial") {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    Poly f = random_poly(rng, R3, 5, 4);
    CHECK(P(R3, f.str()) == f);
  }
}

TEST_CASE("partial derivatives") {
  Poly f = pwb::potential_fpq(Cyclo(1), Cyclo(1), R3);
  CHECK(f.partial(2) == P(R3, "z^2 + x*y"));
  CHECK(Poly::constant(R3, Cyclo(5)).partial(0).is_zero());
  CHECK(P(R3, "x^3*y").partial(0) == P(R3, "3*x^2*y"));
}

TEST_CASE("exact division") {
  CHECK(divides(P(R3, "x"), P(R3, "x^2*y + x*z")) == P(R3, "x*y + z"));
  CHECK(divides(P(R3, "x+y"), P(R3, "x^2 - y^2")) == P(R3, "x - y"));
  CHECK_FALSE(divides(P(R3, "x+y"), P(R3, "x^2 + y^2")).has_value());
  CHECK_THROWS_AS(divides(Poly(R3), P(R3, "x")), DivisorZero);
  // u = x + g y + g^2 z is normal for the p = -q Jacobian bracket.
  auto a = jacobian_fpq(Cyclo(-1), Cyclo(1));
  for (int k = 0; k < 3; ++k) {
    Cyclo g = Cyclo::zeta(3, k);
    Poly u = P(R3, "x") + P(R3, "y").scaled(g) + P(R3, "z").scaled(g * g);
    CHECK(divides(u, bracket(a, var(R3, 0), u)).has_value());
  }
}

TEST_CASE("apply_linear") {
  std::mt19937 rng(9);
  Poly f = random_poly(rng, R3, 6, 3);
  CHECK(apply_linear(Matrix::identity(3), f) == f);
  CHECK(apply_linear(Matrix::diagonal({w3(), Cyclo(1), Cyclo(1)}), P(R3, "x^2*y")) == P(R3, "x^2*y").scaled(w3() * w3()));
  PolyRing m2({"a", "b", "c", "d"});
  Matrix swap(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = Cyclo(1);
  CHECK(apply_linear(swap, P(m2, "b*c")) == P(m2, "b*c"));
  CHECK_THROWS_AS(apply_linear(Matrix(3, 3), f), SingularMatrix);
}

TEST_CASE("ring axioms and derived identities on random polynomials") {
  std::mt19937 rng(21);
  for (int t = 0; t < 40; ++t) {
    Poly f = random_poly(rng, R3, 4, 3), g = random_poly(rng, R3, 4, 3), h = random_poly(rng, R3, 3, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK(f + g - g == f);
    if (!g.is_zero()) {
      auto q = divides(g, f * g);
      REQUIRE(q.has_value());
      CHECK(*q == f);
      auto [qq, rr] = divide_with_remainder(f, g);
      CHECK(qq * g + rr == f);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(f.partial(i).partial(j) == f.partial(j).partial(i));
  }
}

TEST_CASE("apply_linear composes like matrix multiplication") {
  std::mt19937 rng(33);
  auto random_invertible = [&] {
    while (true) {
      Matrix m(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = pwb::test::random_cyclo(rng);
      if (!m.det().is_zero()) return m;
    }
  };
  for (int t = 0; t < 10; ++t) {
    Matrix g1 = random_invertible(), g2 = random_invertible();
    Poly f = random_poly(rng, R3, 3, 3);
    CHECK(apply_linear(g1 * g2, f) == apply_linear(g1, apply_linear(g2, f)));
  }
}

TEST_CASE("homogeneous parts and monomial indices") {
  Poly f = P(R3, "x^2 + x*y*z + y - 3");
  CHECK(f.total_degree() == 3);
  CHECK(f.min_degree() == 0);
  CHECK(f.homogeneous_part(2) == P(R3, "x^2"));
  CHECK_FALSE(f.is_homogeneous());
  MonomialIndex idx(monomials_of_degree(3, 2));
  CHECK(idx.monomials.size() == 6);
  Poly q = P(R3, "x^2 - 2*y*z");
  CHECK(idx.poly(R3, idx.coords(q)) == q);
  CHECK_THROWS_AS(idx.coords(P(R3, "x")), InvalidArgument);
}
