#include <doctest.h>

#include "pwb/errors.hpp"
#include "pwb/formats.hpp"
#include "support.hpp"

using namespace pwb;
using pwb::test::P;
using pwb::test::w3;

TEST_CASE("pois files parse and round-trip") {
  auto a = parse_pois(R"(
    # the first Jacobian example
    algebra J { vars: x, y, z;
      bracket{x,y} = "z^2";
      bracket{y,z} = x^2;
      bracket{x,z} = "-y^2";  # reversed pair
    })");
  CHECK(a.name() == "J");
  CHECK(same_algebra(a, jacobian_fpq(Cyclo(1), Cyclo(0))));
  for (const auto& b : {a, quantum_matrices(2), homogenized_weyl(2), ph_lie(lie_sl2()), jacobian_fpq(-w3(), Cyclo(1))})
    CHECK(same_algebra(parse_pois(emit_pois(b)), b));
  CHECK(parse_pois(emit_pois(jacobian_fpq(-w3(), Cyclo(1)))).ring().conductor() == 3);
}

TEST_CASE("pois errors") {
  CHECK_THROWS_AS(parse_pois("algebra A { vars: x, y; bracket{x,y} = x^2 }"), FormatError);
  CHECK_THROWS_AS(parse_pois("algebra A { vars: x, y; bracket{x,w} = x; }"), Error);
  CHECK_THROWS_AS(parse_pois("algebra A { vars: x, y, z; bracket{x,y} = y; bracket{y,z} = x; }"), JacobiFailure);
  CHECK_NOTHROW(parse_pois("algebra A { vars: x, y, z; bracket{x,y} = y; bracket{y,z} = x; }", true));
}

TEST_CASE("map files parse and round-trip") {
  auto a = quantum_matrices(2);
  auto g = parse_map("map s on O { b -> -c; c -> -b; }", a);
  Matrix want = Matrix::identity(4);
  want(1, 1) = want(2, 2) = Cyclo(0);
  want(2, 1) = want(1, 2) = Cyclo(-1);
  CHECK(g.matrix() == want);
  CHECK(g.name() == "s");
  CHECK(parse_map(emit_map(g, a), a).matrix() == g.matrix());
  auto h = parse_map("map h on A { x -> zeta(3)*x + 2*y; }", jacobian_fpq(Cyclo(1), Cyclo(1)));
  CHECK(parse_map(emit_map(h, jacobian_fpq(Cyclo(1), Cyclo(1))), jacobian_fpq(Cyclo(1), Cyclo(1))).matrix() == h.matrix());
  CHECK_THROWS_AS(parse_map("map g on A { x -> x^2; }", jacobian_fpq(Cyclo(1), Cyclo(1))), Error);
}

TEST_CASE("lie files parse and round-trip") {
  auto l = parse_lie("lie s { dim: 3; names: e, f, h; bracket{e,f} = h; bracket{h,e} = 2*e; bracket{3,2} = -2*f; }");
  CHECK(l.names == std::vector<std::string>{"e", "f", "h"});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(l.bracket(i, j) == lie_sl2().bracket(i, j));
  auto back = parse_lie(emit_lie(l));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(back.bracket(i, j) == l.bracket(i, j));
  CHECK_THROWS_AS(parse_lie("lie g { dim: 3; bracket{1,2} = x1; bracket{2,3} = x2; bracket{1,3} = x3; }"),
                  LieJacobiFails);
}

TEST_CASE("mat files parse and round-trip") {
  auto m = parse_mat("0 zeta(3) -1/2\n -zeta(3) 0 1\n1/2  -1 0\n");
  CHECK(m.rows() == 3);
  CHECK(m(0, 1) == w3());
  CHECK(m(0, 2) == Cyclo(Rational(-1, 2)));
  CHECK(parse_mat(emit_mat(m)) == m);
  CHECK_THROWS_AS(parse_mat("1 2\n3\n"), FormatError);
}
