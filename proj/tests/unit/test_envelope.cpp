#include <doctest.h>

#include <set>

#include "pwb/envelope.hpp"
#include "pwb/errors.hpp"
#include "support.hpp"

using namespace pwb;
using pwb::test::two_var;
using pwb::test::w3;

namespace {

std::vector<long> binomial_dims(int generators, int d) {
  std::vector<long> out;
  for (const auto& c : series_taylor(free_hilbert_series(std::vector<int>(generators, 1)), d))
    out.push_back(c.rational().get_num().get_si());
  return out;
}

std::set<std::string> relation_strings(const NCPresentation& p) {
  std::set<std::string> s;
  for (std::size_t i = 0; i < p.relations.size(); ++i) s.insert(p.relation_str(i));
  return s;
}

}  // namespace

TEST_CASE("envelope presentation of a zero bracket is commutative") {
  PolyRing r1({"x"});
  auto p1 = envelope_presentation(PoissonAlgebra(r1, {}));
  CHECK(p1.generators == std::vector<std::string>{"m_x", "h_x"});
  CHECK(relation_strings(p1) == std::set<std::string>{"h_x*m_x - m_x*h_x = 0"});

  PolyRing r2({"x", "y"});
  auto p2 = envelope_presentation(PoissonAlgebra(r2, {}));
  CHECK(p2.relations.size() == 6);
  for (const auto& rel : p2.relations) CHECK(rel.terms.size() == 2);
  CHECK(envelope_dims(PoissonAlgebra(r2, {}), 3) == std::vector<long>{1, 4, 10, 20});
}

TEST_CASE("envelope presentation of {x,y} = pxy") {
  auto p = envelope_presentation(two_var("2*x*y"), true);
  CHECK(p.generators == std::vector<std::string>{"x1", "y1", "x2", "y2"});
  auto rels = relation_strings(p);
  CHECK(rels.count("x2*y1 - y1*x2 - 2*x1*y1 = 0") == 1);
  CHECK(rels.count("y2*x1 - x1*y2 + 2*x1*y1 = 0") == 1);
  CHECK(rels.count("x2*y2 - y2*x2 - 2*x1*y2 - 2*y1*x2 = 0") == 1);
  for (int n = 1; n <= 4; ++n) {
    auto q = envelope_presentation(skew_symmetric(Matrix(n, n)));
    CHECK(static_cast<int>(q.relations.size()) == n * (n - 1) + n * n);
  }
  CHECK_THROWS_AS(envelope_presentation(weyl(1)), NotQuadratic);
}

TEST_CASE("envelope_extend") {
  auto g = envelope_extend(two_var("3*x*y"), GradedMap(Matrix::diagonal({w3(), Cyclo(1)})));
  CHECK(g.matrix() == Matrix::diagonal({w3(), Cyclo(1), w3(), Cyclo(1)}));
  CHECK(envelope_extend(quantum_matrices(2), GradedMap(Matrix::identity(4))).matrix().is_identity());
  PolyRing r({"x"});
  auto neg = envelope_extend(PoissonAlgebra(r, {}), GradedMap(Matrix::diagonal({Cyclo(-1)})));
  CHECK(neg.matrix() == Matrix::diagonal({Cyclo(-1), Cyclo(-1)}));
  CHECK_THROWS_AS(envelope_extend(two_var("x^2"), GradedMap(Matrix::diagonal({Cyclo(1), w3()}))), NotAutomorphism);
}

TEST_CASE("envelope_trace squares the trace and is never a quasi-reflection") {
  std::vector<std::pair<PoissonAlgebra, Matrix>> cases = {
      {two_var("x*y"), Matrix::diagonal({w3(), Cyclo(1)})},
      {two_var("2*x*y"), Matrix::diagonal({Cyclo(1), Cyclo(-1)})},
      {homogenized_weyl(1), Matrix::diagonal({Cyclo(1), Cyclo(1), Cyclo(-1)})},
      {jacobian_fpq(Cyclo(0), Cyclo(1)), Matrix::diagonal({Cyclo::zeta(4), Cyclo(1), Cyclo(1)})},
  };
  for (const auto& [a, m] : cases) {
    GradedMap g(m);
    auto t = envelope_trace(a, g);
    RationalSeries tr = trace_series(m);
    CHECK(t.series == tr * tr);
    CHECK(t.extended == trace_series(envelope_extend(a, g).matrix()));
    CHECK_FALSE(t.quasi_reflection);
    CHECK(is_quasi_reflection_series(tr, a.nvars()));
    CHECK_FALSE(is_quasi_reflection_series(t.series, 2 * a.nvars()));
  }
  CHECK_THROWS_AS(envelope_trace(two_var("x*y"), GradedMap(Matrix::diagonal({Cyclo(-1), Cyclo(-1)}))), NotReflection);
}

TEST_CASE("envelope dimensions match (1 - t)^(-2n)") {
  PolyRing r1({"x"});
  CHECK(envelope_dims(PoissonAlgebra(r1, {}), 2) == std::vector<long>{1, 2, 3});
  CHECK(envelope_dims(two_var("x*y"), 3) == binomial_dims(4, 3));
  CHECK(envelope_dims(homogenized_weyl(1), 2) == std::vector<long>{1, 6, 21});
  CHECK(envelope_dims(jacobian_fpq(Cyclo(1), Cyclo(0)), 2) == binomial_dims(6, 2));
  CHECK(envelope_dims(quantum_matrices(2), 2) == binomial_dims(8, 2));
  CHECK_THROWS_AS(envelope_dims(two_var("x*y"), 5), CapExceeded);
  CHECK_THROWS_AS(envelope_dims(weyl(1), 2), NotQuadratic);
}
