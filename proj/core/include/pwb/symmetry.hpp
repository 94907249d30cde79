#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwb/poisson.hpp"
#include "pwb/series.hpp"

namespace pwb {

// Linear data of a graded map that does not depend on any bracket.
struct LinearClass {
  bool identity = false;
  std::optional<long> order;  // nullopt: infinite order
  bool reflection = false;
  Cyclo xi;                   // reflection eigenvalue
  std::vector<Vec> eigenbasis;  // xi-eigenvector first, then a basis of ker(g - I)
};

// Invertible matrix acting on degree-one generators (column convention).
// The linear classification is computed once and shared by copies.
class GradedMap {
 public:
  GradedMap() = default;
  explicit GradedMap(Matrix m, std::string name = "g");

  const Matrix& matrix() const { return m_; }
  const std::string& name() const { return name_; }
  int dim() const { return m_.rows(); }
  const LinearClass& linear_class() const;
  std::optional<long> order() const { return linear_class().order; }

 private:
  struct Cache {
    std::once_flag once;
    LinearClass value;
  };
  Matrix m_;
  std::string name_ = "g";
  std::shared_ptr<Cache> cache_;
};

struct AutomorphismCheck {
  bool ok = true;
  std::pair<int, int> failing{-1, -1};
};
// g({x_i,x_j}) = {g x_i, g x_j} for all i < j. Throws SingularMatrix.
AutomorphismCheck is_poisson_automorphism(const PoissonAlgebra& a, const Matrix& g);

struct Classification {
  enum class Kind { NotAutomorphism, InfiniteOrder, Identity, Reflection, FiniteNonReflection };
  Kind kind = Kind::Identity;
  long order = 1;
  Cyclo xi;
  std::vector<Vec> eigenbasis;
  std::pair<int, int> failing{-1, -1};
};
const char* kind_name(Classification::Kind k);
Classification classify(const PoissonAlgebra& a, const GradedMap& g);

// Generators of the ideal of graded Poisson automorphism equations in the
// entries g_i_j of a generic matrix (column convention), as a Groebner basis.
std::vector<Poly> automorphism_ideal(const PoissonAlgebra& a, GroebnerOptions opts = {});

// Reflections g = I + u phi^T whose xi-eigenvector u is a normal element.
struct ReflectionFamily {
  // u is fixed (FinitePoints) or ranges over a chart of span(direction_basis).
  Vec direction;
  std::vector<Vec> direction_basis;
  int chart = -1;
  // Unknowns lambda (chart coordinates), phi_1..phi_n and the auxiliary w.
  PolyRing params;
  std::vector<Poly> ideal;
  bool xi_unconstrained = false;
  std::vector<Cyclo> xi_values;  // roots of unity != 1
  bool order_two = false;        // xi = -1 is the only value
};

struct ReflectionReport {
  enum class Kind { NoReflections, Families, Inconclusive };
  Kind kind = Kind::NoReflections;
  SolutionSet normal;
  std::vector<ReflectionFamily> families;
};
const char* kind_name(ReflectionReport::Kind k);
ReflectionReport find_reflections(const PoissonAlgebra& a, GroebnerOptions opts = {});

// One concrete reflection of the family with the given eigenvalue, chosen by
// setting free parameters to zero where possible; nullopt if none found.
std::optional<Matrix> sample_reflection(const PoissonAlgebra& a, const ReflectionFamily& f, const Cyclo& xi,
                                        GroebnerOptions opts = {});

// 1 / det(I - t g).
RationalSeries trace_series(const Matrix& g);

struct PoissonGroup {
  std::vector<GradedMap> generators;
  std::vector<Matrix> elements;  // identity first
  long exponent = 1;
  std::size_t size() const { return elements.size(); }
};
// Breadth-first closure; throws BoundExceeded beyond bound elements and
// InvalidArgument for generators of infinite order.
PoissonGroup group_closure(const std::vector<GradedMap>& gens, std::size_t bound = 10000);

RationalSeries molien_series(const PoissonGroup& g);

// Skew-specific data. Throw NotSkew for matrices that are not skew-symmetric.
Vec l_degree(const Matrix& q, const std::vector<int>& exps);
Cyclo bicharacter(const Matrix& q, const std::vector<int>& i, const std::vector<int>& j);
std::vector<std::vector<int>> block_decomposition(const Matrix& q);

}  // namespace pwb
