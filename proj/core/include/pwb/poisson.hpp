#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwb/solve.hpp"

namespace pwb {

// Polynomial ring with a bracket table P_ij = {x_i, x_j}. Antisymmetry is
// structural: only i < j is stored by callers, the rest is derived.
class PoissonAlgebra {
 public:
  using Table = std::map<std::pair<int, int>, Poly>;

  PoissonAlgebra() = default;
  // Throws JacobiFailure unless defer_jacobi. Keys may use either order.
  PoissonAlgebra(PolyRing ring, const Table& table, bool defer_jacobi = false, std::string name = "A");

  const PolyRing& ring() const { return ring_; }
  int nvars() const { return ring_.nvars(); }
  const std::string& name() const { return name_; }
  // {x_i, x_j}.
  const Poly& table(int i, int j) const { return full_[static_cast<std::size_t>(i) * nvars() + j]; }
  // Nonzero entries with i < j.
  Table entries() const;

  // Every nonzero P_ij homogeneous of degree 2.
  bool quadratic() const { return quadratic_; }
  // d when every nonzero P_ij is homogeneous of the same degree d.
  std::optional<int> degree_shift() const { return shift_; }
  bool is_zero() const;

 private:
  PolyRing ring_;
  std::string name_ = "A";
  std::vector<Poly> full_;
  bool quadratic_ = true;
  std::optional<int> shift_;
};

// Leibniz extension: {f, g} = sum_{i<j} P_ij (d_i f d_j g - d_j f d_i g).
Poly bracket(const PoissonAlgebra& a, const Poly& f, const Poly& g);

struct JacobiResult {
  bool ok = true;
  std::array<int, 3> triple{};
  Poly cyclic_sum;
};
JacobiResult jacobi_check(const PoissonAlgebra& a);

// Derivation determined by its values on the generators.
struct PoissonDerivation {
  std::vector<Poly> images;
  Poly apply(const Poly& f) const;
  bool is_zero() const;
};

// pi_u with {u, x_j} = pi_u(x_j) u, or nullopt when u is not Poisson normal.
std::optional<PoissonDerivation> normal_check(const PoissonAlgebra& a, const Poly& u);

// Degree-one Poisson normal elements up to scalar, in coordinates of x_1..x_n.
SolutionSet normal_find_deg1(const PoissonAlgebra& a, GroebnerOptions opts = {});

// phi(x_k) = sum_j d_j {x_k, x_j}.
PoissonDerivation modular_derivation(const PoissonAlgebra& a);
bool is_unimodular(const PoissonAlgebra& a);

// Basis of Poisson-central elements of each degree 0..d.
std::vector<std::vector<Poly>> center_truncated(const PoissonAlgebra& a, int d);

struct DerivedIdeal {
  // Generators P_ij and the dimension of the ideal in each degree 0..d. For a
  // bracket that is not homogeneous the dimensions are of the filtered pieces
  // (elements of degree <= k).
  std::vector<Poly> generators;
  std::vector<int> dims;
  std::vector<std::vector<Poly>> basis;
  // Reduced grlex Groebner basis; the ideal is monomial iff all its elements are.
  std::vector<Poly> groebner;
  bool monomial = false;
  // Minimal primes of a monomial ideal, each as a set of variable indices.
  std::vector<std::vector<int>> minimal_primes;
};
DerivedIdeal derived_ideal_truncated(const PoissonAlgebra& a, int d, GroebnerOptions opts = {});
// Throws NotMonomial when the ideal is not monomial.
std::vector<std::vector<int>> derived_ideal_components(const PoissonAlgebra& a, GroebnerOptions opts = {});

// Brackets in new coordinates y_i = sum_j columns(j, i) x_j.
PoissonAlgebra linear_change(const PoissonAlgebra& a, const Matrix& columns, std::vector<std::string> names,
                             std::string name = "A'");

// {x_i, x_j} = q_ij x_i x_j for all pairs, or nullopt.
std::optional<Matrix> skew_matrix(const PoissonAlgebra& a);

struct OreSplit {
  Vec normal_var;
  std::vector<Vec> complement;
  // The algebra in the coordinates (u, c_1, ..., c_{n-1}).
  PoissonAlgebra changed;
  // Bracket on k[c_1..c_{n-1}] and alpha with {u, c} = alpha(c) u.
  PoissonAlgebra base;
  PoissonDerivation alpha;
};
// Default complement: the standard basis vectors other than the first pivot of u.
OreSplit ore_split(const PoissonAlgebra& a, const Vec& u, std::optional<std::vector<Vec>> complement = std::nullopt);
// Bracket on k[u, c] rebuilt from base and alpha.
PoissonAlgebra ore_reconstruct(const OreSplit& s);

}  // namespace pwb
