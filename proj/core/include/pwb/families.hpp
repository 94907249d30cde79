#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pwb/poisson.hpp"

namespace pwb {

// Default variable names: x, y, z for n <= 3, otherwise x1..xn.
std::vector<std::string> default_names(int n);

// {x_i, x_j} = q_ij x_i x_j. Throws NotSkew.
PoissonAlgebra skew_symmetric(const Matrix& q, std::vector<std::string> names = {});

// {x,y} = f_z, {y,z} = f_x, {z,x} = f_y on a 3-variable ring. Throws ZeroPotential.
PoissonAlgebra jacobian(const Poly& f);
// (p/3)(x^3 + y^3 + z^3) + q xyz over the ring x, y, z.
Poly potential_fpq(const Cyclo& p, const Cyclo& q, const PolyRing& ring);
PoissonAlgebra jacobian_fpq(const Cyclo& p, const Cyclo& q);

// Semiclassical n x n matrices on x_i_j (row-major); a, b, c, d alias the
// entries when n = 2.
PoissonAlgebra quantum_matrices(int n);
// Variable index of x_{i j}, 1-based.
inline int qm_index(int n, int i, int j) { return (i - 1) * n + (j - 1); }

// {x_i, y_j} = delta_ij on x1..xn, y1..yn.
PoissonAlgebra weyl(int n);
// {x_i, y_j} = delta_ij z^2 on x1..xn, y1..yn, z with z central.
PoissonAlgebra homogenized_weyl(int n);

// Structure constants [x_i, x_j] = sum_k c[k] x_k, stored for i < j.
struct LieData {
  int dim = 0;
  std::vector<std::string> names;
  std::map<std::pair<int, int>, Vec> brackets;

  Vec bracket(int i, int j) const;
  // [a, b] for coordinate vectors a, b.
  Vec bracket(const Vec& a, const Vec& b) const;
  // Matrix of ad(x_i) in the column convention.
  Matrix ad(int i) const;
};

LieData lie_abelian(int n);
// [x1, x2] = x2.
LieData lie_two_dim();
// Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieData lie_sl2();
// Throws LieJacobiFails with the failing triple.
void lie_jacobi_check(const LieData& l);

// {x_i, x_j} = [x_i, x_j] z with z central, on x_1..x_n, z.
PoissonAlgebra ph_lie(const LieData& l);

// Lines b with [x_i, b] in span(b) for every i, up to scalar.
SolutionSet lie_one_dim_ideals(const LieData& l, GroebnerOptions opts = {});

}  // namespace pwb
