#pragma once

#include <string>
#include <vector>

#include "pwb/groebner.hpp"

namespace pwb {

// Zero set of a homogeneous system in unknowns mu_1..mu_n, up to scaling.
struct SolutionSet {
  enum class Kind { Empty, LinearSubspace, FinitePoints, IdealOnly };
  Kind kind = Kind::Empty;
  int ambient = 0;
  std::vector<Vec> basis;   // LinearSubspace: RREF rows
  std::vector<Vec> points;  // FinitePoints: first nonzero coordinate is 1
  // IdealOnly: the chart that could not be resolved and its Groebner basis.
  int unresolved_chart = -1;
  std::vector<Poly> ideal;

  // Every nonzero solution direction spans exactly one of these lines (for
  // FinitePoints) or lies in span(basis) (for LinearSubspace).
  bool contains(const Vec& v) const;
};

const char* kind_name(SolutionSet::Kind k);

// Affine chart k: coordinate k equals 1 and coordinates before k vanish.
// The ring's variables are the remaining coordinates k+1..n-1 in order.
struct ChartSystem {
  int chart = 0;
  PolyRing ring;
  std::vector<Poly> equations;
};

struct AffinePiece {
  Vec point;
  std::vector<Vec> directions;
};

struct AffineSolution {
  bool resolved = true;
  std::vector<AffinePiece> pieces;
  std::vector<Poly> unresolved_basis;
};

// Solves an affine system: linear pieces are parameterized, zero-dimensional
// parts enumerated when every univariate eliminant splits into rational or
// root-of-unity factors, anything else reported unresolved.
AffineSolution solve_affine(const std::vector<Poly>& equations, const PolyRing& ring, GroebnerOptions opts = {});

SolutionSet solve_charts(int n, const std::vector<ChartSystem>& charts, GroebnerOptions opts = {});

// Requires homogeneous generators over a ring whose variables are the unknowns.
SolutionSet solve_projective(const std::vector<Poly>& ideal, const PolyRing& ring, GroebnerOptions opts = {});

}  // namespace pwb
