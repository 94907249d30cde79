#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwb/symmetry.hpp"

namespace pwb {

// A^G as generators, relations and the induced bracket on the generators.
struct PresentedPoisson {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<Poly> expressions;  // in the ambient ring
  PolyRing gen_ring;              // variables are the generator names
  std::vector<Poly> relations;    // minimal, up to weighted degree 2 * max(degrees)
  PoissonAlgebra::Table brackets;  // i < j, in gen_ring
  int degree_bound = 0;
  // Set when Molien series, Jacobian rank and generator count certify that
  // the generators are algebraically independent and generate A^G.
  bool certified_polynomial = false;
  RationalSeries molien;
  std::vector<std::string> diagnostics;

  bool polynomial() const { return relations.empty() && certified_polynomial; }
  // Bracket table entry {u_i, u_j}, antisymmetric.
  Poly bracket(int i, int j) const;
};

// Generators y_1^m, y_2, ..., y_n in the eigenbasis of a reflection of order m.
// Throws NotReflection.
PresentedPoisson fixed_cyclic_reflection(const PoissonAlgebra& a, const GradedMap& g, GroebnerOptions opts = {});

// max(4, 2 * exponent).
int default_degree_bound(const PoissonGroup& g);

// Reynolds averaging per degree, generators chosen against products of lower
// ones. Throws DegreeBoundTooSmall or InducedBracketNotClosed.
PresentedPoisson fixed_group(const PoissonAlgebra& a, const PoissonGroup& g, std::optional<int> degree_bound = {});

// Reynolds operator (1/|G|) sum_g g(f).
Poly reynolds(const PoissonGroup& g, const Poly& f);

// The matrix q when every bracket entry is q_ij u_i u_j; requires a
// polynomial presentation.
std::optional<Matrix> is_skew_presentation(const PresentedPoisson& p);

// The polynomial presentation as a Poisson algebra with standard grading in
// the generator variables; nullopt when relations are present.
std::optional<PoissonAlgebra> as_algebra(const PresentedPoisson& p);

struct InvariantBattery {
  bool polynomial = true;
  bool unimodular = false;
  bool quadratic = false;
  bool skew = false;
  std::vector<int> center_dims;
  std::vector<int> derived_dims;
  std::optional<int> derived_components;  // monomial derived ideals only
  std::optional<bool> central_in_derived;  // lowest central generator
};

struct RigidityReport {
  InvariantBattery a, ag;
  PresentedPoisson fixed;
  bool distinguished = false;
  std::string witness;  // first differing invariant
  std::vector<std::string> diagnostics;
};

// Invariants through degree `probe` (default 3) on A and on A^G.
RigidityReport rigidity_report(const PoissonAlgebra& a, const PoissonGroup& g, std::optional<int> degree_bound = {},
                               int probe = 3, GroebnerOptions opts = {});
InvariantBattery invariant_battery(const PoissonAlgebra& a, int probe, GroebnerOptions opts = {});

}  // namespace pwb
